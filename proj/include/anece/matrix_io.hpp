#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "anece/model.hpp"

namespace anece {

// Plain-text matrix format: "rows cols" on the first line, then one line per
// row holding cols "re im" pairs.
void write_matrix(std::ostream& os, const CMatrix& m);
CMatrix read_matrix(std::istream& is);

void save_matrix(const std::string& path, const CMatrix& m);
CMatrix load_matrix(const std::string& path);

/// Decimal with 12 significant digits, as used in every CSV cell.
std::string format_number(double v);

/// Comma-separated row terminated by LF. Cells containing a comma or quote are
/// quoted.
void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);

/// Splits one CSV line written by write_csv_row.
std::vector<std::string> split_csv_row(const std::string& line);

}  // namespace anece
