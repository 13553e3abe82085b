#include "anece/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace anece {

void write_matrix(std::ostream& os, const CMatrix& m) {
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf << std::setprecision(std::numeric_limits<double>::max_digits10);
  buf << m.rows() << ' ' << m.cols() << '\n';
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) buf << ' ';
      buf << m(r, c).real() << ' ' << m(r, c).imag();
    }
    buf << '\n';
  }
  os << buf.str();
}

CMatrix read_matrix(std::istream& is) {
  long long rows = -1;
  long long cols = -1;
  if (!(is >> rows >> cols) || rows < 0 || cols < 0) {
    throw std::runtime_error("matrix file: bad header");
  }
  CMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      double re = 0.0;
      double im = 0.0;
      if (!(is >> re >> im)) throw std::runtime_error("matrix file: truncated data");
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw std::runtime_error("matrix file: non-finite entry");
      }
      m(r, c) = Complex(re, im);
    }
  }
  std::string rest;
  if (is >> rest) throw std::runtime_error("matrix file: trailing data");
  return m;
}

void save_matrix(const std::string& path, const CMatrix& m) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  write_matrix(f, m);
  if (!f) throw std::runtime_error("write failed: " + path);
}

CMatrix load_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_matrix(f);
}

std::string format_number(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::setprecision(12) << v;
  return s.str();
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k > 0) line += ',';
    const std::string& c = cells[k];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      line += c;
    } else {
      line += '"';
      for (char ch : c) {
        if (ch == '"') line += '"';
        line += ch;
      }
      line += '"';
    }
  }
  line += '\n';
  os << line;
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char ch = line[k];
    if (quoted) {
      if (ch == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        out.back() += '"';
        ++k;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else if (ch != '\n' && ch != '\r') {
      out.back() += ch;
    }
  }
  return out;
}

}  // namespace anece
