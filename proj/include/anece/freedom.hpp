#pragma once

#include <string_view>
#include <vector>

#include "anece/dofcalc.hpp"

namespace anece {

// Entropy DoF by counting free dimensions, one received column at a time.
//
// A user block of `rows` receive antennas observes `columns` slots. Each slot
// carries `free` unknown symbol dimensions; the block resolves min(rows, free)
// of them per slot and leaves (free - rows)^+ for later observers. Eve then
// observes `eve_columns` slots: while some of her `eve_unknown` channel
// directions remain unresolved a slot yields all N_E dimensions and resolves
// one direction, afterwards a slot yields min(N_E, free).

struct ObservationBlock {
  int rows = 0;
  int columns = 0;
};

struct FreedomPlan {
  int free = 0;
  std::vector<ObservationBlock> users;
  int n_eve = 0;
  int eve_columns = 0;
  int eve_unknown = 0;
};

int count_freedom(const FreedomPlan& plan);

enum class FreedomTerm {
  yi_given_hi,
  ye_given_hep,
  joint_i_e,
  joint_i_j_e,
  modified_term2,
  modified_term3,
  modified_term4,
  modified_joint_all,
};

/// Throws std::invalid_argument for an unknown identifier.
FreedomTerm freedom_term_from_string(std::string_view name);
std::string_view to_string(FreedomTerm t);

/// All-user terms. Throws std::invalid_argument for a modified-scheme term.
int freedom_count_oracle(FreedomTerm term, const DofScenario& s);
/// Modified two-user terms. Throws std::invalid_argument for an all-user term.
int freedom_count_oracle(FreedomTerm term, const TwoUserModifiedConfig& cfg);

}  // namespace anece
