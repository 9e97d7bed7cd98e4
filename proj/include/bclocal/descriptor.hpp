#pragma once

// text descriptors for fields, level lists, and beta sweeps, the exact
// inverses of the formatting helpers

#include <string>
#include <vector>

#include "bclocal/induction.hpp"
#include "bclocal/level.hpp"
#include "bclocal/padic.hpp"

namespace bclocal {

// "Q2", "Q2u2:x^2+x+1", "Q3[x^2-3]"
LocalFieldSpec parse_local_field(const std::string& s);

// "Q", "Q(i)", "Q(sqrt:-3)"
NumberFieldSpec parse_global_field(const std::string& s);

// "n:m[,n:m...]"
std::vector<LevelIndex> parse_levels(const std::string& s);

struct BetaList {
  std::vector<double> values;
  bool infinity = false;
};

// comma-separated positive reals, "inf" allowed as an entry
BetaList parse_beta_list(const std::string& s);

} // namespace bclocal
