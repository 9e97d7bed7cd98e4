#pragma once

/* Finite level model.  Fix a local field with uniformizer pi and residue
 * size q, and a level (n, m).  The group
 *
 *     G_{n,m} = Z/n x (O/pi^m)^*
 *
 * carries the class of pi at (1, 1) and the class of a unit s at (0, s).
 * The level space is the balanced quotient
 *
 *     Y_{n,m} = (O/pi^m x G_{n,m}) / units,   s.(a, g) = (a s, (0,s)^{-1} g),
 *
 * and decomposes by valuation strata into  |_|_{k=0..m} G_{n, m-k},  so
 * |Y_{n,m}| = n q^m.  Points are stored in canonical form (stratum k,
 * group element of G_{n, m-k}); the stratum m group is plain Z/n, whose
 * unit slot holds the one element of the level-0 ring.  The semigroup
 * action by pi^j lowers the v-residue by j and saturates the stratum at m. */

#include <unordered_map>
#include <vector>

#include "bclocal/errors.hpp"
#include "bclocal/padic.hpp"
#include "bclocal/rational.hpp"

namespace bclocal {

struct Guardrails {
  long long max_n = 12;
  int max_m = 6;
  long long max_q = 9;
  long long max_carrier = 1000000;
  long long max_ops = 100000000; // budget for exhaustive sweeps
};

struct LevelIndex {
  long long n = 1;
  int m = 0;
  bool operator==(const LevelIndex& o) const { return n == o.n && m == o.m; }
};

struct LevelGroupElement {
  long long v = 0;  // residue mod n
  RingElement u;    // unit at the group's ring level
  bool operator==(const LevelGroupElement& o) const { return v == o.v && u == o.u; }
  bool operator!=(const LevelGroupElement& o) const { return !(*this == o); }
};

struct LevelPoint {
  int k = 0;            // stratum = capped valuation
  LevelGroupElement g;  // element of G_{n, m-k}
  bool operator==(const LevelPoint& o) const { return k == o.k && g == o.g; }
  bool operator!=(const LevelPoint& o) const { return !(*this == o); }
};

struct StratumSize {
  int k;
  long long size;
};

struct BalancingReport {
  bool free_ok = false;        // every unit orbit has full size
  long long pairs_checked = 0;
  long long orbit_count_nonzero = 0;
  long long orbit_count_zero = 0;
  bool count_matches = false;  // orbit counts agree with the stratum sizes
};

struct ConjugacyReport {
  int window = 0;
  long long triples_checked = 0;
  bool pass = false;                   // psi . act_j = shift_j . psi for k+j < m
  bool saturation_boundary_ok = false; // and still at k+j = m
};

class LevelContext {
 public:
  LevelContext(const LocalFieldSpec& F, LevelIndex L, Guardrails gr = {});

  const LocalFieldSpec& field() const { return F_; }
  LevelIndex level() const { return L_; }
  const Guardrails& guards() const { return gr_; }
  const ResidueRing& ring(int lev) const;
  const std::vector<RingElement>& units(int lev) const;
  long long unit_pos(int lev, const RingElement& u) const;

  long long group_size(int lev) const { return L_.n * (long long)units_[lev].size(); }
  long long total_points() const { return total_; }
  LevelGroupElement group_identity(int lev) const;
  LevelGroupElement group_op(int lev, const LevelGroupElement& g, const LevelGroupElement& h) const;
  LevelGroupElement group_inv(int lev, const LevelGroupElement& g) const;
  LevelGroupElement group_project(const LevelGroupElement& g, int from, int to) const;
  long long group_index(int lev, const LevelGroupElement& g) const;
  LevelGroupElement group_at(int lev, long long idx) const;

  LevelPoint canonicalize(const RingElement& a, const LevelGroupElement& g) const;
  LevelPoint act(long long j, const LevelPoint& y) const;
  long long point_index(const LevelPoint& y) const;
  LevelPoint point_at(long long idx) const;

  std::vector<StratumSize> orbit_decompose() const;
  BalancingReport balancing_free_check() const;
  ConjugacyReport shift_conjugacy_check(int window) const;

 private:
  LocalFieldSpec F_;
  LevelIndex L_;
  Guardrails gr_;
  std::vector<ResidueRing> rings_;                          // levels 0..m
  std::vector<std::vector<RingElement>> units_;             // per level
  std::vector<std::unordered_map<long long, long long>> upos_; // carrier index -> unit slot
  std::vector<long long> stratum_offset_;                   // point index base per stratum
  long long total_ = 0;
};

// projection between levels, defined when to.n | from.n, to.m <= from.m
LevelPoint transition(const LevelContext& from, const LevelPoint& y, const LevelContext& to);

struct LevelMeasure {
  LevelIndex level;
  std::vector<Rational> weights; // one weight per element of G_{n,m}, by group index
  Rational mass;
};

LevelMeasure make_measure(const LevelContext& C, std::vector<Rational> weights);
LevelMeasure uniform_measure(const LevelContext& C);
LevelMeasure dirac_measure(const LevelContext& C, long long group_idx);

} // namespace bclocal
