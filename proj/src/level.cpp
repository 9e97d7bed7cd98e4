#include "bclocal/level.hpp"

#include <algorithm>
#include <cassert>

namespace bclocal {

namespace {
long long md(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}
} // namespace

LevelContext::LevelContext(const LocalFieldSpec& F, LevelIndex L, Guardrails gr)
    : F_(F), L_(L), gr_(gr) {
  require(L_.n >= 1, Errc::BadTarget, "level needs n >= 1");
  require(L_.m >= 0, Errc::BadTarget, "level needs m >= 0");
  require(L_.n <= gr_.max_n, Errc::SizeGuardExceeded, "n above guardrail");
  require(L_.m <= gr_.max_m, Errc::SizeGuardExceeded, "m above guardrail");
  require(F_.q <= gr_.max_q, Errc::SizeGuardExceeded, "q above guardrail");
  rings_.reserve(L_.m + 1);
  units_.resize(L_.m + 1);
  upos_.resize(L_.m + 1);
  for (int lev = 0; lev <= L_.m; ++lev) {
    rings_.emplace_back(F_, lev);
    units_[lev] = unit_list(rings_[lev], gr_.max_carrier);
    for (long long i = 0; i < (long long)units_[lev].size(); ++i)
      upos_[lev][rings_[lev].index_of(units_[lev][i])] = i;
  }
  stratum_offset_.assign(L_.m + 2, 0);
  for (int k = 0; k <= L_.m; ++k)
    stratum_offset_[k + 1] = stratum_offset_[k] + group_size(L_.m - k);
  total_ = stratum_offset_[L_.m + 1];
  // the strata telescope to the full space
  assert(total_ == L_.n * rings_[L_.m].size());
}

const ResidueRing& LevelContext::ring(int lev) const {
  require(lev >= 0 && lev <= L_.m, Errc::BadTarget, "ring level out of range");
  return rings_[lev];
}

const std::vector<RingElement>& LevelContext::units(int lev) const {
  require(lev >= 0 && lev <= L_.m, Errc::BadTarget, "unit level out of range");
  return units_[lev];
}

long long LevelContext::unit_pos(int lev, const RingElement& u) const {
  const auto& map = upos_[lev];
  auto it = map.find(rings_[lev].index_of(u));
  require(it != map.end(), Errc::BadTarget, "element is not a unit at this level");
  return it->second;
}

LevelGroupElement LevelContext::group_identity(int lev) const {
  return {0, ring(lev).level() == 0 ? rings_[0].zero() : rings_[lev].one()};
}

LevelGroupElement LevelContext::group_op(int lev, const LevelGroupElement& g,
                                         const LevelGroupElement& h) const {
  const ResidueRing& R = ring(lev);
  return {md(g.v + h.v, L_.n), R.mul(g.u, h.u)};
}

LevelGroupElement LevelContext::group_inv(int lev, const LevelGroupElement& g) const {
  const ResidueRing& R = ring(lev);
  return {md(-g.v, L_.n), lev == 0 ? rings_[0].zero() : R.inv_unit(g.u)};
}

LevelGroupElement LevelContext::group_project(const LevelGroupElement& g, int from, int to) const {
  require(to <= from, Errc::BadTarget, "projection must lower the unit level");
  return {g.v, ring(from).reduce_to(g.u, to)};
}

long long LevelContext::group_index(int lev, const LevelGroupElement& g) const {
  require(g.v >= 0 && g.v < L_.n, Errc::BadTarget, "v residue out of range");
  return g.v * (long long)units_[lev].size() + unit_pos(lev, g.u);
}

LevelGroupElement LevelContext::group_at(int lev, long long idx) const {
  long long nu = (long long)units_[lev].size();
  require(idx >= 0 && idx < L_.n * nu, Errc::BadTarget, "group index out of range");
  return {idx / nu, units_[lev][idx % nu]};
}

LevelPoint LevelContext::canonicalize(const RingElement& a, const LevelGroupElement& g) const {
  const ResidueRing& R = rings_[L_.m];
  R.check(a);
  require(g.u.m == L_.m, Errc::LevelMismatch, "group element not at the top level");
  auto [k, u] = R.val_unit_decompose(a);
  long long v = md(g.v, L_.n);
  if (!u) return {L_.m, {v, rings_[0].zero()}};
  int lev = L_.m - k;
  return {k, {v, rings_[lev].mul(*u, R.reduce_to(g.u, lev))}};
}

LevelPoint LevelContext::act(long long j, const LevelPoint& y) const {
  require(j >= 0, Errc::BadTarget, "the semigroup action needs j >= 0");
  int k2 = (j >= L_.m - y.k) ? L_.m : y.k + (int)j;
  int from = L_.m - y.k, to = L_.m - k2;
  return {k2, {md(y.g.v - md(j, L_.n), L_.n), rings_[from].reduce_to(y.g.u, to)}};
}

long long LevelContext::point_index(const LevelPoint& y) const {
  require(y.k >= 0 && y.k <= L_.m, Errc::BadTarget, "stratum out of range");
  return stratum_offset_[y.k] + group_index(L_.m - y.k, y.g);
}

LevelPoint LevelContext::point_at(long long idx) const {
  require(idx >= 0 && idx < total_, Errc::BadTarget, "point index out of range");
  int k = 0;
  while (idx >= stratum_offset_[k + 1]) ++k;
  return {k, group_at(L_.m - k, idx - stratum_offset_[k])};
}

std::vector<StratumSize> LevelContext::orbit_decompose() const {
  std::vector<StratumSize> out;
  for (int k = 0; k <= L_.m; ++k) out.push_back({k, group_size(L_.m - k)});
  return out;
}

/* Exhaustive sweep over pairs (a, g): walk every unit orbit, confirm it has
 * full size (freeness), and count orbits per a = 0 / a != 0.  The counts
 * are then compared with the closed-form stratum sizes. */
BalancingReport LevelContext::balancing_free_check() const {
  const ResidueRing& R = rings_[L_.m];
  const auto& us = units_[L_.m];
  long long csize = R.size(), gsize = group_size(L_.m), phi = (long long)us.size();
  long long pairs = checked_mul(csize, gsize);
  require(pairs <= gr_.max_ops, Errc::SizeGuardExceeded,
          "balancing sweep above operation budget");

  BalancingReport rep;
  rep.pairs_checked = pairs;
  rep.free_ok = true;
  std::vector<char> seen(pairs, 0);
  long long ops = 0; // one orbit walk costs phi; charged as it happens, not upfront
  for (long long ai = 0; ai < csize; ++ai) {
    RingElement a = R.element_at(ai);
    bool azero = R.is_zero(a);
    for (long long gi = 0; gi < gsize; ++gi) {
      if (seen[ai * gsize + gi]) continue;
      ops += phi;
      require(ops <= gr_.max_ops, Errc::SizeGuardExceeded,
              "balancing sweep above operation budget");
      LevelGroupElement g = group_at(L_.m, gi);
      long long orbit = 0;
      for (const auto& s : us) {
        RingElement as = R.mul(a, s);
        LevelGroupElement gs = group_op(L_.m, {0, R.inv_unit(s)}, g);
        long long pid = R.index_of(as) * gsize + group_index(L_.m, gs);
        if (!seen[pid]) {
          seen[pid] = 1;
          ++orbit;
        }
      }
      if (orbit != phi) rep.free_ok = false;
      (azero ? rep.orbit_count_zero : rep.orbit_count_nonzero)++;
    }
  }
  long long nonzero_expected = 0;
  for (int k = 0; k < L_.m; ++k) nonzero_expected += group_size(L_.m - k);
  rep.count_matches = rep.orbit_count_nonzero == nonzero_expected &&
                      rep.orbit_count_zero == L_.n;
  return rep;
}

/* The map psi(k, v, u) = (k, v + k, u) turns the pi-action into the plain
 * stratum shift (k, v, u) -> (k + j, v, proj u).  Saturation at stratum m
 * is invisible to the shift picture, so the identity is asserted for
 * k + j < m and probed separately at k + j = m. */
ConjugacyReport LevelContext::shift_conjugacy_check(int window) const {
  require(window >= 1, Errc::BadTarget, "window must be >= 1");
  ConjugacyReport rep;
  rep.window = window;
  rep.pass = true;
  rep.saturation_boundary_ok = true;
  auto psi = [&](const LevelPoint& y) {
    return LevelPoint{y.k, {md(y.g.v + y.k, L_.n), y.g.u}};
  };
  int kmax = std::min(window, L_.m);
  for (int k = 0; k <= kmax; ++k) {
    int lev = L_.m - k;
    for (int j = 0; k + j <= L_.m; ++j) {
      bool interior = k + j < L_.m;
      for (long long gi = 0; gi < group_size(lev); ++gi) {
        LevelPoint y{k, group_at(lev, gi)};
        LevelPoint lhs = psi(act(j, y));
        LevelPoint sy = psi(y);
        LevelPoint rhs{k + j, {sy.g.v, rings_[lev].reduce_to(sy.g.u, L_.m - (k + j))}};
        ++rep.triples_checked;
        if (lhs != rhs) (interior ? rep.pass : rep.saturation_boundary_ok) = false;
      }
    }
  }
  return rep;
}

LevelPoint transition(const LevelContext& from, const LevelPoint& y, const LevelContext& to) {
  require(from.field() == to.field(), Errc::BadTarget, "transition across different fields");
  LevelIndex a = from.level(), b = to.level();
  require(a.n % b.n == 0, Errc::BadTarget, "transition needs target n dividing source n");
  require(b.m <= a.m, Errc::BadTarget, "transition needs target m below source m");
  int k2 = std::min(y.k, b.m);
  int from_lev = a.m - y.k, to_lev = b.m - k2;
  RingElement u = from.ring(from_lev).reduce_to(y.g.u, to_lev);
  return {k2, {md(y.g.v, b.n), u}};
}

LevelMeasure make_measure(const LevelContext& C, std::vector<Rational> weights) {
  require((long long)weights.size() == C.group_size(C.level().m), Errc::BadTarget,
          "one weight per stratum-0 point required");
  Rational mass;
  for (const auto& w : weights) {
    require(!(w < Rational{0, 1}), Errc::BadTarget, "negative weight");
    mass = mass + w;
  }
  return {C.level(), std::move(weights), mass};
}

LevelMeasure uniform_measure(const LevelContext& C) {
  long long g = C.group_size(C.level().m);
  return make_measure(C, std::vector<Rational>(g, Rational{1, g}));
}

LevelMeasure dirac_measure(const LevelContext& C, long long group_idx) {
  long long g = C.group_size(C.level().m);
  require(group_idx >= 0 && group_idx < g, Errc::BadTarget, "group index out of range");
  std::vector<Rational> w(g, Rational{0, 1});
  w[group_idx] = Rational{1, 1};
  return make_measure(C, std::move(w));
}

} // namespace bclocal
