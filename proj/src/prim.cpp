#include "bclocal/prim.hpp"

#include <cassert>

namespace bclocal {

namespace {
long long md(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}
} // namespace

ExactPoint make_unit_point(const LocalFieldSpec& F, long long val, const RingElement& ring_unit,
                           long long galois_v, const RingElement& galois_unit, int cap) {
  require(cap >= 0, Errc::BadTarget, "make_unit_point: negative cap");
  ResidueRing R(F, cap);
  require(R.is_unit(ring_unit), Errc::BadTarget, "make_unit_point: ring cofactor not a unit");
  require(R.is_unit(galois_unit), Errc::BadTarget, "make_unit_point: Galois part not a unit");
  ExactPoint x;
  x.F = F;
  x.cap = cap;
  x.val = val;
  x.ring_unit = ring_unit;
  x.galois_v = galois_v;
  x.galois_unit = galois_unit;
  return x;
}

ExactPoint make_zero_point(const LocalFieldSpec& F, long long galois_v,
                           const RingElement& galois_unit, int cap) {
  require(cap >= 0, Errc::BadTarget, "make_zero_point: negative cap");
  ResidueRing R(F, cap);
  require(R.is_unit(galois_unit), Errc::BadTarget, "make_zero_point: Galois part not a unit");
  ExactPoint x;
  x.F = F;
  x.cap = cap;
  x.zero = true;
  x.ring_unit = R.one();
  x.galois_v = galois_v;
  x.galois_unit = galois_unit;
  return x;
}

RingElement unit_component(const ExactPoint& x, bool galois, int lev) {
  require(lev >= 0 && lev <= x.cap, Errc::BadTarget, "unit_component: level outside cap");
  const auto& acc = galois ? x.galois_unit_at : x.ring_unit_at;
  ResidueRing Rcap(x.F, x.cap);
  auto at = [&](int l) {
    if (acc) return acc(l);
    return Rcap.reduce_to(galois ? x.galois_unit : x.ring_unit, l);
  };
  // adjacent stored levels must agree under reduction all the way up
  for (int l = lev; l < x.cap; ++l) {
    ResidueRing Rh(x.F, l + 1);
    require(Rh.reduce_to(at(l + 1), l) == at(l), Errc::IncoherentTower,
            "unit_component: levels disagree under reduction");
  }
  RingElement u = at(lev);
  require(ResidueRing(x.F, lev).is_unit(u), Errc::BadTarget, "unit_component: not a unit");
  return u;
}

XCoords x_coords(const ExactPoint& x, const LevelContext& C) {
  require(x.F == C.field(), Errc::LevelMismatch, "x_coords: field mismatch");
  const LevelIndex L = C.level();
  require(L.m <= x.cap, Errc::BadTarget, "x_coords: level beyond stored cap");
  XCoords out;
  out.zero = x.zero;
  out.val = x.val;
  out.z = md(x.galois_v, L.n);
  if (x.zero) {
    out.c = C.ring(L.m).one();
    return out;
  }
  RingElement ru = unit_component(x, false, L.m);
  RingElement gu = unit_component(x, true, L.m);
  out.c = C.ring(L.m).mul(ru, gu);
  return out;
}

LevelPoint point_image(const ExactPoint& x, const LevelContext& C) {
  require(x.F == C.field(), Errc::LevelMismatch, "point_image: field mismatch");
  const LevelIndex L = C.level();
  require(L.m <= x.cap, Errc::BadTarget, "point_image: level beyond stored cap");
  const ResidueRing& R = C.ring(L.m);
  RingElement gu = unit_component(x, true, L.m);
  LevelGroupElement g{md(x.galois_v, L.n), gu};
  if (x.zero) return C.canonicalize(R.zero(), g);
  require(x.val >= 0, Errc::BadTarget, "point_image: negative valuation has no level shadow");
  RingElement ru = unit_component(x, false, L.m);
  int k = (int)std::min<long long>(x.val, L.m);
  RingElement a = R.mul(R.pow(R.pi(), k), ru);
  return C.canonicalize(a, g);
}

bool closure_member(const ExactPoint& x, const ExactPoint& y, const LevelContext& C) {
  require(x.F == C.field() && y.F == C.field(), Errc::LevelMismatch,
          "closure_member: field mismatch");
  /* The cylinder of a zero point at level (n, m) only remembers the
   * Z-residue, and the shift hits every residue once the valuation is
   * deep enough, so every orbit reaches it.  A finite target pins the
   * shift j to the valuation gap, leaving two residue checks. */
  if (y.zero) return true;
  if (x.zero) return false;
  XCoords cx = x_coords(x, C), cy = x_coords(y, C);
  long long j = cy.val - cx.val;
  if (md(cx.z - j, C.level().n) != cy.z) return false;
  return cx.c == cy.c;
}

QuasiOrbitLabel quasi_orbit(const ExactPoint& x, const LevelContext& C) {
  XCoords cx = x_coords(x, C);
  if (cx.zero) return {true, {}};
  // shift by -val lands at valuation 0, adding val to the Z-residue
  return {false, {md(cx.z + cx.val, C.level().n), cx.c}};
}

namespace {

ExactPoint label_representative(const LevelContext& C, long long gi, int cap) {
  const LevelIndex L = C.level();
  LevelGroupElement g = C.group_at(L.m, gi);
  ResidueRing Rcap(C.field(), cap);
  // at depth 0 the unit slot is the collapsed ring, lift it to 1
  RingElement gu = L.m == 0 ? Rcap.one() : C.ring(L.m).lift_to(g.u, cap);
  return make_unit_point(C.field(), 0, Rcap.one(), g.v, gu, cap);
}

} // namespace

long long quasi_orbit_label_count(const LevelContext& C) {
  const LevelIndex L = C.level();
  long long r = C.group_size(L.m);
  int cap = std::max(L.m, 1);
  std::vector<char> seen(r, 0);
  for (long long gi = 0; gi < r; ++gi) {
    QuasiOrbitLabel lab = quasi_orbit(label_representative(C, gi, cap), C);
    assert(!lab.zero_orbit);
    long long idx = C.group_index(L.m, lab.g);
    assert(idx == gi); // representative round-trips to its own label
    assert(!seen[idx]);
    seen[idx] = 1;
  }
  QuasiOrbitLabel z = quasi_orbit(make_zero_point(C.field(), 0, ResidueRing(C.field(), cap).one(), cap), C);
  assert(z.zero_orbit);
  return r + 1;
}

SpecializationTable prim_report(const LevelContext& C) {
  const LevelIndex L = C.level();
  long long r = C.group_size(L.m);
  require(r <= 512, Errc::SizeGuardExceeded, "prim_report: closure table too large");
  int cap = std::max(L.m, 1);

  SpecializationTable T;
  T.level = L;
  std::vector<ExactPoint> reps;
  for (long long gi = 0; gi < r; ++gi) {
    reps.push_back(label_representative(C, gi, cap));
    T.labels.push_back({false, C.group_at(L.m, gi)});
  }
  reps.push_back(make_zero_point(C.field(), 0, ResidueRing(C.field(), cap).one(), cap));
  T.labels.push_back({true, {}});

  size_t N = reps.size();
  T.closure.assign(N, std::vector<char>(N, 0));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j)
      T.closure[i][j] = closure_member(reps[i], reps[j], C) ? 1 : 0;

  T.non_specializing = true;
  for (size_t i = 0; i + 1 < N; ++i)
    for (size_t j = 0; j + 1 < N; ++j)
      if (i != j && T.closure[i][j]) T.non_specializing = false;
  T.zero_universal = true;
  for (size_t i = 0; i < N; ++i)
    if (!T.closure[i][N - 1]) T.zero_universal = false;
  T.reflexive = true;
  for (size_t i = 0; i < N; ++i)
    if (!T.closure[i][i]) T.reflexive = false;
  T.transitive = true;
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j)
      if (T.closure[i][j])
        for (size_t k = 0; k < N; ++k)
          if (T.closure[j][k] && !T.closure[i][k]) T.transitive = false;

  assert(T.non_specializing && T.zero_universal && T.reflexive && T.transitive);
  // the zero class reaches nothing finite
  for (size_t j = 0; j + 1 < N; ++j) assert(!T.closure[N - 1][j]);
  return T;
}

} // namespace bclocal
