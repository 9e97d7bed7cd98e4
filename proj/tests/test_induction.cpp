#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "bclocal/induction.hpp"

using namespace bclocal;

namespace {

// ideals of Z[i] with norm n, counted as lattice points over the four units
long long gaussian_ideals(long long n) {
  long long cnt = 0;
  for (long long x = -15; x <= 15; ++x)
    for (long long y = -15; y <= 15; ++y)
      if (x * x + y * y == n) ++cnt;
  return cnt / 4;
}

} // namespace

TEST_CASE("global field constructors") {
  NumberFieldSpec Q = make_global_Q();
  CHECK(Q.degree == 1);
  CHECK(Q.label == "Q");

  NumberFieldSpec Qi = make_global_quadratic(-1);
  CHECK(Qi.disc == -4);
  CHECK(Qi.degree == 2);
  CHECK(Qi.label == "Q(i)");
  CHECK(make_global_quadratic(-3).disc == -3);
  CHECK(make_global_quadratic(5).disc == 5);
  CHECK(make_global_quadratic(2).disc == 8);

  CHECK_THROWS_AS((void)make_global_quadratic(0), Error);
  CHECK_THROWS_AS((void)make_global_quadratic(1), Error);
  CHECK_THROWS_AS((void)make_global_quadratic(12), Error);
  // squarefree but outside the trivial-class-group list
  CHECK_THROWS_AS((void)ideal_count_coeffs(make_global_quadratic(10), 10), Error);
}

TEST_CASE("kronecker symbol and splitting") {
  CHECK(kronecker_symbol(-4, 5) == 1);
  CHECK(kronecker_symbol(-4, 3) == -1);
  CHECK(kronecker_symbol(-4, 2) == 0);
  CHECK(kronecker_symbol(5, 2) == -1);
  CHECK(kronecker_symbol(8, 2) == 0);
  CHECK(kronecker_symbol(13, 3) == 1);

  NumberFieldSpec Qi = make_global_quadratic(-1);
  CHECK(splitting_data(Qi, 5).type == SplitType::Split);
  CHECK(splitting_data(Qi, 5).primes_above == 2);
  CHECK(splitting_data(Qi, 3).type == SplitType::Inert);
  CHECK(splitting_data(Qi, 3).f == 2);
  CHECK(splitting_data(Qi, 2).type == SplitType::Ramified);
  CHECK(splitting_data(make_global_Q(), 7).type == SplitType::Rational);
  CHECK_THROWS_AS((void)splitting_data(Qi, 6), Error);
}

TEST_CASE("ideal counts against the Gaussian lattice") {
  NumberFieldSpec Qi = make_global_quadratic(-1);
  std::vector<long long> a = ideal_count_coeffs(Qi, 200);
  CHECK(a[1] == 1);
  CHECK(a[2] == 1);
  CHECK(a[3] == 0);
  CHECK(a[5] == 2);
  CHECK(a[25] == 3);
  CHECK(a[65] == 4);
  for (long long n = 1; n <= 200; ++n) CHECK(a[n] == gaussian_ideals(n));

  std::vector<long long> one = ideal_count_coeffs(make_global_Q(), 50);
  for (long long n = 1; n <= 50; ++n) CHECK(one[n] == 1);
}

TEST_CASE("ideal counts are multiplicative") {
  for (long long d : {-1LL, 5LL}) {
    std::vector<long long> a = ideal_count_coeffs(make_global_quadratic(d), 10000);
    for (long long m = 2; m * 2 <= 10000; ++m)
      for (long long n = 2; m * n <= 10000; ++n)
        if (std::gcd(m, n) == 1) CHECK(a[m * n] == a[m] * a[n]);
  }
}

TEST_CASE("partial zeta values") {
  NumberFieldSpec Q = make_global_Q();
  PartialZeta z = zeta_partial(Q, 2.0, 1000000);
  double zeta2 = M_PI * M_PI / 6.0;
  CHECK(std::abs(z.partial - zeta2) < 2e-6);
  CHECK(zeta2 - z.partial <= z.tail_bound);
  CHECK(std::isinf(zeta_partial(Q, 1.0, 100).tail_bound));

  // the crude tail constant holds at doubled cutoffs
  for (double beta : {1.5, 2.0, 3.0})
    for (const NumberFieldSpec& K : {Q, make_global_quadratic(-1), make_global_quadratic(5)}) {
      PartialZeta zb = zeta_partial(K, beta, 20000);
      PartialZeta z2b = zeta_partial(K, beta, 40000);
      CHECK(z2b.partial - zb.partial >= 0);
      CHECK(z2b.partial - zb.partial <= zb.tail_bound);
    }

  // product of the two scalar series feeding the quadratic zeta
  long double s1 = 0;
  for (long long n = 200000; n >= 1; --n) s1 += 1.0L / ((long double)n * n);
  long double s2 = 0;
  for (long long k = 200000; k >= 0; --k) {
    long double t = 1.0L / ((long double)(2 * k + 1) * (2 * k + 1));
    s2 += (k % 2 == 0) ? t : -t;
  }
  double oracle = (double)(s1 * s2);
  PartialZeta zi = zeta_partial(make_global_quadratic(-1), 2.0, 100000);
  CHECK(std::abs(zi.partial - oracle) < 1e-3);
  CHECK(std::abs(oracle - 1.50670) < 1e-4);
}

TEST_CASE("induced masses") {
  NumberFieldSpec Q = make_global_Q();
  InducedMass m = induced_partition(Q, 2, 2.0, 1000000);
  CHECK(std::abs(m.value - M_PI * M_PI / 8.0) < 1e-4);

  InducedMass mi = induced_partition(make_global_quadratic(-1), 5, 2.0, 100000);
  CHECK(std::abs(mi.value - 1.44643) < 2e-3);

  InducedMass tall = induced_partition(Q, 3, 40.0, 100);
  CHECK(std::abs(tall.value - 1.0) < 1e-9);

  CHECK_THROWS_AS((void)induced_partition(Q, 2, 1.0, 100), Error);
}

TEST_CASE("divergence witnesses") {
  NumberFieldSpec Q = make_global_Q();
  DivergenceWitness w1 = divergence_witness(Q, 1.0, 1.0);
  CHECK(w1.bound == 2);
  CHECK(w1.partial == doctest::Approx(1.5));

  DivergenceWitness w10 = divergence_witness(Q, 1.0, 10.0);
  CHECK(w10.partial > 10.0);
  CHECK(w10.bound <= 59874); // inside e^11 as the harmonic growth demands
  double harmonic = std::log((double)w10.bound) + 0.57721566490153286;
  CHECK(std::abs(w10.partial - harmonic) < 1e-3);
  // the previous doubling stop was still below the target
  double prev = std::log((double)w10.bound / 2) + 0.57721566490153286;
  CHECK(prev < 10.0 + 1e-3);

  DivergenceWitness wi = divergence_witness(make_global_quadratic(-1), 1.0, 5.0);
  CHECK(wi.partial > 5.0);
  CHECK(wi.bound <= 100000000);

  DivergenceWitness wh = divergence_witness(Q, 0.5, 3.0);
  CHECK(wh.partial > 3.0);
  CHECK(wh.bound <= 16);

  CHECK_THROWS_AS((void)divergence_witness(Q, 2.0, 1.0), Error);
}

TEST_CASE("window measures extend and restrict exactly") {
  LevelContext C(make_qp(2), {1, 1});
  Rational half(1, 2);
  std::map<std::pair<long long, long long>, Rational> atoms;
  atoms[{0, 0}] = Rational(1);
  WindowMeasure nu = make_window_measure(C, 6, half, false, atoms);

  WindowMeasure mu = induce_measure(C, nu);
  for (long long j = -6; j <= 6; ++j) {
    auto it = mu.atoms.find({j, 0});
    REQUIRE(it != mu.atoms.end());
    CHECK(it->second == half.pow(j));
  }
  // mass of the two-sided geometric ray, 2^7 - 2^{-6} over the window
  CHECK(measure_mass(mu) == Rational(8191, 64));

  RoundtripReport rep = induce_restrict_roundtrip(C, nu);
  CHECK(rep.pass);
  CHECK(rep.orbit_count == 1);
  CHECK(rep.induced_mass == Rational(8191, 64));
  CHECK(rep.restricted_mass == Rational(127, 64));

  // empty measure stays empty
  WindowMeasure zero = make_window_measure(C, 6, half, false, {});
  RoundtripReport rz = induce_restrict_roundtrip(C, zero);
  CHECK(rz.pass);
  CHECK(rz.induced_mass == Rational(0));

  // atom sitting inside the m-margin is rejected
  std::map<std::pair<long long, long long>, Rational> edge;
  edge[{6, 0}] = Rational(1);
  CHECK_THROWS_AS((void)induce_measure(C, make_window_measure(C, 6, half, false, edge)), Error);
}

TEST_CASE("ray law is enforced and multi-orbit roundtrips hold") {
  LevelContext C(make_qp(3), {2, 1});
  const LevelIndex L = C.level();
  Rational t(1, 3);

  std::map<std::pair<long long, long long>, Rational> bad;
  long long g0 = 0;
  LevelGroupElement g = C.group_at(1, g0);
  LevelGroupElement gs{(g.v - 1 + L.n) % L.n, g.u}; // one step along the shift
  bad[{0, g0}] = Rational(1);
  bad[{1, C.group_index(1, gs)}] = Rational(1, 5); // ray demands 1/3
  CHECK_THROWS_AS((void)make_window_measure(C, 5, t, false, bad), Error);

  std::map<std::pair<long long, long long>, Rational> atoms;
  for (long long orbit : {0LL, 3LL}) {
    LevelGroupElement o = C.group_at(1, orbit);
    Rational w0(orbit + 1, 7);
    for (long long j = 0; j <= 5 - L.m; ++j) {
      LevelGroupElement oj{(o.v - j % L.n + L.n) % L.n, o.u};
      atoms[{j, C.group_index(1, oj)}] = w0 * t.pow(j);
    }
  }
  WindowMeasure nu = make_window_measure(C, 5, t, false, atoms);
  RoundtripReport rep = induce_restrict_roundtrip(C, nu);
  CHECK(rep.pass);
  CHECK(rep.orbit_count == 2);
  CHECK(rep.scaling_ok);
  // two seeds, each extended over the full window
  Rational geo;
  for (long long j = -5; j <= 5; ++j) geo = geo + t.pow(j);
  CHECK(rep.induced_mass == (Rational(1, 7) + Rational(4, 7)) * geo);
}
