#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bclocal/bc_algebra.hpp"

using namespace bclocal;

namespace {

const double EPS = 1e-12;

template <class S>
bool mat_eq(const Mat<S>& A, const Mat<S>& B) {
  return A.n == B.n && A.a == B.a;
}

std::vector<double> diag_of(const Mat<double>& M) {
  std::vector<double> d(M.n);
  for (int i = 0; i < M.n; ++i) d[i] = M.at(i, i);
  return d;
}

} // namespace

TEST_CASE("diagonal representation") {
  LevelContext C(make_qp(2), {1, 1});
  LevelPoint w = base_point(C, 0);
  auto one = constant_function<double>(C, 1.0);
  CHECK(mat_eq(represent_diag(C, one, w, 4), Mat<double>::identity(4)));
  auto s0 = indicator_stratum<double>(C, 0);
  CHECK(diag_of(represent_diag(C, s0, w, 4)) == std::vector<double>{1, 0, 0, 0});

  LevelContext C3(make_qp(3), {2, 2});
  LevelPoint w3{0, {0, C3.ring(2).from_int(1)}};
  auto f = indicator_stratum_v<double>(C3, 2, 0);
  CHECK(diag_of(represent_diag(C3, f, w3, 5)) == std::vector<double>{0, 0, 1, 0, 1});

  CHECK_THROWS_AS(represent_diag(C3, f, LevelPoint{1, {0, C3.ring(1).one()}}, 4), Error);
}

TEST_CASE("shift matrices and truncation boundary") {
  CHECK(mat_eq(shift_matrix<double>(0, 3), Mat<double>::identity(3)));
  Mat<double> S = shift_matrix<double>(1, 3);
  CHECK(S.at(1, 0) == 1);
  CHECK(S.at(2, 1) == 1);
  Mat<double> SSs = mat_mul(S, mat_transpose(S));
  Mat<double> SsS = mat_mul(mat_transpose(S), S);
  CHECK(diag_of(SSs) == std::vector<double>{0, 1, 1});
  // the infinite-model identity S*S = 1 loses its last diagonal entry to
  // the truncation; it is restored as N grows
  CHECK(diag_of(SsS) == std::vector<double>{1, 1, 0});
  CHECK(mat_eq(shift_matrix<double>(3, 3), Mat<double>::zero(3)));
}

TEST_CASE("monomial matrices factor through shift and diagonal") {
  LevelContext C(make_qp(3), {2, 2});
  LevelPoint w = base_point(C, 1);
  for (int j = 0; j <= 3; ++j) {
    Monomial<double> mono{1.0, indicator_stratum_v<double>(C, 1, 1), j, false};
    Mat<double> D = represent_diag(C, mono.f, w, 6);
    CHECK(mat_eq(monomial_matrix(C, mono, w, 6), mat_mul(D, shift_matrix<double>(j, 6))));
    Monomial<double> adj{1.0, mono.f, j, true};
    CHECK(mat_eq(monomial_matrix(C, adj, w, 6), mat_mul(mat_transpose(shift_matrix<double>(j, 6)), D)));
  }
}

TEST_CASE("time evolution factors") {
  CHECK(std::abs(evolution_factor(2, {0.7, 0}, 0, false) - std::complex<double>(1, 0)) < EPS);
  CHECK(std::abs(std::abs(evolution_factor(2, {1.3, 0}, 1, false)) - 1.0) < EPS);
  // z = i beta continues the phase to the damping factor q^{-beta j}
  CHECK(std::abs(evolution_factor(2, {0, 1}, 2, false) - std::complex<double>(0.25, 0)) < EPS);
  CHECK(std::abs(evolution_factor(2, {0, 1}, 2, true) - std::complex<double>(4.0, 0)) < EPS);
  // group law in z
  std::complex<double> z1{0.3, 0.2}, z2{-1.1, 0.4};
  CHECK(std::abs(evolution_factor(3, z1 + z2, 2, false) -
                 evolution_factor(3, z1, 2, false) * evolution_factor(3, z2, 2, false)) < EPS);
}

TEST_CASE("Gibbs expectation") {
  Mat<double> I = Mat<double>::identity(5);
  CHECK(gibbs_expectation(0.5, I) == doctest::Approx(1.0).epsilon(1e-12));
  Mat<double> M = Mat<double>::zero(2);
  M.at(0, 0) = 1;
  CHECK(gibbs_expectation(0.5, M) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  // N large: the Gibbs weight of e_0 tends to 1 - t
  Mat<double> P = Mat<double>::zero(60);
  P.at(0, 0) = 1;
  CHECK(gibbs_expectation(0.5, P) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("partition function") {
  PartitionValues v = partition_function(2, 1.0, 4);
  CHECK(v.exact == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(v.truncated == doctest::Approx(1.875).epsilon(1e-15));
  CHECK(v.bound == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(partition_function(3, 2.0, 8).exact == doctest::Approx(9.0 / 8).epsilon(1e-15));
  CHECK_THROWS_AS(partition_function(2, 0.0, 4), Error);
  CHECK_THROWS_AS(partition_function(2, -1.0, 4), Error);

  PartitionValuesExact e = partition_function_exact(2, 1, 4);
  CHECK(e.exact == Rational(2));
  CHECK(e.truncated == Rational(15, 8));
  CHECK(e.bound == Rational(1, 8));
  CHECK(partition_function_exact(3, 2, 6).exact == Rational(9, 8));
  // the geometric tail identity holds exactly in the rational lane
  for (long long q : {2, 3, 5})
    for (long long b : {1, 2})
      for (long long N : {1, 3, 10}) {
        PartitionValuesExact pv = partition_function_exact(q, b, N);
        CHECK(pv.exact - pv.truncated == pv.bound);
      }
}

TEST_CASE("closed-form state evaluation") {
  LevelContext C(make_qp(2), {1, 1});
  LevelPoint w = base_point(C, 0);
  auto s0 = indicator_stratum<double>(C, 0);
  auto s1 = indicator_stratum<double>(C, 1);
  CHECK(kms_eval(C, s0, 1.0, w) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(kms_eval(C, s1, 1.0, w) == doctest::Approx(0.5).epsilon(1e-12));
  for (double beta : {0.5, 1.0, 1.7, 3.0})
    CHECK(kms_eval(C, constant_function<double>(C, 1.0), beta, w) ==
          doctest::Approx(1.0).epsilon(1e-12));

  auto s0r = indicator_stratum<Rational>(C, 0);
  CHECK(kms_eval_exact(C, s0r, Rational(1, 2), w) == Rational(1, 2));

  // normalization across levels and fields, exact lane
  std::vector<LocalFieldSpec> fields = {make_qp(2), make_qp(3), make_unramified(2, {1, 1, 1})};
  for (const auto& F : fields)
    for (long long n : {1, 2, 3})
      for (int m : {0, 1, 2}) {
        LevelContext D(F, {n, m});
        auto onef = constant_function<Rational>(D, Rational(1));
        Rational t(1, F.q);
        for (long long gi = 0; gi < D.group_size(m); ++gi)
          CHECK(kms_eval_exact(D, onef, t, base_point(D, gi)) == Rational(1));
      }
  CHECK_THROWS_AS(kms_eval(C, s0, 0.0, w), Error);
  CHECK_THROWS_AS(kms_eval(C, s0, 1.0, LevelPoint{1, {0, C.ring(0).zero()}}), Error);
}

TEST_CASE("evaluation at infinite beta") {
  LevelContext C(make_qp(2), {1, 1});
  LevelPoint w = base_point(C, 0);
  CHECK(kms_infty_eval(C, indicator_stratum<double>(C, 0), w) == 1.0);
  CHECK(kms_infty_eval(C, indicator_stratum<double>(C, 1), w) == 0.0);
  for (double beta : {1.0, 2.0, 5.0, 10.0})
    CHECK(std::fabs(kms_eval(C, indicator_stratum<double>(C, 0), beta, w) - 1.0) ==
          doctest::Approx(std::pow(2.0, -beta)).epsilon(1e-12));
}

TEST_CASE("consistency along level projections") {
  // evaluating at a finer level after pullback changes nothing, exactly
  LocalFieldSpec F = make_qp(3);
  LevelContext coarse(F, {2, 1}), fine(F, {4, 2});
  Rational t(1, 3);
  for (long long ci = 0; ci < coarse.total_points(); ++ci) {
    auto f = indicator_point<Rational>(coarse, coarse.point_at(ci));
    auto fp = pullback(fine, f, coarse);
    for (long long gi = 0; gi < fine.group_size(2); ++gi) {
      LevelPoint wf = base_point(fine, gi);
      LevelPoint wc = transition(fine, wf, coarse);
      CHECK(kms_eval_t(fine, fp, t, wf) == kms_eval_t(coarse, f, t, wc));
    }
  }
}

TEST_CASE("Gibbs truncation tracks the closed form") {
  std::vector<std::pair<LocalFieldSpec, LevelIndex>> grid = {
      {make_qp(2), {1, 1}}, {make_qp(2), {3, 2}}, {make_qp(3), {2, 2}},
      {make_unramified(2, {1, 1, 1}), {2, 1}}};
  for (auto& [F, L] : grid) {
    LevelContext C(F, L);
    for (double beta : {0.5, 1.0, 2.0})
      for (int N : {4, 8, 16}) {
        double t = std::pow((double)F.q, -beta);
        for (int k = 0; k <= L.m; ++k) {
          auto f = indicator_stratum<double>(C, k);
          for (long long gi = 0; gi < C.group_size(L.m); gi += 3) {
            LevelPoint w = base_point(C, gi);
            double g = gibbs_expectation(t, represent_diag(C, f, w, N));
            double phi = kms_eval(C, f, beta, w);
            CHECK(std::fabs(g - phi) <= std::pow(t, (double)N) / (1.0 - t) + 1e-12);
          }
        }
      }
  }
}

TEST_CASE("KMS residuals vanish in the truncated model") {
  LevelContext C(make_qp(2), {1, 1});
  LevelPoint w = base_point(C, 0);
  auto onef = constant_function<double>(C, 1.0);

  Monomial<double> d0{1.0, indicator_stratum<double>(C, 0), 0, false};
  Monomial<double> d1{1.0, onef, 0, false};
  CHECK(kms_residual(C, d0, d1, 1.0, 8, w) == 0.0);

  Monomial<double> a{1.0, onef, 1, false};
  Monomial<double> b{1.0, onef, 1, true};
  double r12 = kms_residual(C, a, b, 1.0, 12, w);
  CHECK(r12 <= std::pow(2.0, -10.0) / 0.5 + 1e-15);
  double r24 = kms_residual(C, a, b, 1.0, 24, w);
  CHECK(r24 <= std::max(std::pow(2.0, -12.0) * r12, 1e-13));

  // the exact lane shows the residual is identically zero: the truncated
  // Gibbs state fulfills the KMS identity on monomials on the nose
  LevelContext C3(make_qp(3), {2, 2});
  LevelPoint w3 = base_point(C3, 2);
  for (int ja = 0; ja <= 2; ++ja)
    for (int jb = 0; jb <= 2; ++jb)
      for (int adj = 0; adj <= 1; ++adj) {
        Monomial<Rational> ma{Rational(1), indicator_stratum_v<Rational>(C3, 1, 0), ja, adj == 1};
        Monomial<Rational> mb{Rational(2, 3), indicator_stratum<Rational>(C3, 2), jb, adj == 0};
        CHECK(kms_residual_exact(C3, ma, mb, 1, 9, w3) == Rational(0));
      }

  CHECK_THROWS_AS(kms_residual(C, a, b, 1.0, 2, w), Error); // J = 2 >= N
}

TEST_CASE("states from measures") {
  LevelContext C(make_qp(3), {2, 1});
  CHECK(C.group_size(1) == 4);

  KMSState uni = state_from_measure(C, uniform_measure(C), 1.0);
  auto f = indicator_stratum_v<double>(C, 0, 0);
  CHECK(eval_state(C, uni, f) == doctest::Approx((1 - 1.0 / 3) * 0.5).epsilon(1e-12));
  auto fr = indicator_stratum_v<Rational>(C, 0, 0);
  KMSState uniE = state_from_measure(C, uniform_measure(C), 1.0);
  CHECK(eval_state_exact(C, uniE, fr, Rational(1, 3)) == Rational(1, 3));

  KMSState dirac = state_from_measure(C, dirac_measure(C, 2), 1.0);
  auto g = indicator_stratum<double>(C, 1);
  CHECK(eval_state(C, dirac, g) ==
        doctest::Approx(kms_eval(C, g, 1.0, base_point(C, 2))).epsilon(1e-12));

  KMSState inf = state_infty_from_measure(C, dirac_measure(C, 1));
  CHECK(eval_state(C, inf, indicator_stratum<double>(C, 0)) == 1.0);
  CHECK(eval_state(C, inf, g) == 0.0);

  LevelMeasure half = uniform_measure(C);
  half.weights[0] = Rational(0);
  half.mass = Rational(3, 4);
  CHECK_THROWS_AS(state_from_measure(C, half, 1.0), Error);
  CHECK_THROWS_AS(state_from_measure(C, uniform_measure(C), 0.0), Error);
}

TEST_CASE("Galois translation acts simply transitively on Dirac states") {
  LevelContext C(make_qp(3), {2, 1});
  int m = 1;

  LevelMeasure d = dirac_measure(C, C.group_index(m, {0, C.ring(1).from_int(1)}));
  LevelGroupElement g{1, C.ring(1).from_int(2)};
  LevelMeasure moved = galois_translate(C, d, g);
  CHECK(moved.weights[C.group_index(m, {1, C.ring(1).from_int(2)})] == Rational(1));

  CHECK(galois_translate(C, d, C.group_identity(m)).weights == d.weights);

  // orbit of one Dirac measure under the whole group: all |G| distinct
  std::set<std::vector<long long>> seen;
  for (long long gi = 0; gi < C.group_size(m); ++gi) {
    LevelMeasure t = galois_translate(C, d, C.group_at(m, gi));
    std::vector<long long> key;
    for (auto& wt : t.weights) key.push_back(wt.is_zero() ? 0 : 1);
    long long hot = -1;
    for (long long i = 0; i < (long long)key.size(); ++i)
      if (key[i]) hot = i;
    key.push_back(hot);
    CHECK(seen.insert(key).second); // freeness: no repeat
  }
  CHECK((long long)seen.size() == C.group_size(m));
}

TEST_CASE("norms") {
  LevelContext C(make_qp(2), {1, 1});
  auto f = constant_function<double>(C, -2.5);
  CHECK(sup_norm(f) == 2.5);
  auto fr = indicator_stratum<Rational>(C, 0);
  CHECK(sup_norm(fr) == Rational(1));
}
