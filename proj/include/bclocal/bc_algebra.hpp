#pragma once

/* The crossed-product dynamics at a finite level, evaluated two ways.
 *
 * Closed form: for a stratum-0 point w the state at inverse temperature
 * beta is
 *
 *     phi(f) = (1 - t) sum_{k>=0} t^k f(k.w),      t = q^{-beta},
 *
 * and since k.w saturates to the top stratum after m steps with v-residue
 * periodic of period n, the sum collapses to m head terms plus n geometric
 * tails.  Truncated form: on l^2{0..N-1} the function acts diagonally by
 * f(k.w), the isometry by the index shift, and the Gibbs state of the
 * diagonal Hamiltonian with weights t^k approximates phi to within the
 * discarded tail t^N/(1-t).
 *
 * Scalars run in two lanes: exact rationals whenever t is rational
 * (integer beta), doubles otherwise.  Every bound stated here is the
 * sup-norm geometric-tail estimate, and the truncated Gibbs state
 * satisfies the beta-KMS identity on monomials exactly, because the
 * scaling q^{-beta(r-c)} that implements sigma_{i beta} is built from the
 * same diagonal weights that define the trace.  Residuals therefore sit
 * at the arithmetic noise floor, far below the contract bound. */

#include <complex>
#include <cmath>
#include <type_traits>

#include "bclocal/errors.hpp"
#include "bclocal/level.hpp"
#include "bclocal/rational.hpp"

namespace bclocal {

template <class S>
inline S scalar_pow(const S& b, long long e) {
  if constexpr (std::is_same_v<S, Rational>) return b.pow(e);
  else return std::pow(b, (double)e);
}
template <class S>
inline S scalar_abs(const S& x) {
  if constexpr (std::is_same_v<S, Rational>) return x.abs();
  else return std::fabs(x);
}

template <class S>
struct LCFunction {
  LevelIndex level;
  std::vector<S> values; // one value per point index
};
using RatFunction = LCFunction<Rational>;
using RealFunction = LCFunction<double>;

template <class S>
LCFunction<S> constant_function(const LevelContext& C, S v) {
  return {C.level(), std::vector<S>(C.total_points(), v)};
}

template <class S>
LCFunction<S> indicator_stratum(const LevelContext& C, int k) {
  LCFunction<S> f = constant_function<S>(C, S(0));
  for (long long i = 0; i < C.total_points(); ++i)
    if (C.point_at(i).k == k) f.values[i] = S(1);
  return f;
}

template <class S>
LCFunction<S> indicator_stratum_v(const LevelContext& C, int k, long long v) {
  LCFunction<S> f = constant_function<S>(C, S(0));
  for (long long i = 0; i < C.total_points(); ++i) {
    LevelPoint y = C.point_at(i);
    if (y.k == k && y.g.v == v) f.values[i] = S(1);
  }
  return f;
}

template <class S>
LCFunction<S> indicator_point(const LevelContext& C, const LevelPoint& y) {
  LCFunction<S> f = constant_function<S>(C, S(0));
  f.values[C.point_index(y)] = S(1);
  return f;
}

template <class S>
S eval_function(const LevelContext& C, const LCFunction<S>& f, const LevelPoint& y) {
  require(f.level == C.level(), Errc::LevelMismatch, "function level mismatch");
  return f.values[C.point_index(y)];
}

// embed a coarse-level function into a finer level along the projection
template <class S>
LCFunction<S> pullback(const LevelContext& fine, const LCFunction<S>& f, const LevelContext& coarse) {
  require(f.level == coarse.level(), Errc::LevelMismatch, "function level mismatch");
  LCFunction<S> out{fine.level(), std::vector<S>(fine.total_points())};
  for (long long i = 0; i < fine.total_points(); ++i)
    out.values[i] = f.values[coarse.point_index(transition(fine, fine.point_at(i), coarse))];
  return out;
}

template <class S>
S sup_norm(const LCFunction<S>& f) {
  S best(0);
  for (const auto& v : f.values) {
    S a = scalar_abs(v);
    if (best < a) best = a;
  }
  return best;
}

/* coeff * f v_j, or coeff * v_j^* f when adjoint is set */
template <class S>
struct Monomial {
  S coeff{1};
  LCFunction<S> f;
  long long j = 0;
  bool adjoint = false;
};

// sigma_z on a degree-j monomial scales by q^{izj} (conjugate side: q^{-izj})
std::complex<double> evolution_factor(long long q, std::complex<double> z, long long j, bool adjoint);

// analytic continuation to z = i beta expressed through t = q^{-beta}
template <class S>
Monomial<S> sigma_ibeta_t(const S& t, Monomial<S> mono) {
  mono.coeff = mono.coeff * scalar_pow(t, mono.adjoint ? -mono.j : mono.j);
  return mono;
}

template <class S>
struct Mat {
  int n = 0;
  std::vector<S> a;
  static Mat zero(int n) { return {n, std::vector<S>((size_t)n * n, S(0))}; }
  static Mat identity(int n) {
    Mat m = zero(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }
  S& at(int r, int c) { return a[(size_t)r * n + c]; }
  const S& at(int r, int c) const { return a[(size_t)r * n + c]; }
};

template <class S>
Mat<S> mat_transpose(const Mat<S>& A) {
  Mat<S> T = Mat<S>::zero(A.n);
  for (int r = 0; r < A.n; ++r)
    for (int c = 0; c < A.n; ++c) T.at(c, r) = A.at(r, c);
  return T;
}

template <class S>
Mat<S> mat_mul(const Mat<S>& A, const Mat<S>& B) {
  require(A.n == B.n, Errc::BadTarget, "matrix size mismatch");
  Mat<S> C = Mat<S>::zero(A.n);
  for (int r = 0; r < A.n; ++r)
    for (int k = 0; k < A.n; ++k) {
      const S& x = A.at(r, k);
      if (scalar_abs(x) == S(0)) continue;
      for (int c = 0; c < A.n; ++c) C.at(r, c) = C.at(r, c) + x * B.at(k, c);
    }
  return C;
}

template <class S>
Mat<S> represent_diag(const LevelContext& C, const LCFunction<S>& f, const LevelPoint& w, int N) {
  require(N >= 1, Errc::BadTarget, "truncation must be >= 1");
  require(w.k == 0, Errc::LevelMismatch, "base point must lie in stratum 0");
  Mat<S> M = Mat<S>::zero(N);
  for (int k = 0; k < N; ++k) M.at(k, k) = eval_function(C, f, C.act(k, w));
  return M;
}

template <class S>
Mat<S> shift_matrix(int j, int N) {
  Mat<S> M = Mat<S>::zero(N);
  for (int k = 0; k + j < N; ++k) M.at(k + j, k) = S(1);
  return M;
}

template <class S>
Mat<S> monomial_matrix(const LevelContext& C, const Monomial<S>& mono, const LevelPoint& w, int N) {
  require(w.k == 0, Errc::LevelMismatch, "base point must lie in stratum 0");
  require(mono.j >= 0, Errc::BadTarget, "monomial degree must be >= 0");
  Mat<S> M = Mat<S>::zero(N);
  int j = (int)mono.j;
  if (!mono.adjoint) {
    // (f v_j) xi_k = f((k+j).w) xi_{k+j}
    for (int k = 0; k + j < N; ++k)
      M.at(k + j, k) = mono.coeff * eval_function(C, mono.f, C.act(k + j, w));
  } else {
    // (v_j^* f) xi_k = f(k.w) xi_{k-j}
    for (int k = j; k < N; ++k)
      M.at(k - j, k) = mono.coeff * eval_function(C, mono.f, C.act(k, w));
  }
  return M;
}

template <class S>
S truncated_partition(const S& t, long long N) {
  S z(0), pw(1);
  for (long long k = 0; k < N; ++k) {
    z = z + pw;
    pw = pw * t;
  }
  return z;
}

template <class S>
S gibbs_expectation(const S& t, const Mat<S>& M) {
  S num(0), pw(1);
  for (int k = 0; k < M.n; ++k) {
    num = num + pw * M.at(k, k);
    pw = pw * t;
  }
  return num / truncated_partition(t, M.n);
}

struct PartitionValues {
  double truncated, exact, bound;
};
struct PartitionValuesExact {
  Rational truncated, exact, bound;
};
PartitionValues partition_function(long long q, double beta, long long N);
PartitionValuesExact partition_function_exact(long long q, long long beta, long long N);

/* phi(f) = (1-t) [ sum_{k<m} t^k f(k.w) + sum_{j<n} t^{m+j} f((m+j).w) / (1-t^n) ] */
template <class S>
S kms_eval_t(const LevelContext& C, const LCFunction<S>& f, const S& t, const LevelPoint& w) {
  require(w.k == 0, Errc::LevelMismatch, "base point must lie in stratum 0");
  long long n = C.level().n;
  int m = C.level().m;
  S head(0), pw(1);
  for (int k = 0; k < m; ++k) {
    head = head + pw * eval_function(C, f, C.act(k, w));
    pw = pw * t;
  }
  S tail(0);
  for (long long j = 0; j < n; ++j) {
    tail = tail + pw * eval_function(C, f, C.act(m + j, w));
    pw = pw * t;
  }
  S one(1);
  return (one - t) * (head + tail / (one - scalar_pow(t, n)));
}

double kms_eval(const LevelContext& C, const RealFunction& f, double beta, const LevelPoint& w);
Rational kms_eval_exact(const LevelContext& C, const RatFunction& f, const Rational& t, const LevelPoint& w);

template <class S>
S kms_infty_eval(const LevelContext& C, const LCFunction<S>& f, const LevelPoint& w) {
  require(w.k == 0, Errc::LevelMismatch, "base point must lie in stratum 0");
  return eval_function(C, f, w);
}

/* |phi_N(a sigma_{i beta}(b)) - phi_N(b a)| in the truncated model */
template <class S>
S kms_residual_t(const LevelContext& C, const Monomial<S>& a, const Monomial<S>& b, const S& t,
                 int N, const LevelPoint& w) {
  require(a.j + b.j < N, Errc::TruncationTooSmall, "combined degree must stay below the truncation");
  Mat<S> A = monomial_matrix(C, a, w, N);
  Mat<S> B = monomial_matrix(C, b, w, N);
  Mat<S> Bs = monomial_matrix(C, sigma_ibeta_t(t, b), w, N);
  S lhs = gibbs_expectation(t, mat_mul(A, Bs));
  S rhs = gibbs_expectation(t, mat_mul(B, A));
  return scalar_abs(lhs - rhs);
}

double kms_residual(const LevelContext& C, const Monomial<double>& a, const Monomial<double>& b,
                    double beta, int N, const LevelPoint& w);
Rational kms_residual_exact(const LevelContext& C, const Monomial<Rational>& a,
                            const Monomial<Rational>& b, long long beta, int N, const LevelPoint& w);
double residual_bound(const LevelContext& C, const Monomial<double>& a, const Monomial<double>& b,
                      double beta, int N);

struct KMSState {
  bool infinite = false;
  double beta = 0; // unused when infinite
  LevelMeasure measure;
};

KMSState state_from_measure(const LevelContext& C, LevelMeasure nu, double beta);
KMSState state_infty_from_measure(const LevelContext& C, LevelMeasure nu);
double eval_state(const LevelContext& C, const KMSState& st, const RealFunction& f);
Rational eval_state_exact(const LevelContext& C, const KMSState& st, const RatFunction& f, const Rational& t);

LevelMeasure galois_translate(const LevelContext& C, const LevelMeasure& nu, const LevelGroupElement& g);
KMSState galois_translate(const LevelContext& C, const KMSState& st, const LevelGroupElement& g);

// stratum-0 point backing the group element with this index
LevelPoint base_point(const LevelContext& C, long long group_idx);

} // namespace bclocal
