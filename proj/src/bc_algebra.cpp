#include "bclocal/bc_algebra.hpp"

#include <cassert>

namespace bclocal {

std::complex<double> evolution_factor(long long q, std::complex<double> z, long long j, bool adjoint) {
  // q^{izj} = exp(izj log q); the adjoint side conjugates the phase
  std::complex<double> i(0, 1);
  double sign = adjoint ? -1.0 : 1.0;
  return std::exp(i * z * (sign * (double)j) * std::log((double)q));
}

PartitionValues partition_function(long long q, double beta, long long N) {
  require(beta > 0, Errc::NonpositiveBeta, "beta must be positive");
  require(N >= 1, Errc::TruncationTooSmall, "need at least one term");
  double t = std::pow((double)q, -beta);
  return {truncated_partition(t, N), 1.0 / (1.0 - t), std::pow(t, (double)N) / (1.0 - t)};
}

PartitionValuesExact partition_function_exact(long long q, long long beta, long long N) {
  require(beta > 0, Errc::NonpositiveBeta, "beta must be positive");
  require(N >= 1, Errc::TruncationTooSmall, "need at least one term");
  Rational t = Rational(1) / Rational(q).pow(beta);
  Rational one(1);
  PartitionValuesExact out{truncated_partition(t, N), one / (one - t), t.pow(N) / (one - t)};
  assert(out.exact - out.truncated == out.bound); // the tail identity is exact
  return out;
}

double kms_eval(const LevelContext& C, const RealFunction& f, double beta, const LevelPoint& w) {
  require(beta > 0, Errc::NonpositiveBeta, "beta must be positive");
  return kms_eval_t(C, f, std::pow((double)C.field().q, -beta), w);
}

Rational kms_eval_exact(const LevelContext& C, const RatFunction& f, const Rational& t,
                        const LevelPoint& w) {
  require(Rational(0) < t && t < Rational(1), Errc::NonpositiveBeta, "need 0 < t < 1");
  return kms_eval_t(C, f, t, w);
}

double kms_residual(const LevelContext& C, const Monomial<double>& a, const Monomial<double>& b,
                    double beta, int N, const LevelPoint& w) {
  require(beta > 0, Errc::NonpositiveBeta, "beta must be positive");
  return kms_residual_t(C, a, b, std::pow((double)C.field().q, -beta), N, w);
}

Rational kms_residual_exact(const LevelContext& C, const Monomial<Rational>& a,
                            const Monomial<Rational>& b, long long beta, int N,
                            const LevelPoint& w) {
  require(beta > 0, Errc::NonpositiveBeta, "beta must be positive");
  Rational t = Rational(1) / Rational(C.field().q).pow(beta);
  return kms_residual_t(C, a, b, t, N, w);
}

double residual_bound(const LevelContext& C, const Monomial<double>& a, const Monomial<double>& b,
                      double beta, int N) {
  long long J = a.j + b.j;
  double t = std::pow((double)C.field().q, -beta);
  double scale = sup_norm(a.f) * std::fabs(a.coeff) * sup_norm(b.f) * std::fabs(b.coeff);
  return scale * std::pow(t, (double)(N - J)) / (1.0 - t);
}

KMSState state_from_measure(const LevelContext& C, LevelMeasure nu, double beta) {
  require(beta > 0, Errc::NonpositiveBeta, "beta must be positive");
  require(nu.level == C.level(), Errc::LevelMismatch, "measure level mismatch");
  require(nu.mass == Rational(1), Errc::MassNotOne, "states need a probability measure");
  return {false, beta, std::move(nu)};
}

KMSState state_infty_from_measure(const LevelContext& C, LevelMeasure nu) {
  require(nu.level == C.level(), Errc::LevelMismatch, "measure level mismatch");
  require(nu.mass == Rational(1), Errc::MassNotOne, "states need a probability measure");
  return {true, 0, std::move(nu)};
}

LevelPoint base_point(const LevelContext& C, long long group_idx) {
  return {0, C.group_at(C.level().m, group_idx)};
}

double eval_state(const LevelContext& C, const KMSState& st, const RealFunction& f) {
  double out = 0;
  for (long long gi = 0; gi < (long long)st.measure.weights.size(); ++gi) {
    const Rational& wt = st.measure.weights[gi];
    if (wt.is_zero()) continue;
    LevelPoint w = base_point(C, gi);
    out += wt.to_double() *
           (st.infinite ? kms_infty_eval(C, f, w) : kms_eval(C, f, st.beta, w));
  }
  return out;
}

Rational eval_state_exact(const LevelContext& C, const KMSState& st, const RatFunction& f,
                          const Rational& t) {
  Rational out;
  for (long long gi = 0; gi < (long long)st.measure.weights.size(); ++gi) {
    const Rational& wt = st.measure.weights[gi];
    if (wt.is_zero()) continue;
    LevelPoint w = base_point(C, gi);
    out += wt * (st.infinite ? kms_infty_eval(C, f, w) : kms_eval_t(C, f, t, w));
  }
  return out;
}

LevelMeasure galois_translate(const LevelContext& C, const LevelMeasure& nu,
                              const LevelGroupElement& g) {
  int m = C.level().m;
  require(nu.level == C.level(), Errc::LevelMismatch, "measure level mismatch");
  require(g.u.m == m, Errc::LevelMismatch, "group element not at the top level");
  LevelMeasure out{nu.level, std::vector<Rational>(nu.weights.size()), nu.mass};
  for (long long gi = 0; gi < (long long)nu.weights.size(); ++gi) {
    LevelGroupElement moved = C.group_op(m, g, C.group_at(m, gi));
    out.weights[C.group_index(m, moved)] = nu.weights[gi];
  }
  return out;
}

KMSState galois_translate(const LevelContext& C, const KMSState& st, const LevelGroupElement& g) {
  return {st.infinite, st.beta, galois_translate(C, st.measure, g)};
}

} // namespace bclocal
