#include "bclocal/padic.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

#include "bclocal/rational.hpp"

namespace bclocal {

namespace {

long long nonneg_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

long long ipow(long long b, long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

std::vector<long long> poly_mod_p(std::vector<long long> c, long long p) {
  for (auto& x : c) x = nonneg_mod(x, p);
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

// remainder of a / b over F_p, b monic
std::vector<long long> poly_rem_mod_p(std::vector<long long> a, const std::vector<long long>& b, long long p) {
  int db = (int)b.size() - 1;
  while ((int)a.size() - 1 >= db) {
    long long lead = a.back() % p;
    int shift = (int)a.size() - 1 - db;
    if (lead != 0)
      for (int i = 0; i <= db; ++i) a[shift + i] = nonneg_mod(a[shift + i] - lead * b[i], p);
    a.pop_back();
    while (a.size() > 1 && a.back() == 0) a.pop_back();
  }
  return a;
}

std::string poly_to_string(const std::vector<long long>& c) {
  std::string s;
  for (int d = (int)c.size() - 1; d >= 0; --d) {
    long long a = c[d];
    if (a == 0) continue;
    std::string term;
    long long mag = a < 0 ? -a : a;
    if (d == 0) term = std::to_string(mag);
    else {
      if (mag != 1) term = std::to_string(mag);
      term += "x";
      if (d > 1) term += "^" + std::to_string(d);
    }
    if (s.empty()) s = (a < 0 ? "-" : "") + term;
    else s += (a < 0 ? "-" : "+") + term;
  }
  return s.empty() ? "0" : s;
}

} // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool poly_irreducible_mod_p(const std::vector<long long>& poly, long long p) {
  std::vector<long long> f = poly_mod_p(poly, p);
  int n = (int)f.size() - 1;
  if (n < 1) return false;
  if (f.back() == 0) return false;
  // trial division by every monic polynomial of degree 1 .. n/2
  for (int k = 1; 2 * k <= n; ++k) {
    long long count = ipow(p, k);
    for (long long code = 0; code < count; ++code) {
      std::vector<long long> g(k + 1, 0);
      long long c = code;
      for (int i = 0; i < k; ++i) { g[i] = c % p; c /= p; }
      g[k] = 1;
      std::vector<long long> r = poly_rem_mod_p(f, g, p);
      if (r.size() == 1 && r[0] == 0) return false;
    }
  }
  return true;
}

LocalFieldSpec make_qp(long long p) {
  require(is_prime(p), Errc::NotPrime, "p = " + std::to_string(p));
  LocalFieldSpec F;
  F.p = p;
  F.kind = FieldKind::Qp;
  F.e = F.f = 1;
  F.q = p;
  return F;
}

LocalFieldSpec make_unramified(long long p, const std::vector<long long>& poly) {
  require(is_prime(p), Errc::NotPrime, "p = " + std::to_string(p));
  int deg = (int)poly.size() - 1;
  require(deg >= 2 && poly.back() == 1, Errc::PolynomialNotIrreducibleModP,
          "defining polynomial must be monic of degree >= 2");
  require(poly_irreducible_mod_p(poly, p), Errc::PolynomialNotIrreducibleModP,
          poly_to_string(poly) + " mod " + std::to_string(p));
  LocalFieldSpec F;
  F.p = p;
  F.kind = FieldKind::Unramified;
  F.e = 1;
  F.f = deg;
  F.q = ipow(p, deg);
  F.poly = poly;
  return F;
}

LocalFieldSpec make_eisenstein(long long p, const std::vector<long long>& poly) {
  require(is_prime(p), Errc::NotPrime, "p = " + std::to_string(p));
  int deg = (int)poly.size() - 1;
  require(deg >= 2 && poly.back() == 1, Errc::NotEisenstein,
          "defining polynomial must be monic of degree >= 2");
  for (int i = 0; i < deg; ++i)
    require(poly[i] % p == 0, Errc::NotEisenstein,
            "coefficient of x^" + std::to_string(i) + " not divisible by p");
  require(nonneg_mod(poly[0], p * p) != 0, Errc::NotEisenstein, "constant term divisible by p^2");
  LocalFieldSpec F;
  F.p = p;
  F.kind = FieldKind::Eisenstein;
  F.e = deg;
  F.f = 1;
  F.q = p;
  F.poly = poly;
  return F;
}

std::string field_descriptor(const LocalFieldSpec& F) {
  std::string s = "Q" + std::to_string(F.p);
  switch (F.kind) {
    case FieldKind::Qp: return s;
    case FieldKind::Unramified: return s + "u" + std::to_string(F.f) + ":" + poly_to_string(F.poly);
    case FieldKind::Eisenstein: return s + "[" + poly_to_string(F.poly) + "]";
  }
  return s;
}

ResidueRing::ResidueRing(const LocalFieldSpec& F, int m) : F_(F), m_(m) {
  require(m >= 0, Errc::BadTarget, "negative ring level");
  size_ = ipow(F_.q, m_);
  switch (F_.kind) {
    case FieldKind::Qp:
    case FieldKind::Unramified:
      pm_ = ipow(F_.p, m_);
      break;
    case FieldKind::Eisenstein: {
      int e = F_.e;
      int jcap = (m_ + e - 1) / e; // ceil(m/e); discarding p^jcap x^i is valid at any x-degree
      pceil_ = ipow(F_.p, jcap);
      ered_.assign(e, 0);
      for (int k = 0; k < e; ++k) ered_[k] = nonneg_mod(-F_.poly[k], pceil_);
      break;
    }
  }
}

long long ResidueRing::unit_count() const {
  if (m_ == 0) return 1;
  return ipow(F_.q, m_ - 1) * (F_.q - 1);
}

RingElement ResidueRing::zero() const {
  switch (F_.kind) {
    case FieldKind::Qp: return RingElement{{0}, m_};
    case FieldKind::Unramified: return RingElement{std::vector<long long>(F_.f, 0), m_};
    case FieldKind::Eisenstein: return RingElement{std::vector<long long>(m_, 0), m_};
  }
  return {};
}

RingElement ResidueRing::one() const { return from_int(1); }

RingElement ResidueRing::pi() const {
  switch (F_.kind) {
    case FieldKind::Qp:
    case FieldKind::Unramified:
      return from_int(F_.p);
    case FieldKind::Eisenstein:
      return reduce_raw_eis({0, 1});
  }
  return {};
}

RingElement ResidueRing::from_int(long long v) const {
  switch (F_.kind) {
    case FieldKind::Qp: return RingElement{{nonneg_mod(v, pm_)}, m_};
    case FieldKind::Unramified: {
      RingElement r = zero();
      r.d[0] = nonneg_mod(v, pm_);
      return r;
    }
    case FieldKind::Eisenstein: return reduce_raw_eis({v});
  }
  return {};
}

/* Eisenstein canonicalization.  Input: integer coefficients by x-degree.
 * Rewrites x^e <- -(c_{e-1}x^{e-1}+...+c_0) from the top degree down; each
 * rewrite strictly lowers the x-degree of the monomial it removes, so the
 * sweep terminates even though the k = 0 target keeps the same valuation
 * when p exactly divides c_0.  Coefficients are held in [0, p^ceil(m/e)),
 * which is harmless: p^ceil(m/e) x^i has valuation >= m at every degree i. */
RingElement ResidueRing::reduce_raw_eis(std::vector<long long> c) const {
  int e = F_.e;
  long long p = F_.p;
  if ((int)c.size() < e) c.resize(e, 0);
  for (int d = (int)c.size() - 1; d >= e; --d) {
    long long a = nonneg_mod(c[d], pceil_);
    if (a != 0)
      for (int k = 0; k < e; ++k)
        c[d - e + k] = nonneg_mod(c[d - e + k] + a * ered_[k], pceil_);
    c[d] = 0;
  }
  RingElement r;
  r.m = m_;
  r.d.assign(m_, 0);
  for (int i = 0; i < e && i < m_; ++i) {
    int jmax = (m_ - i + e - 1) / e; // number of basis monomials x^i p^j
    long long a = nonneg_mod(c[i], ipow(p, jmax));
    for (int j = 0; j < jmax; ++j) {
      r.d[i + e * j] = a % p;
      a /= p;
    }
  }
  return r;
}

RingElement ResidueRing::reduce_raw_unram(std::vector<long long> c) const {
  int f = F_.f;
  if ((int)c.size() < f) c.resize(f, 0);
  for (int d = (int)c.size() - 1; d >= f; --d) {
    long long a = nonneg_mod(c[d], pm_);
    if (a != 0)
      for (int k = 0; k < f; ++k)
        c[d - f + k] = nonneg_mod(c[d - f + k] - a * F_.poly[k], pm_);
    c[d] = 0;
  }
  RingElement r;
  r.m = m_;
  r.d.assign(f, 0);
  for (int i = 0; i < f; ++i) r.d[i] = nonneg_mod(c[i], pm_);
  return r;
}

void ResidueRing::check(const RingElement& a) const {
  require(a.m == m_, Errc::LevelMismatch,
          "element at level " + std::to_string(a.m) + ", ring at level " + std::to_string(m_));
  size_t want = F_.kind == FieldKind::Qp ? 1 : (F_.kind == FieldKind::Unramified ? (size_t)F_.f : (size_t)m_);
  require(a.d.size() == want, Errc::LevelMismatch, "digit vector shape mismatch");
}

RingElement ResidueRing::add(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  switch (F_.kind) {
    case FieldKind::Qp: return RingElement{{(a.d[0] + b.d[0]) % pm_}, m_};
    case FieldKind::Unramified: {
      RingElement r = a;
      for (int i = 0; i < F_.f; ++i) r.d[i] = (r.d[i] + b.d[i]) % pm_;
      return r;
    }
    case FieldKind::Eisenstein: {
      std::vector<long long> c(F_.e, 0);
      for (int t = 0; t < m_; ++t) {
        int i = t % F_.e, j = t / F_.e;
        c[i] += (a.d[t] + b.d[t]) * ipow(F_.p, j);
      }
      return reduce_raw_eis(std::move(c));
    }
  }
  return {};
}

RingElement ResidueRing::neg(const RingElement& a) const {
  check(a);
  switch (F_.kind) {
    case FieldKind::Qp: return RingElement{{nonneg_mod(-a.d[0], pm_)}, m_};
    case FieldKind::Unramified: {
      RingElement r = a;
      for (int i = 0; i < F_.f; ++i) r.d[i] = nonneg_mod(-r.d[i], pm_);
      return r;
    }
    case FieldKind::Eisenstein: {
      std::vector<long long> c(F_.e, 0);
      for (int t = 0; t < m_; ++t) c[t % F_.e] -= a.d[t] * ipow(F_.p, t / F_.e);
      return reduce_raw_eis(std::move(c));
    }
  }
  return {};
}

RingElement ResidueRing::sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }

RingElement ResidueRing::mul(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  switch (F_.kind) {
    case FieldKind::Qp: return RingElement{{checked_mul(a.d[0], b.d[0]) % pm_}, m_};
    case FieldKind::Unramified: {
      int f = F_.f;
      std::vector<long long> c(2 * f - 1, 0);
      for (int i = 0; i < f; ++i) {
        if (a.d[i] == 0) continue;
        for (int j = 0; j < f; ++j)
          c[i + j] = (c[i + j] + checked_mul(a.d[i], b.d[j])) % pm_;
      }
      return reduce_raw_unram(std::move(c));
    }
    case FieldKind::Eisenstein: {
      int e = F_.e;
      std::vector<long long> A(e, 0), B(e, 0);
      for (int t = 0; t < m_; ++t) {
        long long pj = ipow(F_.p, t / e);
        A[t % e] += a.d[t] * pj;
        B[t % e] += b.d[t] * pj;
      }
      std::vector<long long> c(2 * e - 1, 0);
      for (int i = 0; i < e; ++i) {
        if (A[i] == 0) continue;
        for (int j = 0; j < e; ++j) c[i + j] = checked_add(c[i + j], checked_mul(A[i], B[j]));
      }
      return reduce_raw_eis(std::move(c));
    }
  }
  return {};
}

bool ResidueRing::is_zero(const RingElement& a) const {
  check(a);
  for (long long x : a.d)
    if (x != 0) return false;
  return true;
}

int ResidueRing::valuation(const RingElement& a) const {
  check(a);
  if (m_ == 0) return 0;
  switch (F_.kind) {
    case FieldKind::Qp: {
      if (a.d[0] == 0) return m_;
      long long v = a.d[0];
      int k = 0;
      while (v % F_.p == 0) { v /= F_.p; ++k; }
      return k;
    }
    case FieldKind::Unramified: {
      int best = m_;
      for (long long cv : a.d) {
        if (cv == 0) continue;
        long long v = cv;
        int k = 0;
        while (v % F_.p == 0) { v /= F_.p; ++k; }
        best = std::min(best, k);
      }
      return best;
    }
    case FieldKind::Eisenstein: {
      for (int t = 0; t < m_; ++t)
        if (a.d[t] != 0) return t;
      return m_;
    }
  }
  return m_;
}

bool ResidueRing::is_unit(const RingElement& a) const {
  if (m_ == 0) { check(a); return true; }
  return valuation(a) == 0;
}

std::pair<int, std::optional<RingElement>> ResidueRing::val_unit_decompose(const RingElement& a) const {
  check(a);
  if (is_zero(a)) return {m_, std::nullopt};
  int k = valuation(a);
  switch (F_.kind) {
    case FieldKind::Qp: {
      long long pk = ipow(F_.p, k);
      long long u = (a.d[0] / pk) % ipow(F_.p, m_ - k);
      return {k, RingElement{{u}, m_ - k}};
    }
    case FieldKind::Unramified: {
      long long pk = ipow(F_.p, k);
      long long pmk = ipow(F_.p, m_ - k);
      RingElement u;
      u.m = m_ - k;
      u.d.assign(F_.f, 0);
      for (int i = 0; i < F_.f; ++i) u.d[i] = (a.d[i] / pk) % pmk;
      return {k, u};
    }
    case FieldKind::Eisenstein: {
      /* Greedy digit division by pi = x, one level at a time.  At each step
       * the quotient digit is forced by the leading digit of the residual:
       * x * (x^i p^j) has exact valuation t+1, so its top digit is a unit
       * mod p. */
      RingElement cur = a;
      for (int step = 0; step < k; ++step) {
        ResidueRing Rcur(F_, cur.m);
        RingElement q;
        q.m = cur.m - 1;
        q.d.assign(cur.m - 1, 0);
        RingElement res = cur;
        for (int t = 0; t + 1 < cur.m; ++t) {
          long long c = res.d[t + 1];
          if (c != 0) {
            int i = t % F_.e, j = t / F_.e;
            std::vector<long long> raw(i + 2, 0);
            raw[i + 1] = ipow(F_.p, j); // x * (x^i p^j)
            RingElement xb = Rcur.reduce_raw_eis(std::move(raw));
            long long alpha = xb.d[t + 1];
            assert(alpha % F_.p != 0);
            // d = c * alpha^{-1} mod p
            long long inv = 1;
            for (long long ex = F_.p - 2; ex > 0; --ex) inv = (inv * alpha) % F_.p; // p is small
            long long dig = (c * inv) % F_.p;
            q.d[t] = dig;
            RingElement scaled = Rcur.mul(xb, Rcur.from_int(dig));
            res = Rcur.sub(res, scaled);
          }
        }
        assert(Rcur.is_zero(res));
        cur = q;
      }
      return {k, cur};
    }
  }
  return {m_, std::nullopt};
}

RingElement ResidueRing::reduce_to(const RingElement& a, int m2) const {
  check(a);
  require(m2 >= 0 && m2 <= m_, Errc::BadTarget, "reduce_to target above current level");
  ResidueRing R2(F_, m2);
  switch (F_.kind) {
    case FieldKind::Qp: return RingElement{{a.d[0] % ipow(F_.p, m2)}, m2};
    case FieldKind::Unramified: {
      long long pm2 = ipow(F_.p, m2);
      RingElement r;
      r.m = m2;
      r.d.assign(F_.f, 0);
      for (int i = 0; i < F_.f; ++i) r.d[i] = a.d[i] % pm2;
      return r;
    }
    case FieldKind::Eisenstein: {
      RingElement r;
      r.m = m2;
      r.d.assign(a.d.begin(), a.d.begin() + m2);
      return r;
    }
  }
  return {};
}

RingElement ResidueRing::lift_to(const RingElement& a, int m2) const {
  check(a);
  require(m2 >= m_, Errc::BadTarget, "lift_to target below current level");
  switch (F_.kind) {
    case FieldKind::Qp:
    case FieldKind::Unramified: {
      RingElement r = a;
      r.m = m2;
      return r;
    }
    case FieldKind::Eisenstein: {
      RingElement r = a;
      r.m = m2;
      r.d.resize(m2, 0);
      return r;
    }
  }
  return {};
}

RingElement ResidueRing::pow(const RingElement& a, long long e) const {
  check(a);
  RingElement acc = one(), base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

RingElement ResidueRing::inv_unit(const RingElement& a) const {
  require(is_unit(a), Errc::BadTarget, "inverse of a non-unit");
  return pow(a, unit_count() - 1); // Lagrange on (O/pi^m)^*
}

long long ResidueRing::index_of(const RingElement& a) const {
  check(a);
  switch (F_.kind) {
    case FieldKind::Qp: return a.d[0];
    case FieldKind::Unramified: {
      long long idx = 0;
      for (int i = F_.f - 1; i >= 0; --i) idx = idx * pm_ + a.d[i];
      return idx;
    }
    case FieldKind::Eisenstein: {
      long long idx = 0;
      for (int t = m_ - 1; t >= 0; --t) idx = idx * F_.p + a.d[t];
      return idx;
    }
  }
  return 0;
}

RingElement ResidueRing::element_at(long long idx) const {
  require(idx >= 0 && idx < size_, Errc::BadTarget, "carrier index out of range");
  switch (F_.kind) {
    case FieldKind::Qp: return RingElement{{idx}, m_};
    case FieldKind::Unramified: {
      RingElement r = zero();
      for (int i = 0; i < F_.f; ++i) { r.d[i] = idx % pm_; idx /= pm_; }
      return r;
    }
    case FieldKind::Eisenstein: {
      RingElement r = zero();
      for (int t = 0; t < m_; ++t) { r.d[t] = idx % F_.p; idx /= F_.p; }
      return r;
    }
  }
  return {};
}

RingElement ring_arith(const ResidueRing& R, RingOp op, const RingElement& a, const RingElement& b) {
  switch (op) {
    case RingOp::Add: return R.add(a, b);
    case RingOp::Mul: return R.mul(a, b);
    case RingOp::Neg: return R.neg(a);
  }
  return {};
}

std::vector<RingElement> unit_list(const ResidueRing& R, long long max_carrier) {
  require(R.size() <= max_carrier, Errc::SizeGuardExceeded,
          "carrier size " + std::to_string(R.size()) + " above guardrail " + std::to_string(max_carrier));
  std::vector<RingElement> out;
  if (R.level() == 0) {
    out.push_back(R.zero());
    return out;
  }
  out.reserve(R.unit_count());
  for (long long i = 0; i < R.size(); ++i) {
    RingElement a = R.element_at(i);
    if (R.is_unit(a)) out.push_back(std::move(a));
  }
  return out;
}

namespace {

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> fs;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) { n /= d; ++e; }
    fs.push_back({d, e});
  }
  if (n > 1) fs.push_back({n, 1});
  return fs;
}

} // namespace

/* Invariant factors by primary decomposition: inside each Sylow subgroup,
 * peel generators of maximal quotient order; adjust each pick g by an element
 * of the subgroup generated so far so that the extension splits (g^d is
 * always a d-th power there; if the direct adjustment ever failed we scan the
 * coset, which the structure theorem guarantees to succeed).  Factors for
 * distinct primes are then fused slotwise into a divisibility chain.  The
 * result is verified by exhaustive closure before returning. */
UnitGroupInfo unit_group(const ResidueRing& R, long long max_carrier) {
  std::vector<RingElement> units = unit_list(R, max_carrier);
  long long U = (long long)units.size();
  UnitGroupInfo info;
  info.order = U;
  if (U == 1) return info;

  RingElement id = R.one();
  long long id_idx = R.index_of(id);
  auto order_of = [&](const RingElement& g) {
    long long d = U;
    for (auto [r, e] : factorize(U)) {
      (void)e;
      while (d % r == 0 && R.index_of(R.pow(g, d / r)) == id_idx) d /= r;
    }
    return d;
  };

  struct Slot { RingElement gen; long long ord; };
  std::vector<std::vector<Slot>> primary; // one descending list per prime

  for (auto [ell, aexp] : factorize(U)) {
    long long M = U;
    for (int i = 0; i < aexp; ++i) M /= ell;
    // Sylow subgroup = image of the M-power map
    std::unordered_map<long long, RingElement> syl;
    for (const auto& u : units) {
      RingElement s = R.pow(u, M);
      syl.emplace(R.index_of(s), s);
    }

    std::vector<Slot> basis;
    std::unordered_map<long long, std::vector<long long>> H; // dlog over current basis
    H[id_idx] = {};
    while ((long long)H.size() < (long long)syl.size()) {
      // element of maximal order in S/H
      RingElement best;
      long long best_d = 0;
      std::vector<long long> best_exps;
      for (auto& [sidx, s] : syl) {
        if (H.count(sidx)) continue;
        RingElement cur = s;
        long long d = 1;
        while (!H.count(R.index_of(cur))) {
          cur = R.pow(cur, ell);
          d *= ell;
        }
        if (d > best_d) {
          best_d = d;
          best = s;
          best_exps = H[R.index_of(cur)];
        }
      }
      long long d = best_d;
      RingElement g = best;

      bool divisible = true;
      for (size_t i = 0; i < basis.size(); ++i)
        if (best_exps[i] % d != 0) { divisible = false; break; }
      RingElement gprime;
      if (divisible) {
        RingElement h = id;
        for (size_t i = 0; i < basis.size(); ++i)
          h = R.mul(h, R.pow(basis[i].gen, best_exps[i] / d));
        gprime = R.mul(g, R.inv_unit(h));
      } else {
        // fallback: scan the coset gH for a clean complement generator
        bool found = false;
        for (auto& [hidx, hexps] : H) {
          (void)hexps;
          RingElement cand = R.mul(g, R.element_at(hidx));
          if (order_of(cand) == d) { gprime = cand; found = true; break; }
        }
        assert(found);
      }
      assert(order_of(gprime) == d);

      std::unordered_map<long long, std::vector<long long>> H2;
      RingElement gp = id;
      for (long long k = 0; k < d; ++k) {
        for (auto& [hidx, hexps] : H) {
          RingElement prod = R.mul(R.element_at(hidx), gp);
          auto exps = hexps;
          exps.push_back(k);
          auto [it, fresh] = H2.emplace(R.index_of(prod), std::move(exps));
          (void)it;
          assert(fresh);
        }
        if (k + 1 < d) gp = R.mul(gp, gprime);
      }
      H = std::move(H2);
      basis.push_back({gprime, d});
    }
    primary.push_back(std::move(basis));
  }

  size_t slots = 0;
  for (auto& b : primary) slots = std::max(slots, b.size());
  std::vector<long long> factors_desc(slots, 1);
  std::vector<RingElement> gens_desc(slots, id);
  for (auto& b : primary)
    for (size_t s = 0; s < b.size(); ++s) {
      factors_desc[s] *= b[s].ord;
      gens_desc[s] = R.mul(gens_desc[s], b[s].gen);
    }

  for (size_t s = slots; s-- > 0;) {
    info.invariant_factors.push_back(factors_desc[s]);
    info.generators.push_back(gens_desc[s]);
  }

  // postconditions: orders match, product of factors is the group order,
  // generated subgroup exhausts the units
  long long prod = 1;
  for (size_t i = 0; i < info.generators.size(); ++i) {
    assert(order_of(info.generators[i]) == info.invariant_factors[i]);
    prod = checked_mul(prod, info.invariant_factors[i]);
  }
  assert(prod == U);
  for (size_t i = 0; i + 1 < info.invariant_factors.size(); ++i)
    assert(info.invariant_factors[i + 1] % info.invariant_factors[i] == 0);

  std::unordered_set<long long> closure{id_idx};
  std::vector<RingElement> frontier{id};
  while (!frontier.empty()) {
    std::vector<RingElement> next;
    for (const auto& x : frontier)
      for (const auto& g : info.generators) {
        RingElement y = R.mul(x, g);
        if (closure.insert(R.index_of(y)).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  assert((long long)closure.size() == U);

  return info;
}

} // namespace bclocal
