#pragma once

/* Finite residue rings O_K / pi^m for a local field K of characteristic zero,
 * presented in one of three shapes:
 *
 *   Qp          O_K = Z_p, pi = p.  Carrier of O/pi^m: integers 0..p^m-1.
 *   Unramified  O_K = Z_p[x]/(g), g monic of degree f irreducible mod p,
 *               pi = p, q = p^f.  Carrier: coefficient vectors of degree < f
 *               over Z/p^m.
 *   Eisenstein  O_K = Z_p[x]/(E), E = x^e + c_{e-1}x^{e-1} + ... + c_0 monic
 *               with p | c_i and p^2 does not divide c_0; pi = x, q = p,
 *               v(p) = e.  Carrier: digit vectors (d_0..d_{m-1}), d_t in
 *               [0, p), for the expansion  sum_t d_t x^{t mod e} p^{t div e};
 *               the monomial x^i p^j has valuation i + e j, and each
 *               valuation t < m owns exactly one basis monomial.
 *
 * The mixed case e > 1, f > 1 is not expressible here and is rejected by the
 * constructors.  Elements are canonical digit vectors; equality is vector
 * equality.  Every element decomposes as pi^k u with the unit part reported
 * at level m - k, the highest level at which it is determined. */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bclocal/errors.hpp"

namespace bclocal {

enum class FieldKind { Qp, Unramified, Eisenstein };

struct LocalFieldSpec {
  long long p = 0;
  FieldKind kind = FieldKind::Qp;
  int e = 1;
  int f = 1;
  long long q = 0;               // p^f
  std::vector<long long> poly;   // ascending coefficients, monic; empty for Qp

  friend bool operator==(const LocalFieldSpec& a, const LocalFieldSpec& b) {
    return a.p == b.p && a.kind == b.kind && a.e == b.e && a.f == b.f && a.poly == b.poly;
  }
};

LocalFieldSpec make_qp(long long p);
LocalFieldSpec make_unramified(long long p, const std::vector<long long>& poly);
LocalFieldSpec make_eisenstein(long long p, const std::vector<long long>& poly);

std::string field_descriptor(const LocalFieldSpec& F);

bool is_prime(long long n);
// exhaustive trial division over F_p; poly given by ascending coefficients
bool poly_irreducible_mod_p(const std::vector<long long>& poly, long long p);

struct RingElement {
  std::vector<long long> d;
  int m = 0;

  friend bool operator==(const RingElement& a, const RingElement& b) { return a.m == b.m && a.d == b.d; }
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }
  friend bool operator<(const RingElement& a, const RingElement& b) {
    if (a.m != b.m) return a.m < b.m;
    return a.d < b.d;
  }
};

class ResidueRing {
public:
  ResidueRing(const LocalFieldSpec& F, int m);

  const LocalFieldSpec& field() const { return F_; }
  int level() const { return m_; }
  long long size() const { return size_; }       // q^m
  long long unit_count() const;                  // q^{m-1}(q-1) for m >= 1, else 1

  RingElement zero() const;
  RingElement one() const;
  RingElement pi() const;
  RingElement from_int(long long v) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;

  bool is_zero(const RingElement& a) const;
  bool is_unit(const RingElement& a) const;
  int valuation(const RingElement& a) const;     // in [0, m]; m for zero

  // a = pi^k u; unit part lives at level m-k.  Zero reports (m, nullopt).
  std::pair<int, std::optional<RingElement>> val_unit_decompose(const RingElement& a) const;

  RingElement reduce_to(const RingElement& a, int m2) const;  // m2 <= m
  RingElement lift_to(const RingElement& a, int m2) const;    // m2 >= m, canonical digit lift

  RingElement inv_unit(const RingElement& a) const;
  RingElement pow(const RingElement& a, long long e) const;

  long long index_of(const RingElement& a) const;             // carrier enumeration
  RingElement element_at(long long idx) const;

  void check(const RingElement& a) const;                     // LevelMismatch on foreign elements

private:
  LocalFieldSpec F_;
  int m_;
  long long size_;
  std::vector<long long> ered_;  // Eisenstein: -E truncated coefficients for the rewrite x^e <- ered_
  long long pm_ = 1;             // p^m (Qp, Unramified coefficient modulus)
  long long pceil_ = 1;          // Eisenstein: p^ceil(m/e), coefficient cap

  RingElement reduce_raw_eis(std::vector<long long> c) const;   // by x-degree
  RingElement reduce_raw_unram(std::vector<long long> c) const; // by x-degree, mod (g, p^m)
};

enum class RingOp { Add, Mul, Neg };
RingElement ring_arith(const ResidueRing& R, RingOp op, const RingElement& a, const RingElement& b);

// all valuation-zero elements in carrier order (the single trivial element for m = 0)
std::vector<RingElement> unit_list(const ResidueRing& R, long long max_carrier = 1000000);

struct UnitGroupInfo {
  long long order = 1;
  std::vector<long long> invariant_factors;  // ascending divisibility chain d_1 | d_2 | ...
  std::vector<RingElement> generators;       // generator i has order invariant_factors[i]
};

// brute-force invariant-factor decomposition, verified by exhaustive closure
UnitGroupInfo unit_group(const ResidueRing& R, long long max_carrier = 1000000);

} // namespace bclocal
