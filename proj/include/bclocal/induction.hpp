#pragma once

/* Global-to-local induction scalars.  A global field (Q or a quadratic
 * extension from the trivial-class-group list) contributes its Dedekind
 * zeta through ideal-count coefficients built from splitting data, and
 * the induced state mass at a chosen prime is the partial zeta times
 * (1 - p^{-f beta}).  Below beta = 1 the same coefficients certify
 * divergence through a doubling search.
 *
 * The induction lemma itself is exercised at the window level: a
 * measure on the nonnegative-valuation strip extends orbit by orbit
 * with one factor of q^{-beta} per unit shift, and restricting back
 * recovers it exactly in rational arithmetic away from the cut. */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bclocal/errors.hpp"
#include "bclocal/level.hpp"
#include "bclocal/rational.hpp"

namespace bclocal {

enum class GlobalKind { Rationals, Quadratic };

struct NumberFieldSpec {
  GlobalKind kind = GlobalKind::Rationals;
  long long d = 0;    // squarefree integer defining the extension
  long long disc = 1; // d or 4d by the mod 4 class
  int degree = 1;
  std::string label;
};

NumberFieldSpec make_global_Q();
NumberFieldSpec make_global_quadratic(long long d);

// Kronecker symbol (a|p) for prime p
int kronecker_symbol(long long a, long long p);

enum class SplitType { Rational, Split, Inert, Ramified };

struct PrimeSplitting {
  long long p = 0;
  SplitType type = SplitType::Rational;
  int f = 1;            // residue degree of the primes above p
  int primes_above = 1; // at p^1
};

PrimeSplitting splitting_data(const NumberFieldSpec& K, long long p);

// a[n] = number of ideals of norm n, n = 1..B (slot 0 unused)
std::vector<long long> ideal_count_coeffs(const NumberFieldSpec& K, long long B);

struct PartialZeta {
  double partial = 0;    // sum of a_n n^{-beta} up to B
  double tail_bound = 0; // C_K B^{1-beta}/(beta-1) for beta > 1, infinity below
};

PartialZeta zeta_partial(const NumberFieldSpec& K, double beta, long long B);

struct InducedMass {
  double value = 0;
  double tail_bound = 0;
};

// partial zeta times (1 - p^{-f beta})
InducedMass induced_partition(const NumberFieldSpec& K, long long p, double beta, long long B);

struct DivergenceWitness {
  long long bound = 0; // first doubling stop whose partial sum clears the target
  double partial = 0;
};

DivergenceWitness divergence_witness(const NumberFieldSpec& K, double beta, double target);

/* Measure on a valuation window with fiber G_{n,m}.  Atoms are keyed by
 * (valuation, fiber index); weights of atoms on one shift orbit are
 * locked to the ratio t per step, which make_window_measure enforces. */
struct WindowMeasure {
  LevelIndex level;
  int window = 0;         // W
  bool full_line = false; // valuations in [-W, W] instead of [0, W]
  Rational t;             // weight ratio per unit shift
  std::map<std::pair<long long, long long>, Rational> atoms;
};

WindowMeasure make_window_measure(const LevelContext& C, int window, const Rational& t,
                                  bool full_line,
                                  std::map<std::pair<long long, long long>, Rational> atoms);

Rational measure_mass(const WindowMeasure& mu);

// orbitwise extension to the full line, weight scaled by t per shift
WindowMeasure induce_measure(const LevelContext& C, const WindowMeasure& nu);
// keep the nonnegative strip [0, W]
WindowMeasure restrict_measure(const LevelContext& C, const WindowMeasure& mu);

struct RoundtripReport {
  LevelIndex level;
  int window = 0;
  long long orbit_count = 0;
  long long atoms_checked = 0;
  Rational induced_mass;
  Rational restricted_mass;
  bool scaling_ok = false;
  bool pass = false;
};

RoundtripReport induce_restrict_roundtrip(const LevelContext& C, const WindowMeasure& nu);

} // namespace bclocal
