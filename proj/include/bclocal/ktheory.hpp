#pragma once

/* Integer linear algebra for the K-group bookkeeping.  Smith normal form
 * over checked 64-bit integers (inputs here are tiny band matrices, and
 * any overflow throws rather than wrapping), cokernel normal forms, and
 * the two finite-level witnesses:
 *
 *   - Z^r / Z.1 is free of rank r-1, with r the stratum-0 count: the
 *     finite shadow of the quotient by the unit class.
 *   - In the truncated model 1 - S S* is the rank-one projection onto
 *     slot 0, the class of the stratum-0 indicator with a minus sign;
 *     1 - S*S is the matching boundary artifact at slot N-1, which the
 *     infinite model sends to 0.
 *
 * The window map 1 - S on a finite valuation strip has zero kernel (the
 * vanishing K_1 witness) and cokernel free on one copy of the fiber,
 * stable under window doubling. */

#include <vector>

#include "bclocal/errors.hpp"
#include "bclocal/level.hpp"

namespace bclocal {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;
  static IntMatrix zero(int r, int c) { return {r, c, std::vector<long long>((size_t)r * c, 0)}; }
  static IntMatrix identity(int n);
  long long& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const long long& at(int r, int c) const { return a[(size_t)r * cols + c]; }
  bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMatrix int_mat_mul(const IntMatrix& A, const IntMatrix& B);

struct SNFResult {
  IntMatrix U, D, V; // U A V = D, diagonal, divisibility chain
  int rank = 0;
  int det_u = 1, det_v = 1; // tracked from the elementary operations
  std::vector<long long> invariant_factors; // the nonzero diagonal, positive
};

SNFResult smith_normal_form(const IntMatrix& A);

struct AbGroupPresentation {
  long long free_rank = 0;
  std::vector<long long> torsion; // invariant factors > 1, ascending
  bool operator==(const AbGroupPresentation& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};

// Z^rows / column span
AbGroupPresentation cokernel(const IntMatrix& A);

struct K0Report {
  LevelIndex level;
  long long r = 0;                  // stratum-0 count |G_{n,m}|
  long long rank = 0;               // free rank of Z^r / Z.1, expected r-1
  std::vector<long long> torsion;   // expected empty
  int model_N = 0;                  // truncation used for the projection check
  bool shift_projection_ok = false; // 1 - SS* = E_00 and 1 - S*S = E_{N-1,N-1}
};

K0Report k0_quotient_report(const LevelContext& C);

struct PVReport {
  LevelIndex level;
  int window = 0;
  long long fiber = 0;       // |G_{n,m}|
  long long kernel_rank = 0; // expected 0
  AbGroupPresentation coker; // expected free of rank = fiber
  bool stabilized = false;   // unchanged when the window doubles
};

PVReport pv_window_check(const LevelContext& C, int window);

} // namespace bclocal
