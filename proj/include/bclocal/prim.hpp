#pragma once

/* Finite-level probe of the ideal space.  A point of the boundary
 * groupoid is held exactly: a valuation (or the zero flag), a ring unit,
 * and a Galois coordinate split into its Z-residue and unit part.  Unit
 * components are stored to a cap depth and served per level through an
 * accessor, so a deliberately inconsistent tower can be injected and is
 * rejected when adjacent levels disagree.
 *
 * Orbit closure is decidable at a fixed resolution (n, m): the integer
 * shift is pinned by the valuations, after which membership is two
 * residue comparisons.  Distinct finite classes never specialize to one
 * another, and the zero class lies in every closure, which is the
 * finite shadow of the one closed point sitting under all others. */

#include <functional>
#include <vector>

#include "bclocal/errors.hpp"
#include "bclocal/level.hpp"
#include "bclocal/padic.hpp"

namespace bclocal {

struct ExactPoint {
  LocalFieldSpec F;
  int cap = 6;       // deepest stored level
  bool zero = false; // ring coordinate is 0
  long long val = 0; // valuation of the ring coordinate, ignored when zero
  RingElement ring_unit;   // unit cofactor at level cap
  long long galois_v = 0;  // Z-residue part of the Galois coordinate
  RingElement galois_unit; // unit part at level cap
  // optional per-level accessors, used to exercise the coherence check
  std::function<RingElement(int)> ring_unit_at;
  std::function<RingElement(int)> galois_unit_at;
};

ExactPoint make_unit_point(const LocalFieldSpec& F, long long val, const RingElement& ring_unit,
                           long long galois_v, const RingElement& galois_unit, int cap = 6);
ExactPoint make_zero_point(const LocalFieldSpec& F, long long galois_v,
                           const RingElement& galois_unit, int cap = 6);

// unit component at a level, via the accessor when present, with the
// adjacent-level agreement check up to the cap
RingElement unit_component(const ExactPoint& x, bool galois, int lev);

struct XCoords {
  bool zero = false;
  long long val = 0;
  long long z = 0; // Z-residue mod n
  RingElement c;   // combined unit at level m, meaningful for finite points
};

XCoords x_coords(const ExactPoint& x, const LevelContext& C);

// canonical finite-level image, valuations below zero have no such shadow
LevelPoint point_image(const ExactPoint& x, const LevelContext& C);

// is y inside the closure of the integer orbit of x, seen at C's level
bool closure_member(const ExactPoint& x, const ExactPoint& y, const LevelContext& C);

struct QuasiOrbitLabel {
  bool zero_orbit = false;
  LevelGroupElement g; // meaningful when not the zero orbit
  bool operator==(const QuasiOrbitLabel& o) const {
    return zero_orbit == o.zero_orbit && (zero_orbit || g == o.g);
  }
};

QuasiOrbitLabel quasi_orbit(const ExactPoint& x, const LevelContext& C);

// builds one representative per label and checks the labels are distinct
long long quasi_orbit_label_count(const LevelContext& C);

struct SpecializationTable {
  LevelIndex level;
  std::vector<QuasiOrbitLabel> labels;    // finite classes first, zero last
  std::vector<std::vector<char>> closure; // closure[i][j]: label j specializes from i
  bool non_specializing = false;          // distinct finite classes stay apart
  bool zero_universal = false;            // zero class inside every closure
  bool reflexive = false;
  bool transitive = false;
};

SpecializationTable prim_report(const LevelContext& C);

} // namespace bclocal
