// Candidate J-holomorphic curve classes, cusp-curve decompositions, Gromov
// invariant nonvanishing and the stratification of tamed almost complex
// structures.  All functions here work on blow-ups of the trivial bundle;
// convert other models with trivial_presentation() first.
#pragma once

#include <cstdint>
#include <vector>

#include "ruled4/homology_lattice.hpp"

namespace ruled4 {

struct Part {
  HClass cls;
  std::int64_t mult = 1;
};

struct Decomposition {
  HClass target;
  std::vector<Part> parts;
  /// All pairs of distinct components intersect nonnegatively.
  bool admissible = true;
};

struct DecompositionSet {
  std::vector<Decomposition> admissible;
  std::vector<Decomposition> violating;
};

/// Necessary conditions for a simple J-holomorphic representative:
/// positive area, nonnegative integral virtual genus, p >= 0, p = 0 only for
/// F, F-E, E, r in {0, 1} when p = 1, and p >= r >= 0 except for E, F-E.
bool simple_class_filter(const HClass& a, const RuledModel& m);

/// Every way of writing a as a sum of at least two simple classes (with
/// multiplicity), each of positive area smaller than area(a).  Results are
/// split by pairwise positivity of intersections and sorted canonically.
DecompositionSet enumerate_decompositions(const HClass& a, const RuledModel& m);

enum class GromovStatus { NonzeroByWallCrossing, ZeroByArea, Unknown };

std::string to_string(GromovStatus s);

/// Nonvanishing from Gr(A) +- Gr(K-A) = +-1: Gr(A) != 0 whenever K-A has
/// nonpositive area.
GromovStatus gromov_nonzero(const HClass& a, const RuledModel& m);

struct Stratum {
  std::int64_t m = 0;
  /// D_{-m}, the class with an embedded representative on this stratum.
  HClass cls;
  std::int64_t codimension = 0;
  std::int64_t hirzebruch_index = 0;

  bool operator==(const Stratum& o) const {
    return m == o.m && cls == o.cls && codimension == o.codimension &&
           hirzebruch_index == o.hirzebruch_index;
  }
};

struct Stratification {
  RuledModel model;
  std::vector<Stratum> strata;

  std::int64_t N() const { return static_cast<std::int64_t>(strata.size()) - 1; }
  bool operator==(const Stratification&) const = default;
};

/// Strata 0..N, N = 2 ell (small ball) or 2 ell - 1 (big ball).  A twisted
/// model with c <= mu is replaced by its c-related trivial model.
Stratification build_stratification(const RuledModel& m);

/// D_i . D_{-m} >= 0.
bool representable_in_stratum(std::int64_t d_index, std::int64_t stratum_m, const Stratification& s);

/// Delzant polygon of the blown-up Hirzebruch surface behind stratum
/// `stratum_m`, counterclockwise from the origin.  Fiber edges have length 1.
std::vector<Vector2<Rational>> moment_polytope(std::int64_t stratum_m, const RuledModel& m);

/// Shoelace area.
Rational polygon_area(const std::vector<Vector2<Rational>>& vertices);

}  // namespace ruled4
