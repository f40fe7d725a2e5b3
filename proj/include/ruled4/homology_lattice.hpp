// Second homology of the one-point blow-up of a rational ruled surface.
//
// A class is the integer vector (p, q, r) standing for pB + qF - rE, so the
// exceptional divisor E is (0, 0, -1).  Two bases are in play: the trivial
// bundle basis {B, F, E} (B.B = 0) and the twisted bundle basis {B1, F1, E1}
// (B1.B1 = -1).  Unless a function takes a Basis argument, classes are read
// in the trivial basis.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ruled4/rational.hpp"

namespace ruled4 {

using HClass = Vector3<std::int64_t>;

enum class Basis { Trivial, Twisted };

inline HClass class_B() { return HClass(1, 0, 0); }
inline HClass class_F() { return HClass(0, 1, 0); }
inline HClass class_E() { return HClass(0, 0, -1); }

/// Gram matrix of the intersection form in (p, q, r) coordinates.
Matrix3<std::int64_t> intersection_form(Basis basis = Basis::Trivial);

/// First Chern class as a linear form on (p, q, r) coordinates.
Vector3<std::int64_t> chern_form(Basis basis = Basis::Trivial);

template <typename DA, typename DB>
std::int64_t intersect(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                       Basis basis = Basis::Trivial) {
  return a.dot(intersection_form(basis) * b);
}

template <typename D>
std::int64_t self_intersection(const Eigen::MatrixBase<D>& a, Basis basis = Basis::Trivial) {
  return intersect(a, a, basis);
}

template <typename D>
std::int64_t chern(const Eigen::MatrixBase<D>& a, Basis basis = Basis::Trivial) {
  return chern_form(basis).dot(a);
}

/// Poincare dual of the canonical class, -2B - 2F + E.
HClass canonical_class();

/// 1 + (a.a - c1(a))/2.
Rational virtual_genus(const HClass& a, Basis basis = Basis::Trivial);

/// (a.a + c1(a))/2, the number of point constraints of the Gromov invariant.
Rational k_of(const HClass& a, Basis basis = Basis::Trivial);

/// Self-intersection -1, c1 = 1 and virtual genus 0.
bool is_exceptional(const HClass& a, Basis basis = Basis::Trivial);

enum class Direction { OneToZero, ZeroToOne };

/// Change of basis between the blow-ups of the twisted and trivial bundles:
/// F1 <-> F, B1 <-> B - E, E1 <-> F - E.
Matrix3<std::int64_t> correspondence_matrix(Direction direction);
HClass map_classes(const HClass& a, Direction direction);

/// D_{2k+1} = B + kF and D_{2k} = B + kF - E.
HClass d_class(std::int64_t index);

/// Greatest integer strictly less than n/2.
std::int64_t strict_floor_half(std::int64_t n);

/// A normalized ruled surface M^i_mu (fiber area 1), optionally blown up
/// at a ball of capacity c.
class RuledModel {
 public:
  RuledModel(int i, Rational mu, std::optional<Rational> c = std::nullopt);

  int i() const { return i_; }
  const Rational& mu() const { return mu_; }
  const std::optional<Rational>& c() const { return c_; }
  bool blown_up() const { return c_.has_value(); }
  /// Throws DomainError when the model is not blown up.
  const Rational& capacity() const;
  /// Unique integer with ell < mu <= ell + 1.
  std::int64_t ell() const { return ell_; }
  /// mu - ell, in (0, 1].
  const Rational& lambda() const { return lambda_; }

  Basis basis() const { return i_ == 0 ? Basis::Trivial : Basis::Twisted; }

  bool operator==(const RuledModel& other) const {
    return i_ == other.i_ && mu_ == other.mu_ && c_ == other.c_;
  }

 private:
  int i_;
  Rational mu_;
  std::optional<Rational> c_;
  std::int64_t ell_;
  Rational lambda_;
};

std::string describe(const RuledModel& m);

/// mu p + q - c r.  The class is read in the model's own basis, so the same
/// formula serves both bundle types.
Rational area(const HClass& a, const RuledModel& m);

/// Blow up with capacity c and blow down the other exceptional fiber
/// component: M^0_mu -> M^1_{mu-c}, M^1_mu -> M^0_{1+mu-c}, capacity 1-c.
RuledModel c_related(const RuledModel& m);

struct NormalizedModel {
  RuledModel model;
  Rational scale;
  /// B1 and E1 exchange roles under the identification.
  bool swaps_exceptional = true;
  /// Other (mu', c') formulas found in the literature for this case; kept
  /// for display, none of them rescales the fiber to area 1.
  std::vector<std::string> unused_variants;
};

/// Twisted bundle with a ball larger than the section: exchange the roles of
/// B1 and E1 and rescale so that the fiber has area 1 again.
NormalizedModel normalize_special(const RuledModel& m);

/// Class map for that identification, twisted basis -> trivial basis:
/// F1 -> B, B1 -> F - E, E1 -> B - E.  Areas scale by NormalizedModel::scale.
HClass map_special(const HClass& a);

enum class Regime { Small, Big };

std::string to_string(Regime r);

/// Small iff c < lambda.
Regime regime(const RuledModel& m);

/// The same blow-up presented as a blow-up of the trivial bundle, together
/// with the basis change that carries classes along.
struct TrivialPresentation {
  RuledModel model;
  Rational scale;
  bool via_c_related = false;
  bool via_special = false;
};

TrivialPresentation trivial_presentation(const RuledModel& m);

struct HirzebruchSections {
  HClass zero_section;
  HClass infinity_section;
  Basis basis;
};

/// Zero and infinity sections of the Hirzebruch surface W_index, with
/// self-intersections -index and +index.
HirzebruchSections hirzebruch_sections(std::int64_t index);

}  // namespace ruled4
