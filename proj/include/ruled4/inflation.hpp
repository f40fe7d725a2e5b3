// Inflation of symplectic cohomology classes on the one-point blow-up.
//
// A form class is recorded by its areas on (B, F, E).  Inflating along a
// curve Z by t adds t PD(Z), i.e. t (Z.B, Z.F, Z.E) to the areas.
#pragma once

#include <string>
#include <vector>

#include "ruled4/homology_lattice.hpp"

namespace ruled4 {

struct FormClass {
  /// Areas of B, F, E.
  Vector3<Rational> areas;

  FormClass() : areas(Vector3<Rational>::Zero()) {}
  FormClass(Rational mu, Rational f, Rational e);

  const Rational& mu() const { return areas(0); }
  const Rational& f() const { return areas(1); }
  const Rational& e() const { return areas(2); }
  bool normalized() const { return f() == 1; }

  bool operator==(const FormClass& o) const { return areas == o.areas; }
};

FormClass form_class(const RuledModel& m);

/// (Z.B, Z.F, Z.E) in the trivial basis.
Vector3<Rational> pairing(const HClass& z);

struct InflationStep {
  HClass along;
  Rational t;
  Rational rescale{1};
  std::string why;

  InflationStep(HClass along, Rational t, Rational rescale = 1, std::string why = {});
};

/// (areas + t PD(Z)) / rescale.
FormClass inflate(const FormClass& start, const InflationStep& step);

/// Replays a path step by step.
FormClass replay(const FormClass& start, const std::vector<InflationStep>& path);

/// (areas + a PD(z1) + b PD(z2)) divided by the resulting fiber area.
FormClass two_param_family(const FormClass& start, const HClass& z1, const HClass& z2,
                           const Rational& a, const Rational& b);

/// Raised by inflation_path when the two models cannot be connected.
class Unreachable : public std::runtime_error {
 public:
  enum class Criterion { EllMismatch, RegimeMismatch };

  Unreachable(Criterion criterion, const std::string& what)
      : std::runtime_error(what), criterion_(criterion) {}
  Criterion criterion() const { return criterion_; }

 private:
  Criterion criterion_;
};

/// Same ell and same regime (both small or both big).
bool reachable(const RuledModel& from, const RuledModel& to);

/// Increasing mu at fixed c only enlarges the space of tamed structures.
bool fiber_inclusion(const RuledModel& from, const RuledModel& to);

/// Explicit inflations carrying the trivial presentation of `from` to that
/// of `to`: first along F, then along the two section classes D_j that are
/// represented in every stratum.  At most three steps, zero steps omitted,
/// fiber area 1 after every step.  Throws Unreachable with the failed
/// criterion otherwise.
std::vector<InflationStep> inflation_path(const RuledModel& from, const RuledModel& to);

}  // namespace ruled4
