#include "ruled4/inflation.hpp"

#include <algorithm>

#include "ruled4/curve_enumeration.hpp"

namespace ruled4 {

FormClass::FormClass(Rational mu, Rational f, Rational e) : areas(std::move(mu), std::move(f), std::move(e)) {
  if (areas(0) <= 0 || areas(1) <= 0 || areas(2) <= 0)
    throw DomainError("form class areas must be positive");
}

FormClass form_class(const RuledModel& m) { return FormClass(m.mu(), 1, m.capacity()); }

Vector3<Rational> pairing(const HClass& z) {
  const Vector3<std::int64_t> basis_sign(1, 1, -1);
  return (intersection_form() * z).cwiseProduct(basis_sign).cast<Rational>();
}

InflationStep::InflationStep(HClass along_, Rational t_, Rational rescale_, std::string why_)
    : along(std::move(along_)), t(std::move(t_)), rescale(std::move(rescale_)), why(std::move(why_)) {
  if (self_intersection(along) < 0) throw DomainError("inflation needs a class with Z.Z >= 0");
  if (t < 0) throw DomainError("inflation parameter t must be nonnegative");
  if (rescale <= 0) throw DomainError("rescale factor must be positive");
}

FormClass inflate(const FormClass& start, const InflationStep& step) {
  Vector3<Rational> v = (start.areas + step.t * pairing(step.along)) / step.rescale;
  return FormClass(v(0), v(1), v(2));
}

FormClass replay(const FormClass& start, const std::vector<InflationStep>& path) {
  FormClass w = start;
  for (const InflationStep& step : path) w = inflate(w, step);
  return w;
}

FormClass two_param_family(const FormClass& start, const HClass& z1, const HClass& z2,
                           const Rational& a, const Rational& b) {
  if (a < 0 || b < 0) throw DomainError("family parameters must be nonnegative");
  Vector3<Rational> v = start.areas + a * pairing(z1) + b * pairing(z2);
  v /= Rational(v(1));
  return FormClass(v(0), v(1), v(2));
}

namespace {

void require_comparable(const RuledModel& from, const RuledModel& to) {
  if (from.i() != to.i()) throw DomainError("reachability compares models with the same i");
  for (const RuledModel* m : {&from, &to})
    if (m->capacity() > m->mu()) throw DomainError("reachability requires c <= mu");
}

}  // namespace

bool reachable(const RuledModel& from, const RuledModel& to) {
  require_comparable(from, to);
  return from.ell() == to.ell() && regime(from) == regime(to);
}

bool fiber_inclusion(const RuledModel& from, const RuledModel& to) {
  require_comparable(from, to);
  return from.capacity() == to.capacity() && to.mu() >= from.mu();
}

std::vector<InflationStep> inflation_path(const RuledModel& from, const RuledModel& to) {
  require_comparable(from, to);
  if (from.ell() != to.ell())
    throw Unreachable(Unreachable::Criterion::EllMismatch,
                      "ell differs: " + std::to_string(from.ell()) + " vs " + std::to_string(to.ell()));
  if (regime(from) != regime(to))
    throw Unreachable(Unreachable::Criterion::RegimeMismatch,
                      regime(from) == Regime::Small ? "c1<lambda1 but lambda2<=c2"
                                                    : "lambda1<=c1 but c2<lambda2");

  const RuledModel m1 = trivial_presentation(from).model;
  const RuledModel m2 = trivial_presentation(to).model;
  const std::int64_t l = m1.ell();
  const bool small = regime(m1) == Regime::Small;
  const Rational &c1 = m1.capacity(), &c2 = m2.capacity();
  const Rational &lam1 = m1.lambda(), &lam2 = m2.lambda();

  // s (mu2, 1, c2) = (mu1, 1, c1) + alpha F + beta D_{2l+1} + gamma D_other
  // with D_other = D_{2l+2} (small) or D_{2l} (big); s is the least scale
  // that keeps all three coefficients nonnegative.
  Rational s = std::max<Rational>({Rational(1), c1 / c2, (1 - c1) / (1 - c2)});
  if (small)
    s = std::max(s, Rational((lam1 - c1) / (lam2 - c2)));
  else
    s = std::max(s, Rational(lam1 / lam2));
  const Rational gamma = s * c2 - c1;
  const Rational beta = s * (1 - c2) - (1 - c1);
  const Rational alpha = small ? Rational(s * (lam2 - c2) - (lam1 - c1)) : Rational(s * lam2 - lam1);

  const Stratification strata = build_stratification(m1);
  auto justify = [&](std::int64_t index) {
    for (const Stratum& st : strata.strata)
      if (!representable_in_stratum(index, st.m, strata))
        throw InvariantViolation("inflation class D_" + std::to_string(index) + " not represented");
    const HClass d = d_class(index);
    return "D_" + std::to_string(index) + " = B" + (d(1) < 0 ? "" : "+") + std::to_string(d(1)) + "F" +
           (d(2) ? "-E" : "") + ": D_" + std::to_string(index) +
           ".D_{-m} >= 0 for every stratum m <= " + std::to_string(strata.N());
  };

  std::vector<InflationStep> path;
  if (alpha > 0) path.emplace_back(class_F(), alpha, 1, "F: every tamed J has an embedded fiber sphere");
  Rational applied = 1;
  auto add_section = [&](std::int64_t index, const Rational& coefficient) {
    if (coefficient <= 0) return;
    const Rational t = coefficient / applied;
    const Rational rescale = 1 + t;
    path.emplace_back(d_class(index), t, rescale, justify(index));
    applied *= rescale;
  };
  add_section(2 * l + 1, beta);
  add_section(small ? 2 * l + 2 : 2 * l, gamma);

  if (replay(form_class(m1), path) != form_class(m2))
    throw InvariantViolation("inflation path does not reach the target areas");
  return path;
}

}  // namespace ruled4
