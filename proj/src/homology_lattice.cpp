#include "ruled4/homology_lattice.hpp"

namespace ruled4 {

Matrix3<std::int64_t> intersection_form(Basis basis) {
  Matrix3<std::int64_t> q;
  if (basis == Basis::Trivial)
    q << 0, 1, 0,
         1, 0, 0,
         0, 0, -1;
  else
    q << -1, 1, 0,
          1, 0, 0,
          0, 0, -1;
  return q;
}

Vector3<std::int64_t> chern_form(Basis basis) {
  return basis == Basis::Trivial ? Vector3<std::int64_t>(2, 2, -1)
                                 : Vector3<std::int64_t>(1, 2, -1);
}

HClass canonical_class() { return HClass(-2, -2, -1); }

Rational virtual_genus(const HClass& a, Basis basis) {
  return 1 + Rational(self_intersection(a, basis) - chern(a, basis), 2);
}

Rational k_of(const HClass& a, Basis basis) {
  return Rational(self_intersection(a, basis) + chern(a, basis), 2);
}

bool is_exceptional(const HClass& a, Basis basis) {
  return self_intersection(a, basis) == -1 && chern(a, basis) == 1 && virtual_genus(a, basis) == 0;
}

Matrix3<std::int64_t> correspondence_matrix(Direction direction) {
  Matrix3<std::int64_t> m;
  if (direction == Direction::OneToZero)
    m << 1, 0,  0,
         0, 1, -1,
         1, 0, -1;
  else
    m << 1, 0,  0,
         1, 1, -1,
         1, 0, -1;
  return m;
}

HClass map_classes(const HClass& a, Direction direction) {
  return correspondence_matrix(direction) * a;
}

HClass d_class(std::int64_t index) {
  // floor division keeps D_{-1} = B - F and D_0 = B - E
  std::int64_t k = index >= 0 ? index / 2 : -((-index + 1) / 2);
  return index - 2 * k == 1 ? HClass(1, k, 0) : HClass(1, k, 1);
}

std::int64_t strict_floor_half(std::int64_t n) {
  std::int64_t f = n >= 0 ? n / 2 : -((-n + 1) / 2);
  return 2 * f == n ? f - 1 : f;
}

RuledModel::RuledModel(int i, Rational mu, std::optional<Rational> c)
    : i_(i), mu_(std::move(mu)), c_(std::move(c)) {
  if (i_ != 0 && i_ != 1) throw DomainError("bundle type i must be 0 or 1");
  if (mu_ <= 0) throw DomainError("mu must be positive");
  if (i_ == 0 && mu_ < 1) throw DomainError("i=0 requires mu >= 1");
  if (c_ && (*c_ <= 0 || *c_ >= 1)) throw DomainError("capacity c must lie in (0, 1)");
  ell_ = to_int64(ceil(mu_)) - 1;
  lambda_ = mu_ - ell_;
}

const Rational& RuledModel::capacity() const {
  if (!c_) throw DomainError("operation requires a blown-up model (capacity c)");
  return *c_;
}

std::string describe(const RuledModel& m) {
  std::string s = "M" + std::to_string(m.i()) + "(mu=" + format_rational(m.mu());
  if (m.c()) s += ", c=" + format_rational(*m.c());
  return s + ")";
}

Rational area(const HClass& a, const RuledModel& m) {
  Rational result = m.mu() * a(0) + a(1);
  if (a(2) != 0) result -= m.capacity() * a(2);
  return result;
}

RuledModel c_related(const RuledModel& m) {
  const Rational& c = m.capacity();
  if (c > m.mu()) throw DomainError("c-related model requires c <= mu (use normalize_special)");
  if (m.i() == 0) return RuledModel(1, m.mu() - c, 1 - c);
  return RuledModel(0, 1 + m.mu() - c, 1 - c);
}

NormalizedModel normalize_special(const RuledModel& m) {
  if (m.i() != 1) throw DomainError("special normalization applies to i=1 only");
  const Rational& c = m.capacity();
  if (c <= m.mu()) throw DomainError("special normalization requires mu < c");
  Rational d = 1 + m.mu() - c;
  NormalizedModel out{RuledModel(0, 1 / d, (1 - c) / d), 1 / d, true, {}};
  out.unused_variants = {
      "mu' = 1/mu + 1 - c, c' = (1-c)/1 + mu - c -> mu' = " +
          format_rational(1 / m.mu() + 1 - c) + ", c' = " + format_rational(1 - c + m.mu() - c),
      "mu' = c/(1+mu-c), c' = mu/(1+mu-c) -> mu' = " + format_rational(c / d) +
          ", c' = " + format_rational(m.mu() / d),
  };
  return out;
}

HClass map_special(const HClass& a) {
  return HClass(a(1) - a(2), a(0), a(0) - a(2));
}

std::string to_string(Regime r) { return r == Regime::Small ? "Small" : "Big"; }

Regime regime(const RuledModel& m) {
  const Rational& c = m.capacity();
  if (c > m.mu()) throw DomainError("regime requires c <= mu");
  return c < m.lambda() ? Regime::Small : Regime::Big;
}

TrivialPresentation trivial_presentation(const RuledModel& m) {
  if (m.i() == 0) return {m, 1, false, false};
  if (m.capacity() <= m.mu()) return {c_related(m), 1, true, false};
  NormalizedModel n = normalize_special(m);
  return {n.model, n.scale, false, true};
}

HirzebruchSections hirzebruch_sections(std::int64_t index) {
  if (index < 0) throw DomainError("Hirzebruch index must be nonnegative");
  std::int64_t k = index / 2;
  if (index % 2 == 0) return {HClass(1, -k, 0), HClass(1, k, 0), Basis::Trivial};
  return {HClass(1, -k, 0), HClass(1, k + 1, 0), Basis::Twisted};
}

}  // namespace ruled4
