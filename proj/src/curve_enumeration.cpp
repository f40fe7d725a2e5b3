#include "ruled4/curve_enumeration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

namespace ruled4 {

namespace {

void require_trivial_blowup(const RuledModel& m) {
  m.capacity();
  if (m.i() != 0)
    throw DomainError("curve enumeration works on blow-ups of the trivial bundle; "
                      "convert with trivial_presentation first");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Areas multiplied by the common denominator of mu and c.
struct ScaledAreas {
  std::int64_t unit, mu, c;

  explicit ScaledAreas(const RuledModel& m) {
    Integer l = boost::multiprecision::lcm(denominator(m.mu()), denominator(m.capacity()));
    if (l > (Integer(1) << 30) || numerator(m.mu()) > (Integer(1) << 30))
      throw DomainError("mu and c have too large numerators/denominators for enumeration");
    unit = to_int64(l);
    mu = to_int64(numerator(m.mu()) * (l / denominator(m.mu())));
    c = to_int64(numerator(m.capacity()) * (l / denominator(m.capacity())));
  }

  std::int64_t operator()(const HClass& a) const { return a(0) * mu + a(1) * unit - a(2) * c; }
};

bool part_less(const Part& x, const Part& y) {
  return std::tie(x.cls(0), x.cls(1), x.cls(2), x.mult) <
         std::tie(y.cls(0), y.cls(1), y.cls(2), y.mult);
}

bool decomposition_less(const Decomposition& x, const Decomposition& y) {
  return std::lexicographical_compare(x.parts.begin(), x.parts.end(), y.parts.begin(),
                                      y.parts.end(), part_less);
}

}  // namespace

bool simple_class_filter(const HClass& a, const RuledModel& m) {
  require_trivial_blowup(m);
  if (area(a, m) <= 0) return false;
  const std::int64_t p = a(0), r = a(2);
  const bool fiber_exceptional = a == class_E() || a == HClass(0, 1, 1);
  if (p < 0) return false;
  if (p == 0) return fiber_exceptional || a == class_F();
  Rational g = virtual_genus(a);
  if (g < 0 || denominator(g) != 1) return false;
  if (p == 1 && r != 0 && r != 1) return false;
  return p >= r && r >= 0;
}

DecompositionSet enumerate_decompositions(const HClass& a, const RuledModel& m) {
  require_trivial_blowup(m);
  const ScaledAreas w(m);
  const std::int64_t total = w(a);
  if (total <= 0) throw DomainError("decomposition target must have positive area");

  DecompositionSet out;
  const std::int64_t P = a(0);
  if (P < 0) return out;

  // Components with p >= 1.  Their p's add up to P, so there are finitely
  // many choices; the p = 0 remainder is split among F, F-E, E directly.
  struct Candidate {
    HClass cls;
    std::int64_t area;
  };
  std::vector<Candidate> cands;
  for (std::int64_t p = 1; p <= P; ++p) {
    for (std::int64_t r = 0; r <= (p == 1 ? 1 : p); ++r) {
      const std::int64_t base = p * w.mu - r * w.c;
      const std::int64_t q_lo = floor_div(-base, w.unit) + 1;
      const std::int64_t q_hi = ceil_div(total - base, w.unit) - 1;
      for (std::int64_t q = q_lo; q <= q_hi; ++q) {
        HClass cls(p, q, r);
        if (simple_class_filter(cls, m)) cands.push_back({cls, w(cls)});
      }
    }
  }
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& x, const Candidate& y) { return x.area < y.area; });

  const HClass fiber_parts[3] = {class_F(), HClass(0, 1, 1), class_E()};
  std::vector<std::size_t> chosen;

  auto finish = [&]() {
    HClass rest = a;
    for (std::size_t j : chosen) rest -= cands[j].cls;
    if (rest(0) != 0) throw InvariantViolation("p-budget bookkeeping failed");
    const std::int64_t q_rest = rest(1), r_rest = rest(2);
    for (std::int64_t t = std::max<std::int64_t>(0, r_rest); t <= q_rest; ++t) {
      const std::int64_t mults[3] = {q_rest - t, t, t - r_rest};
      bool fits = true;
      for (int k = 0; k < 3; ++k)
        if (mults[k] > 0 && w(fiber_parts[k]) >= total) fits = false;
      if (!fits) continue;

      Decomposition d{a, {}, true};
      for (std::size_t j : chosen) {
        if (!d.parts.empty() && d.parts.back().cls == cands[j].cls)
          ++d.parts.back().mult;
        else
          d.parts.push_back({cands[j].cls, 1});
      }
      for (int k = 0; k < 3; ++k)
        if (mults[k] > 0) d.parts.push_back({fiber_parts[k], mults[k]});
      std::sort(d.parts.begin(), d.parts.end(), part_less);

      std::int64_t count = 0;
      HClass sum = HClass::Zero();
      for (const Part& part : d.parts) {
        count += part.mult;
        sum += part.mult * part.cls;
      }
      if (sum != a || count < 2) throw InvariantViolation("decomposition does not sum to target");

      for (std::size_t x = 0; x < d.parts.size() && d.admissible; ++x)
        for (std::size_t y = x + 1; y < d.parts.size(); ++y)
          if (intersect(d.parts[x].cls, d.parts[y].cls) < 0) {
            d.admissible = false;
            break;
          }
      (d.admissible ? out.admissible : out.violating).push_back(std::move(d));
    }
  };

  std::function<void(std::size_t, std::int64_t, std::int64_t)> choose =
      [&](std::size_t start, std::int64_t p_left, std::int64_t area_used) {
        if (p_left == 0) {
          finish();
          return;
        }
        for (std::size_t j = start; j < cands.size(); ++j) {
          if (area_used + cands[j].area > total) break;
          if (cands[j].cls(0) > p_left) continue;
          chosen.push_back(j);
          choose(j, p_left - cands[j].cls(0), area_used + cands[j].area);
          chosen.pop_back();
        }
      };
  choose(0, P, 0);

  std::sort(out.admissible.begin(), out.admissible.end(), decomposition_less);
  std::sort(out.violating.begin(), out.violating.end(), decomposition_less);
  return out;
}

std::string to_string(GromovStatus s) {
  switch (s) {
    case GromovStatus::NonzeroByWallCrossing: return "NonzeroByWallCrossing";
    case GromovStatus::ZeroByArea: return "ZeroByArea";
    case GromovStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

GromovStatus gromov_nonzero(const HClass& a, const RuledModel& m) {
  require_trivial_blowup(m);
  if (k_of(a) < 0) return GromovStatus::Unknown;
  if (area(a, m) <= 0) return GromovStatus::ZeroByArea;
  if (area(HClass(canonical_class() - a), m) <= 0) return GromovStatus::NonzeroByWallCrossing;
  return GromovStatus::Unknown;
}

Stratification build_stratification(const RuledModel& m) {
  const Rational& c = m.capacity();
  if (c > m.mu()) throw DomainError("stratification requires c <= mu");
  RuledModel model = m.i() == 0 ? m : c_related(m);
  const std::int64_t N = regime(model) == Regime::Small ? 2 * model.ell() : 2 * model.ell() - 1;

  Stratification s{model, {}};
  for (std::int64_t k = 0; k <= N; ++k) {
    HClass cls = d_class(-k);
    if (area(cls, model) <= 0) throw InvariantViolation("stratum class without positive area");
    s.strata.push_back({k, cls, 2 * k, k});
  }
  return s;
}

bool representable_in_stratum(std::int64_t d_index, std::int64_t stratum_m, const Stratification& s) {
  if (stratum_m < 0 || stratum_m > s.N())
    throw DomainError("stratum " + std::to_string(stratum_m) + " does not exist (N = " +
                      std::to_string(s.N()) + ")");
  if (d_index == -stratum_m)
    throw DomainError("D_i with i = -m is the stratum's own defining class");
  const std::int64_t pairing = strict_floor_half(d_index - stratum_m);
  if (pairing != intersect(d_class(d_index), d_class(-stratum_m)))
    throw InvariantViolation("strict-floor formula disagrees with the lattice");
  return pairing >= 0;
}

std::vector<Vector2<Rational>> moment_polytope(std::int64_t stratum_m, const RuledModel& m) {
  const Stratification s = build_stratification(m);
  if (stratum_m < 0 || stratum_m > s.N())
    throw DomainError("stratum " + std::to_string(stratum_m) + " does not exist (N = " +
                      std::to_string(s.N()) + ")");
  const RuledModel& model = s.model;
  const Rational& c = model.capacity();
  const std::int64_t k = stratum_m / 2;
  // top edge is the zero section, the chopped corner sits on it
  const Rational top = stratum_m % 2 == 0 ? Rational(model.mu() - k) : Rational(model.mu() - c - k);
  const Rational chop = stratum_m % 2 == 0 ? c : Rational(1 - c);
  using V = Vector2<Rational>;
  return {V(0, 0), V(top + stratum_m, 0), V(top, 1), V(chop, 1), V(0, 1 - chop)};
}

Rational polygon_area(const std::vector<Vector2<Rational>>& vertices) {
  Rational twice = 0;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    const auto& u = vertices[j];
    const auto& v = vertices[(j + 1) % vertices.size()];
    twice += u(0) * v(1) - v(0) * u(1);
  }
  return twice / 2;
}

}  // namespace ruled4
