#include "ruled4/homotopy_invariants.hpp"

#include <algorithm>
#include <sstream>

namespace ruled4 {

GradedModule::GradedModule(std::initializer_list<std::pair<const int, std::int64_t>> init,
                           std::optional<std::string> closed)
    : closed_form(std::move(closed)) {
  for (const auto& [degree, r] : init) add(degree, r);
}

std::int64_t GradedModule::rank(int degree) const {
  auto it = ranks.find(degree);
  return it == ranks.end() ? 0 : it->second;
}

void GradedModule::add(int degree, std::int64_t r) {
  if (degree < 0 || r < 0) throw InvariantViolation("graded ranks and degrees are nonnegative");
  if (r == 0) return;
  ranks[degree] += r;
}

int GradedModule::max_degree() const { return ranks.empty() ? 0 : ranks.rbegin()->first; }

std::string format_ranks(const GradedModule& g) {
  std::string s = "{";
  for (const auto& [degree, r] : g.ranks) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(degree) + ":" + std::to_string(r);
  }
  return s + "}";
}

std::string format_polynomial(const Polynomial& p) {
  static const char* names[3] = {"T", "X", "Y"};
  std::string s;
  for (const auto& [mono, coeff] : p) {
    if (coeff == 0) continue;
    Integer mag = coeff < 0 ? Integer(-coeff) : coeff;
    s += s.empty() ? (coeff < 0 ? "-" : "") : (coeff < 0 ? " - " : " + ");
    bool constant = mono[0] == 0 && mono[1] == 0 && mono[2] == 0;
    if (mag != 1 || constant) s += mag.str();
    for (int v = 0; v < 3; ++v) {
      if (mono[v] == 0) continue;
      s += names[v];
      if (mono[v] > 1) s += "^" + std::to_string(mono[v]);
    }
  }
  return s.empty() ? "0" : s;
}

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string series_factor(const char* sign, int degree) {
  return std::string("(1") + sign + "t" + (degree == 1 ? "" : "^" + std::to_string(degree)) + ")";
}

std::string closed_form(const RingPresentation& ring) {
  std::map<std::string, int> numer, denom;
  std::vector<std::string> numer_order, denom_order;
  auto bump = [](std::map<std::string, int>& counts, std::vector<std::string>& order, std::string f) {
    if (counts[f]++ == 0) order.push_back(f);
  };
  for (const Relation& rel : ring.relations) bump(numer, numer_order, series_factor("-", rel.degree));
  for (const Generator& g : ring.generators) {
    if (g.degree % 2) bump(numer, numer_order, series_factor("+", g.degree));
    else bump(denom, denom_order, series_factor("-", g.degree));
  }
  auto product = [](const std::map<std::string, int>& counts, const std::vector<std::string>& order) {
    std::string s;
    for (const std::string& f : order) s += f + (counts.at(f) > 1 ? "^" + std::to_string(counts.at(f)) : "");
    return s.empty() ? std::string("1") : s;
  };
  std::string d = product(denom, denom_order);
  if (denom_order.size() > 1 || denom.at(denom_order.front()) > 1) d = "(" + d + ")";
  return product(numer, numer_order) + "/" + d;
}

}  // namespace

RingPresentation bsymp_base_ring(int i, std::int64_t ell) {
  if (i != 0 && i != 1) throw DomainError("bundle type i must be 0 or 1");
  if (i == 0 && ell < 1) throw DomainError("i=0 requires ell >= 1 (mu > 1)");
  if (i == 1 && ell < 0) throw DomainError("i=1 requires ell >= 0");

  RingPresentation ring{RingKind::Quotient, {{"T", 2}, {"X", 4}, {"Y", 4}}, {}};
  Relation rel;
  rel.t_factor = i == 0;
  rel.expanded = {{Monomial{i == 0 ? 1 : 0, 0, 0}, Integer(1)}};
  for (std::int64_t k = (i == 0 ? 1 : 0); k <= ell; ++k) {
    Integer n = i == 0 ? Integer(k) : Integer(2 * k + 1);
    RelationFactor f{n * n * n * n, n * n};
    rel.factors.push_back(f);
    Polynomial factor{{Monomial{2, 0, 0}, Integer(1)}, {Monomial{0, 1, 0}, f.x}, {Monomial{0, 0, 1}, Integer(-f.y)}};
    rel.expanded = multiply(rel.expanded, factor);
  }
  rel.degree = static_cast<int>(i == 0 ? 2 + 4 * ell : 4 * (ell + 1));
  ring.relations.push_back(std::move(rel));
  return ring;
}

std::vector<Integer> poincare_coefficients(const RingPresentation& ring, int max_degree) {
  if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
  std::vector<Integer> c(max_degree + 1, Integer(0));
  c[0] = 1;
  auto times_binomial = [&](int d, int sign) {  // (1 + sign t^d)
    for (int k = max_degree; k >= d; --k) c[k] += sign * c[k - d];
  };
  for (const Generator& g : ring.generators) {
    if (g.degree <= 0) throw InvariantViolation("generators have positive degree");
    if (g.degree % 2) {
      times_binomial(g.degree, 1);
    } else {
      for (int k = g.degree; k <= max_degree; ++k) c[k] += c[k - g.degree];
    }
  }
  for (const Relation& rel : ring.relations) times_binomial(rel.degree, -1);
  return c;
}

GradedModule hilbert_series(const RingPresentation& ring, int max_degree) {
  GradedModule g;
  std::vector<Integer> c = poincare_coefficients(ring, max_degree);
  for (int k = 0; k <= max_degree; ++k) g.add(k, to_int64(c[k]));
  g.closed_form = closed_form(ring);
  return g;
}

GroupHomotopy symp_base_homotopy(const RuledModel& m) {
  if (m.blown_up()) throw DomainError("symp_base_homotopy takes an unblown model");
  const std::int64_t l = m.ell();
  if (m.i() == 0) {
    if (m.mu() == 1)
      return {GradedModule{{3, 2}}, "Z/2", "(SO(3) x SO(3)) x| Z/2"};
    return {GradedModule{{1, 1}, {3, 2}, {static_cast<int>(4 * l), 1}}, std::nullopt,
            "one new generator in degree 4l"};
  }
  if (m.mu() <= 1) return {GradedModule{{1, 1}, {3, 1}}, std::nullopt, "retracts onto U(2)"};
  return {GradedModule{{1, 1}, {3, 2}, {static_cast<int>(4 * l + 2), 1}}, std::nullopt,
          "one new generator in degree 4l+2"};
}

GroupHomotopy symp_blowup_homotopy(const RuledModel& m) {
  const Rational& c = m.capacity();
  if (m.i() == 1) {
    if (m.mu() < c)
      return {GradedModule{{1, 2}}, std::nullopt, "stabilizer of a point of M1 (a 2-torus)"};
    GroupHomotopy h = symp_blowup_homotopy(c_related(m));
    h.description += " (via the c-related trivial bundle)";
    return h;
  }
  if (m.mu() == 1) return {GradedModule{{1, 2}}, "Z/2", "T^2 x Z/2"};
  const int l = static_cast<int>(m.ell());
  if (regime(m) == Regime::Small)
    return {GradedModule{{1, 3}, {4 * l, 1}}, std::nullopt, "small ball: degree 4l generator survives"};
  return {GradedModule{{1, 3}, {4 * l - 2, 1}}, std::nullopt, "big ball: generator drops to degree 4l-2"};
}

BlowupCohomology symp_blowup_cohomology(const RuledModel& m, int max_degree) {
  GroupHomotopy h = symp_blowup_homotopy(m);
  int eps = 0;
  for (const auto& [degree, r] : h.ranks.ranks)
    if (degree != 1) eps = degree;
  if (eps == 0 || h.pi0)
    throw DomainError("cohomology ring is only modeled when the group is connected with a "
                      "polynomial generator (i=0 needs mu > 1, i=1 needs c <= mu and not c = mu <= 1)");
  BlowupCohomology out;
  out.ring = {RingKind::FreeGradedCommutative, {{"a1", 1}, {"a2", 1}, {"a3", 1}, {"eps", eps}}, {}};
  out.epsilon_degree = eps;
  out.betti = poincare_coefficients(out.ring, max_degree);
  return out;
}

std::pair<int, std::int64_t> reduced_base(const RuledModel& m) {
  const Rational& c = m.capacity();
  if (m.i() == 1 && m.mu() < c)
    throw DomainError("no base reduction when mu < c (twisted bundle, special case)");
  if (regime(m) == Regime::Small) return {m.i(), m.ell()};
  RuledModel other = c_related(m);
  return {other.i(), other.ell()};
}

GradedModule bsymp_blowup_series(const RuledModel& m, int max_degree) {
  auto [i, l] = reduced_base(m);
  RingPresentation ring = bsymp_base_ring(i, l);
  std::vector<Integer> base = poincare_coefficients(ring, max_degree);
  GradedModule g;
  for (int k = 0; k <= max_degree; ++k) {
    Integer v = base[k];
    if (k >= 2) v += 2 * base[k - 2];
    if (k >= 4) v += base[k - 4];
    g.add(k, to_int64(v));
  }
  g.closed_form = closed_form(ring) + " * (1+2t^2+t^4)";
  return g;
}

GradedModule manifold_homotopy() {
  return GradedModule({{2, 2}, {3, 2}}, "rationally S^2 x S^2 in both cases; zero above degree 3");
}

std::string manifold_name(int i) { return i == 0 ? "S^2 x S^2" : "CP^2 # -CP^2"; }

std::string to_string(EmbeddingType t) {
  switch (t) {
    case EmbeddingType::EquivalentToManifold: return "EquivalentToManifold";
    case EmbeddingType::GradedRanks: return "GradedRanks";
    case EmbeddingType::EquivalentToConfigurationSpace: return "EquivalentToConfigurationSpace";
  }
  return "";
}

EmbeddingReport embedding_space_homotopy(const RuledModel& m) {
  m.capacity();
  const bool as_manifold = (m.i() == 1 && m.mu() <= 1) || regime(m) == Regime::Small;
  if (as_manifold)
    return {EmbeddingType::EquivalentToManifold, manifold_name(m.i()), manifold_homotopy(), true};
  const int l = static_cast<int>(m.ell());
  GradedModule g{{2, 2}, {3, 2}};
  g.add(4 * l - 1 + 2 * m.i(), 1);
  g.add(4 * l + 2 * m.i(), 1);
  return {EmbeddingType::GradedRanks, "", g, false};
}

Cp2Report cp2_embedding_report(std::vector<Rational> caps) {
  if (caps.empty() || caps.size() > 2) throw DomainError("cp2 report takes one or two capacities");
  for (const Rational& d : caps)
    if (d <= 0 || d >= 1) throw DomainError("each capacity must lie in (0, 1)");
  if (caps.size() == 1) {
    const Rational& d = caps[0];
    return {{EmbeddingType::EquivalentToManifold, "CP^2", GradedModule{{2, 1}, {5, 1}}, true},
            RuledModel(1, d / (1 - d)),
            {{"L - Sigma", class_F()}, {"Sigma", class_B()}}};
  }
  std::sort(caps.begin(), caps.end(), std::greater<>());
  const Rational &d1 = caps[0], &d2 = caps[1];
  if (d1 + d2 >= 1) throw DomainError("delta1 + delta2 < 1 violated");
  return {{EmbeddingType::EquivalentToConfigurationSpace, "F(CP^2, 2)", GradedModule{}, true},
          RuledModel(0, (1 - d2) / (1 - d1), (1 - d1 - d2) / (1 - d1)),
          {{"L - Sigma1 - Sigma2", class_E()},
           {"Sigma1", HClass(1, 0, 1)},
           {"Sigma2", HClass(0, 1, 1)}}};
}

std::int64_t ExactSequenceCheck::rank(SequenceMap map, int degree) const {
  for (const SequenceSegment& s : segments)
    if (s.degree == degree)
      return map == SequenceMap::Inclusion ? s.rank_inclusion
             : map == SequenceMap::Projection ? s.rank_projection
                                              : s.rank_boundary;
  return 0;
}

ExactSequenceCheck check_fibration_sequence(const GradedModule& fiber, const GradedModule& total,
                                            const GradedModule& base, const std::vector<RankHint>& hints) {
  ExactSequenceCheck out;
  const int top = std::max({fiber.max_degree(), total.max_degree(), base.max_degree(), 1});
  std::int64_t boundary_above = 0;
  for (int n = top; n >= 1; --n) {
    SequenceSegment s;
    s.degree = n;
    s.fiber = fiber.rank(n);
    s.total = total.rank(n);
    s.base = base.rank(n);
    // exactness at pi_n(fiber), pi_n(total), pi_n(base) in turn
    s.rank_inclusion = s.fiber - boundary_above;
    s.rank_projection = s.total - s.rank_inclusion;
    s.rank_boundary = s.base - s.rank_projection;
    const std::int64_t below = n == 1 ? 0 : fiber.rank(n - 1);
    s.exact = s.rank_inclusion >= 0 && s.rank_inclusion <= std::min(s.fiber, s.total) &&
              s.rank_projection >= 0 && s.rank_projection <= std::min(s.total, s.base) &&
              s.rank_boundary >= 0 && s.rank_boundary <= std::min(s.base, below);
    if (!s.exact && !out.first_inconsistent_degree) {
      out.feasible = false;
      out.first_inconsistent_degree = n;
    }
    boundary_above = s.rank_boundary;
    out.segments.push_back(s);
  }
  for (const RankHint& h : hints)
    if (out.rank(h.map, h.degree) != h.rank) out.hints_consistent = false;
  return out;
}

FibrationTriple fibration_triple(const RuledModel& m) {
  const Rational& c = m.capacity();
  if (m.i() == 1 && m.mu() <= c) throw DomainError("no fibration triple when mu <= c on the twisted bundle");
  const RuledModel base = regime(m) == Regime::Small ? m : c_related(m);
  const RuledModel reduced(base.i(), base.mu());
  return {symp_blowup_homotopy(m).ranks, symp_base_homotopy(reduced).ranks, manifold_homotopy(), reduced};
}

std::string to_string(SamelsonFlag f) {
  return f == SamelsonFlag::AllTrivial ? "AllTrivial" : "NontrivialDegree2";
}

SamelsonFlag samelson_flag(const RuledModel& m) {
  const Rational& c = m.capacity();
  if (m.i() != 0) throw DomainError("Samelson products are modeled for i=0 only");
  return m.mu() > 1 && m.mu() < 2 && m.lambda() <= c ? SamelsonFlag::NontrivialDegree2
                                                     : SamelsonFlag::AllTrivial;
}

IntegralFacts integral_facts(const RuledModel& m) {
  const Rational& c = m.capacity();
  if (m.i() != 0 || m.mu() <= 1) throw DomainError("integral facts require i=0 and mu > 1");
  IntegralFacts f;
  f.torsion_free_direct = m.mu() < 2 && m.lambda() <= c;
  f.torsion_free = f.torsion_free_direct ? "true (direct)" : "by-stability annotation";
  f.pi1 = "Z^3";
  f.loop_space_note = "homotopy equivalent to Omega S^3 x (S^1)^3 (recorded, not computed)";
  return f;
}

}  // namespace ruled4
