#include "ruled4/report.hpp"

#include <sstream>

namespace ruled4 {

namespace {

std::vector<HClass> exceptional_classes_of(const RuledModel& m) {
  std::vector<HClass> found;
  for (int p = -2; p <= 2; ++p)
    for (int q = -2; q <= 2; ++q)
      for (int r = -2; r <= 2; ++r) {
        HClass a(p, q, r);
        if (is_exceptional(a, m.basis()) && area(a, m) > 0) found.push_back(a);
      }
  if (found.size() != 3) throw InvariantViolation("expected exactly three exceptional classes");
  return found;
}

void cite(AnalysisReport& r, std::string fact, std::string anchor) {
  r.citations.push_back({std::move(fact), std::move(anchor)});
}

}  // namespace

bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
  return a.model == b.model && a.regime == b.regime && a.c_related == b.c_related &&
         a.normalized == b.normalized && a.normalization_scale == b.normalization_scale &&
         a.normalization_variants == b.normalization_variants &&
         a.exceptional_classes == b.exceptional_classes && a.stratification == b.stratification &&
         a.toric_count == b.toric_count && a.symp_homotopy == b.symp_homotopy &&
         a.symp_cohomology == b.symp_cohomology && a.bsymp_series == b.bsymp_series &&
         a.embedding_space == b.embedding_space && a.samelson == b.samelson &&
         a.integral == b.integral && a.unavailable == b.unavailable && a.citations == b.citations &&
         a.max_degree == b.max_degree;
}

AnalysisReport analyze(const RuledModel& m, int max_degree) {
  const Rational& c = m.capacity();
  const bool special = m.i() == 1 && m.mu() < c;

  std::optional<NormalizedModel> normalized;
  if (special) normalized = normalize_special(m);
  const RuledModel presentation = special ? normalized->model : trivial_presentation(m).model;

  AnalysisReport r{m, special ? "Special" : to_string(regime(m)), std::nullopt, std::nullopt,
                   std::nullopt, {}, exceptional_classes_of(m), build_stratification(presentation),
                   0, symp_blowup_homotopy(m), std::nullopt, std::nullopt,
                   embedding_space_homotopy(m), std::nullopt, std::nullopt, {}, {}, max_degree};
  r.toric_count = static_cast<std::int64_t>(r.stratification.strata.size());

  cite(r, "regime", "small ball iff c < lambda, where mu = ell + lambda and 0 < lambda <= 1");
  cite(r, "exceptional_classes",
       "exactly three classes with self-intersection -1, c1 = 1 and genus 0: E, F-E, B-E "
       "(twisted basis: E1, F1-E1, B1)");
  if (special) {
    r.normalized = normalized->model;
    r.normalization_scale = normalized->scale;
    r.normalization_variants = normalized->unused_variants;
    r.unavailable["c_related"] = "mu < c: the c-related model does not exist; see normalized";
    cite(r, "normalized",
         "mu < c in the twisted bundle: swap the sphere factors and rescale, "
         "mu' = 1/(1+mu-c), c' = (1-c)/(1+mu-c); B1 and E1 trade roles");
  } else {
    r.c_related = c_related(m);
    cite(r, "c_related", "blow up and blow down the other fiber component: M0_mu -> M1_{mu-c}, "
                         "M1_mu -> M0_{1+mu-c}, new capacity 1-c");
    const std::int64_t expected = regime(m) == Regime::Small ? 2 * m.ell() + 1 + m.i() : 2 * m.ell() + m.i();
    if (r.toric_count != expected) throw InvariantViolation("toric count disagrees with 2l+1+i / 2l+i");
  }
  cite(r, "stratification",
       "strata m = 0..N of tamed J by the embedded class D_{-m}; codimension 2m; "
       "N = 2l (small ball) or 2l-1 (big ball) in the trivial-bundle presentation");
  cite(r, "toric_count", "toric structures are in bijection with strata (blown-up Hirzebruch W_m)");
  cite(r, "symp_homotopy",
       special ? "mu < c: Symp fixing the exceptional sphere is the stabilizer of a point of M1"
               : "Symp of the blow-up ~ Symp(M, point) for a small ball, ~ Symp of the c-related "
                 "blow-up for a big ball; pi_1 = Q^3");

  try {
    r.symp_cohomology = symp_blowup_cohomology(m, max_degree);
    cite(r, "symp_cohomology", "H*(Symp; Q) = Lambda(a1, a2, a3) (x) Q[eps], Poincare series (1+t)^3/(1-t^d)");
  } catch (const DomainError& e) {
    r.unavailable["symp_cohomology"] = e.what();
  }
  try {
    r.bsymp_series = bsymp_blowup_series(m, max_degree);
    cite(r, "bsymp_series", "H*(BSymp of the blow-up) = H*(BSymp(M)) (x) H*(M); "
                            "H*(BSymp(M)) = Q[T,X,Y]/R_l with |T|=2, |X|=|Y|=4");
  } catch (const DomainError& e) {
    r.unavailable["bsymp_series"] = e.what();
  }
  if (m.i() == 1 && m.mu() <= 1)
    cite(r, "embedding_space", "twisted bundle with mu <= 1: Emb(B_c, M1) ~ M1 for every capacity");
  else
    cite(r, "embedding_space",
         "fibration Symp(blow-up) -> Symp(M) -> Emb(B_c, M): small ball gives M, big ball adds "
         "generators in degrees 4l-1+2i and 4l+2i and is not a finite complex");

  if (special) {
    r.unavailable["samelson"] = "mu < c: the reported group fixes the exceptional sphere";
    r.unavailable["integral"] = "mu < c: the reported group fixes the exceptional sphere";
  } else {
    r.samelson = samelson_flag(presentation);
    cite(r, "samelson", "Samelson products in degree 2 are nonzero iff 1 < mu < 2 and lambda <= c "
                        "(evaluated on the trivial-bundle presentation)");
    try {
      r.integral = integral_facts(presentation);
      cite(r, "integral", "pi_1(Symp) = Z^3 for mu > 1; integral homology torsion-free for "
                          "1 < mu < 2, lambda <= c");
    } catch (const DomainError& e) {
      r.unavailable["integral"] = e.what();
    }
  }
  return r;
}

std::string format_class(const HClass& a) {
  return std::to_string(a(0)) + "," + std::to_string(a(1)) + "," + std::to_string(a(2));
}

HClass parse_class(const std::string& text) {
  std::stringstream ss(text);
  std::string part;
  std::vector<std::int64_t> v;
  while (std::getline(ss, part, ',')) {
    Rational x = parse_rational(part);
    if (denominator(x) != 1) throw DomainError("class coefficients must be integers: '" + text + "'");
    v.push_back(to_int64(numerator(x)));
  }
  if (v.size() != 3) throw DomainError("class must be given as p,q,r: '" + text + "'");
  return HClass(v[0], v[1], v[2]);
}

std::string render_table(const AnalysisReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) {
    out << key << std::string(key.size() < 20 ? 20 - key.size() : 1, ' ') << value << "\n";
  };
  auto model_text = [](const RuledModel& m) {
    return "i=" + std::to_string(m.i()) + " mu=" + format_rational(m.mu()) +
           (m.c() ? " c=" + format_rational(*m.c()) : "");
  };
  row("model", model_text(r.model) + " (ell=" + std::to_string(r.model.ell()) +
                   ", lambda=" + format_rational(r.model.lambda()) + ")");
  row("regime", r.regime);
  if (r.c_related) row("c_related", model_text(*r.c_related));
  if (r.normalized)
    row("normalized", model_text(*r.normalized) + " scale " + format_rational(*r.normalization_scale));
  for (const std::string& v : r.normalization_variants) row("  unused variant", v);
  std::string ex;
  for (const HClass& a : r.exceptional_classes) ex += (ex.empty() ? "" : "  ") + ("(" + format_class(a) + ")");
  row("exceptional", ex);
  row("toric_count", std::to_string(r.toric_count));
  for (const Stratum& s : r.stratification.strata)
    row("  stratum " + std::to_string(s.m), "D_{-" + std::to_string(s.m) + "} = (" + format_class(s.cls) +
                                                ") codim " + std::to_string(s.codimension) + " W_" +
                                                std::to_string(s.hirzebruch_index));
  row("pi_*(Symp)", format_ranks(r.symp_homotopy.ranks) +
                        (r.symp_homotopy.pi0 ? " pi_0=" + *r.symp_homotopy.pi0 : ""));
  if (r.symp_cohomology) {
    std::string b;
    for (std::size_t k = 0; k < r.symp_cohomology->betti.size() && k <= 8; ++k)
      b += (k ? " " : "") + r.symp_cohomology->betti[k].str();
    row("H*(Symp)", "Lambda(a1,a2,a3) x Q[eps], |eps|=" + std::to_string(r.symp_cohomology->epsilon_degree) +
                        "; betti " + b + " ...");
  }
  if (r.bsymp_series) {
    std::string b;
    for (int k = 0; k <= std::min(8, r.max_degree); ++k) b += (k ? " " : "") + std::to_string(r.bsymp_series->rank(k));
    row("H*(BSymp)", b + " ... = " + r.bsymp_series->closed_form.value_or(""));
  }
  const EmbeddingReport& e = r.embedding_space;
  row("Emb(B_c, M)", e.type == EmbeddingType::GradedRanks
                         ? "pi_* ranks " + format_ranks(e.ranks) + " (not a finite complex)"
                         : "homotopy equivalent to " + e.space);
  if (r.samelson) row("samelson", to_string(*r.samelson));
  if (r.integral) row("integral", "torsion-free: " + r.integral->torsion_free + "; pi_1 = " + r.integral->pi1);
  for (const auto& [field, why] : r.unavailable) row(field, "n/a: " + why);
  out << "\nsources:\n";
  for (const Citation& c : r.citations) out << "  " << c.fact << ": " << c.anchor << "\n";
  return out.str();
}

json encode(const Rational& x) { return format_rational(x); }

json encode(const HClass& a) { return json::array({a(0), a(1), a(2)}); }

json encode(const RuledModel& m) {
  json j{{"i", m.i()}, {"mu", encode(m.mu())}};
  if (m.c()) j["c"] = encode(*m.c());
  return j;
}

json encode(const GradedModule& g) {
  json ranks = json::object();
  for (const auto& [degree, r] : g.ranks) ranks[std::to_string(degree)] = r;
  return {{"ranks", ranks}, {"closed_form", g.closed_form ? json(*g.closed_form) : json(nullptr)}};
}

json encode(const Decomposition& d) {
  json parts = json::array();
  for (const Part& p : d.parts) parts.push_back({{"class", encode(p.cls)}, {"mult", p.mult}});
  return {{"target", encode(d.target)}, {"parts", parts}, {"admissible", d.admissible}};
}

json encode(const Stratification& s) {
  json strata = json::array();
  for (const Stratum& st : s.strata)
    strata.push_back({{"m", st.m}, {"class", encode(st.cls)}, {"codim", st.codimension},
                      {"hirzebruch", st.hirzebruch_index}});
  return {{"model", encode(s.model)}, {"N", s.N()}, {"strata", strata}};
}

json encode(const InflationStep& step) {
  return {{"along", encode(step.along)}, {"t", encode(step.t)}, {"rescale", encode(step.rescale)},
          {"why", step.why}};
}

namespace {

json encode_ring(const RingPresentation& ring) {
  json gens = json::array(), rels = json::array();
  for (const Generator& g : ring.generators) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  for (const Relation& rel : ring.relations) {
    json factors = json::array(), terms = json::array();
    for (const RelationFactor& f : rel.factors) factors.push_back({f.x.str(), f.y.str()});
    for (const auto& [mono, coeff] : rel.expanded) terms.push_back({mono, coeff.str()});
    rels.push_back({{"t_factor", rel.t_factor}, {"factors", factors}, {"terms", terms},
                    {"degree", rel.degree}, {"text", format_polynomial(rel.expanded)}});
  }
  return {{"kind", ring.kind == RingKind::Quotient ? "Quotient" : "FreeGradedCommutative"},
          {"generators", gens}, {"relations", rels}};
}

RingPresentation decode_ring(const json& j) {
  RingPresentation ring;
  ring.kind = j.at("kind") == "Quotient" ? RingKind::Quotient : RingKind::FreeGradedCommutative;
  for (const json& g : j.at("generators")) ring.generators.push_back({g.at("name"), g.at("degree")});
  for (const json& r : j.at("relations")) {
    Relation rel;
    rel.t_factor = r.at("t_factor");
    rel.degree = r.at("degree");
    for (const json& f : r.at("factors"))
      rel.factors.push_back({Integer(f.at(0).get<std::string>()), Integer(f.at(1).get<std::string>())});
    for (const json& t : r.at("terms"))
      rel.expanded[t.at(0).get<Monomial>()] = Integer(t.at(1).get<std::string>());
    ring.relations.push_back(std::move(rel));
  }
  return ring;
}

json optional_text(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::optional<std::string> decode_optional_text(const json& j) {
  return j.is_null() ? std::nullopt : std::optional<std::string>(j.get<std::string>());
}

}  // namespace

json encode(const AnalysisReport& r) {
  json j;
  j["schema"] = kSchema;
  j["model"] = encode(r.model);
  j["regime"] = r.regime;
  j["c_related"] = r.c_related ? encode(*r.c_related) : json(nullptr);
  if (r.normalized)
    j["normalized"] = {{"model", encode(*r.normalized)},
                       {"scale", encode(*r.normalization_scale)},
                       {"swaps_exceptional", true},
                       {"unused_variants", r.normalization_variants}};
  else
    j["normalized"] = nullptr;
  j["exceptional_classes"] = json::array();
  for (const HClass& a : r.exceptional_classes) j["exceptional_classes"].push_back(encode(a));
  j["stratification"] = encode(r.stratification);
  j["toric_count"] = r.toric_count;
  j["symp_homotopy"] = {{"ranks", encode(r.symp_homotopy.ranks)},
                        {"pi0", optional_text(r.symp_homotopy.pi0)},
                        {"description", r.symp_homotopy.description}};
  if (r.symp_cohomology) {
    json betti = json::array();
    for (const Integer& b : r.symp_cohomology->betti) betti.push_back(to_int64(b));
    j["symp_cohomology"] = {{"ring", encode_ring(r.symp_cohomology->ring)},
                            {"epsilon_degree", r.symp_cohomology->epsilon_degree},
                            {"betti", betti}};
  } else {
    j["symp_cohomology"] = nullptr;
  }
  j["bsymp_series"] = r.bsymp_series ? encode(*r.bsymp_series) : json(nullptr);
  j["embedding_space"] = {{"type", to_string(r.embedding_space.type)},
                          {"space", r.embedding_space.space},
                          {"ranks", encode(r.embedding_space.ranks)},
                          {"finite", r.embedding_space.finite}};
  j["samelson"] = r.samelson ? json(to_string(*r.samelson)) : json(nullptr);
  if (r.integral)
    j["integral"] = {{"torsion_free", r.integral->torsion_free},
                     {"torsion_free_direct", r.integral->torsion_free_direct},
                     {"pi1", r.integral->pi1},
                     {"loop_space_note", r.integral->loop_space_note}};
  else
    j["integral"] = nullptr;
  j["unavailable"] = r.unavailable;
  j["citations"] = json::array();
  for (const Citation& c : r.citations) j["citations"].push_back({{"fact", c.fact}, {"anchor", c.anchor}});
  j["max_degree"] = r.max_degree;
  return j;
}

Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw DomainError("rational must be encoded as a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

HClass decode_class(const json& j) {
  if (!j.is_array() || j.size() != 3) throw DomainError("class must be a [p, q, r] array");
  return HClass(j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>());
}

RuledModel decode_model(const json& j) {
  std::optional<Rational> c;
  if (j.contains("c") && !j.at("c").is_null()) c = decode_rational(j.at("c"));
  return RuledModel(j.at("i").get<int>(), decode_rational(j.at("mu")), c);
}

GradedModule decode_graded(const json& j) {
  GradedModule g;
  for (const auto& [degree, r] : j.at("ranks").items()) g.add(std::stoi(degree), r.get<std::int64_t>());
  g.closed_form = decode_optional_text(j.at("closed_form"));
  return g;
}

Decomposition decode_decomposition(const json& j) {
  Decomposition d{decode_class(j.at("target")), {}, j.at("admissible").get<bool>()};
  for (const json& p : j.at("parts")) d.parts.push_back({decode_class(p.at("class")), p.at("mult").get<std::int64_t>()});
  return d;
}

Stratification decode_stratification(const json& j) {
  Stratification s{decode_model(j.at("model")), {}};
  for (const json& st : j.at("strata"))
    s.strata.push_back({st.at("m").get<std::int64_t>(), decode_class(st.at("class")),
                        st.at("codim").get<std::int64_t>(), st.at("hirzebruch").get<std::int64_t>()});
  if (s.N() != j.at("N").get<std::int64_t>()) throw DomainError("stratification N does not match strata");
  return s;
}

InflationStep decode_step(const json& j) {
  return InflationStep(decode_class(j.at("along")), decode_rational(j.at("t")), decode_rational(j.at("rescale")),
                       j.at("why").get<std::string>());
}

AnalysisReport decode_report(const json& j) {
  if (j.at("schema") != kSchema) throw DomainError("unknown report schema");
  AnalysisReport r{decode_model(j.at("model")), j.at("regime").get<std::string>(), std::nullopt,
                   std::nullopt, std::nullopt, {}, {}, decode_stratification(j.at("stratification")),
                   j.at("toric_count").get<std::int64_t>(), {}, std::nullopt, std::nullopt, {},
                   std::nullopt, std::nullopt, {}, {}, j.at("max_degree").get<int>()};
  if (!j.at("c_related").is_null()) r.c_related = decode_model(j.at("c_related"));
  if (!j.at("normalized").is_null()) {
    const json& n = j.at("normalized");
    r.normalized = decode_model(n.at("model"));
    r.normalization_scale = decode_rational(n.at("scale"));
    r.normalization_variants = n.at("unused_variants").get<std::vector<std::string>>();
  }
  for (const json& a : j.at("exceptional_classes")) r.exceptional_classes.push_back(decode_class(a));
  const json& h = j.at("symp_homotopy");
  r.symp_homotopy = {decode_graded(h.at("ranks")), decode_optional_text(h.at("pi0")),
                     h.at("description").get<std::string>()};
  if (!j.at("symp_cohomology").is_null()) {
    const json& c = j.at("symp_cohomology");
    BlowupCohomology bc{decode_ring(c.at("ring")), c.at("epsilon_degree").get<int>(), {}};
    for (const json& b : c.at("betti")) bc.betti.push_back(Integer(b.get<std::int64_t>()));
    r.symp_cohomology = std::move(bc);
  }
  if (!j.at("bsymp_series").is_null()) r.bsymp_series = decode_graded(j.at("bsymp_series"));
  const json& e = j.at("embedding_space");
  const std::string type = e.at("type");
  r.embedding_space = {type == "GradedRanks"                      ? EmbeddingType::GradedRanks
                       : type == "EquivalentToConfigurationSpace" ? EmbeddingType::EquivalentToConfigurationSpace
                                                                  : EmbeddingType::EquivalentToManifold,
                       e.at("space").get<std::string>(), decode_graded(e.at("ranks")), e.at("finite").get<bool>()};
  if (!j.at("samelson").is_null())
    r.samelson = j.at("samelson") == "AllTrivial" ? SamelsonFlag::AllTrivial : SamelsonFlag::NontrivialDegree2;
  if (!j.at("integral").is_null()) {
    const json& f = j.at("integral");
    r.integral = IntegralFacts{f.at("torsion_free_direct").get<bool>(), f.at("torsion_free").get<std::string>(),
                               f.at("pi1").get<std::string>(), f.at("loop_space_note").get<std::string>()};
  }
  r.unavailable = j.at("unavailable").get<std::map<std::string, std::string>>();
  for (const json& c : j.at("citations")) r.citations.push_back({c.at("fact"), c.at("anchor")});
  return r;
}

}  // namespace ruled4
