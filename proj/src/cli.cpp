#include "ruled4/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ruled4/report.hpp"

namespace ruled4::cli {

namespace {

int max_degree_cap() {
  const char* env = std::getenv("RULED4_MAX_DEGREE");
  if (!env || !*env) return 40;
  Rational v = parse_rational(env);
  if (denominator(v) != 1 || v < 0) throw DomainError("RULED4_MAX_DEGREE must be a nonnegative integer");
  return static_cast<int>(to_int64(numerator(v)));
}

std::string class_text(const HClass& a) { return "(" + format_class(a) + ")"; }

void emit(std::ostream& out, const std::string& format, const json& j, const std::string& table) {
  if (format == "json")
    out << j.dump(2) << "\n";
  else
    out << table;
}

json citations(std::initializer_list<std::pair<const char*, const char*>> items) {
  json arr = json::array();
  for (const auto& [fact, anchor] : items) arr.push_back({{"fact", fact}, {"anchor", anchor}});
  return arr;
}

struct ModelArgs {
  int i = 0;
  std::string mu, cap;
};

void add_model_options(CLI::App* cmd, ModelArgs& a, const std::string& suffix = "") {
  cmd->add_option("--mu" + suffix, a.mu, "area of the section class, p/q or decimal")->required();
  cmd->add_option("--cap" + suffix, a.cap, "ball capacity c in (0,1)")->required();
}

RuledModel make_model(const ModelArgs& a) { return RuledModel(a.i, parse_rational(a.mu), parse_rational(a.cap)); }

int cmd_analyze(const ModelArgs& a, const std::string& format, std::ostream& out) {
  AnalysisReport r = analyze(make_model(a), max_degree_cap());
  json j = encode(r);
  if (decode_report(j) != r) throw InvariantViolation("report does not survive a JSON round trip");
  emit(out, format, j, render_table(r));
  return kOk;
}

int cmd_decompose(const ModelArgs& a, const std::string& class_arg, const std::string& format, std::ostream& out) {
  const RuledModel m = make_model(a);
  const HClass target = parse_class(class_arg);
  const TrivialPresentation tp = trivial_presentation(m);
  const HClass mapped = m.i() == 0         ? target
                        : tp.via_special ? map_special(target)
                                         : map_classes(target, Direction::OneToZero);
  const DecompositionSet set = enumerate_decompositions(mapped, tp.model);

  json j{{"schema", kSchema}, {"command", "decompose"}, {"model", encode(m)},
         {"presentation", encode(tp.model)}, {"target", encode(target)},
         {"target_in_presentation", encode(mapped)}};
  j["admissible"] = json::array();
  j["violating"] = json::array();
  for (const Decomposition& d : set.admissible) j["admissible"].push_back(encode(d));
  for (const Decomposition& d : set.violating) j["violating"].push_back(encode(d));
  j["citations"] = citations(
      {{"parts", "Gromov compactness: a limit of curves in class A is a union of simple curves whose "
                 "classes, with multiplicity, add up to A and have positive area"},
       {"filter", "adjunction 2g_v = 2(p-1)(q-1) - r(r-1) >= 0, p >= 0, p = 0 only for F, F-E, E, "
                  "r in {0,1} when p = 1, p >= r >= 0 otherwise"},
       {"admissible", "distinct components of a cusp-curve intersect nonnegatively"}});

  std::ostringstream t;
  t << "target " << class_text(target);
  if (m.i() == 1) t << " -> " << class_text(mapped) << " in " << describe(tp.model);
  t << "\n";
  auto list = [&](const char* title, const std::vector<Decomposition>& ds) {
    t << title << " (" << ds.size() << ")\n";
    for (const Decomposition& d : ds) {
      t << " ";
      for (std::size_t k = 0; k < d.parts.size(); ++k)
        t << (k ? " + " : " ") << d.parts[k].mult << "x" << class_text(d.parts[k].cls);
      t << "\n";
    }
  };
  list("admissible", set.admissible);
  list("intersection-violating", set.violating);
  emit(out, format, j, t.str());
  return kOk;
}

int cmd_inflate(const ModelArgs& from_args, const ModelArgs& to_args, const std::string& format,
                std::ostream& out) {
  const RuledModel from = make_model(from_args), to = make_model(to_args);
  json j{{"schema", kSchema}, {"command", "inflate"}, {"from", encode(from)}, {"to", encode(to)}};
  std::ostringstream t;
  try {
    const std::vector<InflationStep> path = inflation_path(from, to);
    const FormClass start = form_class(trivial_presentation(from).model);
    const FormClass target = form_class(trivial_presentation(to).model);
    const FormClass end = replay(start, path);
    auto areas = [](const FormClass& w) { return json::array({encode(w.mu()), encode(w.f()), encode(w.e())}); };
    j["reachable"] = true;
    j["path"] = json::array();
    for (const InflationStep& s : path) j["path"].push_back(encode(s));
    j["replay"] = {{"start", areas(start)}, {"end", areas(end)}, {"target", areas(target)},
                   {"matches", end == target}};
    j["citations"] = citations(
        {{"path", "inflating along a J-curve Z with Z.Z >= 0 adds t PD(Z) and keeps J tame"},
         {"reachable", "same ell and same regime give the same space of tamed almost complex structures"}});
    t << "reachable: " << path.size() << " step(s)\n";
    for (const InflationStep& s : path)
      t << "  along " << class_text(s.along) << " t=" << format_rational(s.t)
        << " rescale=" << format_rational(s.rescale) << "  [" << s.why << "]\n";
    t << "replay: (" << format_rational(start.mu()) << ", 1, " << format_rational(start.e()) << ") -> ("
      << format_rational(end.mu()) << ", " << format_rational(end.f()) << ", " << format_rational(end.e())
      << ") " << (end == target ? "matches target" : "DOES NOT match target") << "\n";
    emit(out, format, j, t.str());
    return end == target ? kOk : kInvariant;
  } catch (const Unreachable& e) {
    j["reachable"] = false;
    j["certificate"] = {{"criterion", e.criterion() == Unreachable::Criterion::EllMismatch ? "ell differs"
                                                                                           : "regime differs"},
                        {"detail", e.what()}};
    t << "refused: " << e.what() << "\n";
    emit(out, format, j, t.str());
    return kRefused;
  }
}

int cmd_cp2(const std::vector<std::string>& caps_text, const std::string& format, std::ostream& out) {
  std::vector<Rational> caps;
  for (const std::string& s : caps_text) caps.push_back(parse_rational(s));
  const Cp2Report r = cp2_embedding_report(caps);
  json dict = json::array();
  for (const auto& [name, cls] : r.dictionary) dict.push_back({{"cp2", name}, {"class", encode(cls)}});
  json j{{"schema", kSchema}, {"command", "cp2"}, {"type", to_string(r.embedding.type)},
         {"space", r.embedding.space}, {"model", encode(r.model)}, {"dictionary", dict}};
  j["citations"] = citations(
      {{"space", caps.size() == 1 ? "blowing up one ball of CP^2 gives the twisted bundle; embeddings ~ CP^2"
                                  : "blowing up two balls of CP^2 gives the one-point blow-up of S^2 x S^2; "
                                    "embeddings ~ ordered configurations F(CP^2, 2)"},
       {"model", caps.size() == 1 ? "mu = delta/(1-delta) after rescaling the fiber to area 1"
                                  : "mu = (1-d2)/(1-d1), c = (1-d1-d2)/(1-d1) with d1 >= d2"}});
  std::ostringstream t;
  t << "embedding space ~ " << r.embedding.space << "\nmodel " << describe(r.model) << "\n";
  for (const auto& [name, cls] : r.dictionary) t << "  " << name << " -> " << class_text(cls) << "\n";
  emit(out, format, j, t.str());
  return kOk;
}

int cmd_hilbert(int i, std::int64_t ell, std::optional<int> requested, const std::string& format, std::ostream& out) {
  const int cap = max_degree_cap();
  const int max_degree = requested.value_or(cap);
  if (max_degree < 0) throw DomainError("max-degree must be nonnegative");
  if (max_degree > cap)
    throw DomainError("max-degree " + std::to_string(max_degree) + " exceeds RULED4_MAX_DEGREE = " +
                      std::to_string(cap));
  const RingPresentation ring = bsymp_base_ring(i, ell);
  const GradedModule series = hilbert_series(ring, max_degree);
  const Relation& rel = ring.relations.front();
  json coeffs = json::array();
  for (int k = 0; k <= max_degree; ++k) coeffs.push_back(series.rank(k));
  json j{{"schema", kSchema}, {"command", "hilbert"}, {"i", i}, {"ell", ell}, {"max_degree", max_degree},
         {"relation", {{"text", format_polynomial(rel.expanded)}, {"degree", rel.degree}}},
         {"series", encode(series)}, {"coefficients", coeffs}};
  j["citations"] = citations({{"ring", "H*(BSymp(M^i_mu); Q) = Q[T,X,Y]/R_l, |T| = 2, |X| = |Y| = 4"},
                              {"series", "single relation of degree d: (1-t^d)/((1-t^2)(1-t^4)^2)"}});
  std::ostringstream t;
  t << "R = " << format_polynomial(rel.expanded) << "  (degree " << rel.degree << ")\n"
    << "series = " << series.closed_form.value_or("") << "\n";
  for (int k = 0; k <= max_degree; ++k) t << "  " << k << "\t" << series.rank(k) << "\n";
  emit(out, format, j, t.str());
  return kOk;
}

int cmd_map_classes(const std::string& class_arg, const std::string& direction, const std::string& format,
                    std::ostream& out) {
  const HClass a = parse_class(class_arg);
  Direction d;
  if (direction == "oneToZero") d = Direction::OneToZero;
  else if (direction == "zeroToOne") d = Direction::ZeroToOne;
  else throw DomainError("direction must be oneToZero or zeroToOne");
  const Basis src = d == Direction::OneToZero ? Basis::Twisted : Basis::Trivial;
  const Basis dst = d == Direction::OneToZero ? Basis::Trivial : Basis::Twisted;
  const HClass b = map_classes(a, d);
  json j{{"schema", kSchema}, {"command", "map-classes"}, {"direction", direction}, {"input", encode(a)},
         {"output", encode(b)},
         {"self_intersection", {self_intersection(a, src), self_intersection(b, dst)}},
         {"chern", {chern(a, src), chern(b, dst)}}};
  j["citations"] = citations({{"output", "F1 <-> F, B1 <-> B - E, E1 <-> F - E"}});
  std::ostringstream t;
  t << class_text(a) << " -> " << class_text(b) << "  self-intersection " << self_intersection(b, dst)
    << ", c1 " << chern(b, dst) << "\n";
  emit(out, format, j, t.str());
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of one-point blow-ups of rational ruled 4-manifolds", "ruled4"};
  app.require_subcommand(1);
  std::string format = "table";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  };

  ModelArgs model, model2;
  std::string class_arg, direction = "oneToZero";
  std::vector<std::string> caps;
  int hilbert_i = 0;
  std::int64_t ell = 0;
  std::optional<int> max_degree;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one (i, mu, c)");
  analyze_cmd->add_option("--i", model.i, "bundle type 0 or 1")->required();
  add_model_options(analyze_cmd, model);
  add_format(analyze_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "cusp-curve decompositions of a class");
  decompose_cmd->add_option("--i", model.i, "bundle type 0 or 1")->default_val(0);
  add_model_options(decompose_cmd, model);
  decompose_cmd->add_option("--class", class_arg, "target class p,q,r (pB + qF - rE)")->required();
  add_format(decompose_cmd);

  auto* inflate_cmd = app.add_subcommand("inflate", "inflation path between two capacities");
  inflate_cmd->add_option("--i", model.i, "bundle type 0 or 1")->default_val(0);
  add_model_options(inflate_cmd, model, "1");
  add_model_options(inflate_cmd, model2, "2");
  add_format(inflate_cmd);

  auto* cp2_cmd = app.add_subcommand("cp2", "embeddings of one or two balls in CP^2");
  cp2_cmd->add_option("caps", caps, "ball capacities (line has area 1)")->required()->expected(1, 2);
  add_format(cp2_cmd);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of H*(BSymp(M^i_mu))");
  hilbert_cmd->add_option("--i", hilbert_i, "bundle type 0 or 1")->required();
  hilbert_cmd->add_option("--ell", ell, "ell")->required();
  hilbert_cmd->add_option("--max-degree", max_degree, "last degree (default RULED4_MAX_DEGREE or 40)");
  add_format(hilbert_cmd);

  auto* map_cmd = app.add_subcommand("map-classes", "twisted <-> trivial basis correspondence");
  map_cmd->add_option("--class", class_arg, "class p,q,r")->required();
  map_cmd->add_option("--direction", direction, "oneToZero or zeroToOne");
  add_format(map_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kDomainError;
  }

  model2.i = model.i;
  try {
    if (*analyze_cmd) return cmd_analyze(model, format, out);
    if (*decompose_cmd) return cmd_decompose(model, class_arg, format, out);
    if (*inflate_cmd) return cmd_inflate(model, model2, format, out);
    if (*cp2_cmd) return cmd_cp2(caps, format, out);
    if (*hilbert_cmd) return cmd_hilbert(hilbert_i, ell, max_degree, format, out);
    if (*map_cmd) return cmd_map_classes(class_arg, direction, format, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kDomainError;
}

}  // namespace ruled4::cli
