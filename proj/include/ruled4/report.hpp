// Aggregated analysis of one (i, mu, c) triple and the JSON encoding used by
// the command-line tool.  Every encoded rational is a "p/q" string.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ruled4/curve_enumeration.hpp"
#include "ruled4/homotopy_invariants.hpp"
#include "ruled4/inflation.hpp"

namespace ruled4 {

using json = nlohmann::json;

inline constexpr const char* kSchema = "ruled4/1";

struct Citation {
  std::string fact;
  std::string anchor;
  bool operator==(const Citation&) const = default;
};

struct AnalysisReport {
  RuledModel model;
  /// "Small", "Big", or "Special" (twisted bundle with mu < c).
  std::string regime;
  std::optional<RuledModel> c_related;
  /// Special case only: the rescaled trivial-bundle model and the scale.
  std::optional<RuledModel> normalized;
  std::optional<Rational> normalization_scale;
  std::vector<std::string> normalization_variants;
  /// In the model's own basis.
  std::vector<HClass> exceptional_classes;
  Stratification stratification;
  std::int64_t toric_count = 0;
  GroupHomotopy symp_homotopy;
  std::optional<BlowupCohomology> symp_cohomology;
  std::optional<GradedModule> bsymp_series;
  EmbeddingReport embedding_space;
  std::optional<SamelsonFlag> samelson;
  std::optional<IntegralFacts> integral;
  /// Why an optional field is null.
  std::map<std::string, std::string> unavailable;
  std::vector<Citation> citations;
  int max_degree = 0;
};

bool operator==(const AnalysisReport& a, const AnalysisReport& b);

AnalysisReport analyze(const RuledModel& m, int max_degree);

std::string render_table(const AnalysisReport& r);

json encode(const Rational& x);
json encode(const HClass& a);
json encode(const RuledModel& m);
json encode(const GradedModule& g);
json encode(const Decomposition& d);
json encode(const Stratification& s);
json encode(const InflationStep& step);
json encode(const AnalysisReport& r);

Rational decode_rational(const json& j);
HClass decode_class(const json& j);
RuledModel decode_model(const json& j);
GradedModule decode_graded(const json& j);
Decomposition decode_decomposition(const json& j);
Stratification decode_stratification(const json& j);
InflationStep decode_step(const json& j);
AnalysisReport decode_report(const json& j);

/// "p,q,r".
HClass parse_class(const std::string& text);
std::string format_class(const HClass& a);

}  // namespace ruled4
