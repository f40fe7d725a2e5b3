// Rational homotopy and cohomology of symplectomorphism groups, their
// classifying spaces, and spaces of symplectic ball embeddings.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ruled4/homology_lattice.hpp"

namespace ruled4 {

/// Degree -> rank over Q.  Zero ranks are never stored.
struct GradedModule {
  std::map<int, std::int64_t> ranks;
  std::optional<std::string> closed_form;

  GradedModule() = default;
  GradedModule(std::initializer_list<std::pair<const int, std::int64_t>> init,
               std::optional<std::string> closed = std::nullopt);

  std::int64_t rank(int degree) const;
  void add(int degree, std::int64_t r);
  int max_degree() const;
  bool operator==(const GradedModule& o) const = default;
};

std::string format_ranks(const GradedModule& g);

/// Exponents of T, X, Y; the map order (descending) is lex with T > X > Y.
using Monomial = std::array<int, 3>;
using Polynomial = std::map<Monomial, Integer, std::greater<>>;

std::string format_polynomial(const Polynomial& p);

struct Generator {
  std::string name;
  int degree = 0;

  bool operator==(const Generator&) const = default;
};

/// T^2 + x X - y Y.
struct RelationFactor {
  Integer x;
  Integer y;

  bool operator==(const RelationFactor&) const = default;
};

struct Relation {
  bool t_factor = false;
  std::vector<RelationFactor> factors;
  Polynomial expanded;
  int degree = 0;

  bool operator==(const Relation&) const = default;
};

enum class RingKind { FreeGradedCommutative, Quotient };

struct RingPresentation {
  RingKind kind = RingKind::Quotient;
  std::vector<Generator> generators;
  std::vector<Relation> relations;

  bool operator==(const RingPresentation&) const = default;
};

/// Q[T, X, Y]/(R), |T| = 2, |X| = |Y| = 4, with
/// R = T (T^2+X-Y)(T^2+16X-4Y)...(T^2+l^4 X-l^2 Y) for the trivial bundle and
/// R = (T^2+X-Y)(T^2+81X-9Y)...(T^2+(2l+1)^4 X-(2l+1)^2 Y) for the twisted one.
RingPresentation bsymp_base_ring(int i, std::int64_t ell);

/// Poincare series coefficients 0..max_degree.  Odd generators are
/// exterior, even ones polynomial, and each relation of degree d is a
/// nonzerodivisor contributing (1 - t^d).
std::vector<Integer> poincare_coefficients(const RingPresentation& ring, int max_degree);

GradedModule hilbert_series(const RingPresentation& ring, int max_degree);

struct GroupHomotopy {
  GradedModule ranks;
  /// Components, when not connected ("Z/2").
  std::optional<std::string> pi0;
  std::string description;

  bool operator==(const GroupHomotopy&) const = default;
};

/// Symp of the unblown M^i_mu.
GroupHomotopy symp_base_homotopy(const RuledModel& m);

/// Symp of the blow-up (equivalently Symp of M^i_mu fixing a point, or of
/// the c-related manifold when the ball is big).
GroupHomotopy symp_blowup_homotopy(const RuledModel& m);

struct BlowupCohomology {
  /// Lambda(a1, a2, a3) (x) Q[eps].
  RingPresentation ring;
  int epsilon_degree = 0;
  std::vector<Integer> betti;

  bool operator==(const BlowupCohomology&) const = default;
};

BlowupCohomology symp_blowup_cohomology(const RuledModel& m, int max_degree);

/// Which unblown group the blow-up's Symp reduces to: (i, ell) of M^i_mu for
/// a small ball, of the c-related manifold for a big one.
std::pair<int, std::int64_t> reduced_base(const RuledModel& m);

/// H*(BSymp) of the blow-up: base series times (1 + 2t^2 + t^4).
GradedModule bsymp_blowup_series(const RuledModel& m, int max_degree);

/// Rational homotopy of the 4-manifold M^i_mu.
GradedModule manifold_homotopy();

std::string manifold_name(int i);

enum class EmbeddingType { EquivalentToManifold, GradedRanks, EquivalentToConfigurationSpace };

std::string to_string(EmbeddingType t);

struct EmbeddingReport {
  EmbeddingType type = EmbeddingType::EquivalentToManifold;
  std::string space;
  GradedModule ranks;
  /// Homotopy equivalent to a finite CW complex.
  bool finite = true;

  bool operator==(const EmbeddingReport&) const = default;
};

/// Space of symplectically embedded balls of capacity c in M^i_mu.
EmbeddingReport embedding_space_homotopy(const RuledModel& m);

struct Cp2Report {
  EmbeddingReport embedding;
  RuledModel model;
  /// CP^2 classes (line L, exceptional spheres Sigma_k) in the model's basis.
  std::vector<std::pair<std::string, HClass>> dictionary;
};

/// One or two balls in CP^2 (line of area 1), reduced to a ruled model.
Cp2Report cp2_embedding_report(std::vector<Rational> capacities);

enum class SequenceMap { Inclusion, Projection, Boundary };

/// Asserted rank of one map of the sequence, e.g. the boundary
/// pi_3(base) -> pi_2(fiber) being an isomorphism.
struct RankHint {
  SequenceMap map;
  int degree;
  std::int64_t rank;
};

struct SequenceSegment {
  int degree = 0;
  std::int64_t fiber = 0, total = 0, base = 0;
  /// pi_n(fiber) -> pi_n(total), pi_n(total) -> pi_n(base),
  /// pi_n(base) -> pi_{n-1}(fiber).
  std::int64_t rank_inclusion = 0, rank_projection = 0, rank_boundary = 0;
  bool exact = true;
};

struct ExactSequenceCheck {
  bool feasible = true;
  std::optional<int> first_inconsistent_degree;
  std::vector<SequenceSegment> segments;
  bool hints_consistent = true;

  std::int64_t rank(SequenceMap map, int degree) const;
};

/// Rank feasibility of the long exact homotopy sequence of
/// fiber -> total -> base, read down to pi_1.  Ranks of all maps are forced
/// from the top degree downward.
ExactSequenceCheck check_fibration_sequence(const GradedModule& fiber, const GradedModule& total,
                                            const GradedModule& base,
                                            const std::vector<RankHint>& hints = {});

struct FibrationTriple {
  GradedModule fiber, total, base;
  /// The unblown manifold whose point stabilizer the blow-up's Symp reduces to.
  RuledModel reduced;
};

/// Symp(blow-up) -> Symp(M) -> M, with M = M^i_mu for a small ball and the
/// c-related manifold for a big one.  Not defined in the special case.
FibrationTriple fibration_triple(const RuledModel& m);

enum class SamelsonFlag { AllTrivial, NontrivialDegree2 };

std::string to_string(SamelsonFlag f);

/// Samelson products in pi_*(Symp) of the trivial-bundle blow-up.
SamelsonFlag samelson_flag(const RuledModel& m);

struct IntegralFacts {
  bool torsion_free_direct = false;
  std::string torsion_free;
  std::string pi1;
  std::string loop_space_note;

  bool operator==(const IntegralFacts&) const = default;
};

IntegralFacts integral_facts(const RuledModel& m);

}  // namespace ruled4
