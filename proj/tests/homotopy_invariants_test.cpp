#include <doctest.h>

#include "oracles/hilbert_oracle.hpp"
#include "oracles/sequence_oracle.hpp"
#include "ruled4/homotopy_invariants.hpp"

using namespace ruled4;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

std::vector<std::int64_t> dense(const GradedModule& g, int max_degree) {
  std::vector<std::int64_t> out(max_degree + 1, 0);
  for (int k = 0; k <= max_degree; ++k) out[k] = g.rank(k);
  return out;
}

std::vector<std::int64_t> as_int(const std::vector<Integer>& v) {
  std::vector<std::int64_t> out;
  for (const Integer& x : v) out.push_back(to_int64(x));
  return out;
}

}  // namespace

TEST_CASE("symplectomorphism groups of the unblown manifolds") {
  CHECK(symp_base_homotopy(RuledModel(0, R(3, 2))).ranks == GradedModule{{1, 1}, {3, 2}, {4, 1}});
  const GroupHomotopy mu1 = symp_base_homotopy(RuledModel(0, R(1)));
  CHECK(mu1.ranks == GradedModule{{3, 2}});
  CHECK(mu1.pi0 == "Z/2");
  CHECK(symp_base_homotopy(RuledModel(1, R(1, 2))).ranks == GradedModule{{1, 1}, {3, 1}});
  CHECK(symp_base_homotopy(RuledModel(1, R(3, 2))).ranks == GradedModule{{1, 1}, {3, 2}, {6, 1}});
  CHECK(symp_base_homotopy(RuledModel(0, R(7, 2))).ranks == GradedModule{{1, 1}, {3, 2}, {12, 1}});
  CHECK_THROWS_AS(symp_base_homotopy(RuledModel(0, R(2), R(1, 2))), DomainError);
}

TEST_CASE("symplectomorphism groups of the blow-up") {
  CHECK(symp_blowup_homotopy(RuledModel(0, R(3, 2), R(1, 4))).ranks == GradedModule{{1, 3}, {4, 1}});
  CHECK(symp_blowup_homotopy(RuledModel(0, R(3, 2), R(3, 4))).ranks == GradedModule{{1, 3}, {2, 1}});
  const GroupHomotopy mu1 = symp_blowup_homotopy(RuledModel(0, R(1), R(1, 2)));
  CHECK(mu1.ranks == GradedModule{{1, 2}});
  CHECK(mu1.pi0 == "Z/2");
  CHECK(symp_blowup_homotopy(RuledModel(1, R(1, 4), R(1, 2))).ranks == GradedModule{{1, 2}});

  for (int i : {0, 1})
    for (std::int64_t l = (i == 0 ? 1 : 0); l <= 3; ++l)
      for (bool small : {true, false}) {
        const Rational mu = l + (l == 0 ? R(3, 4) : R(1, 2));
        const RuledModel probe(i, mu);
        const Rational c = small ? Rational(probe.lambda() / 2) : Rational((probe.lambda() + 1) / 2);
        if (l == 0 && c > mu) continue;
        const int degree = static_cast<int>(small ? 4 * l + 2 * i : 4 * l + 2 * i - 2);
        INFO("i=" << i << " l=" << l << " small=" << small);
        CHECK(symp_blowup_homotopy(RuledModel(i, mu, c)).ranks == GradedModule{{1, 3}, {degree, 1}});
      }
}

TEST_CASE("cohomology of the blow-up group") {
  const BlowupCohomology big = symp_blowup_cohomology(RuledModel(0, R(3, 2), R(3, 4)), 4);
  CHECK(big.epsilon_degree == 2);
  CHECK(as_int(big.betti) == std::vector<std::int64_t>{1, 3, 4, 4, 4});
  const BlowupCohomology small = symp_blowup_cohomology(RuledModel(0, R(3, 2), R(1, 4)), 4);
  CHECK(small.epsilon_degree == 4);
  CHECK(as_int(small.betti) == std::vector<std::int64_t>{1, 3, 3, 1, 1});
  CHECK(small.ring.kind == RingKind::FreeGradedCommutative);
  CHECK_THROWS_AS(symp_blowup_cohomology(RuledModel(0, R(1), R(1, 2)), 4), DomainError);

  // (1+t)^3 = (1 - t^d) P(t): successive differences are binomials with
  // vanishing alternating sum
  for (const Rational& mu : {R(3, 2), R(5, 2), R(13, 4)})
    for (const Rational& c : {R(1, 8), R(7, 8)}) {
      const BlowupCohomology h = symp_blowup_cohomology(RuledModel(0, mu, c), 30);
      CHECK(h.betti[0] == 1);
      Integer alternating = 0;
      for (int k = 0; k <= 30; ++k) {
        const Integer diff = h.betti[k] - (k >= h.epsilon_degree ? h.betti[k - h.epsilon_degree] : Integer(0));
        const std::int64_t binom[] = {1, 3, 3, 1};
        CHECK(diff == (k <= 3 ? binom[k] : 0));
        alternating += (k % 2 ? -1 : 1) * diff;
      }
      CHECK(alternating == 0);
    }
}

TEST_CASE("classifying space presentations") {
  const RingPresentation r01 = bsymp_base_ring(0, 1);
  REQUIRE(r01.relations.size() == 1);
  CHECK(r01.relations[0].t_factor);
  CHECK(r01.relations[0].factors == std::vector<RelationFactor>{{1, 1}});
  CHECK(r01.relations[0].degree == 6);
  CHECK(r01.generators == std::vector<Generator>{{"T", 2}, {"X", 4}, {"Y", 4}});

  const RingPresentation r10 = bsymp_base_ring(1, 0);
  CHECK_FALSE(r10.relations[0].t_factor);
  CHECK(r10.relations[0].factors == std::vector<RelationFactor>{{1, 1}});
  CHECK(r10.relations[0].degree == 4);

  const RingPresentation r02 = bsymp_base_ring(0, 2);
  CHECK(r02.relations[0].factors == std::vector<RelationFactor>{{1, 1}, {16, 4}});
  CHECK(r02.relations[0].degree == 10);
  // T (T^2 + X - Y) = T^3 + T X - T Y
  CHECK(r01.relations[0].expanded == Polynomial{{{3, 0, 0}, 1}, {{1, 1, 0}, 1}, {{1, 0, 1}, -1}});

  const RingPresentation r12 = bsymp_base_ring(1, 2);
  CHECK(r12.relations[0].factors == std::vector<RelationFactor>{{1, 1}, {81, 9}, {625, 25}});
  CHECK(r12.relations[0].degree == 12);

  for (int i : {0, 1})
    for (std::int64_t l = (i == 0 ? 1 : 0); l <= 3; ++l)
      CHECK(bsymp_base_ring(i, l).relations[0].degree == (i == 0 ? 4 * l + 2 : 4 * (l + 1)));
  CHECK_THROWS_AS(bsymp_base_ring(0, 0), DomainError);
}

TEST_CASE("Hilbert series") {
  const GradedModule h = hilbert_series(bsymp_base_ring(0, 1), 8);
  CHECK(dense(h, 8) == std::vector<std::int64_t>{1, 0, 1, 0, 3, 0, 2, 0, 5});
  CHECK(h.closed_form == "(1-t^6)/((1-t^2)(1-t^4)^2)");

  for (int i : {0, 1})
    for (std::int64_t l = (i == 0 ? 1 : 0); l <= (i == 0 ? 3 : 2); ++l) {
      const RingPresentation ring = bsymp_base_ring(i, l);
      INFO("i=" << i << " l=" << l);
      CHECK(dense(hilbert_series(ring, 40), 40) == oracle::hilbert_by_monomials(ring.relations[0].expanded, 40));
    }
}

TEST_CASE("blown-up classifying space series") {
  const GradedModule g = bsymp_blowup_series(RuledModel(0, R(3, 2), R(3, 4)), 40);
  for (int k = 0; k <= 40; ++k) CHECK(g.rank(k) == (k % 2 == 0 ? k + 1 : 0));

  for (const RuledModel& m : {RuledModel(0, R(3, 2), R(1, 4)), RuledModel(1, R(9, 4), R(1, 8)),
                              RuledModel(0, R(11, 4), R(7, 8))}) {
    auto [i, l] = reduced_base(m);
    const std::vector<Integer> base = poincare_coefficients(bsymp_base_ring(i, l), 40);
    const GradedModule blown = bsymp_blowup_series(m, 40);
    for (int k = 0; k <= 40; ++k) {
      Integer want = base[k];
      if (k >= 2) want += 2 * base[k - 2];
      if (k >= 4) want += base[k - 4];
      CHECK(blown.rank(k) == to_int64(want));
    }
  }
  CHECK(reduced_base(RuledModel(0, R(3, 2), R(3, 4))) == std::pair<int, std::int64_t>{1, 0});
  CHECK(reduced_base(RuledModel(0, R(3, 2), R(1, 4))) == std::pair<int, std::int64_t>{0, 1});
}

TEST_CASE("embedding spaces") {
  const EmbeddingReport big = embedding_space_homotopy(RuledModel(0, R(3, 2), R(3, 4)));
  CHECK(big.type == EmbeddingType::GradedRanks);
  CHECK(big.ranks == GradedModule{{2, 2}, {3, 3}, {4, 1}});
  CHECK_FALSE(big.finite);

  const EmbeddingReport small = embedding_space_homotopy(RuledModel(0, R(3, 2), R(1, 4)));
  CHECK(small.type == EmbeddingType::EquivalentToManifold);
  CHECK(small.space == "S^2 x S^2");

  const EmbeddingReport twisted = embedding_space_homotopy(RuledModel(1, R(1, 4), R(1, 2)));
  CHECK(twisted.type == EmbeddingType::EquivalentToManifold);
  CHECK(twisted.space == "CP^2 # -CP^2");

  // the type changes exactly at c = lambda
  for (const Rational& mu : {R(5, 4), R(3, 2), R(9, 4), R(3)}) {
    const Rational lambda = RuledModel(0, mu).lambda();
    for (int k = 1; k < 50; ++k) {
      const Rational c(k, 50);
      CHECK((embedding_space_homotopy(RuledModel(0, mu, c)).type == EmbeddingType::EquivalentToManifold) ==
            (c < lambda));
    }
  }
}

TEST_CASE("balls in the projective plane") {
  const Cp2Report one = cp2_embedding_report({R(1, 3)});
  CHECK(one.embedding.space == "CP^2");
  CHECK(one.model == RuledModel(1, R(1, 2)));

  const Cp2Report two = cp2_embedding_report({R(1, 4), R(1, 2)});
  CHECK(two.embedding.type == EmbeddingType::EquivalentToConfigurationSpace);
  CHECK(two.embedding.space == "F(CP^2, 2)");
  CHECK(two.model == RuledModel(0, R(3, 2), R(1, 2)));
  // each dictionary class is an exceptional sphere with the right area
  const std::vector<Rational> areas = {1 - R(1, 2) - R(1, 4), R(1, 2), R(1, 4)};
  for (std::size_t k = 0; k < two.dictionary.size(); ++k) {
    CHECK(is_exceptional(two.dictionary[k].second));
    CHECK(area(two.dictionary[k].second, two.model) * (1 - R(1, 2)) == areas[k]);
  }

  try {
    cp2_embedding_report({R(1, 2), R(1, 2)});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "delta1 + delta2 < 1 violated");
  }
  CHECK_THROWS_AS(cp2_embedding_report({}), DomainError);
  CHECK_THROWS_AS(cp2_embedding_report({R(1, 5), R(1, 5), R(1, 5)}), DomainError);
}

TEST_CASE("fibration sequences") {
  // small ball: stabilizer -> Symp(M) -> M with the connecting map an isomorphism
  const FibrationTriple t = fibration_triple(RuledModel(0, R(3, 2), R(1, 4)));
  CHECK(t.fiber == GradedModule{{1, 3}, {4, 1}});
  CHECK(t.total == GradedModule{{1, 1}, {3, 2}, {4, 1}});
  const std::vector<RankHint> iso = {{SequenceMap::Boundary, 2, 2}};
  const ExactSequenceCheck small = check_fibration_sequence(t.fiber, t.total, t.base, iso);
  CHECK(small.feasible);
  CHECK(small.hints_consistent);
  CHECK(small.rank(SequenceMap::Boundary, 2) == 2);
  CHECK(check_fibration_sequence(t.fiber, t.total, t.base).feasible);
  CHECK_FALSE(check_fibration_sequence(t.fiber, t.total, t.base, {{SequenceMap::Boundary, 2, 1}}).hints_consistent);

  const GradedModule same{{2, 1}, {5, 3}};
  const ExactSequenceCheck identity = check_fibration_sequence(GradedModule{}, same, same);
  CHECK(identity.feasible);
  CHECK(identity.rank(SequenceMap::Projection, 5) == 3);

  const GradedModule fiber{{1, 3}, {2, 1}}, total{{1, 1}, {3, 2}, {4, 1}};
  const ExactSequenceCheck bad = check_fibration_sequence(fiber, total, manifold_homotopy());
  CHECK_FALSE(bad.feasible);
  CHECK(bad.first_inconsistent_degree == 4);
  const GradedModule embeddings = embedding_space_homotopy(RuledModel(0, R(3, 2), R(3, 4))).ranks;
  CHECK(check_fibration_sequence(fiber, total, embeddings).feasible);
}

TEST_CASE("forced ranks agree with exhaustive search") {
  std::vector<GradedModule> pool = {GradedModule{},
                                    GradedModule{{1, 3}, {4, 1}},
                                    GradedModule{{1, 3}, {2, 1}},
                                    GradedModule{{1, 1}, {3, 2}, {4, 1}},
                                    GradedModule{{2, 2}, {3, 2}},
                                    GradedModule{{2, 2}, {3, 3}, {4, 1}},
                                    GradedModule{{1, 2}},
                                    GradedModule{{1, 1}, {3, 1}},
                                    GradedModule{{1, 2}, {2, 1}, {3, 1}}};
  for (const auto& f : pool)
    for (const auto& t : pool)
      for (const auto& b : pool) {
        std::map<int, oracle::Ranks> found;
        const bool want = oracle::exact_sequence_exists(f.ranks, t.ranks, b.ranks, &found);
        const ExactSequenceCheck got = check_fibration_sequence(f, t, b);
        CHECK(got.feasible == want);
        if (want)
          for (const auto& [n, r] : found) {
            CHECK(got.rank(SequenceMap::Inclusion, n) == r.inclusion);
            CHECK(got.rank(SequenceMap::Projection, n) == r.projection);
            CHECK(got.rank(SequenceMap::Boundary, n) == r.boundary);
          }
      }
}

TEST_CASE("fibration triangle is consistent off the special case") {
  for (int i : {0, 1})
    for (const Rational& mu : {R(1), R(5, 4), R(3, 2), R(2), R(9, 4), R(3), R(15, 4)})
      for (int k = 1; k < 16; ++k) {
        const Rational c(k, 16);
        if (c > mu || (i == 1 && mu <= c)) continue;
        if (i == 1 && mu <= 1) continue;
        const FibrationTriple t = fibration_triple(RuledModel(i, mu, c));
        INFO("i=" << i << " mu=" << mu << " c=" << c);
        CHECK(check_fibration_sequence(t.fiber, t.total, t.base).feasible);
      }
  CHECK_THROWS_AS(fibration_triple(RuledModel(1, R(1, 4), R(1, 2))), DomainError);
}

TEST_CASE("Samelson products and integral facts") {
  CHECK(samelson_flag(RuledModel(0, R(3, 2), R(3, 4))) == SamelsonFlag::NontrivialDegree2);
  CHECK(samelson_flag(RuledModel(0, R(3, 2), R(1, 4))) == SamelsonFlag::AllTrivial);
  CHECK(samelson_flag(RuledModel(0, R(5, 2), R(3, 4))) == SamelsonFlag::AllTrivial);

  const IntegralFacts direct = integral_facts(RuledModel(0, R(3, 2), R(3, 4)));
  CHECK(direct.torsion_free_direct);
  CHECK(direct.torsion_free == "true (direct)");
  CHECK(direct.pi1 == "Z^3");
  const IntegralFacts stable = integral_facts(RuledModel(0, R(5, 2), R(1, 4)));
  CHECK(stable.torsion_free == "by-stability annotation");
  CHECK(stable.pi1 == "Z^3");
  CHECK_THROWS_AS(integral_facts(RuledModel(0, R(1), R(1, 2))), DomainError);
}
