#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace fuzzysg;
using namespace fuzzysg::testing;

namespace {

  FuzzySubset fz(FiniteSemigroup const& S, level_t k, std::vector<level_t> v) {
    return FuzzySubset(S, ValueChain(k), std::move(v));
  }

  ProductRegion region(FiniteSemigroup const& S, level_t k,
                       std::vector<std::pair<element_t, level_t>> const& pairs) {
    ProductRegion out(S, ValueChain(k));
    for (auto [a, t] : pairs) {
      out.insert(a, t);
    }
    return out;
  }

}  // namespace

TEST(GraphRegion, Examples) {
  auto const lz = LZ(2);
  EXPECT_EQ(graph_region(fz(lz, 2, {2, 1})).to_string(),
            "(0,0) (0,1) (0,2) (1,0) (1,1)");
  EXPECT_EQ(graph_region(FuzzySubset::constant(lz, ValueChain(2), 0)),
            region(lz, 2, {{0, 0}, {1, 0}}));
  auto const e = trivial();
  EXPECT_EQ(graph_region(fz(e, 2, {1})).to_string(), "(0,0) (0,1)");
}

TEST(GraphRegion, FuzzySubsemigroupGivesClosedRegion) {
  for (auto const& S : small_semigroups(3)) {
    ValueChain const chain(2);
    auto const       P = product_with_chain(S, chain, true);
    for (auto const& f : enumerate_fuzzy_subsets(S, chain, FuzzyFilter::none)) {
      EXPECT_EQ(is_fuzzy_subsemigroup(f),
                is_subsemigroup(P.semigroup(), graph_region(f).as_subset()));
    }
  }
}

TEST(Conditions, SubsemigroupExamples) {
  auto const lz = LZ(2);
  auto const single = region(lz, 2, {{0, 1}});
  auto const c      = region_conditions(single, RegionKind::subsemigroup);
  EXPECT_TRUE(c.closed);
  EXPECT_FALSE(c.projection);
  EXPECT_FALSE(c.down_closed);
  EXPECT_FALSE(check_s_conditions(single));
  EXPECT_TRUE(check_s_conditions(graph_region(fz(lz, 2, {2, 1}))));
  EXPECT_FALSE(check_s_conditions(ProductRegion(lz, ValueChain(2))));
}

TEST(Conditions, QuasiIdealExamples) {
  auto const z2 = Z(2);
  EXPECT_TRUE(check_q_conditions(
      graph_region(FuzzySubset::constant(z2, ValueChain(1), 1))));
  auto const sigma = region(z2, 1, {{0, 0}, {1, 0}, {1, 1}});
  EXPECT_FALSE(region_conditions(sigma, RegionKind::quasi_ideal).dominance);
  EXPECT_FALSE(check_q_conditions(sigma));
}

TEST(Conditions, IdealTransfer) {
  for (auto const& S : small_semigroups(3)) {
    ValueChain const chain(static_cast<level_t>(S.order()));
    for (auto const& f : enumerate_fuzzy_subsets(S, chain, FuzzyFilter::none)) {
      auto const g = graph_region(f);
      ASSERT_EQ(is_fuzzy_subsemigroup(f), check_s_conditions(g)) << f.to_string();
      ASSERT_EQ(is_fuzzy_left_ideal(f), check_l_conditions(g)) << f.to_string();
      ASSERT_EQ(is_fuzzy_right_ideal(f), check_r_conditions(g)) << f.to_string();
      ASSERT_EQ(is_fuzzy_quasi_ideal(f), check_q_conditions(g))
          << format_table(S) << f.to_string();
    }
  }
}

TEST(RegionToFuzzy, Examples) {
  auto const lz    = LZ(2);
  auto const sigma = region_to_fuzzy(region(lz, 2, {{0, 1}}));
  EXPECT_EQ(values(sigma), (std::vector<level_t>{1, 0}));
  EXPECT_EQ(graph_region(sigma), region(lz, 2, {{0, 0}, {0, 1}, {1, 0}}));

  ProductRegion everything(lz, ValueChain(2), ElementSubset::all(6));
  EXPECT_EQ(region_to_fuzzy(everything), FuzzySubset::constant(lz, ValueChain(2), 2));

  auto const nul = NULLS(2);
  EXPECT_THROW(region_to_fuzzy(region(nul, 1, {{1, 1}})), PreconditionError);
}

TEST(RegionToFuzzy, RoundTrips) {
  for (auto const& S : small_semigroups(3)) {
    ValueChain const chain(static_cast<level_t>(S.order()));
    for (auto const& f :
         enumerate_fuzzy_subsets(S, chain, FuzzyFilter::subsemigroup)) {
      ASSERT_EQ(region_to_fuzzy(graph_region(f)), f);
    }
  }
}

TEST(RegionToFuzzy, MonotoneContainmentOverAllSubsemigroupRegions) {
  for (auto const& S : small_semigroups(2)) {
    ValueChain const chain(2);
    auto const       P    = product_with_chain(S, chain, true);
    std::size_t const bits = P.semigroup().order();
    for (auto mask : nonempty_masks(bits)) {
      ProductRegion r(S, chain, ElementSubset::from_mask(bits, mask));
      if (!is_subsemigroup(P.semigroup(), r.as_subset())) {
        continue;
      }
      auto const sigma = region_to_fuzzy(P, r);
      EXPECT_TRUE(r.as_subset().is_subset_of(graph_region(sigma).as_subset()));
      if (check_s_conditions(r)) {
        EXPECT_EQ(graph_region(sigma), r);
      }
    }
  }
}

TEST(Bijections, Examples) {
  auto const e = trivial();
  auto const r = verify_bijections(e, ValueChain(1));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.exhaustive_regions);
  EXPECT_EQ(r.families[0].fuzzy_count, 2U);

  auto const lz = verify_bijections(LZ(2), ValueChain(2));
  EXPECT_TRUE(lz.ok()) << lz.witness;
  EXPECT_EQ(lz.families[0].fuzzy_count, lz.families[0].region_count);

  auto const nul = verify_bijections(NULLS(2), ValueChain(2));
  EXPECT_TRUE(nul.ok());
  EXPECT_EQ(nul.families[3].kind, RegionKind::quasi_ideal);
  EXPECT_TRUE(nul.families[3].ok()) << nul.families[3].witness;
}

TEST(Bijections, FiberVectorModeAgreesWithExhaustiveMode) {
  for (auto const& S : small_semigroups(2)) {
    ValueChain const chain(2);
    auto const       a = verify_bijections(S, chain);
    auto const       b = verify_bijections(S, chain, default_fuzzy_budget, 0);
    ASSERT_TRUE(a.exhaustive_regions);
    ASSERT_FALSE(b.exhaustive_regions);
    ASSERT_TRUE(a.ok() && b.ok());
    for (std::size_t i = 0; i < a.families.size(); ++i) {
      EXPECT_EQ(a.families[i].region_count, b.families[i].region_count);
    }
  }
}

TEST(Bijections, HoldOnAllOrderThreeSemigroups) {
  for (auto const& S : small_semigroups(3)) {
    auto const r = verify_bijections(S, ValueChain(static_cast<level_t>(S.order())));
    EXPECT_TRUE(r.ok()) << format_table(S) << r.witness;
  }
}

TEST(LevelComponents, ChainWithCharacteristicFamily) {
  auto const S = CHAIN(2);
  auto const Y = CHAIN(2);
  std::vector<FuzzySubset> family{fz(S, 1, {1, 0}), fz(S, 1, {0, 1})};
  auto const lc = level_components(Y, family);
  ASSERT_TRUE(lc.ok()) << lc.witness;
  ASSERT_EQ(lc.components.size(), 2U);
  // Over S x {1}, pair (a, 1) has index a.
  EXPECT_EQ(lc.components[0].carrier, ElementSubset(2, {0}));
  EXPECT_EQ(lc.components[1].carrier, ElementSubset(2, {1}));

  std::vector<FuzzySubset> two{fz(S, 2, {2, 0}), fz(S, 2, {0, 2})};
  auto const lc2 = level_components(Y, two);
  EXPECT_TRUE(lc2.ok());
  EXPECT_EQ(lc2.components.size(), 4U);
  EXPECT_EQ(lc2.decomposition->index.order(), 4U);
}

TEST(LevelComponents, SingletonIndex) {
  auto const S = LZ(2);
  std::vector<FuzzySubset> family{FuzzySubset::constant(S, ValueChain(3), 3)};
  auto const lc = level_components(trivial(), family);
  ASSERT_TRUE(lc.ok());
  auto const P = product_with_chain(S, ValueChain(3), false);
  for (auto const& c : lc.components) {
    EXPECT_EQ(c.carrier, ElementSubset(6, {P.index(0, c.level), P.index(1, c.level)}));
  }
}

TEST(LevelComponents, RejectsNonFamilies) {
  auto const S = CHAIN(2);
  std::vector<FuzzySubset> family{fz(S, 2, {2, 0}), fz(S, 2, {0, 1})};
  EXPECT_THROW(level_components(CHAIN(2), family), PreconditionError);
}

TEST(LevelComponents, FromEveryDecomposition) {
  for (auto const& S : small_semigroups(3)) {
    ValueChain const chain(2);
    for (auto const& c : semilattice_congruences(S)) {
      auto const               d = decomposition_from(S, c);
      std::vector<FuzzySubset> family;
      for (auto const& B : d.blocks) {
        family.push_back(characteristic(S, B, chain));
      }
      auto const lc = level_components(d.index, family);
      EXPECT_TRUE(lc.ok()) << format_table(S) << lc.witness;
    }
  }
}
