#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "test_support.hpp"

using namespace fuzzysg;
using namespace fuzzysg::testing;

namespace {

  bool all_conditions(TheoremVerdict const& v, bool expected) {
    return std::all_of(v.conditions().begin(), v.conditions().end(),
                       [&](auto const& c) { return c.second == expected; });
  }

  nlohmann::json without_millis(nlohmann::json j) {
    j["summary"].erase("millis");
    for (auto& item : j["items"]) {
      item.erase("millis");
    }
    return j;
  }

}  // namespace

TEST(Verdict, EquivalenceAndWitness) {
  TheoremVerdict v("demo", LZ(2), 2, VerdictKind::equivalence);
  v.condition("a", true);
  v.condition("b", true);
  EXPECT_TRUE(v.equivalent());
  EXPECT_FALSE(v.witness().has_value());
  v.condition("c", false, "why");
  EXPECT_FALSE(v.equivalent());
  ASSERT_TRUE(v.witness().has_value());
  EXPECT_EQ((*v.witness())["c"], "why");
  auto const j = v.to_json(false);
  EXPECT_EQ(j["theorem"], "demo");
  EXPECT_EQ(j["conditions"]["c"], false);
  EXPECT_FALSE(j.contains("millis"));
  EXPECT_EQ(j["semigroup_hash"], semigroup_id(LZ(2)));
}

TEST(Verdict, AllFalseIsEquivalentButIdentityIsNot) {
  TheoremVerdict e("demo", LZ(2), 1, VerdictKind::equivalence);
  e.condition("a", false);
  e.condition("b", false);
  EXPECT_TRUE(e.equivalent());
  TheoremVerdict i("demo", LZ(2), 1, VerdictKind::identity);
  i.condition("a", false);
  EXPECT_FALSE(i.equivalent());
}

TEST(Verdict, SideCheckFailureFails) {
  TheoremVerdict v("demo", LZ(2), 1, VerdictKind::equivalence);
  v.condition("a", true);
  v.side_check("extra", false, "detail");
  EXPECT_FALSE(v.equivalent());
  EXPECT_EQ((*v.witness())["side:extra"], "detail");
}

TEST(Osreg, Examples) {
  auto const lz = verify_osreg(LZ(2), ValueChain(2));
  EXPECT_TRUE(lz.equivalent());
  EXPECT_TRUE(all_conditions(lz, true));

  auto const nul = verify_osreg(NULLS(2), ValueChain(1));
  EXPECT_TRUE(nul.equivalent());
  EXPECT_TRUE(all_conditions(nul, false));
  EXPECT_EQ(nul.condition_value("ii_meet_is_composite"), false);

  for (level_t k = 1; k <= 3; ++k) {
    EXPECT_TRUE(all_conditions(verify_osreg(trivial(), ValueChain(k)), true));
  }
}

TEST(Osreg, NullWitnessIsConstantOne) {
  // Force a failing verdict to expose the evidence of condition (ii).
  auto v = verify_osreg(NULLS(2), ValueChain(1));
  v.condition("forced", true);
  auto const w = v.witness();
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ((*w)["ii_meet_is_composite"]["f"], "1; 1 1");
  EXPECT_EQ((*w)["ii_meet_is_composite"]["g"], "1; 1 1");
  EXPECT_EQ((*w)["ii_meet_is_composite"]["composite"], "1; 1 0");
}

TEST(Osreg, AgreesWithCrispCharacterisationAtResolutionOne) {
  for (auto const& S : small_semigroups(3)) {
    auto const fuzzy = verify_osreg(S, ValueChain(1));
    auto const crisp = verify_9_3_crisp(S);
    ASSERT_TRUE(fuzzy.equivalent() && crisp.equivalent());
    std::pair<char const*, char const*> const pairs[] = {
        {"i_regular", "i_regular"},
        {"ii_meet_is_composite", "ii_intersection_is_product"},
        {"iii_idempotent_and_quasi", "iii_idempotent_and_quasi"},
        {"iv_quasi_ideals_regular", "iv_quasi_ideals_regular"}};
    for (auto [f, c] : pairs) {
      ASSERT_TRUE(crisp.condition_value(c).has_value()) << c;
      EXPECT_EQ(fuzzy.condition_value(f), crisp.condition_value(c))
          << f << "\n" << format_table(S);
    }
  }
}

TEST(Crisp, Examples) {
  EXPECT_TRUE(all_conditions(verify_9_3_crisp(Z(2)), true));
  EXPECT_TRUE(all_conditions(verify_9_3_crisp(RB(2, 2)), true));
  auto const nul = verify_9_3_crisp(NULLS(2));
  EXPECT_TRUE(nul.equivalent());
  EXPECT_TRUE(all_conditions(nul, false));
  EXPECT_EQ(nul.conditions().size(), 5U);
}

TEST(LemmaComp, Examples) {
  for (auto const& S : {Z(2), NULLS(2), LZ(3), trivial()}) {
    auto const v = verify_lemma_comp(S, {1, 3});
    EXPECT_TRUE(v.equivalent());
    EXPECT_EQ(v.condition_value("k=1"), true);
    EXPECT_EQ(v.condition_value("k=3"), true);
  }
  auto const nul  = NULLS(2);
  ValueChain const c(2);
  auto const chi0 = characteristic(nul, ElementSubset(2, {0}), c);
  EXPECT_EQ(composite(chi0, chi0), chi0);
}

TEST(Saito, Examples) {
  EXPECT_TRUE(all_conditions(verify_saito(CHAIN(2)), true));
  EXPECT_TRUE(all_conditions(verify_saito(LZ(2)), true));
  auto const nul = verify_saito(NULLS(2));
  EXPECT_TRUE(nul.equivalent());
  EXPECT_TRUE(all_conditions(nul, false));
}

TEST(SaitoFuzzy, Examples) {
  EXPECT_TRUE(all_conditions(verify_saito_fuzzy(CHAIN(2), ValueChain(1)), true));
  EXPECT_TRUE(all_conditions(verify_saito_fuzzy(Z(2), ValueChain(2)), true));
  for (level_t k = 1; k <= 3; ++k) {
    auto const v = verify_saito_fuzzy(NULLS(2), ValueChain(k));
    EXPECT_TRUE(v.equivalent());
    EXPECT_TRUE(all_conditions(v, false));
  }
}

TEST(CompletelyRegularFuzzy, Examples) {
  EXPECT_TRUE(all_conditions(verify_completely_regular_fuzzy(RB(2, 2), ValueChain(2)), true));
  EXPECT_TRUE(all_conditions(verify_completely_regular_fuzzy(CHAIN(2), ValueChain(2)), true));
  auto const v = verify_completely_regular_fuzzy(NULLS(2), ValueChain(2));
  EXPECT_TRUE(v.equivalent());
  EXPECT_TRUE(all_conditions(v, false));
}

TEST(Psi, Examples) {
  auto const v = verify_psi(LZ(2), ValueChain(2));
  EXPECT_TRUE(v.equivalent());
  EXPECT_EQ(v.conditions().size(), 5U);
  EXPECT_EQ(v.condition_value("quasi-ideal"), true);
}

TEST(Suite, OrderTwoAllTheorems) {
  SuiteOptions opts;
  opts.k       = 2;
  opts.threads = 2;
  auto const r = run_suite("enum:2", enumerated_corpus(2, Dedup::iso), opts);
  EXPECT_EQ(r.entries.size(), (1 + 5) * all_theorems().size());
  EXPECT_EQ(r.failures(), 0U);
  EXPECT_EQ(r.errors(), 0U);
  auto const j = r.to_json();
  EXPECT_EQ(j["summary"]["items"], r.entries.size());
  EXPECT_EQ(j["summary"]["equivalent"], r.entries.size());
  EXPECT_EQ(j["chain_k"], 2);
}

TEST(Suite, OrderThreeOsreg) {
  SuiteOptions opts;
  opts.k        = 3;
  opts.theorems = {"osreg"};
  auto const r  = run_suite("enum:3", enumerated_corpus(3, Dedup::iso), opts);
  EXPECT_EQ(r.failures(), 0U);
  EXPECT_EQ(r.errors(), 0U);
}

TEST(Suite, BadItemIsRecordedAndSuiteContinues) {
  std::vector<CorpusItem> corpus{{"bad.txt", std::nullopt, "not associative"},
                                 {"lz2", LZ(2), {}}};
  SuiteOptions opts;
  opts.theorems = {"saito", "9_3_crisp"};
  auto const r  = run_suite("mixed", corpus, opts);
  EXPECT_EQ(r.entries.size(), 3U);
  EXPECT_EQ(r.errors(), 1U);
  EXPECT_EQ(r.failures(), 0U);
  auto const j = r.to_json();
  EXPECT_EQ(j["items"].back()["theorem"], "load");
  EXPECT_EQ(j["items"].back()["error"], "not associative");
}

TEST(Suite, BudgetErrorsArePerItem) {
  SuiteOptions opts;
  opts.theorems = {"osreg"};
  opts.budget   = 10;
  auto const r  = run_suite("catalog", {{"lz1", LZ(1), {}}, {"z4", Z(4), {}}}, opts);
  EXPECT_EQ(r.errors(), 1U);
  EXPECT_EQ(r.entries.size(), 2U);
}

TEST(Suite, UnknownTheoremIsRejected) {
  SuiteOptions opts;
  opts.theorems = {"nope"};
  EXPECT_THROW(run_suite("x", {}, opts), PreconditionError);
}

TEST(Suite, DeterministicAcrossThreadCounts) {
  auto const corpus = enumerated_corpus(3, Dedup::iso);
  SuiteOptions one;
  one.threads = 1;
  SuiteOptions many;
  many.threads = 4;
  EXPECT_EQ(without_millis(run_suite("enum:3", corpus, one).to_json()),
            without_millis(run_suite("enum:3", corpus, many).to_json()));
}
