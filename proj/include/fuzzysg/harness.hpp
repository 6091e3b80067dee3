#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chain.hpp"
#include "congruence.hpp"
#include "correspondence.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "fuzzy.hpp"
#include "semigroup.hpp"

namespace fuzzysg {

  ////////////////////////////////////////////////////////////////////////
  // TheoremVerdict
  ////////////////////////////////////////////////////////////////////////

  // equivalence: the conditions must all have the same truth value.
  // identity: every condition must hold.
  enum class VerdictKind { equivalence, identity };

  class TheoremVerdict {
   public:
    TheoremVerdict(std::string theorem, FiniteSemigroup const& S, level_t k,
                   VerdictKind kind)
        : theorem_(std::move(theorem)),
          semigroup_id_(fuzzysg::semigroup_id(S)),
          k_(k),
          kind_(kind) {}

    // Records a condition and, when it is false, the counterexample that
    // made it so. Witnesses are only reported if the verdict fails.
    void condition(std::string name, bool value, nlohmann::json why = {}) {
      if (!why.is_null()) {
        evidence_[name] = std::move(why);
      }
      conditions_.emplace_back(std::move(name), value);
    }

    // A supporting check outside the condition list; failure fails the
    // verdict.
    void side_check(std::string name, bool ok, nlohmann::json why = {}) {
      if (!ok) {
        side_failures_[std::move(name)] = why.is_null() ? nlohmann::json(true)
                                                        : std::move(why);
      }
    }

    void set_millis(std::int64_t ms) noexcept {
      millis_ = ms;
    }

    std::string const& theorem() const noexcept {
      return theorem_;
    }

    std::string const& semigroup_id() const noexcept {
      return semigroup_id_;
    }

    level_t chain_k() const noexcept {
      return k_;
    }

    std::vector<std::pair<std::string, bool>> const& conditions() const noexcept {
      return conditions_;
    }

    std::optional<bool> condition_value(std::string_view name) const {
      for (auto const& [n, v] : conditions_) {
        if (n == name) {
          return v;
        }
      }
      return std::nullopt;
    }

    bool equivalent() const {
      if (!side_failures_.empty()) {
        return false;
      }
      if (kind_ == VerdictKind::identity) {
        return std::all_of(conditions_.begin(), conditions_.end(),
                           [](auto const& c) { return c.second; });
      }
      return std::all_of(conditions_.begin(), conditions_.end(), [&](auto const& c) {
        return c.second == conditions_.front().second;
      });
    }

    // Present iff the verdict failed.
    std::optional<nlohmann::json> witness() const {
      if (equivalent()) {
        return std::nullopt;
      }
      nlohmann::json w = nlohmann::json::object();
      for (auto const& [name, why] : evidence_.items()) {
        w[name] = why;
      }
      for (auto const& [name, why] : side_failures_.items()) {
        w["side:" + name] = why;
      }
      return w;
    }

    nlohmann::json to_json(bool with_millis = true) const {
      nlohmann::json j;
      j["semigroup_hash"] = semigroup_id_;
      j["theorem"]        = theorem_;
      j["k"]              = k_;
      j["conditions"]     = nlohmann::json::object();
      for (auto const& [n, v] : conditions_) {
        j["conditions"][n] = v;
      }
      j["equivalent"] = equivalent();
      if (auto w = witness()) {
        j["witness"] = *w;
      }
      if (with_millis) {
        j["millis"] = millis_;
      }
      return j;
    }

   private:
    std::string                               theorem_;
    std::string                               semigroup_id_;
    level_t                                   k_;
    VerdictKind                               kind_;
    std::vector<std::pair<std::string, bool>> conditions_;
    nlohmann::json                            evidence_ = nlohmann::json::object();
    nlohmann::json side_failures_ = nlohmann::json::object();
    std::int64_t                              millis_ = 0;
  };

  namespace detail {
    inline nlohmann::json levels(FuzzySubset const& f) {
      return f.to_string();
    }

    inline nlohmann::json set(ElementSubset const& A) {
      return A.elements();
    }

    // Dense index of a level vector in base k + 1.
    inline std::size_t fuzzy_key(FuzzySubset const& f) {
      std::size_t key = 0;
      for (auto v : f.values()) {
        key = key * (f.chain().top() + 1) + v;
      }
      return key;
    }

    template <typename F>
    TheoremVerdict timed(F&& body) {
      auto const start   = std::chrono::steady_clock::now();
      auto       verdict = body();
      auto const stop    = std::chrono::steady_clock::now();
      verdict.set_millis(
          std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
              .count());
      return verdict;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Regularity via fuzzy one-sided ideals and fuzzy quasi-ideals
  ////////////////////////////////////////////////////////////////////////

  inline TheoremVerdict verify_osreg(FiniteSemigroup const& S,
                                     ValueChain const&      chain,
                                     std::uint64_t budget = default_fuzzy_budget) {
    return detail::timed([&] {
      TheoremVerdict v("osreg", S, chain.top(), VerdictKind::equivalence);
      auto const R = enumerate_fuzzy_subsets(S, chain, FuzzyFilter::right_ideal, budget);
      auto const L = enumerate_fuzzy_subsets(S, chain, FuzzyFilter::left_ideal, budget);
      auto const Q = enumerate_fuzzy_subsets(S, chain, FuzzyFilter::quasi_ideal, budget);
      auto const top = FuzzySubset::constant(S, chain, chain.top());

      v.condition("i_regular", is_regular(S));

      // (ii) f ∩ g = f ∘ g.
      nlohmann::json why2;
      for (auto const& f : R) {
        for (auto const& g : L) {
          if (!(meet(f, g) == composite(f, g))) {
            why2 = {{"f", detail::levels(f)},
                    {"g", detail::levels(g)},
                    {"meet", detail::levels(meet(f, g))},
                    {"composite", detail::levels(composite(f, g))}};
            break;
          }
        }
        if (!why2.is_null()) {
          break;
        }
      }
      v.condition("ii_meet_is_composite", why2.is_null(), why2);

      // (iii) f ∘ f = f, g ∘ g = g, f ∘ g a fuzzy quasi-ideal.
      nlohmann::json why3;
      for (auto const& f : R) {
        if (!(composite(f, f) == f)) {
          why3 = {{"clause", "a"}, {"f", detail::levels(f)}};
          break;
        }
      }
      for (auto const& g : L) {
        if (!why3.is_null()) {
          break;
        }
        if (!(composite(g, g) == g)) {
          why3 = {{"clause", "b"}, {"g", detail::levels(g)}};
        }
      }
      for (auto const& f : R) {
        if (!why3.is_null()) {
          break;
        }
        for (auto const& g : L) {
          if (!is_fuzzy_quasi_ideal(composite(f, g))) {
            why3 = {{"clause", "c"},
                    {"f", detail::levels(f)},
                    {"g", detail::levels(g)}};
            break;
          }
        }
      }
      v.condition("iii_idempotent_and_quasi", why3.is_null(), why3);

      // (iv) (Q, ∘) is a regular semigroup and q ∘ S ∘ q = q for every q.
      nlohmann::json           why4;
      std::vector<std::size_t> position(
          fuzzy_space_size(S.order(), chain.top()), Q.size());
      for (std::size_t i = 0; i < Q.size(); ++i) {
        position[detail::fuzzy_key(Q[i])] = i;
      }
      std::vector<std::size_t> table(Q.size() * Q.size(), 0);
      for (std::size_t i = 0; i < Q.size() && why4.is_null(); ++i) {
        for (std::size_t j = 0; j < Q.size(); ++j) {
          auto const p = position[detail::fuzzy_key(composite(Q[i], Q[j]))];
          if (p == Q.size()) {
            why4 = {{"clause", "closed"},
                    {"q1", detail::levels(Q[i])},
                    {"q2", detail::levels(Q[j])},
                    {"product", detail::levels(composite(Q[i], Q[j]))}};
            break;
          }
          table[i * Q.size() + j] = p;
        }
      }
      std::size_t const m = Q.size();
      for (std::size_t a = 0; a < m && why4.is_null(); ++a) {
        for (std::size_t b = 0; b < m && why4.is_null(); ++b) {
          for (std::size_t c = 0; c < m; ++c) {
            if (table[table[a * m + b] * m + c] != table[a * m + table[b * m + c]]) {
              why4 = {{"clause", "associative"},
                      {"q1", detail::levels(Q[a])},
                      {"q2", detail::levels(Q[b])},
                      {"q3", detail::levels(Q[c])}};
              break;
            }
          }
        }
      }
      for (std::size_t i = 0; i < m && why4.is_null(); ++i) {
        if (!(composite(composite(Q[i], top), Q[i]) == Q[i])) {
          why4 = {{"clause", "qSq"},
                  {"q", detail::levels(Q[i])},
                  {"qSq", detail::levels(composite(composite(Q[i], top), Q[i]))}};
        }
      }
      v.condition("iv_quasi_ideals_regular", why4.is_null(), why4);
      return v;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Crisp regularity characterisation
  ////////////////////////////////////////////////////////////////////////

  inline TheoremVerdict verify_9_3_crisp(FiniteSemigroup const& S,
                                         std::size_t bound = default_subset_bound) {
    return detail::timed([&] {
      TheoremVerdict v("9_3_crisp", S, 0, VerdictKind::equivalence);
      auto const     R   = all_right_ideals(S, bound);
      auto const     L   = all_left_ideals(S, bound);
      auto const     Q   = all_quasi_ideals(S, bound);
      auto const     all = ElementSubset::all(S.order());

      v.condition("i_regular", is_regular(S));

      nlohmann::json why2;
      for (auto const& r : R) {
        for (auto const& l : L) {
          if (r.intersect(l) != subset_product(S, r, l)) {
            why2 = {{"R", detail::set(r)}, {"L", detail::set(l)}};
            break;
          }
        }
        if (!why2.is_null()) {
          break;
        }
      }
      v.condition("ii_intersection_is_product", why2.is_null(), why2);

      nlohmann::json why3;
      for (auto const& r : R) {
        if (subset_product(S, r, r) != r) {
          why3 = {{"clause", "a"}, {"R", detail::set(r)}};
          break;
        }
      }
      for (auto const& l : L) {
        if (!why3.is_null()) {
          break;
        }
        if (subset_product(S, l, l) != l) {
          why3 = {{"clause", "b"}, {"L", detail::set(l)}};
        }
      }
      for (auto const& r : R) {
        if (!why3.is_null()) {
          break;
        }
        for (auto const& l : L) {
          if (!is_quasi_ideal(S, subset_product(S, r, l))) {
            why3 = {{"clause", "c"}, {"R", detail::set(r)}, {"L", detail::set(l)}};
            break;
          }
        }
      }
      v.condition("iii_idempotent_and_quasi", why3.is_null(), why3);

      nlohmann::json why4;
      for (auto const& q1 : Q) {
        for (auto const& q2 : Q) {
          if (!is_quasi_ideal(S, subset_product(S, q1, q2))) {
            why4 = {{"clause", "closed"}, {"Q1", detail::set(q1)}, {"Q2", detail::set(q2)}};
            break;
          }
        }
        if (!why4.is_null()) {
          break;
        }
      }
      for (auto const& q : Q) {
        if (!why4.is_null()) {
          break;
        }
        bool const regular = std::any_of(Q.begin(), Q.end(), [&](auto const& p) {
          return subset_product(S, subset_product(S, q, p), q) == q;
        });
        if (!regular) {
          why4 = {{"clause", "regular"}, {"Q", detail::set(q)}};
        }
      }
      v.condition("iv_quasi_ideals_regular", why4.is_null(), why4);

      nlohmann::json why5;
      for (auto const& q : Q) {
        if (subset_product(S, subset_product(S, q, all), q) != q) {
          why5 = {{"Q", detail::set(q)}};
          break;
        }
      }
      v.condition("v_qsq", why5.is_null(), why5);
      return v;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // χ_B ∘ χ_C = χ_BC
  ////////////////////////////////////////////////////////////////////////

  // ks defaults to {1, |S|}.
  inline TheoremVerdict verify_lemma_comp(FiniteSemigroup const& S,
                                          std::vector<level_t>   ks = {},
                                          std::size_t bound = default_subset_bound) {
    return detail::timed([&] {
      if (ks.empty()) {
        ks = {1, static_cast<level_t>(S.order())};
      }
      TheoremVerdict v("lemma_comp", S, ks.back(), VerdictKind::identity);
      auto const     subs = all_subsemigroups(S, bound);
      for (auto k : ks) {
        ValueChain     chain(k);
        nlohmann::json why;
        for (auto const& B : subs) {
          auto const chiB = characteristic(S, B, chain);
          for (auto const& C : subs) {
            auto const lhs = composite(chiB, characteristic(S, C, chain));
            auto const rhs = characteristic(S, subset_product(S, B, C), chain);
            if (!(lhs == rhs)) {
              why = {{"B", detail::set(B)}, {"C", detail::set(C)}};
              break;
            }
          }
          if (!why.is_null()) {
            break;
          }
        }
        v.condition("k=" + std::to_string(k), why.is_null(), why);
      }
      return v;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Semilattices of left simple semigroups
  ////////////////////////////////////////////////////////////////////////

  inline TheoremVerdict verify_saito(FiniteSemigroup const& S,
                                     std::size_t bound = default_subset_bound) {
    return detail::timed([&] {
      TheoremVerdict v("saito", S, 0, VerdictKind::equivalence);
      auto const     L = all_left_ideals(S, bound);

      auto const dec = semilattice_decomposition(S);
      nlohmann::json why1;
      for (std::size_t i = 0; i < dec.left_simple.size(); ++i) {
        if (!dec.left_simple[i]) {
          why1 = {{"block", detail::set(dec.decomposition.blocks[i])}};
          break;
        }
      }
      v.condition("1_semilattice_of_left_simple", why1.is_null(), why1);

      nlohmann::json why2;
      for (auto const& l1 : L) {
        for (auto const& l2 : L) {
          if (l1.intersect(l2) != subset_product(S, l1, l2)) {
            why2 = {{"L1", detail::set(l1)}, {"L2", detail::set(l2)}};
            break;
          }
        }
        if (!why2.is_null()) {
          break;
        }
      }
      v.condition("2_intersection_is_product", why2.is_null(), why2);

      nlohmann::json why3;
      for (auto const& l1 : L) {
        for (auto const& l2 : L) {
          auto const p = subset_product(S, l1, l2);
          if (std::find(L.begin(), L.end(), p) == L.end()) {
            why3 = {{"clause", "closed"}, {"L1", detail::set(l1)}, {"L2", detail::set(l2)}};
          } else if (p != subset_product(S, l2, l1)) {
            why3 = {{"clause", "commutative"}, {"L1", detail::set(l1)}, {"L2", detail::set(l2)}};
          } else if (subset_product(S, l1, l1) != l1) {
            why3 = {{"clause", "idempotent"}, {"L", detail::set(l1)}};
          }
          if (!why3.is_null()) {
            break;
          }
        }
        if (!why3.is_null()) {
          break;
        }
      }
      v.condition("3_left_ideals_semilattice", why3.is_null(), why3);

      nlohmann::json why4;
      if (!is_left_regular(S)) {
        why4 = {{"clause", "left_regular"}};
      } else {
        for (auto const& l : L) {
          if (!is_right_ideal(S, l)) {
            why4 = {{"clause", "two_sided"}, {"L", detail::set(l)}};
            break;
          }
        }
      }
      v.condition("4_left_regular_two_sided", why4.is_null(), why4);
      return v;
    });
  }

  namespace detail {
    inline std::vector<FuzzySubset> lift(FiniteSemigroup const& S,
                                         Decomposition const&   d,
                                         ValueChain const&      chain) {
      std::vector<FuzzySubset> family;
      for (auto const& B : d.blocks) {
        family.push_back(characteristic(S, B, chain));
      }
      return family;
    }

    // Some semilattice congruence whose lifted family is a fuzzy semilattice
    // family with every member passing member_ok.
    template <typename MemberOk>
    std::optional<Decomposition>
    find_fuzzy_family(FiniteSemigroup const& S,
                      ValueChain const&      chain,
                      std::size_t            bound,
                      MemberOk&&             member_ok) {
      for (auto const& c : semilattice_congruences(S, bound)) {
        auto       d      = decomposition_from(S, c);
        auto const family = lift(S, d, chain);
        if (is_fuzzy_semilattice_family(d.index, family)
            && std::all_of(family.begin(), family.end(), member_ok)) {
          return d;
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  inline TheoremVerdict verify_saito_fuzzy(FiniteSemigroup const& S,
                                           ValueChain const&      chain,
                                           std::size_t bound = default_subset_bound) {
    return detail::timed([&] {
      TheoremVerdict v("saito_fuzzy", S, chain.top(), VerdictKind::equivalence);
      auto const     dec = semilattice_decomposition(S);
      bool const     one = dec.semilattice_of_left_simple();
      v.condition("1_semilattice_of_left_simple", one);

      auto const found = detail::find_fuzzy_family(
          S, chain, bound,
          [](FuzzySubset const& f) { return is_left_simple_fuzzy_subsemigroup(f); });
      v.condition("1prime_fuzzy_semilattice_of_left_simple", found.has_value());

      if (one) {
        auto const family = detail::lift(S, dec.decomposition, chain);
        auto const lc     = level_components(dec.decomposition.index, family);
        v.side_check("level_components", lc.ok(), lc.witness);
        if (lc.ok()) {
          auto const P = product_with_chain(S, chain, false);
          for (auto const& c : lc.components) {
            if (!is_left_simple(restrict_to(P.semigroup(), c.carrier).semigroup)) {
              v.side_check("component_left_simple", false,
                           {{"alpha", c.alpha}, {"level", c.level}});
              break;
            }
          }
        }
      }
      return v;
    });
  }

  inline TheoremVerdict
  verify_completely_regular_fuzzy(FiniteSemigroup const& S,
                                  ValueChain const&      chain,
                                  std::size_t bound = default_subset_bound) {
    return detail::timed([&] {
      TheoremVerdict v("completely_regular_fuzzy", S, chain.top(),
                       VerdictKind::equivalence);
      v.condition("completely_regular", is_completely_regular(S));

      bool crisp = false;
      for (auto const& c : semilattice_congruences(S, bound)) {
        auto const d = decomposition_from(S, c);
        crisp        = std::all_of(d.blocks.begin(), d.blocks.end(), [&](auto const& B) {
          return is_completely_simple(restrict_to(S, B).semigroup);
        });
        if (crisp) {
          break;
        }
      }
      v.condition("semilattice_of_completely_simple", crisp);

      auto const found = detail::find_fuzzy_family(
          S, chain, bound, [](FuzzySubset const& f) {
            return is_completely_simple_fuzzy_subsemigroup(f);
          });
      v.condition("fuzzy_semilattice_of_completely_simple", found.has_value());

      // The least semilattice congruence gives the same verdict.
      auto const dec = semilattice_decomposition(S);
      v.side_check("least_congruence_agrees",
                   dec.semilattice_of_completely_simple() == crisp);
      return v;
    });
  }

  // Ψ is a bijection on each fuzzy family with both round trips.
  inline TheoremVerdict verify_psi(FiniteSemigroup const& S,
                                   ValueChain const&      chain,
                                   std::uint64_t budget = default_fuzzy_budget) {
    return detail::timed([&] {
      TheoremVerdict v("psi", S, chain.top(), VerdictKind::identity);
      auto const     r = verify_bijections(S, chain, budget);
      for (auto const& fb : r.families) {
        nlohmann::json why;
        if (!fb.ok()) {
          why = {{"fuzzy", fb.fuzzy_count},
                 {"regions", fb.region_count},
                 {"detail", fb.witness}};
        }
        v.condition(std::string(to_string(fb.kind)), fb.ok(), why);
      }
      v.condition("containment", r.containment,
                  r.containment ? nlohmann::json{} : nlohmann::json(r.witness));
      return v;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Suites
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<std::string> const& all_theorems() {
    static std::vector<std::string> const names{
        "psi", "osreg", "9_3_crisp", "lemma_comp", "saito", "saito_fuzzy",
        "completely_regular_fuzzy"};
    return names;
  }

  // One corpus member: a semigroup, or the reason it could not be loaded.
  struct CorpusItem {
    std::string                    source;
    std::optional<FiniteSemigroup> semigroup;
    std::string                    error;
  };

  struct SuiteOptions {
    std::optional<level_t>   k;  // default: |S| per item
    std::vector<std::string> theorems = all_theorems();
    std::uint64_t            budget   = default_fuzzy_budget;
    std::size_t              threads  = 0;  // 0: hardware concurrency
  };

  struct SuiteEntry {
    std::string                   source;
    std::string                   theorem;
    std::optional<TheoremVerdict> verdict;
    std::string                   error;
  };

  struct SuiteReport {
    std::string             corpus;
    std::optional<level_t>  k;
    std::vector<SuiteEntry> entries;
    std::int64_t            millis = 0;

    std::size_t failures() const {
      return static_cast<std::size_t>(
          std::count_if(entries.begin(), entries.end(), [](auto const& e) {
            return e.verdict && !e.verdict->equivalent();
          }));
    }

    std::size_t errors() const {
      return static_cast<std::size_t>(std::count_if(
          entries.begin(), entries.end(), [](auto const& e) { return !e.verdict; }));
    }

    nlohmann::json to_json() const {
      nlohmann::json j;
      j["corpus"]  = corpus;
      j["chain_k"] = k ? nlohmann::json(*k) : nlohmann::json("order");
      j["items"]   = nlohmann::json::array();
      for (auto const& e : entries) {
        if (e.verdict) {
          auto item      = e.verdict->to_json();
          item["source"] = e.source;
          j["items"].push_back(std::move(item));
        } else {
          j["items"].push_back(
              {{"source", e.source}, {"theorem", e.theorem}, {"error", e.error}});
        }
      }
      j["summary"] = {{"items", entries.size()},
                      {"equivalent", entries.size() - failures() - errors()},
                      {"failures", failures()},
                      {"errors", errors()},
                      {"millis", millis}};
      return j;
    }
  };

  // Runs one theorem on one semigroup.
  inline TheoremVerdict run_theorem(std::string const&     theorem,
                                    FiniteSemigroup const& S,
                                    SuiteOptions const&    opts) {
    ValueChain const chain(opts.k.value_or(static_cast<level_t>(S.order())));
    if (theorem == "psi") {
      return verify_psi(S, chain, opts.budget);
    }
    if (theorem == "osreg") {
      return verify_osreg(S, chain, opts.budget);
    }
    if (theorem == "9_3_crisp") {
      return verify_9_3_crisp(S);
    }
    if (theorem == "lemma_comp") {
      return verify_lemma_comp(S, {1, chain.top()});
    }
    if (theorem == "saito") {
      return verify_saito(S);
    }
    if (theorem == "saito_fuzzy") {
      return verify_saito_fuzzy(S, chain);
    }
    if (theorem == "completely_regular_fuzzy") {
      return verify_completely_regular_fuzzy(S, chain);
    }
    throw PreconditionError("unknown theorem '" + theorem + "'");
  }

  // Runs every requested theorem on every corpus member. Per-item errors are
  // recorded and do not stop the suite. Entries are sorted by semigroup id,
  // then theorem order, then corpus position, so the report does not depend
  // on scheduling.
  inline SuiteReport run_suite(std::string                    corpus_name,
                               std::vector<CorpusItem> const& corpus,
                               SuiteOptions const&            opts) {
    for (auto const& t : opts.theorems) {
      if (std::find(all_theorems().begin(), all_theorems().end(), t)
          == all_theorems().end()) {
        throw PreconditionError("unknown theorem '" + t + "'");
      }
    }
    auto const start = std::chrono::steady_clock::now();

    struct Task {
      std::size_t item;
      std::size_t theorem;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!corpus[i].semigroup) {
        tasks.push_back({i, 0});
        continue;
      }
      for (std::size_t t = 0; t < opts.theorems.size(); ++t) {
        tasks.push_back({i, t});
      }
    }

    std::vector<SuiteEntry> results(tasks.size());
    auto run = [&](std::size_t idx) {
      auto const& task = tasks[idx];
      auto const& item = corpus[task.item];
      SuiteEntry  e{item.source, opts.theorems.empty() ? "" : opts.theorems[task.theorem],
                   std::nullopt, {}};
      if (!item.semigroup) {
        e.theorem = "load";
        e.error   = item.error;
      } else {
        try {
          e.verdict = run_theorem(e.theorem, *item.semigroup, opts);
        } catch (Error const& err) {
          e.error = err.what();
        }
      }
      results[idx] = std::move(e);
    };

    std::size_t threads = opts.threads != 0 ? opts.threads
                                            : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(tasks.size(), 1));
    if (threads <= 1) {
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        run(i);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < tasks.size(); i = next++) {
            run(i);
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    std::vector<std::size_t> order(tasks.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::string> ids(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      ids[i] = corpus[i].semigroup ? semigroup_id(*corpus[i].semigroup) : "~" + corpus[i].source;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      auto const& a = tasks[x];
      auto const& b = tasks[y];
      return std::tie(ids[a.item], a.theorem, a.item)
             < std::tie(ids[b.item], b.theorem, b.item);
    });

    SuiteReport report{std::move(corpus_name), opts.k, {}, 0};
    for (auto i : order) {
      report.entries.push_back(std::move(results[i]));
    }
    report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Corpora
  ////////////////////////////////////////////////////////////////////////

  // Every semigroup of order 1..max_order under the given dedup.
  inline std::vector<CorpusItem> enumerated_corpus(std::size_t max_order,
                                                   Dedup       dedup) {
    std::vector<CorpusItem> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto const all = enumerate_semigroups(n, dedup);
      for (std::size_t i = 0; i < all.size(); ++i) {
        out.push_back({"enum:" + std::to_string(n) + "#" + std::to_string(i), all[i], {}});
      }
    }
    return out;
  }

  inline std::vector<CorpusItem> catalog_corpus(std::size_t max_order) {
    std::vector<CorpusItem> out;
    for (auto const& spec : catalog_members(max_order)) {
      out.push_back({to_string(spec), catalog(spec), {}});
    }
    return out;
  }

}  // namespace fuzzysg
