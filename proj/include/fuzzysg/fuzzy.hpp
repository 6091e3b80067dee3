#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chain.hpp"
#include "congruence.hpp"
#include "error.hpp"
#include "semigroup.hpp"

namespace fuzzysg {

  // Default bound on (k + 1)^n for exhaustive fuzzy subset enumeration.
  inline constexpr std::uint64_t default_fuzzy_budget = 10'000'000;

  ////////////////////////////////////////////////////////////////////////
  // FuzzySubset
  ////////////////////////////////////////////////////////////////////////

  // A map from the elements of a host semigroup to the levels of a chain.
  // The host is referenced, not owned, and must outlive the subset.
  class FuzzySubset {
   public:
    FuzzySubset(FiniteSemigroup const& host,
                ValueChain             chain,
                std::vector<level_t>   values)
        : host_(&host), chain_(chain), values_(std::move(values)) {
      if (values_.size() != host.order()) {
        throw PreconditionError("fuzzy subset has "
                                + std::to_string(values_.size())
                                + " values for a host of order "
                                + std::to_string(host.order()));
      }
      for (auto v : values_) {
        if (v > chain_.top()) {
          throw PreconditionError("level " + std::to_string(v)
                                  + " exceeds the chain top "
                                  + std::to_string(chain_.top()));
        }
      }
    }

    static FuzzySubset constant(FiniteSemigroup const& host,
                                ValueChain             chain,
                                level_t                v) {
      return FuzzySubset(host, chain, std::vector<level_t>(host.order(), v));
    }

    FiniteSemigroup const& host() const noexcept {
      return *host_;
    }

    ValueChain const& chain() const noexcept {
      return chain_;
    }

    level_t operator()(element_t a) const {
      return values_.at(a);
    }

    std::span<level_t const> values() const noexcept {
      return values_;
    }

    // Every value is 0 or the chain top.
    bool is_two_valued() const noexcept {
      return std::all_of(values_.begin(), values_.end(), [&](level_t v) {
        return v == 0 || v == chain_.top();
      });
    }

    // "k; v0 v1 ... v_{n-1}"
    std::string to_string() const {
      std::string out = std::to_string(chain_.resolution()) + ";";
      for (auto v : values_) {
        out += " " + std::to_string(v);
      }
      return out;
    }

    // Same host (by identity or by equal table) and same chain.
    bool compatible_with(FuzzySubset const& that) const {
      return chain_ == that.chain_
             && (host_ == that.host_ || *host_ == *that.host_);
    }

    friend bool operator==(FuzzySubset const& x, FuzzySubset const& y) {
      return x.compatible_with(y) && x.values_ == y.values_;
    }

   private:
    FiniteSemigroup const* host_;
    ValueChain             chain_;
    std::vector<level_t>   values_;
  };

  namespace detail {
    inline void require_compatible(FuzzySubset const& f,
                                   FuzzySubset const& g,
                                   char const*        what) {
      if (!f.compatible_with(g)) {
        throw MismatchError(std::string(what)
                            + ": fuzzy subsets over different hosts or chains");
      }
    }
  }  // namespace detail

  // k on A, 0 elsewhere.
  inline FuzzySubset characteristic(FiniteSemigroup const& S,
                                    ElementSubset const&   A,
                                    ValueChain const&      chain) {
    detail::require_universe(S, A);
    std::vector<level_t> v(S.order(), 0);
    for (auto a : A.elements()) {
      v[a] = chain.top();
    }
    return FuzzySubset(S, chain, std::move(v));
  }

  inline FuzzySubset meet(FuzzySubset const& f, FuzzySubset const& g) {
    detail::require_compatible(f, g, "meet");
    std::vector<level_t> v(f.values().size());
    for (std::size_t a = 0; a < v.size(); ++a) {
      v[a] = std::min(f.values()[a], g.values()[a]);
    }
    return FuzzySubset(f.host(), f.chain(), std::move(v));
  }

  // (f ∘ g)(a) = max over a = bc of min(f(b), g(c)); an empty max is 0.
  inline FuzzySubset composite(FuzzySubset const& f, FuzzySubset const& g) {
    detail::require_compatible(f, g, "composite");
    auto const&          S = f.host();
    std::vector<level_t> v(S.order(), 0);
    for (element_t b = 0; b < S.order(); ++b) {
      level_t const fb = f.values()[b];
      if (fb == 0) {
        continue;
      }
      for (element_t c = 0; c < S.order(); ++c) {
        level_t const m = std::min(fb, g.values()[c]);
        level_t&      r = v[S.product(b, c)];
        r               = std::max(r, m);
      }
    }
    return FuzzySubset(S, f.chain(), std::move(v));
  }

  // f ⊆ g pointwise.
  inline bool includes(FuzzySubset const& f, FuzzySubset const& g) {
    detail::require_compatible(f, g, "includes");
    for (std::size_t a = 0; a < f.values().size(); ++a) {
      if (f.values()[a] > g.values()[a]) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fuzzy subsystem predicates
  ////////////////////////////////////////////////////////////////////////

  // f(ab) >= min(f(a), f(b)).
  inline bool is_fuzzy_subsemigroup(FuzzySubset const& f) {
    auto const& S = f.host();
    for (element_t a = 0; a < S.order(); ++a) {
      for (element_t b = 0; b < S.order(); ++b) {
        if (f(S.product(a, b)) < std::min(f(a), f(b))) {
          return false;
        }
      }
    }
    return true;
  }

  // f(ab) >= f(b).
  inline bool is_fuzzy_left_ideal(FuzzySubset const& f) {
    auto const& S = f.host();
    for (element_t a = 0; a < S.order(); ++a) {
      for (element_t b = 0; b < S.order(); ++b) {
        if (f(S.product(a, b)) < f(b)) {
          return false;
        }
      }
    }
    return true;
  }

  // f(ab) >= f(a).
  inline bool is_fuzzy_right_ideal(FuzzySubset const& f) {
    auto const& S = f.host();
    for (element_t a = 0; a < S.order(); ++a) {
      for (element_t b = 0; b < S.order(); ++b) {
        if (f(S.product(a, b)) < f(a)) {
          return false;
        }
      }
    }
    return true;
  }

  // q ∘ S ∩ S ∘ q ⊆ q, where S is the constant-top subset.
  inline bool is_fuzzy_quasi_ideal(FuzzySubset const& q) {
    auto const top = FuzzySubset::constant(q.host(), q.chain(), q.chain().top());
    return includes(meet(composite(q, top), composite(top, q)), q);
  }

  // The t-cut {a : f(a) >= t} for 1 <= t <= k.
  inline ElementSubset level_set(FuzzySubset const& f, level_t t) {
    if (t == 0 || t > f.chain().top()) {
      throw PreconditionError("level_set: t = " + std::to_string(t)
                              + " is outside 1.." + std::to_string(f.chain().top()));
    }
    ElementSubset out(f.host().order());
    for (element_t a = 0; a < f.host().order(); ++a) {
      if (f(a) >= t) {
        out.insert(a);
      }
    }
    return out;
  }

  namespace detail {
    template <typename Pred>
    bool every_cut(FuzzySubset const& f, char const* what, Pred&& pred) {
      if (!is_fuzzy_subsemigroup(f)) {
        throw PreconditionError(std::string(what)
                                + ": input is not a fuzzy subsemigroup");
      }
      for (level_t t = 1; t <= f.chain().top(); ++t) {
        auto const cut = level_set(f, t);
        if (cut.empty()) {
          return false;
        }
        // Cuts of a fuzzy subsemigroup are closed; restrict_to asserts it.
        if (!pred(restrict_to(f.host(), cut).semigroup)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  // Every cut f_t, t >= 1, is nonempty and left simple. Throws
  // PreconditionError when f is not a fuzzy subsemigroup.
  inline bool is_left_simple_fuzzy_subsemigroup(FuzzySubset const& f) {
    return detail::every_cut(f, "is_left_simple_fuzzy_subsemigroup",
                             [](FiniteSemigroup const& T) {
                               return is_left_simple(T);
                             });
  }

  inline bool is_completely_simple_fuzzy_subsemigroup(FuzzySubset const& f) {
    return detail::every_cut(f, "is_completely_simple_fuzzy_subsemigroup",
                             [](FiniteSemigroup const& T) {
                               return is_completely_simple(T);
                             });
  }

  ////////////////////////////////////////////////////////////////////////
  // Fuzzy semilattice families
  ////////////////////////////////////////////////////////////////////////

  // Clause-by-clause outcome of the fuzzy semilattice family test.
  struct FamilyCheck {
    bool        preconditions = false;  // Y a semilattice, members fuzzy subsemigroups
    bool        disjoint      = false;  // min(f_α(a), f_β(a)) = 0 for α != β
    bool        product       = false;  // f_α ∘ f_β ⊆ f_{αβ}
    bool        covering      = false;  // nonempty cuts and every (a, t) covered
    std::string failure;                // first failed clause, if any

    bool holds() const noexcept {
      return preconditions && disjoint && product && covering;
    }
  };

  inline FamilyCheck
  check_fuzzy_semilattice_family(FiniteSemigroup const&          Y,
                                 std::span<FuzzySubset const>    family) {
    FamilyCheck r;
    if (!is_semilattice(Y)) {
      r.failure = "index is not a semilattice";
      return r;
    }
    if (family.size() != Y.order() || family.empty()) {
      r.failure = "family size does not match the index semilattice";
      return r;
    }
    for (auto const& f : family) {
      if (!f.compatible_with(family[0])) {
        r.failure = "members over different hosts or chains";
        return r;
      }
      if (!is_fuzzy_subsemigroup(f)) {
        r.failure = "member " + f.to_string() + " is not a fuzzy subsemigroup";
        return r;
      }
    }
    r.preconditions = true;

    std::size_t const n = family[0].host().order();
    level_t const     k = family[0].chain().top();

    r.disjoint = true;
    for (element_t a = 0; a < n && r.disjoint; ++a) {
      for (std::size_t x = 0; x < family.size() && r.disjoint; ++x) {
        for (std::size_t y = x + 1; y < family.size(); ++y) {
          if (std::min(family[x](a), family[y](a)) != 0) {
            r.disjoint = false;
            r.failure  = "(i) members " + std::to_string(x) + " and "
                        + std::to_string(y) + " overlap at "
                        + std::to_string(a);
            break;
          }
        }
      }
    }

    r.product = true;
    for (element_t x = 0; x < Y.order() && r.product; ++x) {
      for (element_t y = 0; y < Y.order(); ++y) {
        if (!includes(composite(family[x], family[y]),
                      family[Y.product(x, y)])) {
          r.product = false;
          if (r.failure.empty()) {
            r.failure = "(ii) f_" + std::to_string(x) + " ∘ f_"
                        + std::to_string(y) + " not included in f_"
                        + std::to_string(Y.product(x, y));
          }
          break;
        }
      }
    }

    r.covering = true;
    for (std::size_t x = 0; x < family.size() && r.covering; ++x) {
      for (level_t t = 1; t <= k; ++t) {
        if (level_set(family[x], t).empty()) {
          r.covering = false;
          if (r.failure.empty()) {
            r.failure = "(iii) cut of f_" + std::to_string(x) + " at level "
                        + std::to_string(t) + " is empty";
          }
          break;
        }
      }
    }
    for (element_t a = 0; a < n && r.covering; ++a) {
      for (level_t t = 1; t <= k; ++t) {
        bool covered = std::any_of(family.begin(), family.end(),
                                   [&](auto const& f) { return f(a) >= t; });
        if (!covered) {
          r.covering = false;
          if (r.failure.empty()) {
            r.failure = "(iii) (" + std::to_string(a) + ", "
                        + std::to_string(t) + ") is not covered";
          }
          break;
        }
      }
    }
    return r;
  }

  inline bool is_fuzzy_semilattice_family(FiniteSemigroup const&       Y,
                                          std::span<FuzzySubset const> family) {
    return check_fuzzy_semilattice_family(Y, family).holds();
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  enum class FuzzyFilter {
    none,
    subsemigroup,
    left_ideal,
    right_ideal,
    quasi_ideal
  };

  inline bool passes(FuzzySubset const& f, FuzzyFilter filter) {
    switch (filter) {
      case FuzzyFilter::none:
        return true;
      case FuzzyFilter::subsemigroup:
        return is_fuzzy_subsemigroup(f);
      case FuzzyFilter::left_ideal:
        return is_fuzzy_left_ideal(f);
      case FuzzyFilter::right_ideal:
        return is_fuzzy_right_ideal(f);
      case FuzzyFilter::quasi_ideal:
        return is_fuzzy_quasi_ideal(f);
    }
    return false;
  }

  inline std::string_view to_string(FuzzyFilter filter) {
    switch (filter) {
      case FuzzyFilter::none:
        return "none";
      case FuzzyFilter::subsemigroup:
        return "subsemigroup";
      case FuzzyFilter::left_ideal:
        return "left-ideal";
      case FuzzyFilter::right_ideal:
        return "right-ideal";
      case FuzzyFilter::quasi_ideal:
        return "quasi-ideal";
    }
    return "?";
  }

  // (k + 1)^n, saturating at UINT64_MAX.
  inline std::uint64_t fuzzy_space_size(std::size_t n, level_t k) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (total > UINT64_MAX / (k + 1)) {
        return UINT64_MAX;
      }
      total *= (k + 1);
    }
    return total;
  }

  // Visits every level assignment passing filter, in lexicographic order of
  // the value vector (element 0 most significant).
  inline void for_each_fuzzy_subset(
      FiniteSemigroup const&                   S,
      ValueChain const&                        chain,
      FuzzyFilter                              filter,
      std::function<void(FuzzySubset const&)> const& visit,
      std::uint64_t                            budget = default_fuzzy_budget) {
    auto const space = fuzzy_space_size(S.order(), chain.top());
    if (space > budget) {
      throw BudgetExceeded("fuzzy subset space (k+1)^n = "
                           + (space == UINT64_MAX ? std::string("overflow")
                                                  : std::to_string(space))
                           + " exceeds the budget " + std::to_string(budget));
    }
    std::vector<level_t> v(S.order(), 0);
    while (true) {
      FuzzySubset f(S, chain, v);
      if (passes(f, filter)) {
        visit(f);
      }
      std::size_t i = v.size();
      while (i > 0) {
        --i;
        if (v[i] < chain.top()) {
          ++v[i];
          break;
        }
        v[i] = 0;
        if (i == 0) {
          return;
        }
      }
      if (v.empty()) {
        return;
      }
    }
  }

  inline std::vector<FuzzySubset>
  enumerate_fuzzy_subsets(FiniteSemigroup const& S,
                          ValueChain const&      chain,
                          FuzzyFilter            filter,
                          std::uint64_t          budget = default_fuzzy_budget) {
    std::vector<FuzzySubset> out;
    for_each_fuzzy_subset(
        S, chain, filter, [&](FuzzySubset const& f) { out.push_back(f); },
        budget);
    return out;
  }

}  // namespace fuzzysg
