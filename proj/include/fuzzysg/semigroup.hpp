#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace fuzzysg {

  using element_t = std::uint32_t;

  // Largest order for which the exhaustive subset enumerations run.
  inline constexpr std::size_t default_subset_bound = 6;

  ////////////////////////////////////////////////////////////////////////
  // ElementSubset
  ////////////////////////////////////////////////////////////////////////

  // A subset of {0, ..., universe - 1}. Iteration is in increasing order.
  class ElementSubset {
   public:
    ElementSubset() = default;
    explicit ElementSubset(std::size_t universe) : member_(universe, 0) {}

    ElementSubset(std::size_t universe, std::initializer_list<element_t> xs)
        : member_(universe, 0) {
      for (auto x : xs) {
        insert(x);
      }
    }

    static ElementSubset all(std::size_t universe) {
      ElementSubset s;
      s.member_.assign(universe, 1);
      return s;
    }

    // Subset whose members are the set bits of mask.
    static ElementSubset from_mask(std::size_t universe, std::uint64_t mask) {
      ElementSubset s(universe);
      for (std::size_t i = 0; i < universe && i < 64; ++i) {
        if ((mask >> i) & 1U) {
          s.member_[i] = 1;
        }
      }
      return s;
    }

    static ElementSubset from_elements(std::size_t              universe,
                                       std::span<element_t const> xs) {
      ElementSubset s(universe);
      for (auto x : xs) {
        s.insert(x);
      }
      return s;
    }

    std::size_t universe() const noexcept {
      return member_.size();
    }

    bool contains(element_t x) const {
      return x < member_.size() && member_[x] != 0;
    }

    void insert(element_t x) {
      if (x >= member_.size()) {
        throw PreconditionError("element " + std::to_string(x)
                                + " out of range for a universe of size "
                                + std::to_string(member_.size()));
      }
      member_[x] = 1;
    }

    void erase(element_t x) {
      if (x < member_.size()) {
        member_[x] = 0;
      }
    }

    std::size_t size() const noexcept {
      return static_cast<std::size_t>(
          std::count(member_.begin(), member_.end(), char{1}));
    }

    bool empty() const noexcept {
      return size() == 0;
    }

    std::vector<element_t> elements() const {
      std::vector<element_t> out;
      for (std::size_t i = 0; i < member_.size(); ++i) {
        if (member_[i] != 0) {
          out.push_back(static_cast<element_t>(i));
        }
      }
      return out;
    }

    bool is_subset_of(ElementSubset const& that) const {
      for (std::size_t i = 0; i < member_.size(); ++i) {
        if (member_[i] != 0 && !that.contains(static_cast<element_t>(i))) {
          return false;
        }
      }
      return true;
    }

    ElementSubset intersect(ElementSubset const& that) const {
      ElementSubset out(member_.size());
      for (std::size_t i = 0; i < member_.size(); ++i) {
        out.member_[i] = member_[i] & (that.contains(static_cast<element_t>(i))
                                           ? char{1}
                                           : char{0});
      }
      return out;
    }

    ElementSubset unite(ElementSubset const& that) const {
      ElementSubset out(*this);
      for (auto x : that.elements()) {
        out.insert(x);
      }
      return out;
    }

    // Sorted index list, e.g. "{0, 2}".
    std::string to_string() const {
      std::string out = "{";
      bool        first = true;
      for (auto x : elements()) {
        if (!first) {
          out += ", ";
        }
        first = false;
        out += std::to_string(x);
      }
      return out + "}";
    }

    friend bool operator==(ElementSubset const&, ElementSubset const&)
        = default;
    friend auto operator<=>(ElementSubset const&, ElementSubset const&)
        = default;

   private:
    std::vector<char> member_;
  };

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  using CayleyTable = std::vector<std::vector<element_t>>;

  // Returns the first triple (a, b, c), in lexicographic order, with
  // (ab)c != a(bc). The table must be square with in-range entries.
  inline std::optional<std::array<std::size_t, 3>>
  first_associativity_violation(CayleyTable const& t) {
    std::size_t const n = t.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            return std::array<std::size_t, 3>{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  // An associative Cayley table on the elements 0, ..., n - 1. Instances
  // can only be obtained through validate, so every value is a semigroup.
  class FiniteSemigroup {
   public:
    // Checks shape, range and associativity. Throws InvalidTable (or
    // NotAssociative carrying the first violating triple).
    static FiniteSemigroup validate(CayleyTable const& table) {
      std::size_t const n = table.size();
      if (n == 0) {
        throw InvalidTable("a semigroup needs at least one element");
      }
      for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) {
          throw InvalidTable("row " + std::to_string(a) + " has "
                             + std::to_string(table[a].size())
                             + " entries, expected " + std::to_string(n));
        }
        for (auto v : table[a]) {
          if (v >= n) {
            throw InvalidTable("entry " + std::to_string(v)
                               + " out of range in row " + std::to_string(a));
          }
        }
      }
      if (auto bad = first_associativity_violation(table)) {
        throw NotAssociative((*bad)[0], (*bad)[1], (*bad)[2]);
      }
      FiniteSemigroup s;
      s.order_ = n;
      s.flat_.reserve(n * n);
      for (auto const& row : table) {
        s.flat_.insert(s.flat_.end(), row.begin(), row.end());
      }
      return s;
    }

    std::size_t order() const noexcept {
      return order_;
    }

    element_t product(element_t a, element_t b) const noexcept {
      return flat_[a * order_ + b];
    }

    CayleyTable table() const {
      CayleyTable t(order_, std::vector<element_t>(order_));
      for (std::size_t a = 0; a < order_; ++a) {
        for (std::size_t b = 0; b < order_; ++b) {
          t[a][b] = flat_[a * order_ + b];
        }
      }
      return t;
    }

    // Row-major view of the table.
    std::span<element_t const> flat() const noexcept {
      return flat_;
    }

    friend bool operator==(FiniteSemigroup const&, FiniteSemigroup const&)
        = default;

   private:
    FiniteSemigroup() = default;

    std::size_t            order_ = 0;
    std::vector<element_t> flat_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Subset algebra and ideal predicates
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void require_universe(FiniteSemigroup const& S,
                                 ElementSubset const&   A) {
      if (A.universe() != S.order()) {
        throw MismatchError("subset universe " + std::to_string(A.universe())
                            + " does not match semigroup order "
                            + std::to_string(S.order()));
      }
    }

    inline void require_nonempty(ElementSubset const& A, char const* what) {
      if (A.empty()) {
        throw PreconditionError(std::string(what)
                                + ": the empty subset is not a valid query");
      }
    }
  }  // namespace detail

  // {ab : a in A, b in B}.
  inline ElementSubset subset_product(FiniteSemigroup const& S,
                                      ElementSubset const&   A,
                                      ElementSubset const&   B) {
    detail::require_universe(S, A);
    detail::require_universe(S, B);
    ElementSubset out(S.order());
    auto const    bs = B.elements();
    for (auto a : A.elements()) {
      for (auto b : bs) {
        out.insert(S.product(a, b));
      }
    }
    return out;
  }

  inline bool is_subsemigroup(FiniteSemigroup const& S,
                              ElementSubset const&   A) {
    detail::require_nonempty(A, "is_subsemigroup");
    return subset_product(S, A, A).is_subset_of(A);
  }

  inline bool is_left_ideal(FiniteSemigroup const& S, ElementSubset const& A) {
    detail::require_nonempty(A, "is_left_ideal");
    return subset_product(S, ElementSubset::all(S.order()), A).is_subset_of(A);
  }

  inline bool is_right_ideal(FiniteSemigroup const& S, ElementSubset const& A) {
    detail::require_nonempty(A, "is_right_ideal");
    return subset_product(S, A, ElementSubset::all(S.order())).is_subset_of(A);
  }

  inline bool is_ideal(FiniteSemigroup const& S, ElementSubset const& A) {
    return is_left_ideal(S, A) && is_right_ideal(S, A);
  }

  // QS ∩ SQ ⊆ Q, with no identity adjoined.
  inline bool is_quasi_ideal(FiniteSemigroup const& S, ElementSubset const& Q) {
    detail::require_nonempty(Q, "is_quasi_ideal");
    auto const all = ElementSubset::all(S.order());
    return subset_product(S, Q, all)
        .intersect(subset_product(S, all, Q))
        .is_subset_of(Q);
  }

  ////////////////////////////////////////////////////////////////////////
  // Element-wise predicates
  ////////////////////////////////////////////////////////////////////////

  inline ElementSubset idempotents(FiniteSemigroup const& S) {
    ElementSubset out(S.order());
    for (element_t a = 0; a < S.order(); ++a) {
      if (S.product(a, a) == a) {
        out.insert(a);
      }
    }
    return out;
  }

  // Every a has some x with axa = a.
  inline bool is_regular(FiniteSemigroup const& S) {
    for (element_t a = 0; a < S.order(); ++a) {
      bool found = false;
      for (element_t x = 0; x < S.order() && !found; ++x) {
        found = S.product(S.product(a, x), a) == a;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  // Every a has some x with a = x a^2.
  inline bool is_left_regular(FiniteSemigroup const& S) {
    for (element_t a = 0; a < S.order(); ++a) {
      element_t const aa    = S.product(a, a);
      bool            found = false;
      for (element_t x = 0; x < S.order() && !found; ++x) {
        found = S.product(x, aa) == a;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  // Every a has some x with axa = a and ax = xa.
  inline bool is_completely_regular(FiniteSemigroup const& S) {
    for (element_t a = 0; a < S.order(); ++a) {
      bool found = false;
      for (element_t x = 0; x < S.order() && !found; ++x) {
        found = S.product(a, x) == S.product(x, a)
                && S.product(S.product(a, x), a) == a;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  // Sa = S for every a.
  inline bool is_left_simple(FiniteSemigroup const& S) {
    for (element_t a = 0; a < S.order(); ++a) {
      ElementSubset Sa(S.order());
      for (element_t s = 0; s < S.order(); ++s) {
        Sa.insert(S.product(s, a));
      }
      if (Sa.size() != S.order()) {
        return false;
      }
    }
    return true;
  }

  // The two-sided ideal S^1 a S^1 is all of S for every a.
  inline bool is_simple(FiniteSemigroup const& S) {
    std::size_t const n = S.order();
    for (element_t a = 0; a < n; ++a) {
      ElementSubset J(n, {a});
      for (element_t s = 0; s < n; ++s) {
        J.insert(S.product(s, a));
        J.insert(S.product(a, s));
        for (element_t t = 0; t < n; ++t) {
          J.insert(S.product(S.product(s, a), t));
        }
      }
      if (J.size() != n) {
        return false;
      }
    }
    return true;
  }

  // Simple with an idempotent; equivalent to complete simplicity when S is
  // finite.
  inline bool is_completely_simple(FiniteSemigroup const& S) {
    return is_simple(S) && !idempotents(S).empty();
  }

  // Simple with a primitive idempotent: an idempotent e such that every
  // idempotent f with ef = fe = f equals e.
  inline bool is_completely_simple_primitive(FiniteSemigroup const& S) {
    if (!is_simple(S)) {
      return false;
    }
    auto const es = idempotents(S).elements();
    return std::any_of(es.begin(), es.end(), [&](element_t e) {
      return std::all_of(es.begin(), es.end(), [&](element_t f) {
        return !(S.product(e, f) == f && S.product(f, e) == f) || f == e;
      });
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Restriction to a subsemigroup
  ////////////////////////////////////////////////////////////////////////

  // The Cayley table of a subsemigroup A, relabelled 0..|A|-1 in increasing
  // order of the original indices. elements[i] is the original element.
  struct Restriction {
    FiniteSemigroup        semigroup;
    std::vector<element_t> elements;
  };

  inline Restriction restrict_to(FiniteSemigroup const& S,
                                 ElementSubset const&   A) {
    detail::require_universe(S, A);
    detail::require_nonempty(A, "restrict_to");
    auto const             members = A.elements();
    std::vector<element_t> index(S.order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      index[members[i]] = static_cast<element_t>(i);
    }
    CayleyTable t(members.size(), std::vector<element_t>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        element_t const p = S.product(members[i], members[j]);
        if (!A.contains(p)) {
          throw PreconditionError("restrict_to: " + A.to_string()
                                  + " is not closed under the product");
        }
        t[i][j] = index[p];
      }
    }
    return {FiniteSemigroup::validate(t), members};
  }

  ////////////////////////////////////////////////////////////////////////
  // Exhaustive subset enumerations
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    template <typename Pred>
    std::vector<ElementSubset> filter_subsets(FiniteSemigroup const& S,
                                              std::size_t            bound,
                                              char const*            what,
                                              Pred&&                 pred) {
      if (S.order() > bound || S.order() > 63) {
        throw BudgetExceeded(std::string(what) + ": order "
                             + std::to_string(S.order())
                             + " exceeds the subset enumeration bound "
                             + std::to_string(bound));
      }
      std::vector<ElementSubset> out;
      std::uint64_t const        top = std::uint64_t{1} << S.order();
      for (std::uint64_t mask = 1; mask < top; ++mask) {
        auto A = ElementSubset::from_mask(S.order(), mask);
        if (pred(A)) {
          out.push_back(std::move(A));
        }
      }
      return out;
    }
  }  // namespace detail

  inline std::vector<ElementSubset>
  all_subsemigroups(FiniteSemigroup const& S,
                    std::size_t            bound = default_subset_bound) {
    return detail::filter_subsets(S, bound, "all_subsemigroups", [&](auto& A) {
      return is_subsemigroup(S, A);
    });
  }

  inline std::vector<ElementSubset>
  all_left_ideals(FiniteSemigroup const& S,
                  std::size_t            bound = default_subset_bound) {
    return detail::filter_subsets(S, bound, "all_left_ideals", [&](auto& A) {
      return is_left_ideal(S, A);
    });
  }

  inline std::vector<ElementSubset>
  all_right_ideals(FiniteSemigroup const& S,
                   std::size_t            bound = default_subset_bound) {
    return detail::filter_subsets(S, bound, "all_right_ideals", [&](auto& A) {
      return is_right_ideal(S, A);
    });
  }

  inline std::vector<ElementSubset>
  all_quasi_ideals(FiniteSemigroup const& S,
                   std::size_t            bound = default_subset_bound) {
    return detail::filter_subsets(S, bound, "all_quasi_ideals", [&](auto& A) {
      return is_quasi_ideal(S, A);
    });
  }

}  // namespace fuzzysg
