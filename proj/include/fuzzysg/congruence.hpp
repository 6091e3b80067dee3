#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"

namespace fuzzysg {

  namespace detail {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
      }

      std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      // Returns true if two distinct classes were merged.
      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        parent_[y] = x;
        return true;
      }

     private:
      std::vector<std::size_t> parent_;
    };
  }  // namespace detail

  // A partition of 0..n-1 stored as one class id per element. Class ids are
  // normalised to order of first appearance, so equal partitions compare
  // equal.
  class Congruence {
   public:
    explicit Congruence(std::vector<std::size_t> class_of)
        : class_of_(normalise(std::move(class_of))) {}

    static Congruence identity(std::size_t n) {
      std::vector<std::size_t> ids(n);
      std::iota(ids.begin(), ids.end(), std::size_t{0});
      return Congruence(std::move(ids));
    }

    static Congruence universal(std::size_t n) {
      return Congruence(std::vector<std::size_t>(n, 0));
    }

    std::size_t size() const noexcept {
      return class_of_.size();
    }

    std::size_t class_of(element_t a) const {
      return class_of_.at(a);
    }

    std::size_t class_count() const noexcept {
      std::size_t m = 0;
      for (auto c : class_of_) {
        m = std::max(m, c + 1);
      }
      return m;
    }

    std::vector<ElementSubset> classes() const {
      std::vector<ElementSubset> out(class_count(),
                                     ElementSubset(class_of_.size()));
      for (std::size_t a = 0; a < class_of_.size(); ++a) {
        out[class_of_[a]].insert(static_cast<element_t>(a));
      }
      return out;
    }

    bool related(element_t a, element_t b) const {
      return class_of(a) == class_of(b);
    }

    friend bool operator==(Congruence const&, Congruence const&) = default;

   private:
    static std::vector<std::size_t> normalise(std::vector<std::size_t> ids) {
      std::vector<std::size_t> seen;
      for (auto& id : ids) {
        auto it = std::find(seen.begin(), seen.end(), id);
        if (it == seen.end()) {
          seen.push_back(id);
          id = seen.size() - 1;
        } else {
          id = static_cast<std::size_t>(it - seen.begin());
        }
      }
      return ids;
    }

    std::vector<std::size_t> class_of_;
  };

  // Whether the partition is compatible with left and right translations.
  inline bool is_congruence(FiniteSemigroup const& S, Congruence const& c) {
    if (c.size() != S.order()) {
      return false;
    }
    for (element_t a = 0; a < S.order(); ++a) {
      for (element_t b = a + 1; b < S.order(); ++b) {
        if (!c.related(a, b)) {
          continue;
        }
        for (element_t s = 0; s < S.order(); ++s) {
          if (!c.related(S.product(s, a), S.product(s, b))
              || !c.related(S.product(a, s), S.product(b, s))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Least congruence containing the given pairs: union-find closure
  // alternated with left/right translation until nothing merges.
  inline Congruence
  generated_congruence(FiniteSemigroup const&                         S,
                       std::vector<std::pair<element_t, element_t>> const& pairs) {
    std::size_t const n = S.order();
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw PreconditionError("generated_congruence: pair out of range");
      }
    }
    detail::UnionFind uf(n);
    for (auto [a, b] : pairs) {
      uf.unite(a, b);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (element_t a = 0; a < n; ++a) {
        element_t const root = static_cast<element_t>(uf.find(a));
        if (root == a) {
          continue;
        }
        for (element_t s = 0; s < n; ++s) {
          changed |= uf.unite(S.product(s, a), S.product(s, root));
          changed |= uf.unite(S.product(a, s), S.product(root, s));
        }
      }
    }
    std::vector<std::size_t> ids(n);
    for (std::size_t a = 0; a < n; ++a) {
      ids[a] = uf.find(a);
    }
    return Congruence(std::move(ids));
  }

  struct Quotient {
    FiniteSemigroup          semigroup;
    std::vector<element_t>   class_map;  // element -> quotient element
  };

  inline Quotient quotient(FiniteSemigroup const& S, Congruence const& c) {
    if (!is_congruence(S, c)) {
      throw PreconditionError("quotient: partition is not a congruence");
    }
    std::size_t const m = c.class_count();
    std::vector<element_t> rep(m, 0);
    for (element_t a = S.order(); a-- > 0;) {
      rep[c.class_of(a)] = a;
    }
    CayleyTable t(m, std::vector<element_t>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        t[i][j] = static_cast<element_t>(c.class_of(S.product(rep[i], rep[j])));
      }
    }
    std::vector<element_t> map(S.order());
    for (element_t a = 0; a < S.order(); ++a) {
      map[a] = static_cast<element_t>(c.class_of(a));
    }
    return {FiniteSemigroup::validate(t), std::move(map)};
  }

  // Commutative and every element idempotent.
  inline bool is_semilattice(FiniteSemigroup const& Y) {
    for (element_t a = 0; a < Y.order(); ++a) {
      if (Y.product(a, a) != a) {
        return false;
      }
      for (element_t b = a + 1; b < Y.order(); ++b) {
        if (Y.product(a, b) != Y.product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  inline Congruence least_semilattice_congruence(FiniteSemigroup const& S) {
    std::vector<std::pair<element_t, element_t>> gens;
    for (element_t a = 0; a < S.order(); ++a) {
      gens.emplace_back(a, S.product(a, a));
      for (element_t b = 0; b < S.order(); ++b) {
        gens.emplace_back(S.product(a, b), S.product(b, a));
      }
    }
    auto c = generated_congruence(S, gens);
    if (!is_semilattice(quotient(S, c).semigroup)) {
      throw InternalError(
          "least_semilattice_congruence: quotient is not a semilattice");
    }
    return c;
  }

  // Every congruence of S whose quotient is a semilattice, found by scanning
  // all set partitions (restricted growth strings). Bell(n) candidates.
  inline std::vector<Congruence>
  semilattice_congruences(FiniteSemigroup const& S,
                          std::size_t            bound = default_subset_bound) {
    std::size_t const n = S.order();
    if (n > bound) {
      throw BudgetExceeded("semilattice_congruences: order "
                           + std::to_string(n) + " exceeds the bound "
                           + std::to_string(bound));
    }
    std::vector<Congruence>  out;
    std::vector<std::size_t> rgs(n, 0);
    std::function<void(std::size_t, std::size_t)> rec
        = [&](std::size_t i, std::size_t used) {
            if (i == n) {
              Congruence c(rgs);
              if (is_congruence(S, c)
                  && is_semilattice(quotient(S, c).semigroup)) {
                out.push_back(std::move(c));
              }
              return;
            }
            for (std::size_t v = 0; v <= used && v < n; ++v) {
              rgs[i] = v;
              rec(i + 1, std::max(used, v + 1));
            }
          };
    if (n > 0) {
      rgs[0] = 0;
      rec(1, 1);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition
  ////////////////////////////////////////////////////////////////////////

  // S as a semilattice Y of subsemigroups: blocks[alpha] for alpha in Y.
  struct Decomposition {
    FiniteSemigroup            index;
    std::vector<ElementSubset> blocks;
  };

  // Checks the block invariants: partition, subsemigroups, block(α)block(β)
  // ⊆ block(αβ), and Y a semilattice.
  inline bool is_valid_decomposition(FiniteSemigroup const& S,
                                     Decomposition const&   d) {
    if (!is_semilattice(d.index) || d.blocks.size() != d.index.order()) {
      return false;
    }
    std::vector<int> hits(S.order(), 0);
    for (auto const& B : d.blocks) {
      if (B.universe() != S.order() || B.empty() || !is_subsemigroup(S, B)) {
        return false;
      }
      for (auto x : B.elements()) {
        ++hits[x];
      }
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
      return false;
    }
    for (element_t a = 0; a < d.index.order(); ++a) {
      for (element_t b = 0; b < d.index.order(); ++b) {
        if (!subset_product(S, d.blocks[a], d.blocks[b])
                 .is_subset_of(d.blocks[d.index.product(a, b)])) {
          return false;
        }
      }
    }
    return true;
  }

  inline Decomposition decomposition_from(FiniteSemigroup const& S,
                                          Congruence const&      c) {
    auto q = quotient(S, c);
    return {std::move(q.semigroup), c.classes()};
  }

  struct SemilatticeDecomposition {
    Decomposition     decomposition;
    std::vector<bool> left_simple;        // per block
    std::vector<bool> completely_simple;  // per block

    // Every block is left simple.
    bool semilattice_of_left_simple() const {
      return std::all_of(left_simple.begin(), left_simple.end(),
                         [](bool b) { return b; });
    }

    bool semilattice_of_completely_simple() const {
      return std::all_of(completely_simple.begin(), completely_simple.end(),
                         [](bool b) { return b; });
    }
  };

  // The decomposition induced by the least semilattice congruence, with the
  // simplicity of each block recorded.
  inline SemilatticeDecomposition
  semilattice_decomposition(FiniteSemigroup const& S) {
    SemilatticeDecomposition out{
        decomposition_from(S, least_semilattice_congruence(S)), {}, {}};
    for (auto const& B : out.decomposition.blocks) {
      auto const sub = restrict_to(S, B).semigroup;
      out.left_simple.push_back(is_left_simple(sub));
      out.completely_simple.push_back(is_completely_simple(sub));
    }
    if (!is_valid_decomposition(S, out.decomposition)) {
      throw InternalError("semilattice_decomposition: invalid decomposition");
    }
    return out;
  }

}  // namespace fuzzysg
