#pragma once

// Shared fixtures and brute-force oracles for the test suites. The oracles
// recompute their answers from definitions and deliberately avoid the
// library routines they are used to check.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <fuzzysg/fuzzysg.hpp>

namespace fuzzysg::testing {

  inline FiniteSemigroup LZ(std::size_t n) {
    return catalog({CatalogFamily::left_zero, n, 1});
  }
  inline FiniteSemigroup RZ(std::size_t n) {
    return catalog({CatalogFamily::right_zero, n, 1});
  }
  inline FiniteSemigroup NULLS(std::size_t n) {
    return catalog({CatalogFamily::null, n, 1});
  }
  inline FiniteSemigroup Z(std::size_t n) {
    return catalog({CatalogFamily::cyclic_group, n, 1});
  }
  inline FiniteSemigroup CHAIN(std::size_t n) {
    return catalog({CatalogFamily::chain_semilattice, n, 1});
  }
  inline FiniteSemigroup RB(std::size_t p, std::size_t q) {
    return catalog({CatalogFamily::rectangular_band, p, q});
  }
  inline FiniteSemigroup trivial() {
    return FiniteSemigroup::validate({{0}});
  }

  // All iso classes of order 1..max_order.
  inline std::vector<FiniteSemigroup> small_semigroups(std::size_t max_order) {
    std::vector<FiniteSemigroup> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto more = enumerate_semigroups(n, Dedup::iso);
      out.insert(out.end(), more.begin(), more.end());
    }
    return out;
  }

  // Number of associative n x n tables, by scanning all n^(n^2) tables.
  inline std::size_t naive_associative_count(std::size_t n) {
    std::size_t const      cells = n * n;
    std::vector<std::size_t> t(cells, 0);
    std::size_t            count = 0;
    while (true) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          for (std::size_t c = 0; c < n && ok; ++c) {
            ok = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
          }
        }
      }
      count += ok ? 1 : 0;
      std::size_t i = 0;
      while (i < cells && ++t[i] == n) {
        t[i++] = 0;
      }
      if (i == cells) {
        return count;
      }
    }
  }

  // (f ∘ g)(a) from the explicit list of factorizations of a.
  inline std::vector<level_t> naive_composite(FiniteSemigroup const&      S,
                                              std::vector<level_t> const& f,
                                              std::vector<level_t> const& g) {
    std::vector<level_t> out(S.order(), 0);
    for (element_t a = 0; a < S.order(); ++a) {
      std::vector<std::pair<element_t, element_t>> factorizations;
      for (element_t b = 0; b < S.order(); ++b) {
        for (element_t c = 0; c < S.order(); ++c) {
          if (S.product(b, c) == a) {
            factorizations.emplace_back(b, c);
          }
        }
      }
      level_t best = 0;
      for (auto [b, c] : factorizations) {
        best = std::max(best, std::min(f[b], g[c]));
      }
      out[a] = factorizations.empty() ? 0 : best;
    }
    return out;
  }

  inline std::vector<level_t> values(FuzzySubset const& f) {
    return {f.values().begin(), f.values().end()};
  }

  // Every level vector over n elements and resolution k.
  inline void for_each_level_vector(std::size_t n, level_t k,
                                    std::function<void(std::vector<level_t> const&)> const& fn) {
    std::vector<level_t> v(n, 0);
    while (true) {
      fn(v);
      std::size_t i = 0;
      while (i < n && ++v[i] > k) {
        v[i++] = 0;
      }
      if (i == n) {
        return;
      }
    }
  }

  // Every nonempty subset of 0..n-1 as a mask.
  inline std::vector<std::uint64_t> nonempty_masks(std::size_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      out.push_back(m);
    }
    return out;
  }

}  // namespace fuzzysg::testing
