#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>

#include "error.hpp"
#include "semigroup.hpp"

namespace fuzzysg {

  using level_t = std::uint32_t;

  // The finite chain 0 < 1/k < ... < k/k standing in for [0, 1]. Values are
  // handled as integer levels 0..k; the meet is min.
  class ValueChain {
   public:
    explicit ValueChain(level_t resolution) : k_(resolution) {
      if (k_ < 1) {
        throw PreconditionError("a value chain needs resolution k >= 1");
      }
    }

    level_t resolution() const noexcept {
      return k_;
    }

    level_t top() const noexcept {
      return k_;
    }

    // Number of levels, k + 1.
    std::size_t size() const noexcept {
      return static_cast<std::size_t>(k_) + 1;
    }

    static level_t meet(level_t i, level_t j) noexcept {
      return std::min(i, j);
    }

    // Exact rational label of a level, reduced: "0", "1/2", "1".
    std::string label(level_t i) const {
      if (i > k_) {
        throw PreconditionError("level " + std::to_string(i)
                                + " exceeds the chain top "
                                + std::to_string(k_));
      }
      auto const g = std::gcd(i, k_);
      if (i == 0) {
        return "0";
      }
      if (i / g == k_ / g) {
        return "1";
      }
      return std::to_string(i / g) + "/" + std::to_string(k_ / g);
    }

    friend bool operator==(ValueChain const&, ValueChain const&) = default;

   private:
    level_t k_;
  };

  // The direct product S x chain under (a, i)(b, j) = (ab, min(i, j)).
  // When include_zero is false the level 0 is dropped (S x I*).
  // Pair (a, i) has index a * level_count + (i - lowest_level).
  class ChainProduct {
   public:
    ChainProduct(FiniteSemigroup const& S, ValueChain chain, bool include_zero)
        : chain_(chain),
          lowest_(include_zero ? 0 : 1),
          levels_(chain.size() - (include_zero ? 0 : 1)),
          semigroup_(build(S, chain_, lowest_, levels_)) {}

    FiniteSemigroup const& semigroup() const noexcept {
      return semigroup_;
    }

    ValueChain const& chain() const noexcept {
      return chain_;
    }

    level_t lowest_level() const noexcept {
      return lowest_;
    }

    std::size_t level_count() const noexcept {
      return levels_;
    }

    element_t index(element_t a, level_t level) const {
      if (level < lowest_ || level > chain_.top()) {
        throw PreconditionError("level " + std::to_string(level)
                                + " is not part of this product");
      }
      return static_cast<element_t>(a * levels_ + (level - lowest_));
    }

    element_t element_of(element_t index) const noexcept {
      return static_cast<element_t>(index / levels_);
    }

    level_t level_of(element_t index) const noexcept {
      return static_cast<level_t>(index % levels_) + lowest_;
    }

   private:
    static FiniteSemigroup build(FiniteSemigroup const& S,
                                 ValueChain const&      chain,
                                 level_t                lowest,
                                 std::size_t            levels) {
      if (chain.size() < 2) {
        throw PreconditionError("product_with_chain needs at least 2 levels");
      }
      std::size_t const n = S.order() * levels;
      CayleyTable       t(n, std::vector<element_t>(n));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          auto const a = static_cast<element_t>(x / levels);
          auto const b = static_cast<element_t>(y / levels);
          auto const i = static_cast<level_t>(x % levels) + lowest;
          auto const j = static_cast<level_t>(y % levels) + lowest;
          t[x][y]      = static_cast<element_t>(
              S.product(a, b) * levels + (ValueChain::meet(i, j) - lowest));
        }
      }
      return FiniteSemigroup::validate(t);
    }

    ValueChain      chain_;
    level_t         lowest_;
    std::size_t     levels_;
    FiniteSemigroup semigroup_;
  };

  inline ChainProduct product_with_chain(FiniteSemigroup const& S,
                                         ValueChain const&      chain,
                                         bool                   include_zero) {
    return ChainProduct(S, chain, include_zero);
  }

}  // namespace fuzzysg
