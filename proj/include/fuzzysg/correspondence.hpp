#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "congruence.hpp"
#include "error.hpp"
#include "fuzzy.hpp"
#include "semigroup.hpp"

namespace fuzzysg {

  ////////////////////////////////////////////////////////////////////////
  // ProductRegion
  ////////////////////////////////////////////////////////////////////////

  // A set of pairs (element, level) in S x chain. Membership is stored over
  // the element indices of product_with_chain(S, chain, true), so a region
  // is also an ElementSubset of that semigroup.
  class ProductRegion {
   public:
    ProductRegion(FiniteSemigroup const& host, ValueChain chain)
        : host_(&host),
          chain_(chain),
          pairs_(host.order() * chain.size()) {}

    ProductRegion(FiniteSemigroup const& host,
                  ValueChain             chain,
                  ElementSubset          pairs)
        : host_(&host), chain_(chain), pairs_(std::move(pairs)) {
      if (pairs_.universe() != host.order() * chain.size()) {
        throw PreconditionError("region universe does not match S x chain");
      }
    }

    FiniteSemigroup const& host() const noexcept {
      return *host_;
    }

    ValueChain const& chain() const noexcept {
      return chain_;
    }

    ElementSubset const& as_subset() const noexcept {
      return pairs_;
    }

    element_t index(element_t a, level_t t) const {
      if (a >= host_->order() || t > chain_.top()) {
        throw PreconditionError("pair (" + std::to_string(a) + ", "
                                + std::to_string(t) + ") out of range");
      }
      return static_cast<element_t>(a * chain_.size() + t);
    }

    bool contains(element_t a, level_t t) const {
      return pairs_.contains(index(a, t));
    }

    void insert(element_t a, level_t t) {
      pairs_.insert(index(a, t));
    }

    bool empty() const noexcept {
      return pairs_.empty();
    }

    // Largest level in the fiber over a, or nullopt for an empty fiber.
    std::optional<level_t> fiber_max(element_t a) const {
      std::optional<level_t> best;
      for (level_t t = 0; t <= chain_.top(); ++t) {
        if (contains(a, t)) {
          best = t;
        }
      }
      return best;
    }

    // Sorted (element, level) pairs.
    std::vector<std::pair<element_t, level_t>> pairs() const {
      std::vector<std::pair<element_t, level_t>> out;
      for (auto x : pairs_.elements()) {
        out.emplace_back(static_cast<element_t>(x / chain_.size()),
                         static_cast<level_t>(x % chain_.size()));
      }
      return out;
    }

    std::string to_string() const {
      std::string out;
      for (auto [a, t] : pairs()) {
        if (!out.empty()) {
          out += " ";
        }
        out += "(" + std::to_string(a) + "," + std::to_string(t) + ")";
      }
      return out;
    }

    friend bool operator==(ProductRegion const& x, ProductRegion const& y) {
      return x.chain_ == y.chain_
             && (x.host_ == y.host_ || *x.host_ == *y.host_)
             && x.pairs_ == y.pairs_;
    }

   private:
    FiniteSemigroup const* host_;
    ValueChain             chain_;
    ElementSubset          pairs_;
  };

  // {(b, y) : y <= f(b)}.
  inline ProductRegion graph_region(FuzzySubset const& f) {
    ProductRegion out(f.host(), f.chain());
    for (element_t b = 0; b < f.host().order(); ++b) {
      for (level_t y = 0; y <= f(b); ++y) {
        out.insert(b, y);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Condition systems
  ////////////////////////////////////////////////////////////////////////

  enum class RegionKind { subsemigroup, left_ideal, right_ideal, quasi_ideal };

  inline std::string_view to_string(RegionKind kind) {
    switch (kind) {
      case RegionKind::subsemigroup:
        return "subsemigroup";
      case RegionKind::left_ideal:
        return "left-ideal";
      case RegionKind::right_ideal:
        return "right-ideal";
      case RegionKind::quasi_ideal:
        return "quasi-ideal";
    }
    return "?";
  }

  inline FuzzyFilter fuzzy_filter_for(RegionKind kind) {
    switch (kind) {
      case RegionKind::subsemigroup:
        return FuzzyFilter::subsemigroup;
      case RegionKind::left_ideal:
        return FuzzyFilter::left_ideal;
      case RegionKind::right_ideal:
        return FuzzyFilter::right_ideal;
      case RegionKind::quasi_ideal:
        return FuzzyFilter::quasi_ideal;
    }
    return FuzzyFilter::none;
  }

  // Per-condition outcome. `closed` is the algebraic requirement on the
  // region inside S x chain (subsemigroup, left/right ideal or quasi-ideal);
  // `dominance` is the factorization condition and is only evaluated for
  // quasi-ideals (true otherwise).
  struct RegionConditions {
    bool closed        = false;
    bool projection    = false;  // first projection is all of S
    bool max_attained  = false;  // each fiber contains its supremum
    bool down_closed   = false;  // each fiber is {0, ..., max}
    bool dominance     = true;

    bool holds() const noexcept {
      return closed && projection && max_attained && down_closed && dominance;
    }
  };

  namespace detail {
    inline bool region_closed(ChainProduct const&  P,
                              ProductRegion const& region,
                              RegionKind           kind) {
      if (region.empty()) {
        return false;
      }
      auto const& T = P.semigroup();
      auto const& A = region.as_subset();
      switch (kind) {
        case RegionKind::subsemigroup:
          return is_subsemigroup(T, A);
        case RegionKind::left_ideal:
          return is_left_ideal(T, A);
        case RegionKind::right_ideal:
          return is_right_ideal(T, A);
        case RegionKind::quasi_ideal:
          return is_quasi_ideal(T, A);
      }
      return false;
    }

    // For every a with factorizations a = b_i c_i: max(a) >= max(b_i) for
    // all i, or max(a) >= max(c_i) for all i. Empty fibers count as 0.
    inline bool factorization_dominance(ProductRegion const& region) {
      auto const& S = region.host();
      std::vector<level_t> m(S.order(), 0);
      for (element_t a = 0; a < S.order(); ++a) {
        m[a] = region.fiber_max(a).value_or(0);
      }
      for (element_t a = 0; a < S.order(); ++a) {
        bool left_ok  = true;
        bool right_ok = true;
        for (element_t b = 0; b < S.order(); ++b) {
          for (element_t c = 0; c < S.order(); ++c) {
            if (S.product(b, c) != a) {
              continue;
            }
            left_ok  = left_ok && m[a] >= m[b];
            right_ok = right_ok && m[a] >= m[c];
          }
        }
        if (!left_ok && !right_ok) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  inline RegionConditions region_conditions(ChainProduct const&  P,
                                            ProductRegion const& region,
                                            RegionKind           kind) {
    RegionConditions r;
    auto const&      S = region.host();
    r.closed           = detail::region_closed(P, region, kind);
    r.projection       = true;
    r.max_attained     = true;
    r.down_closed      = true;
    for (element_t a = 0; a < S.order(); ++a) {
      auto const top = region.fiber_max(a);
      if (!top) {
        r.projection = false;
        continue;
      }
      // The supremum of a finite fiber is its maximum, which by construction
      // belongs to the fiber.
      r.max_attained = r.max_attained && region.contains(a, *top);
      for (level_t y = 0; y <= *top; ++y) {
        r.down_closed = r.down_closed && region.contains(a, y);
      }
    }
    if (kind == RegionKind::quasi_ideal) {
      r.dominance = detail::factorization_dominance(region);
    }
    return r;
  }

  inline RegionConditions region_conditions(ProductRegion const& region,
                                            RegionKind           kind) {
    return region_conditions(
        product_with_chain(region.host(), region.chain(), true), region, kind);
  }

  inline bool check_s_conditions(ProductRegion const& region) {
    return region_conditions(region, RegionKind::subsemigroup).holds();
  }

  inline bool check_l_conditions(ProductRegion const& region) {
    return region_conditions(region, RegionKind::left_ideal).holds();
  }

  inline bool check_r_conditions(ProductRegion const& region) {
    return region_conditions(region, RegionKind::right_ideal).holds();
  }

  inline bool check_q_conditions(ProductRegion const& region) {
    return region_conditions(region, RegionKind::quasi_ideal).holds();
  }

  ////////////////////////////////////////////////////////////////////////
  // The inverse construction
  ////////////////////////////////////////////////////////////////////////

  // σ(a) = max of the fiber over a, or 0 when the fiber is empty. The region
  // must be a subsemigroup of S x chain. Afterwards σ is a fuzzy
  // subsemigroup and region ⊆ graph_region(σ); both are asserted.
  inline FuzzySubset region_to_fuzzy(ChainProduct const&  P,
                                     ProductRegion const& region) {
    if (!detail::region_closed(P, region, RegionKind::subsemigroup)) {
      throw PreconditionError(
          "region_to_fuzzy: region is not a subsemigroup of S x chain");
    }
    auto const&          S = region.host();
    std::vector<level_t> v(S.order(), 0);
    for (element_t a = 0; a < S.order(); ++a) {
      v[a] = region.fiber_max(a).value_or(0);
    }
    FuzzySubset sigma(S, region.chain(), std::move(v));
    if (!is_fuzzy_subsemigroup(sigma)) {
      throw InternalError("region_to_fuzzy: result is not a fuzzy subsemigroup");
    }
    if (!region.as_subset().is_subset_of(graph_region(sigma).as_subset())) {
      throw InternalError("region_to_fuzzy: region not contained in its graph");
    }
    return sigma;
  }

  inline FuzzySubset region_to_fuzzy(ProductRegion const& region) {
    return region_to_fuzzy(
        product_with_chain(region.host(), region.chain(), true), region);
  }

  ////////////////////////////////////////////////////////////////////////
  // Bijection sweep
  ////////////////////////////////////////////////////////////////////////

  // Largest |S| * (k + 1) for which every subset of S x chain is scanned as a
  // candidate region; above it candidates are generated from fiber-max
  // vectors.
  inline constexpr std::size_t default_region_bits = 16;

  struct FamilyBijection {
    RegionKind  kind;
    std::size_t fuzzy_count     = 0;  // members of the fuzzy family
    std::size_t region_count    = 0;  // regions satisfying the conditions
    bool        images_satisfy  = true;
    bool        injective       = true;
    bool        surjective      = true;
    bool        round_trip_a    = true;  // region_to_fuzzy(graph_region(f)) = f
    bool        round_trip_b    = true;  // graph_region(region_to_fuzzy(Σ)) = Σ
    std::string witness;

    bool ok() const noexcept {
      return images_satisfy && injective && surjective && round_trip_a
             && round_trip_b && fuzzy_count == region_count;
    }
  };

  struct BijectionReport {
    std::vector<FamilyBijection> families;
    bool                         exhaustive_regions = false;
    std::size_t                  subsemigroup_regions = 0;
    bool                         containment = true;  // Σ ⊆ graph(σ(Σ))
    std::string                  witness;

    bool ok() const noexcept {
      return containment
             && std::all_of(families.begin(), families.end(),
                            [](auto const& f) { return f.ok(); });
    }
  };

  namespace detail {
    inline void note(std::string& witness, std::string const& what) {
      if (witness.empty()) {
        witness = what;
      }
    }
  }  // namespace detail

  // Checks that graph_region restricted to each fuzzy family is a bijection
  // onto the regions satisfying the matching condition system, with both
  // round trips.
  inline BijectionReport
  verify_bijections(FiniteSemigroup const& S,
                    ValueChain const&      chain,
                    std::uint64_t          budget      = default_fuzzy_budget,
                    std::size_t            region_bits = default_region_bits) {
    BijectionReport report;
    auto const      P    = product_with_chain(S, chain, true);
    std::size_t const bits = S.order() * chain.size();

    // Candidate regions. Exhaustive mode scans every nonempty subset of
    // S x chain; otherwise the graph of every level vector is a candidate,
    // which covers all regions with down-closed, nonempty fibers.
    std::vector<ProductRegion> candidates;
    if (bits <= region_bits && bits < 63) {
      report.exhaustive_regions = true;
      std::uint64_t const top   = std::uint64_t{1} << bits;
      if (top > budget) {
        throw BudgetExceeded("verify_bijections: 2^" + std::to_string(bits)
                             + " candidate regions exceed the budget");
      }
      for (std::uint64_t mask = 1; mask < top; ++mask) {
        candidates.emplace_back(S, chain, ElementSubset::from_mask(bits, mask));
      }
    } else {
      for_each_fuzzy_subset(
          S, chain, FuzzyFilter::none,
          [&](FuzzySubset const& f) { candidates.push_back(graph_region(f)); },
          budget);
    }

    // Monotone containment over every subsemigroup region.
    for (auto const& region : candidates) {
      if (!detail::region_closed(P, region, RegionKind::subsemigroup)) {
        continue;
      }
      ++report.subsemigroup_regions;
      auto const sigma = region_to_fuzzy(P, region);
      if (!region.as_subset().is_subset_of(graph_region(sigma).as_subset())) {
        report.containment = false;
        detail::note(report.witness, "containment fails for " + region.to_string());
      }
    }

    for (auto kind : {RegionKind::subsemigroup,
                      RegionKind::left_ideal,
                      RegionKind::right_ideal,
                      RegionKind::quasi_ideal}) {
      FamilyBijection fb{};
      fb.kind = kind;
      auto const      family
          = enumerate_fuzzy_subsets(S, chain, fuzzy_filter_for(kind), budget);
      fb.fuzzy_count = family.size();

      std::set<ElementSubset> images;
      for (auto const& f : family) {
        auto const region = graph_region(f);
        if (!region_conditions(P, region, kind).holds()) {
          fb.images_satisfy = false;
          detail::note(fb.witness, "image of " + f.to_string()
                                       + " fails the conditions");
        }
        if (!images.insert(region.as_subset()).second) {
          fb.injective = false;
          detail::note(fb.witness, "two fuzzy subsets share the image "
                                       + region.to_string());
        }
        if (!(region_to_fuzzy(P, region) == f)) {
          fb.round_trip_a = false;
          detail::note(fb.witness, "round trip A fails for " + f.to_string());
        }
      }

      for (auto const& region : candidates) {
        if (!region_conditions(P, region, kind).holds()) {
          continue;
        }
        ++fb.region_count;
        auto const sigma = region_to_fuzzy(P, region);
        if (!(graph_region(sigma) == region)) {
          fb.round_trip_b = false;
          detail::note(fb.witness,
                       "round trip B fails for " + region.to_string());
        }
        if (!passes(sigma, fuzzy_filter_for(kind))
            || images.count(region.as_subset()) == 0) {
          fb.surjective = false;
          detail::note(fb.witness, "region " + region.to_string()
                                       + " has no preimage in the family");
        }
      }
      report.families.push_back(std::move(fb));
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Level components
  ////////////////////////////////////////////////////////////////////////

  // f_(α,t) = (f_α)_t x {t}, stored over the indices of
  // product_with_chain(S, chain, false).
  struct LevelComponent {
    element_t     alpha;
    level_t       level;
    ElementSubset carrier;
  };

  struct LevelComponents {
    std::vector<LevelComponent> components;
    // Decomposition of S x I* indexed by Y x {1..k} under (α,t)(β,u) =
    // (αβ, min(t,u)); index of (α, t) is α * k + (t - 1).
    std::optional<Decomposition> decomposition;
    bool                          disjoint = false;
    bool                          products = false;
    bool                          covering = false;
    std::string                   witness;

    bool ok() const noexcept {
      return disjoint && products && covering && decomposition.has_value();
    }
  };

  inline LevelComponents level_components(FiniteSemigroup const&       Y,
                                          std::span<FuzzySubset const> family) {
    auto const check = check_fuzzy_semilattice_family(Y, family);
    if (!check.holds()) {
      throw PreconditionError("level_components: not a fuzzy semilattice "
                              "family: "
                              + check.failure);
    }
    auto const&       S     = family[0].host();
    auto const&       chain = family[0].chain();
    level_t const     k     = chain.top();
    auto const        P     = product_with_chain(S, chain, false);
    std::size_t const N     = P.semigroup().order();

    LevelComponents out;
    for (element_t alpha = 0; alpha < Y.order(); ++alpha) {
      for (level_t t = 1; t <= k; ++t) {
        ElementSubset carrier(N);
        for (auto a : level_set(family[alpha], t).elements()) {
          carrier.insert(P.index(a, t));
        }
        out.components.push_back({alpha, t, std::move(carrier)});
      }
    }

    std::vector<int> hits(N, 0);
    for (auto const& c : out.components) {
      for (auto x : c.carrier.elements()) {
        ++hits[x];
      }
    }
    out.disjoint = std::all_of(hits.begin(), hits.end(),
                               [](int h) { return h <= 1; });
    out.covering = std::all_of(hits.begin(), hits.end(),
                               [](int h) { return h >= 1; });
    if (!out.disjoint) {
      detail::note(out.witness, "components overlap");
    }
    if (!out.covering) {
      detail::note(out.witness, "components do not cover S x I*");
    }

    auto component = [&](element_t alpha, level_t t) -> LevelComponent const& {
      return out.components[alpha * k + (t - 1)];
    };
    out.products = true;
    for (auto const& c : out.components) {
      for (auto const& d : out.components) {
        auto const& target = component(Y.product(c.alpha, d.alpha),
                                       std::min(c.level, d.level));
        if (!subset_product(P.semigroup(), c.carrier, d.carrier)
                 .is_subset_of(target.carrier)) {
          out.products = false;
          detail::note(out.witness,
                       "f_(" + std::to_string(c.alpha) + ","
                           + std::to_string(c.level) + ") f_("
                           + std::to_string(d.alpha) + ","
                           + std::to_string(d.level) + ") escapes its target");
        }
      }
    }

    // Index semilattice Y x (I*, min).
    std::size_t const M = Y.order() * k;
    CayleyTable       t(M, std::vector<element_t>(M));
    for (std::size_t x = 0; x < M; ++x) {
      for (std::size_t y = 0; y < M; ++y) {
        auto const alpha = static_cast<element_t>(x / k);
        auto const beta  = static_cast<element_t>(y / k);
        auto const u     = static_cast<level_t>(x % k);
        auto const v     = static_cast<level_t>(y % k);
        t[x][y] = static_cast<element_t>(Y.product(alpha, beta) * k
                                         + std::min(u, v));
      }
    }
    Decomposition d{FiniteSemigroup::validate(t), {}};
    for (auto const& c : out.components) {
      d.blocks.push_back(c.carrier);
    }
    if (is_valid_decomposition(P.semigroup(), d)) {
      out.decomposition = std::move(d);
    } else {
      detail::note(out.witness, "components do not form a semilattice "
                                "decomposition of S x I*");
    }
    return out;
  }

}  // namespace fuzzysg
