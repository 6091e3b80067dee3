#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"

namespace fuzzysg {

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  enum class CatalogFamily {
    left_zero,
    right_zero,
    null,
    cyclic_group,
    chain_semilattice,
    rectangular_band
  };

  struct CatalogSpec {
    CatalogFamily family;
    std::size_t   p = 1;
    std::size_t   q = 1;  // second parameter, rectangular_band only
  };

  inline std::string_view to_string(CatalogFamily family) {
    switch (family) {
      case CatalogFamily::left_zero:
        return "left_zero";
      case CatalogFamily::right_zero:
        return "right_zero";
      case CatalogFamily::null:
        return "null";
      case CatalogFamily::cyclic_group:
        return "cyclic_group";
      case CatalogFamily::chain_semilattice:
        return "chain_semilattice";
      case CatalogFamily::rectangular_band:
        return "rectangular_band";
    }
    return "?";
  }

  inline std::optional<CatalogFamily> parse_catalog_family(std::string_view s) {
    for (auto f : {CatalogFamily::left_zero,
                   CatalogFamily::right_zero,
                   CatalogFamily::null,
                   CatalogFamily::cyclic_group,
                   CatalogFamily::chain_semilattice,
                   CatalogFamily::rectangular_band}) {
      if (to_string(f) == s) {
        return f;
      }
    }
    return std::nullopt;
  }

  // "left_zero(2)", "rectangular_band(2,2)".
  inline std::string to_string(CatalogSpec const& spec) {
    std::string out = std::string(to_string(spec.family)) + "("
                      + std::to_string(spec.p);
    if (spec.family == CatalogFamily::rectangular_band) {
      out += "," + std::to_string(spec.q);
    }
    return out + ")";
  }

  inline FiniteSemigroup catalog(CatalogSpec const& spec) {
    if (spec.p == 0 || spec.q == 0) {
      throw PreconditionError("catalog: parameters must be positive");
    }
    std::size_t const n = spec.family == CatalogFamily::rectangular_band
                              ? spec.p * spec.q
                              : spec.p;
    CayleyTable t(n, std::vector<element_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t v = 0;
        switch (spec.family) {
          case CatalogFamily::left_zero:
            v = a;
            break;
          case CatalogFamily::right_zero:
            v = b;
            break;
          case CatalogFamily::null:
            v = 0;
            break;
          case CatalogFamily::cyclic_group:
            v = (a + b) % n;
            break;
          case CatalogFamily::chain_semilattice:
            v = std::min(a, b);
            break;
          case CatalogFamily::rectangular_band:
            // (i, j) is stored as i * q + j; (i, j)(k, l) = (i, l).
            v = (a / spec.q) * spec.q + (b % spec.q);
            break;
        }
        t[a][b] = static_cast<element_t>(v);
      }
    }
    return FiniteSemigroup::validate(t);
  }

  // Every catalog member of order <= max_order, in a fixed order.
  inline std::vector<CatalogSpec> catalog_members(std::size_t max_order) {
    std::vector<CatalogSpec> out;
    for (auto f : {CatalogFamily::left_zero,
                   CatalogFamily::right_zero,
                   CatalogFamily::null,
                   CatalogFamily::cyclic_group,
                   CatalogFamily::chain_semilattice}) {
      for (std::size_t n = 1; n <= max_order; ++n) {
        out.push_back({f, n, 1});
      }
    }
    for (std::size_t p = 1; p <= max_order; ++p) {
      for (std::size_t q = 1; p * q <= max_order; ++q) {
        out.push_back({CatalogFamily::rectangular_band, p, q});
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relabelling and canonical forms
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t canonical_order_bound = 6;

  // The table of S with element a renamed perm[a].
  inline CayleyTable relabel(CayleyTable const&            t,
                             std::vector<element_t> const& perm) {
    std::size_t const n = t.size();
    CayleyTable       out(n, std::vector<element_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        out[perm[a]][perm[b]] = perm[t[a][b]];
      }
    }
    return out;
  }

  inline CayleyTable transpose(CayleyTable const& t) {
    std::size_t const n = t.size();
    CayleyTable       out(n, std::vector<element_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        out[a][b] = t[b][a];
      }
    }
    return out;
  }

  // Lexicographically least row-major table over all relabellings (and, with
  // include_anti, over the relabellings of the transpose as well).
  inline CayleyTable canonical_form(CayleyTable const& t, bool include_anti) {
    std::size_t const n = t.size();
    if (n > canonical_order_bound) {
      throw BudgetExceeded("canonical_form: order " + std::to_string(n)
                           + " exceeds " + std::to_string(canonical_order_bound));
    }
    std::vector<CayleyTable> sources{t};
    if (include_anti) {
      sources.push_back(transpose(t));
    }
    std::optional<CayleyTable> best;
    std::vector<element_t>     perm(n);
    for (auto const& src : sources) {
      std::iota(perm.begin(), perm.end(), element_t{0});
      do {
        auto candidate = relabel(src, perm);
        if (!best || candidate < *best) {
          best = std::move(candidate);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return *best;
  }

  inline CayleyTable canonical_form(FiniteSemigroup const& S,
                                    bool                   include_anti) {
    return canonical_form(S.table(), include_anti);
  }

  // 64-bit FNV-1a over the order and row-major entries.
  inline std::uint64_t table_hash(CayleyTable const& t) {
    std::uint64_t h    = 1469598103934665603ULL;
    auto          feed = [&](std::uint64_t x) {
      for (int i = 0; i < 4; ++i) {
        h ^= (x >> (8 * i)) & 0xFFU;
        h *= 1099511628211ULL;
      }
    };
    feed(t.size());
    for (auto const& row : t) {
      for (auto v : row) {
        feed(v);
      }
    }
    return h;
  }

  // Isomorphism-invariant identifier: hash of the canonical form when the
  // order permits, of the raw table otherwise. 16 hex digits.
  inline std::string semigroup_id(FiniteSemigroup const& S) {
    auto const t = S.order() <= canonical_order_bound ? canonical_form(S, false)
                                                      : S.table();
    char       buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(table_hash(t)));
    return buf;
  }

  ////////////////////////////////////////////////////////////////////////
  // Exhaustive enumeration
  ////////////////////////////////////////////////////////////////////////

  enum class Dedup { none, iso, iso_and_anti };

  inline std::string_view to_string(Dedup d) {
    switch (d) {
      case Dedup::none:
        return "none";
      case Dedup::iso:
        return "iso";
      case Dedup::iso_and_anti:
        return "iso_and_anti";
    }
    return "?";
  }

  inline std::optional<Dedup> parse_dedup(std::string_view s) {
    for (auto d : {Dedup::none, Dedup::iso, Dedup::iso_and_anti}) {
      if (to_string(d) == s) {
        return d;
      }
    }
    return std::nullopt;
  }

  inline constexpr std::size_t exhaustive_order_bound = 4;

  namespace detail {
    inline constexpr element_t unset = static_cast<element_t>(-1);

    // Checks every triple whose four products are already assigned.
    inline bool partial_associative(std::vector<element_t> const& t,
                                    std::size_t                   n) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          element_t const ab = t[a * n + b];
          if (ab == unset) {
            continue;
          }
          for (std::size_t c = 0; c < n; ++c) {
            element_t const bc = t[b * n + c];
            if (bc == unset) {
              continue;
            }
            element_t const l = t[ab * n + c];
            element_t const r = t[a * n + bc];
            if (l != unset && r != unset && l != r) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace detail

  // All associative tables on n elements, found by filling cells in
  // row-major order and pruning on every fully determined triple. Tables are
  // visited in lexicographic order. With dedup != none each class is visited
  // once, as its canonical form.
  inline void
  for_each_semigroup(std::size_t                                     n,
                     Dedup                                           dedup,
                     std::function<void(FiniteSemigroup const&)> const& visit) {
    if (n == 0 || n > exhaustive_order_bound) {
      throw PreconditionError("enumerate_semigroups: order "
                              + std::to_string(n) + " outside 1.."
                              + std::to_string(exhaustive_order_bound));
    }
    std::vector<element_t> t(n * n, detail::unset);
    std::set<CayleyTable>  seen;
    auto                   emit = [&]() {
      CayleyTable table(n, std::vector<element_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          table[a][b] = t[a * n + b];
        }
      }
      if (dedup == Dedup::none) {
        visit(FiniteSemigroup::validate(table));
        return;
      }
      auto canon = canonical_form(table, dedup == Dedup::iso_and_anti);
      if (seen.insert(canon).second) {
        visit(FiniteSemigroup::validate(canon));
      }
    };
    std::function<void(std::size_t)> fill = [&](std::size_t cell) {
      if (cell == n * n) {
        emit();
        return;
      }
      for (element_t v = 0; v < n; ++v) {
        t[cell] = v;
        if (detail::partial_associative(t, n)) {
          fill(cell + 1);
        }
      }
      t[cell] = detail::unset;
    };
    fill(0);
  }

  // Collected form of for_each_semigroup. With dedup the result is sorted by
  // canonical table.
  inline std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t n,
                                                           Dedup dedup) {
    std::vector<FiniteSemigroup> out;
    for_each_semigroup(n, dedup,
                       [&](FiniteSemigroup const& S) { out.push_back(S); });
    if (dedup != Dedup::none) {
      std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        return x.table() < y.table();
      });
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cache files
  ////////////////////////////////////////////////////////////////////////

  struct EnumerationCache {
    std::size_t                  order = 0;
    Dedup                        dedup = Dedup::none;
    std::vector<FiniteSemigroup> tables;
  };

  // Header "semigroups v1 n=<n> dedup=<mode>", then one table per line as n^2
  // space-separated entries in row-major order.
  inline void cache_store(std::string const& path, EnumerationCache const& cache) {
    std::ofstream out(path);
    if (!out) {
      throw CacheError("cache_store: cannot open " + path);
    }
    out << "semigroups v1 n=" << cache.order
        << " dedup=" << to_string(cache.dedup) << "\n";
    for (auto const& S : cache.tables) {
      if (S.order() != cache.order) {
        throw CacheError("cache_store: table of order "
                         + std::to_string(S.order()) + " in an order-"
                         + std::to_string(cache.order) + " cache");
      }
      bool first = true;
      for (auto v : S.flat()) {
        out << (first ? "" : " ") << v;
        first = false;
      }
      out << "\n";
    }
    if (!out) {
      throw CacheError("cache_store: write failed for " + path);
    }
  }

  inline EnumerationCache cache_load(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw CacheError("cache_load: cannot open " + path);
    }
    std::string header;
    std::getline(in, header);
    static std::regex const re(
        R"(^semigroups (v\d+) n=(\d+) dedup=(none|iso|iso_and_anti)\s*$)");
    std::smatch m;
    if (std::regex_match(header, m, std::regex(R"(^semigroups (v\d+)\b.*$)"))
        && m[1] != "v1") {
      throw CacheVersionError("cache_load: unsupported version " + m[1].str());
    }
    if (!std::regex_match(header, m, re)) {
      throw CacheError("cache_load: malformed header '" + header + "'");
    }
    EnumerationCache cache;
    cache.order = std::stoul(m[2].str());
    cache.dedup = *parse_dedup(m[3].str());
    if (cache.order == 0) {
      throw CacheError("cache_load: order must be positive");
    }
    std::string line;
    std::set<CayleyTable> seen;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      std::istringstream     row(line);
      std::vector<long long> xs;
      long long              x = 0;
      while (row >> x) {
        xs.push_back(x);
      }
      if (!row.eof() || xs.size() != cache.order * cache.order) {
        throw CacheError("cache_load: line " + std::to_string(lineno)
                         + " does not hold " + std::to_string(cache.order * cache.order)
                         + " integers");
      }
      CayleyTable t(cache.order, std::vector<element_t>(cache.order));
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 0 || static_cast<std::size_t>(xs[i]) >= cache.order) {
          throw CacheError("cache_load: line " + std::to_string(lineno)
                           + " has an out-of-range entry");
        }
        t[i / cache.order][i % cache.order] = static_cast<element_t>(xs[i]);
      }
      try {
        cache.tables.push_back(FiniteSemigroup::validate(t));
      } catch (InvalidTable const& e) {
        throw CacheError("cache_load: line " + std::to_string(lineno) + ": "
                         + e.what());
      }
      if (cache.dedup != Dedup::none) {
        if (cache.order <= canonical_order_bound
            && canonical_form(t, cache.dedup == Dedup::iso_and_anti) != t) {
          throw CacheError("cache_load: line " + std::to_string(lineno)
                           + " is not in canonical form");
        }
        if (!seen.insert(t).second) {
          throw CacheError("cache_load: line " + std::to_string(lineno)
                           + " duplicates an earlier table");
        }
      }
    }
    return cache;
  }

}  // namespace fuzzysg
