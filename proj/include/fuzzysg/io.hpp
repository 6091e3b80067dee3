#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chain.hpp"
#include "correspondence.hpp"
#include "error.hpp"
#include "fuzzy.hpp"
#include "semigroup.hpp"

namespace fuzzysg {

  // Thrown for text that cannot be parsed at all.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    inline std::vector<long long> integers(std::string_view s,
                                           char const*      what) {
      std::istringstream     in{std::string(s)};
      std::vector<long long> out;
      long long              x = 0;
      while (in >> x) {
        out.push_back(x);
      }
      if (!in.eof()) {
        throw ParseError(std::string(what) + ": expected integers in '"
                         + std::string(s) + "'");
      }
      return out;
    }
  }  // namespace detail

  // Either the text format ("n" then n rows of n indices) or a JSON array of
  // rows, optionally wrapped as {"table": [...]}. Shape and range problems
  // surface from FiniteSemigroup::validate as InvalidTable.
  inline CayleyTable parse_table(std::string_view text) {
    auto const body = detail::trim(text);
    if (body.empty()) {
      throw ParseError("empty Cayley table");
    }
    CayleyTable t;
    if (body.front() == '[' || body.front() == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(body);
      } catch (nlohmann::json::exception const& e) {
        throw ParseError(std::string("Cayley table JSON: ") + e.what());
      }
      if (j.is_object()) {
        j = j.at("table");
      }
      if (!j.is_array()) {
        throw ParseError("Cayley table JSON must be an array of rows");
      }
      for (auto const& row : j) {
        if (!row.is_array()) {
          throw ParseError("Cayley table JSON must be an array of rows");
        }
        std::vector<element_t> r;
        for (auto const& v : row) {
          if (!v.is_number_integer() || v.get<long long>() < 0) {
            throw ParseError("Cayley table entries must be nonnegative integers");
          }
          r.push_back(v.get<element_t>());
        }
        t.push_back(std::move(r));
      }
      return t;
    }
    auto const xs = detail::integers(body, "Cayley table");
    if (xs.empty() || xs[0] <= 0) {
      throw ParseError("Cayley table must start with a positive order");
    }
    auto const n = static_cast<std::size_t>(xs[0]);
    if (xs.size() != 1 + n * n) {
      throw ParseError("Cayley table of order " + std::to_string(n)
                       + " needs " + std::to_string(n * n) + " entries, got "
                       + std::to_string(xs.size() - 1));
    }
    t.assign(n, std::vector<element_t>(n));
    for (std::size_t i = 0; i < n * n; ++i) {
      if (xs[1 + i] < 0) {
        throw ParseError("Cayley table entries must be nonnegative");
      }
      t[i / n][i % n] = static_cast<element_t>(xs[1 + i]);
    }
    return t;
  }

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline FiniteSemigroup load_semigroup(std::string const& path) {
    return FiniteSemigroup::validate(parse_table(read_file(path)));
  }

  inline std::string format_table(FiniteSemigroup const& S) {
    std::string out = std::to_string(S.order()) + "\n";
    for (element_t a = 0; a < S.order(); ++a) {
      for (element_t b = 0; b < S.order(); ++b) {
        out += (b == 0 ? "" : " ") + std::to_string(S.product(a, b));
      }
      out += "\n";
    }
    return out;
  }

  // "k; v0 v1 ... v_{n-1}"
  inline FuzzySubset parse_fuzzy(FiniteSemigroup const& S,
                                 std::string_view       text) {
    auto const semi = text.find(';');
    if (semi == std::string_view::npos) {
      throw ParseError("fuzzy subset must look like 'k; v0 v1 ...'");
    }
    auto const head = detail::integers(text.substr(0, semi), "fuzzy subset");
    if (head.size() != 1 || head[0] < 1) {
      throw ParseError("fuzzy subset resolution must be a positive integer");
    }
    auto const           xs = detail::integers(text.substr(semi + 1), "fuzzy subset");
    std::vector<level_t> v;
    for (auto x : xs) {
      if (x < 0) {
        throw ParseError("fuzzy subset levels must be nonnegative");
      }
      v.push_back(static_cast<level_t>(x));
    }
    return FuzzySubset(S, ValueChain(static_cast<level_t>(head[0])),
                       std::move(v));
  }

  // Whitespace- or comma-separated element indices, optionally in braces.
  inline ElementSubset parse_subset(FiniteSemigroup const& S,
                                    std::string_view       text) {
    std::string s(text);
    for (auto& c : s) {
      if (c == ',' || c == '{' || c == '}') {
        c = ' ';
      }
    }
    ElementSubset out(S.order());
    for (auto x : detail::integers(s, "subset")) {
      if (x < 0 || static_cast<std::size_t>(x) >= S.order()) {
        throw ParseError("subset element " + std::to_string(x)
                         + " out of range");
      }
      out.insert(static_cast<element_t>(x));
    }
    return out;
  }

  // "(a,t) (b,u) ..." in any order.
  inline ProductRegion parse_region(FiniteSemigroup const& S,
                                    ValueChain const&      chain,
                                    std::string_view       text) {
    std::string s(text);
    for (auto& c : s) {
      if (c == ',' || c == '(' || c == ')') {
        c = ' ';
      }
    }
    auto const xs = detail::integers(s, "region");
    if (xs.size() % 2 != 0) {
      throw ParseError("region must be a list of (element, level) pairs");
    }
    ProductRegion out(S, chain);
    for (std::size_t i = 0; i < xs.size(); i += 2) {
      if (xs[i] < 0 || xs[i + 1] < 0
          || static_cast<std::size_t>(xs[i]) >= S.order()
          || xs[i + 1] > static_cast<long long>(chain.top())) {
        throw ParseError("region pair out of range");
      }
      out.insert(static_cast<element_t>(xs[i]), static_cast<level_t>(xs[i + 1]));
    }
    return out;
  }

}  // namespace fuzzysg
