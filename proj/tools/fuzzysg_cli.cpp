// Command-line front end: table validation, enumeration, catalog lookup,
// single predicates, the region correspondence, decompositions and the
// theorem suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <fuzzysg/fuzzysg.hpp>

namespace {

  using namespace fuzzysg;

  std::string yes_no(bool b) {
    return b ? "true" : "false";
  }

  int cmd_validate(std::string const& path) {
    CayleyTable t;
    try {
      t = parse_table(read_file(path));
      auto const S = FiniteSemigroup::validate(t);
      std::cout << "valid: order " << S.order() << "\n";
      return 0;
    } catch (NotAssociative const& e) {
      auto const [a, b, c] = e.triple();
      std::cout << "invalid: (" << a << "*" << b << ")*" << c << " = "
                << t[t[a][b]][c] << " but " << a << "*(" << b << "*" << c
                << ") = " << t[a][t[b][c]] << "\n";
      return 1;
    } catch (InvalidTable const& e) {
      std::cout << "invalid: " << e.what() << "\n";
      return 1;
    }
  }

  int cmd_enumerate(std::size_t order, std::string const& dedup_name,
                    std::string const& out) {
    auto const dedup = parse_dedup(dedup_name);
    if (!dedup) {
      throw PreconditionError("unknown dedup mode '" + dedup_name + "'");
    }
    EnumerationCache cache{order, *dedup, enumerate_semigroups(order, *dedup)};
    if (!out.empty()) {
      cache_store(out, cache);
    } else {
      for (auto const& S : cache.tables) {
        bool first = true;
        for (auto v : S.flat()) {
          std::cout << (first ? "" : " ") << v;
          first = false;
        }
        std::cout << "\n";
      }
    }
    std::cerr << cache.tables.size() << " semigroups of order " << order
              << " (dedup=" << to_string(*dedup) << ")\n";
    return 0;
  }

  int cmd_catalog(std::string const& family, std::size_t p, std::size_t q) {
    auto const f = parse_catalog_family(family);
    if (!f) {
      throw PreconditionError("unknown catalog family '" + family + "'");
    }
    std::cout << format_table(catalog({*f, p, q}));
    return 0;
  }

  int cmd_check(std::string const& predicate, std::string const& path,
                std::string const& subset_text, std::string const& fuzzy_text) {
    auto const S = load_semigroup(path);

    auto need_subset = [&] {
      if (subset_text.empty()) {
        throw PreconditionError(predicate + " needs --subset");
      }
      return parse_subset(S, subset_text);
    };
    auto need_fuzzy = [&] {
      if (fuzzy_text.empty()) {
        throw PreconditionError(predicate + " needs --fuzzy");
      }
      return parse_fuzzy(S, fuzzy_text);
    };

    if (predicate == "regular") {
      std::cout << yes_no(is_regular(S)) << "\n";
    } else if (predicate == "left-regular") {
      std::cout << yes_no(is_left_regular(S)) << "\n";
    } else if (predicate == "completely-regular") {
      std::cout << yes_no(is_completely_regular(S)) << "\n";
    } else if (predicate == "left-simple") {
      std::cout << yes_no(is_left_simple(S)) << "\n";
    } else if (predicate == "simple") {
      std::cout << yes_no(is_simple(S)) << "\n";
    } else if (predicate == "completely-simple") {
      std::cout << yes_no(is_completely_simple(S)) << "\n";
    } else if (predicate == "idempotents") {
      std::cout << idempotents(S).to_string() << "\n";
    } else if (predicate == "subsemigroup") {
      std::cout << yes_no(is_subsemigroup(S, need_subset())) << "\n";
    } else if (predicate == "left-ideal") {
      std::cout << yes_no(is_left_ideal(S, need_subset())) << "\n";
    } else if (predicate == "right-ideal") {
      std::cout << yes_no(is_right_ideal(S, need_subset())) << "\n";
    } else if (predicate == "ideal") {
      std::cout << yes_no(is_ideal(S, need_subset())) << "\n";
    } else if (predicate == "quasi-ideal") {
      std::cout << yes_no(is_quasi_ideal(S, need_subset())) << "\n";
    } else if (predicate == "fuzzy-subsemigroup") {
      std::cout << yes_no(is_fuzzy_subsemigroup(need_fuzzy())) << "\n";
    } else if (predicate == "fuzzy-left-ideal") {
      std::cout << yes_no(is_fuzzy_left_ideal(need_fuzzy())) << "\n";
    } else if (predicate == "fuzzy-right-ideal") {
      std::cout << yes_no(is_fuzzy_right_ideal(need_fuzzy())) << "\n";
    } else if (predicate == "fuzzy-quasi-ideal") {
      std::cout << yes_no(is_fuzzy_quasi_ideal(need_fuzzy())) << "\n";
    } else if (predicate == "left-simple-fuzzy") {
      std::cout << yes_no(is_left_simple_fuzzy_subsemigroup(need_fuzzy())) << "\n";
    } else if (predicate == "completely-simple-fuzzy") {
      std::cout << yes_no(is_completely_simple_fuzzy_subsemigroup(need_fuzzy()))
                << "\n";
    } else {
      throw PreconditionError("unknown predicate '" + predicate + "'");
    }
    return 0;
  }

  void print_conditions(ProductRegion const& region) {
    for (auto kind : {RegionKind::subsemigroup, RegionKind::left_ideal,
                      RegionKind::right_ideal, RegionKind::quasi_ideal}) {
      std::cout << to_string(kind) << " conditions: "
                << yes_no(region_conditions(region, kind).holds()) << "\n";
    }
  }

  int cmd_correspond(std::string const& path, std::string const& fuzzy_text,
                     std::string const& region_text, std::optional<level_t> k,
                     bool sweep, std::uint64_t budget) {
    auto const S = load_semigroup(path);
    if (sweep) {
      ValueChain const chain(k.value_or(static_cast<level_t>(S.order())));
      auto const       r  = verify_bijections(S, chain, budget);
      for (auto const& fb : r.families) {
        std::cout << to_string(fb.kind) << ": fuzzy=" << fb.fuzzy_count
                  << " regions=" << fb.region_count << " ok=" << yes_no(fb.ok());
        if (!fb.witness.empty()) {
          std::cout << " witness: " << fb.witness;
        }
        std::cout << "\n";
      }
      std::cout << "containment: " << yes_no(r.containment) << "\n";
      return r.ok() ? 0 : 1;
    }
    if (!fuzzy_text.empty()) {
      auto const f      = parse_fuzzy(S, fuzzy_text);
      auto const region = graph_region(f);
      std::cout << "region: " << region.to_string() << "\n";
      print_conditions(region);
      if (is_fuzzy_subsemigroup(f)) {
        auto const back = region_to_fuzzy(region);
        std::cout << "round trip: " << back.to_string() << " "
                  << yes_no(back == f) << "\n";
      }
      return 0;
    }
    if (!region_text.empty()) {
      if (!k) {
        throw PreconditionError("--region needs --chain");
      }
      auto const region = parse_region(S, ValueChain(*k), region_text);
      print_conditions(region);
      auto const sigma = region_to_fuzzy(region);
      std::cout << "sigma: " << sigma.to_string() << "\n";
      std::cout << "graph: " << graph_region(sigma).to_string() << "\n";
      return 0;
    }
    throw PreconditionError("correspond needs --fuzzy, --region or --sweep");
  }

  int cmd_decompose(std::string const& path) {
    auto const S   = load_semigroup(path);
    auto const dec = semilattice_decomposition(S);
    auto const& d  = dec.decomposition;
    std::cout << "index semilattice:\n" << format_table(d.index);
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      std::cout << "block " << i << ": " << d.blocks[i].to_string()
                << " left_simple=" << yes_no(dec.left_simple[i])
                << " completely_simple=" << yes_no(dec.completely_simple[i])
                << "\n";
    }
    std::cout << "semilattice of left simple semigroups: "
              << yes_no(dec.semilattice_of_left_simple()) << "\n";
    return 0;
  }

  std::vector<CorpusItem> load_corpus(std::vector<std::string> const& specs,
                                      Dedup                           dedup) {
    std::vector<CorpusItem> out;
    for (auto const& spec : specs) {
      auto const colon = spec.find(':');
      auto const kind  = colon == std::string::npos ? "" : spec.substr(0, colon);
      auto const arg   = colon == std::string::npos ? spec : spec.substr(colon + 1);
      if (kind == "enum") {
        auto more = enumerated_corpus(std::stoul(arg), dedup);
        out.insert(out.end(), more.begin(), more.end());
      } else if (kind == "catalog") {
        auto more = catalog_corpus(std::stoul(arg));
        out.insert(out.end(), more.begin(), more.end());
      } else if (kind == "cache") {
        auto const cache = cache_load(arg);
        for (std::size_t i = 0; i < cache.tables.size(); ++i) {
          out.push_back({spec + "#" + std::to_string(i), cache.tables[i], {}});
        }
      } else {
        auto const path = kind == "file" ? arg : spec;
        try {
          out.push_back({path, load_semigroup(path), {}});
        } catch (Error const& e) {
          out.push_back({path, std::nullopt, e.what()});
        }
      }
    }
    return out;
  }

  std::vector<std::string> split(std::string const& s) {
    std::vector<std::string> out;
    std::stringstream        ss(s);
    std::string              item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) {
        out.push_back(item);
      }
    }
    return out;
  }

  int cmd_verify(std::vector<std::string> const& corpus_specs,
                 std::string const& theorems, std::optional<level_t> k,
                 std::string const& out, std::string const& dedup_name,
                 std::uint64_t budget, std::size_t threads) {
    auto const dedup = parse_dedup(dedup_name);
    if (!dedup) {
      throw PreconditionError("unknown dedup mode '" + dedup_name + "'");
    }
    SuiteOptions opts;
    opts.k       = k;
    opts.budget  = budget;
    opts.threads = threads;
    if (theorems != "all") {
      opts.theorems = split(theorems);
    }
    std::string corpus_name;
    for (auto const& s : corpus_specs) {
      corpus_name += (corpus_name.empty() ? "" : ",") + s;
    }
    auto const report = run_suite(corpus_name, load_corpus(corpus_specs, *dedup), opts);
    auto const json   = report.to_json().dump(2) + "\n";
    if (out.empty() || out == "-") {
      std::cout << json;
    } else {
      std::ofstream f(out);
      if (!f) {
        throw Error("cannot write " + out);
      }
      f << json;
    }
    std::cerr << report.entries.size() << " items, " << report.failures()
              << " failures, " << report.errors() << " errors\n";
    return report.failures() == 0 ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups, fuzzy subsystems and their regions in S x I"};
  app.require_subcommand(1);

  std::string path, out, predicate, subset_text, fuzzy_text, region_text;
  std::string dedup = "iso", theorems = "all", family;
  std::size_t order = 1, p = 1, q = 1, threads = 0;
  std::optional<level_t> chain;
  std::uint64_t budget = default_fuzzy_budget;
  bool sweep = false;
  std::vector<std::string> corpus;

  auto* validate = app.add_subcommand("validate", "Check a Cayley table for associativity");
  validate->add_option("file", path, "Cayley table (text or JSON)")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all semigroups of an order");
  enumerate->add_option("--order", order, "Order n (1..4)")->required();
  enumerate->add_option("--dedup", dedup, "none | iso | iso_and_anti");
  enumerate->add_option("--out", out, "Write a cache file instead of printing");

  auto* cat = app.add_subcommand("catalog", "Print a catalog semigroup");
  cat->add_option("family", family,
                  "left_zero | right_zero | null | cyclic_group | "
                  "chain_semilattice | rectangular_band")
      ->required();
  cat->add_option("p", p, "Size parameter")->required();
  cat->add_option("q", q, "Second parameter (rectangular_band)");

  auto* check = app.add_subcommand("check", "Evaluate a single predicate");
  check->add_option("predicate", predicate, "Predicate name")->required();
  check->add_option("file", path, "Cayley table")->required();
  check->add_option("--subset", subset_text, "Element subset, e.g. \"0 2\"");
  check->add_option("--fuzzy", fuzzy_text, "Fuzzy subset, e.g. \"2; 2 1\"");

  auto* correspond = app.add_subcommand("correspond", "Fuzzy subsets versus regions of S x I");
  correspond->add_option("file", path, "Cayley table")->required();
  correspond->add_option("--fuzzy", fuzzy_text, "Map a fuzzy subset to its region");
  correspond->add_option("--region", region_text, "Map a region \"(a,t) ...\" back");
  correspond->add_option("--chain", chain, "Chain resolution k");
  correspond->add_flag("--sweep", sweep, "Check the bijections exhaustively");
  correspond->add_option("--budget", budget, "Bound on (k+1)^n");

  auto* decompose = app.add_subcommand("decompose", "Least semilattice decomposition");
  decompose->add_option("file", path, "Cayley table")->required();

  auto* verify = app.add_subcommand("verify", "Run theorem suites and write a JSON report");
  verify->add_option("--corpus", corpus,
                     "enum:<n> | catalog:<n> | cache:<path> | <table file>")
      ->required();
  verify->add_option("--theorems", theorems, "Comma-separated list or 'all'");
  verify->add_option("--chain", chain, "Chain resolution k (default |S|)");
  verify->add_option("--out", out, "Report path (default stdout)");
  verify->add_option("--dedup", dedup, "Dedup for enum corpora");
  verify->add_option("--budget", budget, "Bound on (k+1)^n");
  verify->add_option("--threads", threads, "Worker threads (0 = all cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      return cmd_validate(path);
    }
    if (*enumerate) {
      return cmd_enumerate(order, dedup, out);
    }
    if (*cat) {
      return cmd_catalog(family, p, q);
    }
    if (*check) {
      return cmd_check(predicate, path, subset_text, fuzzy_text);
    }
    if (*correspond) {
      return cmd_correspond(path, fuzzy_text, region_text, chain, sweep, budget);
    }
    if (*decompose) {
      return cmd_decompose(path);
    }
    if (*verify) {
      return cmd_verify(corpus, theorems, chain, out, dedup, budget, threads);
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
