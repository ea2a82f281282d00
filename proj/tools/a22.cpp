// Command-line front end: identity verification, rule derivation, basis
// enumeration and product-side series.
//
// Exit codes: 0 all checks agree, 1 a verification mismatch, 2 usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "a22/embeddings.hpp"
#include "a22/enumerate.hpp"
#include "a22/identities.hpp"
#include "a22/leading_terms.hpp"
#include "a22/qseries.hpp"

namespace {

enum class Format { table, csv, json };

struct RunConfig {
  int max_n = 200;
  std::string spec = "1,1";
  int window = 3;
  Format format = Format::table;
  std::string json_path;
  int workers = 0;
  int list_n = -1;
  std::string product;
};

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text << '\n';
}

int run_verify_identity(a22::Identity id, const RunConfig& cfg) {
  const auto report = a22::verify_identity(id, cfg.max_n, cfg.workers);
  if (!cfg.json_path.empty()) write_file(cfg.json_path, report.to_json());

  switch (cfg.format) {
    case Format::json:
      std::cout << report.to_json() << '\n';
      break;
    case Format::csv:
      std::cout << "n";
      for (const auto& p : report.pipelines) std::cout << ',' << p;
      std::cout << '\n';
      for (int n = 0; n <= report.max_n; ++n) {
        std::cout << n;
        for (const auto& column : report.counts) std::cout << ',' << column[n];
        std::cout << '\n';
      }
      break;
    case Format::table: {
      std::cout << "identity: " << report.identity << " (specialization "
                << a22::to_string(a22::specialization_of(id)) << ")\n";
      std::cout << "rules: " << report.rule_semantics << "\n\n";
      std::cout << std::setw(6) << "n";
      for (const auto& p : report.pipelines) std::cout << std::setw(14) << p;
      std::cout << '\n';
      for (int n = 0; n <= report.max_n; ++n) {
        std::cout << std::setw(6) << n;
        for (const auto& column : report.counts) std::cout << std::setw(14) << column[n];
        std::cout << '\n';
      }
      std::cout << '\n';
      for (const auto& mm : report.mismatches) {
        std::cout << "MISMATCH n=" << mm.n << " pipeline=" << mm.pipeline
                  << " expected=" << mm.expected << " got=" << mm.got << '\n';
      }
      std::cout << "mismatches: " << report.mismatches.size() << '\n';
      std::cout << "result: " << (report.ok() ? "OK" : "FAIL") << '\n';
      std::cout << "-- duration_ms: " << report.duration_ms << '\n';
      break;
    }
  }
  return report.ok() ? 0 : kMismatch;
}

int run_lemma_embeddings(const RunConfig& cfg) {
  if (cfg.window < 3) throw UsageError("--window must be at least 3");
  const auto sums = a22::embedding_sums(cfg.window);

  bool ok = true;
  nlohmann::json doc;
  doc["window"] = cfg.window;
  for (auto c : a22::kDegreeClasses) {
    const auto expected =
        a22::is_half_integer_class(c) ? a22::kHalfIntegerClassSum : a22::kIntegerClassSum;
    ok = ok && sums[c] == expected;
    doc["sums"][std::string(a22::label(c))] = sums[c];
  }
  const auto half = sums[a22::DegreeClass::minus5_2];
  const auto whole = sums[a22::DegreeClass::minus2];
  const bool total_ok = half + whole == a22::kRelationSpaceDimension;
  ok = ok && total_ok;
  doc["relation_space_dimension"] = a22::kRelationSpaceDimension;
  doc["ok"] = ok;
  if (!cfg.json_path.empty()) write_file(cfg.json_path, doc.dump(2));

  switch (cfg.format) {
    case Format::json:
      std::cout << doc.dump(2) << '\n';
      break;
    case Format::csv:
      std::cout << "class,sum\n";
      for (auto c : a22::kDegreeClasses) std::cout << a22::label(c) << ',' << sums[c] << '\n';
      break;
    case Format::table:
      std::cout << "window radius: " << cfg.window << "\n";
      std::cout << std::left << std::setw(10) << "class" << std::right << std::setw(6) << "sum"
                << std::setw(10) << "expected" << '\n';
      for (auto c : a22::kDegreeClasses) {
        const auto expected =
            a22::is_half_integer_class(c) ? a22::kHalfIntegerClassSum : a22::kIntegerClassSum;
        std::cout << std::left << std::setw(10) << a22::label(c) << std::right << std::setw(6)
                  << sums[c] << std::setw(10) << expected << '\n';
      }
      std::cout << half << '+' << whole << '=' << half + whole << ' '
                << (total_ok ? "OK" : "MISMATCH (expected " +
                                          std::to_string(a22::kRelationSpaceDimension) + ")")
                << '\n';
      break;
  }
  return ok ? 0 : kMismatch;
}

int run_derive_rules(const RunConfig& cfg) {
  const auto table = a22::derive_rule_table(a22::parse_specialization(cfg.spec));
  if (cfg.format == Format::json) {
    nlohmann::json doc;
    doc["specialization"] = {table.spec.s0(), table.spec.s1()};
    doc["sum_modulus"] = table.sum_modulus;
    doc["min_difference"] = table.min_difference;
    doc["always_forbidden_differences"] = table.always_forbidden_differences;
    for (const auto& r : table.rules) {
      doc["rules"].push_back({{"difference", r.difference},
                              {"residue", r.residue},
                              {"low_class", r.low_class},
                              {"high_class", r.high_class},
                              {"family", r.family}});
    }
    doc["text"] = table.render();
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& line : table.render()) std::cout << line << '\n';
  }
  return 0;
}

int run_enumerate(const RunConfig& cfg) {
  const auto spec = a22::parse_specialization(cfg.spec);
  if (cfg.list_n >= 0) {
    for (const auto& pi : a22::list_basis(spec, cfg.list_n)) {
      std::cout << a22::to_string(pi) << '\n';
    }
    return 0;
  }
  const auto counts = a22::count_basis(spec, cfg.max_n, cfg.workers);
  if (cfg.format == Format::json) {
    std::cout << nlohmann::json(counts).dump() << '\n';
  } else {
    std::cout << "n,count\n";
    for (std::size_t n = 0; n < counts.size(); ++n) std::cout << n << ',' << counts[n] << '\n';
  }
  return 0;
}

int run_series(const RunConfig& cfg) {
  a22::TruncatedSeries s(0);
  if (cfg.product == "pm1mod6") {
    s = a22::product_pm1_mod6(cfg.max_n);
  } else if (cfg.product == "distinct-odd") {
    s = a22::product_distinct_odd(cfg.max_n);
  } else {
    throw UsageError("--product must be pm1mod6 or distinct-odd");
  }
  std::cout << "n,value\n";
  for (int n = 0; n <= s.order(); ++n) std::cout << n << ',' << s[n] << '\n';
  return 0;
}

int run_table(const RunConfig& cfg) {
  const auto& table = a22::leading_terms();
  if (!cfg.json_path.empty()) write_file(cfg.json_path, table.to_json());
  if (cfg.format == Format::json) {
    std::cout << table.to_json() << '\n';
    return 0;
  }
  std::cout << "low,high,gap,low_degree_parity\n";
  for (const auto& f : table.families()) {
    std::cout << f.low.value() << ',' << f.high.value() << ',' << a22::to_string(f.gap) << ','
              << (f.low_degree_integral() ? "integer" : "half-integer") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Basis and partition-identity checks for the basic A2(2) module"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{
      {"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "table | csv | json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "worker threads (0 = all)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* verify = app.add_subcommand("verify", "check an identity or the embedding sums");
  verify->require_subcommand(1);
  std::function<int()> action;

  for (auto id : {a22::Identity::theorem_a, a22::Identity::theorem_3_1}) {
    auto* sub = verify->add_subcommand(std::string(a22::name(id)),
                                       "four-way agreement of basis, rules and product side");
    sub->add_option("--max-n", cfg.max_n, "largest n checked")->check(CLI::NonNegativeNumber);
    sub->add_option("--json", cfg.json_path, "write the JSON report here");
    add_format(sub);
    add_workers(sub);
    sub->callback([&, id] { action = [&, id] { return run_verify_identity(id, cfg); }; });
  }

  auto* lemma = verify->add_subcommand("lemma-embeddings", "embedding sums over length-3 classes");
  lemma->add_option("--window", cfg.window, "degree window radius (>= 3)")
      ->check(CLI::Range(3, 1000));
  lemma->add_option("--json", cfg.json_path, "write the JSON report here");
  add_format(lemma);
  lemma->callback([&] { action = [&] { return run_lemma_embeddings(cfg); }; });

  auto* derive = app.add_subcommand("derive", "derive stated rules from the pattern table");
  derive->require_subcommand(1);
  auto* rules = derive->add_subcommand("rules", "rule table under a specialization");
  rules->add_option("--spec", cfg.spec, "S0,S1")->required();
  add_format(rules);
  rules->callback([&] { action = [&] { return run_derive_rules(cfg); }; });

  auto* enumerate = app.add_subcommand("enumerate", "count or list basis monomials by weight");
  enumerate->add_option("--spec", cfg.spec, "S0,S1")->required();
  enumerate->add_option("--max-n", cfg.max_n, "largest weight")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--list", cfg.list_n, "list the monomials of this weight")
      ->check(CLI::NonNegativeNumber);
  add_format(enumerate);
  add_workers(enumerate);
  enumerate->callback([&] { action = [&] { return run_enumerate(cfg); }; });

  auto* series = app.add_subcommand("series", "product-side q-series coefficients");
  series->add_option("--product", cfg.product, "pm1mod6 | distinct-odd")->required();
  series->add_option("--max-n", cfg.max_n, "truncation order")->check(CLI::NonNegativeNumber);
  series->callback([&] { action = [&] { return run_series(cfg); }; });

  auto* table = app.add_subcommand("table", "the compiled forbidden-pattern families");
  table->add_option("--json", cfg.json_path, "write the family table as JSON");
  add_format(table);
  table->callback([&] { action = [&] { return run_table(cfg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
