// etflat: reproduce the frame-lattice tables and checks from the command line.

#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "etflat/acceptance.hpp"
#include "etflat/analysis.hpp"
#include "etflat/cache.hpp"
#include "etflat/lattice.hpp"

namespace {

using etflat::ojson;

enum class Format { Json, Csv, Text };

struct RunConfig {
  unsigned threads = 1;
  Format format = Format::Text;
  std::string cache_dir = "cache";
  bool no_cache = false;
  std::vector<std::string> skip;
  bool allow_unverified = false;
};

constexpr int kExitOk = 0, kExitVerify = 1, kExitUsage = 2, kExitCache = 3;

// Nested objects become prefixed columns (surds -> x_coeff, x_radicand);
// arrays are space-joined.
void flatten(const ojson& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "_" + it.key();
    const auto& v = it.value();
    if (v.is_object()) {
      flatten(v, key, out);
    } else if (v.is_array()) {
      std::string s;
      for (const auto& e : v) s += (s.empty() ? "" : " ") + (e.is_string() ? e.get<std::string>() : e.dump());
      out.emplace_back(key, s);
    } else {
      out.emplace_back(key, v.is_string() ? v.get<std::string>() : v.dump());
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

/// One CSV row per object; the header is the union of keys in first-seen order.
void print_csv(const std::vector<ojson>& rows) {
  std::vector<std::string> header;
  std::vector<std::vector<std::pair<std::string, std::string>>> flat;
  for (const auto& r : rows) {
    flat.emplace_back();
    flatten(r, "", flat.back());
    for (const auto& [k, v] : flat.back())
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
  }
  for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << csv_field(header[i]);
  std::cout << '\n';
  for (const auto& f : flat) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      std::string v;
      for (const auto& [k, val] : f)
        if (k == header[i]) v = val;
      std::cout << (i ? "," : "") << csv_field(v);
    }
    std::cout << '\n';
  }
}

void print_key_values(const ojson& j) {
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(j, "", flat);
  std::size_t w = 0;
  for (const auto& [k, v] : flat) w = std::max(w, k.size());
  for (const auto& [k, v] : flat) std::cout << k << std::string(w - k.size() + 2, ' ') << v << '\n';
}

void emit(const RunConfig& cfg, const std::vector<ojson>& rows, bool as_array) {
  if (cfg.format == Format::Json) {
    if (as_array) {
      ojson arr = ojson::array();
      for (const auto& r : rows) arr.push_back(r);
      std::cout << arr.dump(2) << '\n';
    } else {
      std::cout << rows.front().dump(2) << '\n';
    }
  } else if (cfg.format == Format::Csv) {
    print_csv(rows);
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) std::cout << '\n';
      print_key_values(rows[i]);
    }
  }
}

etflat::PairProvider make_provider(const RunConfig& cfg) {
  etflat::PairProvider::Options o;
  o.cache_dir = cfg.cache_dir;
  o.use_cache = !cfg.no_cache;
  o.threads = cfg.threads;
  return etflat::PairProvider(o);
}

std::string surd_text(const etflat::SurdValue& s) {
  return s.to_string() + " = " + etflat::format_decimal(s.to_double(), 6);
}

int cmd_table1(const RunConfig& cfg, std::size_t simplex_max) {
  auto provider = make_provider(cfg);
  const auto rows = etflat::table1(provider, simplex_max);
  if (cfg.format != Format::Text) {
    std::vector<ojson> js;
    for (const auto& r : rows) js.push_back(etflat::to_json(r));
    emit(cfg, js, true);
    return kExitOk;
  }
  std::printf("%-9s %-24s %-36s %s\n", "(k,n)", "cosine 1/alpha", "volume of a fundamental domain", "S = ±F?, basis of minimal vectors?");
  for (const auto& r : rows) {
    const std::string kn = "(" + std::to_string(r.k) + "," + std::to_string(r.n) + ")";
    std::string vol = "no lattice", flags;
    if (r.analysis) {
      const auto& a = *r.analysis;
      vol = surd_text(a.det);
      flags = std::string(a.frames_are_minimal ? "yes" : "no") + ", " + etflat::to_string(a.basis_of_minimal_vectors);
      if (a.perfection.is_perfect) flags += ", perfect";
    }
    std::printf("%-9s %-24s %-36s %s\n", kn.c_str(), surd_text(r.cosine).c_str(), vol.c_str(), flags.c_str());
  }
  return kExitOk;
}

int cmd_search(const RunConfig& cfg, std::size_t k) {
  static const std::set<std::size_t> verified = {5, 13, 25};
  if (!verified.count(k) && !cfg.allow_unverified) {
    std::cerr << "k = " << k << " has no reference data; pass --allow-unverified to run it\n";
    return kExitUsage;
  }
  if (k < 3 || k % 2 == 0) {
    std::cerr << "k must be odd and at least 3\n";
    return kExitUsage;
  }
  auto provider = make_provider(cfg);
  const auto summaries = etflat::summarize_pairs(k, provider.pairs(k));
  if (cfg.format == Format::Json) {
    ojson j;
    j["k"] = k;
    j["count"] = summaries.size();
    j["pairs"] = ojson::array();
    for (const auto& s : summaries) j["pairs"].push_back(etflat::to_json(s));
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  if (cfg.format == Format::Csv) {
    std::vector<ojson> rows;
    for (const auto& s : summaries) rows.push_back(etflat::to_json(s));
    print_csv(rows);
    return kExitOk;
  }
  std::size_t n_int = 0, n_inv = 0;
  std::cout << "k = " << k << ": " << summaries.size() << " conference pairs\n";
  for (const auto& s : summaries) {
    std::cout << "(" << s.index << ") A: (" << etflat::format_signs(s.pair.a.values()) << ")\n"
              << "     D: (" << etflat::format_signs(s.pair.d.values()) << ")\n"
              << "     det D = " << s.det_d;
    if (s.det_alpha_plus_a)
      std::cout << ", det(aI+A) = " << *s.det_alpha_plus_a << ", det(aI-A) = " << *s.det_alpha_minus_a;
    if (s.n_integral) {
      std::cout << ", N " << (*s.n_integral ? "integral" : "not integral") << ", N^-1 "
                << (*s.n_inverse_integral ? "integral" : "not integral");
      n_int += *s.n_integral;
      n_inv += *s.n_inverse_integral;
    }
    std::cout << '\n';
  }
  if (!summaries.empty() && summaries.front().n_integral)
    std::cout << "N integral in " << n_int << " cases, N^-1 integral in " << n_inv << " cases\n";
  return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, const std::string& selector) {
  auto provider = make_provider(cfg);
  emit(cfg, {etflat::to_json(etflat::analyze_selector(selector, provider))}, false);
  return kExitOk;
}

int cmd_verify_all(const RunConfig& cfg) {
  auto provider = make_provider(cfg);
  etflat::AcceptanceOptions opts;
  opts.skip = {cfg.skip.begin(), cfg.skip.end()};
  opts.threads = cfg.threads;
  const auto results = etflat::run_acceptance(provider, opts);
  if (cfg.format == Format::Text) {
    for (const auto& r : results) std::cout << etflat::format_result(r) << '\n';
  } else {
    std::vector<ojson> rows;
    for (const auto& r : results) {
      ojson j;
      j["id"] = r.id;
      j["title"] = r.title;
      j["status"] = r.status == etflat::CriterionStatus::Pass   ? "pass"
                    : r.status == etflat::CriterionStatus::Fail ? "fail"
                                                                : "skip";
      j["checks"] = r.checks;
      j["seconds"] = r.seconds;
      j["failures"] = r.failures;
      rows.push_back(j);
    }
    emit(cfg, rows, true);
  }
  return etflat::all_passed(results) ? kExitOk : kExitVerify;
}

int cmd_demo_nonlattice(const RunConfig& cfg, std::size_t steps) {
  const auto witness = etflat::non_lattice_witness_3_6(steps);
  std::vector<ojson> rows;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    const auto& w = witness[i];
    ojson j;
    j["step"] = i + 1;
    j["x"] = w.x;
    j["y"] = w.y;
    j["coefficients"] = w.coefficients;
    j["combination"] = w.combination;
    j["normSq"] = w.norm_sq;
    rows.push_back(j);
  }
  if (cfg.format != Format::Text) {
    emit(cfg, rows, true);
    return kExitOk;
  }
  std::printf("%4s %12s %12s  %-60s %s\n", "step", "x", "y", "coefficients", "|combination|^2");
  for (std::size_t i = 0; i < witness.size(); ++i) {
    const auto& w = witness[i];
    std::string coeffs;
    for (long c : w.coefficients) coeffs += (coeffs.empty() ? "" : ", ") + std::to_string(c);
    std::printf("%4zu %12ld %12ld  %-60s %.6e\n", i + 1, w.x, w.y, coeffs.c_str(), w.norm_sq);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices generated by unit tight equiangular frames"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  app.add_option("--threads", cfg.threads, "Worker threads for the conference search")->check(CLI::Range(1u, 256u));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache", cfg.cache_dir, "Directory holding conference-<k>.json search caches");
  app.add_flag("--no-cache", cfg.no_cache, "Always search; neither read nor write the cache");
  app.add_option("--skip", cfg.skip, "Acceptance criterion to skip (number or tag such as 25x50); repeatable");
  app.add_flag("--allow-unverified", cfg.allow_unverified, "Allow search sizes without reference data");

  std::size_t simplex_max = 12, search_k = 0, steps = 0;
  std::string selector;
  auto* table = app.add_subcommand("table1", "Summary table of all frames");
  table->add_option("--simplex-max", simplex_max, "Largest k for the simplex rows")->check(CLI::Range(2, 40));
  auto* search = app.add_subcommand("search", "Conference pairs of size K");
  search->add_option("K", search_k, "Circulant size")->required();
  auto* analyze = app.add_subcommand("analyze", "Full lattice analysis of one frame");
  analyze->add_option("SELECTOR", selector,
                      "simplex:K | conference:K[:I[:plus|minus|ab]] | explicit:6x16 | explicit:7x28")
      ->required();
  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  auto* demo = app.add_subcommand("demo-nonlattice", "Short combinations in the (3,6) icosahedral frame");
  demo->add_option("STEPS", steps, "Number of convergents")
      ->required()
      ->check(CLI::Range(std::size_t{1}, etflat::kMaxWitnessSteps));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kExitUsage;
  }
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

  try {
    if (*table) return cmd_table1(cfg, simplex_max);
    if (*search) return cmd_search(cfg, search_k);
    if (*analyze) return cmd_analyze(cfg, selector);
    if (*verify) return cmd_verify_all(cfg);
    if (*demo) return cmd_demo_nonlattice(cfg, steps);
  } catch (const etflat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case etflat::ErrorCode::CacheCorrupt: return kExitCache;
      case etflat::ErrorCode::UnknownSelector:
      case etflat::ErrorCode::InvalidArgument: return kExitUsage;
      default: return kExitVerify;
    }
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCache;
  }
  return kExitUsage;
}
