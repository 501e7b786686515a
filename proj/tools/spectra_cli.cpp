// Command-line front-end: build and export graphs, compute spectra, verify
// the toolkit's families, dump character tables, scan arrangement graphs.
//
// Exit codes: 0 success, 2 verdict undecided, 1 error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgspectra/arrangement.hpp"
#include "sgspectra/cache.hpp"
#include "sgspectra/cayley.hpp"
#include "sgspectra/characters.hpp"
#include "sgspectra/genset.hpp"
#include "sgspectra/verify.hpp"

namespace {

struct GlobalOpts {
  std::string out;
  std::string format;  // json | csv | edgelist; default depends on the mode
  std::string cache = "use";
  long long seed = 1;
  long long max_vertices = spectra::kDenseBudget;

  std::int64_t exact_budget() const {
    return std::min<long long>(spectra::kExactBudget, max_vertices);
  }
};

void emit(const GlobalOpts& g, const std::string& artifact) {
  if (g.out.empty())
    std::cout << artifact;
  else
    spectra::atomic_write_file(g.out, artifact);
}

/// Wraps compute() with the cache: on a hit the stored artifact is reused
/// byte-for-byte, otherwise the artifact is computed and stored. Returns
/// the artifact text.
std::string with_cache(const GlobalOpts& g, const spectra::JobDescriptor& job,
                       const std::function<std::string()>& compute) {
  const auto policy = spectra::parse_cache_policy(g.cache);
  const auto cache = spectra::ResultCache::from_environment();
  if (policy == spectra::CachePolicy::kUse)
    if (auto hit = cache.lookup(job)) return *hit;
  std::string artifact = compute();
  if (policy != spectra::CachePolicy::kOff) cache.store(job, artifact);
  return artifact;
}

spectra::JobDescriptor make_job(const GlobalOpts& g, std::string command,
                                std::map<std::string, std::string> params) {
  params["format"] = g.format;
  params["seed"] = std::to_string(g.seed);
  params["max_vertices"] = std::to_string(g.max_vertices);
  return spectra::JobDescriptor{std::move(command), std::move(params)};
}

/// Each mode has one natural artifact format; an explicit --format must
/// agree with it.
void check_format(const GlobalOpts& g, const std::string& natural) {
  if (!g.format.empty() && g.format != natural)
    throw std::invalid_argument("--format " + g.format +
                                " does not apply here; this command/mode "
                                "produces " +
                                natural);
}

std::string verdict_name(spectra::IntegralityVerdict v) {
  switch (v) {
    case spectra::IntegralityVerdict::kIntegral: return "integral";
    case spectra::IntegralityVerdict::kNonIntegral: return "non_integral";
    default: return "undecided";
  }
}

nlohmann::ordered_json spectrum_json_fragment(const spectra::Spectrum& s) {
  auto list = nlohmann::ordered_json::array();
  if (s.exact) {
    for (const auto& [v, m] : s.exact_pairs)
      list.push_back({{"value", v}, {"multiplicity", m}});
  } else {
    for (const auto& [v, m] : s.numeric_pairs) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.10f", v);
      list.push_back({{"value", std::string(buf)}, {"multiplicity", m}});
    }
  }
  return list;
}

std::string integrality_json(int n, const std::string& label,
                             const spectra::IntegralityReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["genset"] = label;
  doc["verdict"] = verdict_name(report.verdict);
  doc["exact"] = report.exact;
  if (report.spectrum)
    doc["spectrum"] = spectrum_json_fragment(*report.spectrum);
  if (report.certificate) doc["certificate"] = report.certificate->describe();
  if (!report.note.empty()) doc["note"] = report.note;
  return doc.dump(2) + "\n";
}

/// Exact spectrum within the exact budget, numeric within the dense
/// budget. A graph with a provably non-integer spectrum falls back to the
/// numeric form (exact=false) for spectrum-mode output.
spectra::Spectrum best_spectrum(const spectra::IntMat& adjacency,
                                std::int64_t vertex_count,
                                const GlobalOpts& g) {
  if (vertex_count <= g.exact_budget()) {
    auto outcome = spectra::exact_integer_spectrum(adjacency);
    if (outcome.ok()) return std::move(*outcome.spectrum);
  }
  if (vertex_count > g.max_vertices)
    throw std::invalid_argument(
        "spectrum: " + std::to_string(vertex_count) +
        " vertices exceed --max-vertices " + std::to_string(g.max_vertices));
  std::vector<std::pair<double, std::int64_t>> pairs;
  const auto values = spectra::symmetric_eigenvalues(adjacency);
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() &&
           values[j] - values[j - 1] <= spectra::kAggregationTol) {
      sum += values[j];
      ++j;
    }
    pairs.emplace_back(sum / static_cast<double>(j - i),
                       static_cast<std::int64_t>(j - i));
    i = j;
  }
  return spectra::Spectrum::from_numeric(std::move(pairs));
}

int run_cayley(const GlobalOpts& g, int n, const std::string& spec,
               const std::string& mode) {
  check_format(g, mode == "export" ? "edgelist" : "json");
  auto job = make_job(g, "cayley",
                      {{"n", std::to_string(n)}, {"genset", spec},
                       {"mode", mode}});
  int code = 0;
  const std::string artifact = with_cache(g, job, [&] {
    const auto genset = spectra::parse_genset_spec(spec, n);
    if (genset.warning()) std::cerr << "warning: " << *genset.warning() << "\n";
    const auto graph = spectra::build_cayley(n, genset);
    if (mode == "export") return spectra::edge_list_export(graph);
    if (mode == "spectrum") {
      const auto s =
          best_spectrum(adjacency_matrix(graph), graph.vertex_count, g);
      return spectra::spectrum_to_json(s, n, genset.label());
    }
    const auto report = spectra::verify_integrality(graph, g.exact_budget(),
                                                    g.max_vertices);
    return integrality_json(n, genset.label(), report);
  });
  if (mode == "integrality") {
    const auto doc = nlohmann::json::parse(artifact);
    if (doc["verdict"] == "undecided") code = 2;
  }
  emit(g, artifact);
  return code;
}

int run_arrangement(const GlobalOpts& g, int n, int k, int r,
                    const std::string& mode) {
  if (mode != "quotient-check")
    check_format(g, mode == "export" ? "edgelist" : "json");
  auto job = make_job(g, "arrangement",
                      {{"n", std::to_string(n)}, {"k", std::to_string(k)},
                       {"r", std::to_string(r)}, {"mode", mode}});
  int code = 0;
  const std::string label = "arrangement " + std::to_string(n) + " " +
                            std::to_string(k) + " " + std::to_string(r);
  const std::string artifact = with_cache(g, job, [&] {
    if (mode == "quotient-check") {
      std::string counterexample;
      const bool ok = spectra::verify_quotient_identity(n, k, r,
                                                        &counterexample);
      const mpz_class f = spectra::factorial(n - k);
      std::string text = "Q == " + f.get_str() + "·A : " +
                         (ok ? "true" : "false") + "\n";
      if (!ok) text += "counterexample: " + counterexample + "\n";
      return text;
    }
    const auto graph = spectra::build_arrangement(
        n, k, r, std::min<std::int64_t>(spectra::kArrangementBudget,
                                        g.max_vertices));
    if (mode == "export") return spectra::edge_list_export(graph);
    if (mode == "spectrum") {
      const auto s = best_spectrum(adjacency_matrix(graph),
                                   graph.vertex_count(), g);
      return spectra::spectrum_to_json(s, n, label);
    }
    // integrality: exact verdicts only; beyond the exact budget the cell
    // is undecided, never a float claim.
    spectra::IntegralityReport report;
    if (graph.vertex_count() <= g.exact_budget()) {
      auto outcome =
          spectra::exact_integer_spectrum(adjacency_matrix(graph));
      report.exact = true;
      if (outcome.ok()) {
        report.verdict = spectra::IntegralityVerdict::kIntegral;
        report.spectrum = std::move(outcome.spectrum);
      } else if (outcome.certificate->conclusive) {
        report.verdict = spectra::IntegralityVerdict::kNonIntegral;
        report.certificate = std::move(outcome.certificate);
      } else {
        report.verdict = spectra::IntegralityVerdict::kUndecided;
        report.exact = false;
      }
    } else {
      report.note = "beyond the exact budget";
    }
    return integrality_json(n, label, report);
  });
  if (mode == "integrality") {
    const auto doc = nlohmann::json::parse(artifact);
    if (doc["verdict"] == "undecided") code = 2;
  } else if (mode == "quotient-check" &&
             artifact.find(": true") == std::string::npos) {
    code = 1;
  }
  emit(g, artifact);
  return code;
}

int run_charset(const GlobalOpts& g, int n) {
  check_format(g, "csv");
  auto job = make_job(g, "charset", {{"n", std::to_string(n)}});
  const std::string artifact = with_cache(g, job, [&] {
    return spectra::character_table(n).to_csv();
  });
  emit(g, artifact);
  return 0;
}

int run_verify_command(const GlobalOpts& g, int max_n) {
  check_format(g, "a plain-text report");
  auto job = make_job(g, "verify", {{"max_n", std::to_string(max_n)}});
  const std::string artifact = with_cache(g, job, [&] {
    return spectra::run_verify(max_n).text;
  });
  emit(g, artifact);
  return artifact.find("\nFAIL ") != std::string::npos ||
                 artifact.rfind("FAIL ", 0) == 0
             ? 1
             : 0;
}

int run_scan(const GlobalOpts& g, int max_n) {
  check_format(g, "csv");
  auto job = make_job(g, "scan", {{"max_n", std::to_string(max_n)}});
  const std::string artifact = with_cache(g, job, [&] {
    const auto rows = spectra::integrality_scan(
        max_n, std::min<std::int64_t>(spectra::kArrangementBudget,
                                      g.max_vertices),
        g.exact_budget());
    return spectra::scan_csv(rows, max_n);
  });
  emit(g, artifact);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra of Cayley graphs of S_n and arrangement graphs"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--out", g.out, "write the artifact to PATH (default stdout)");
  app.add_option("--format", g.format, "json | csv | edgelist")
      ->check(CLI::IsMember({"", "json", "csv", "edgelist"}));
  app.add_option("--cache", g.cache, "use | refresh | off")
      ->check(CLI::IsMember({"use", "refresh", "off"}));
  app.add_option("--seed", g.seed, "seed recorded in the job descriptor");
  app.add_option("--max-vertices", g.max_vertices,
                 "dense solver budget (default 5040)");

  int n = 0, k = 0, r = 0, max_n = 5;
  std::string genset_spec, mode;

  auto* cayley = app.add_subcommand("cayley", "Cayley graph of S_n");
  cayley->fallthrough();
  cayley->add_option("--n", n, "degree of the symmetric group")->required();
  cayley->add_option("--genset", genset_spec,
                     "cy:R | m:K,R | classes:T|T... | nicesep:T...;{..}{..}")
      ->required();
  cayley->add_option("--mode", mode, "spectrum | export | integrality")
      ->default_val("spectrum")
      ->check(CLI::IsMember({"spectrum", "export", "integrality"}));

  auto* arrangement = app.add_subcommand("arrangement", "A(n,k,r)");
  arrangement->fallthrough();
  arrangement->add_option("--n", n)->required();
  arrangement->add_option("--k", k)->required();
  arrangement->add_option("--r", r)->required();
  arrangement
      ->add_option("--mode", mode,
                   "spectrum | export | integrality | quotient-check")
      ->default_val("spectrum")
      ->check(CLI::IsMember(
          {"spectrum", "export", "integrality", "quotient-check"}));

  auto* charset = app.add_subcommand("charset", "character table CSV");
  charset->fallthrough();
  charset->add_option("--n", n)->required();

  auto* verify = app.add_subcommand("verify", "desk-scale verification suite");
  verify->fallthrough();
  verify->add_option("--max-n", max_n, "largest degree (3..6)");

  auto* scan = app.add_subcommand("scan", "arrangement integrality scan CSV");
  scan->fallthrough();
  scan->add_option("--max-n", max_n)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(cayley)) return run_cayley(g, n, genset_spec, mode);
    if (app.got_subcommand(arrangement))
      return run_arrangement(g, n, k, r, mode);
    if (app.got_subcommand(charset)) return run_charset(g, n);
    if (app.got_subcommand(verify)) return run_verify_command(g, max_n);
    if (app.got_subcommand(scan)) return run_scan(g, max_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
