#include "sgspectra/cayley.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace spectra {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Work guard for widening the candidate list to a whole integer interval:
// (2*bound+1) * N^3 elimination steps have to stay desk-scale.
constexpr double kWideningWorkLimit = 2e11;

std::vector<std::int64_t> nullities_for(const IntMat& a,
                                        const std::vector<std::int64_t>& ms) {
  std::vector<std::int64_t> out(ms.size());
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(ms.size()));
  if (workers <= 1 || a.rows < 256) {
    for (std::size_t i = 0; i < ms.size(); ++i)
      out[i] = nullity_over_Q(shift_diagonal(a, ms[i]));
    return out;
  }
  std::vector<std::future<void>> tasks;
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w)
    tasks.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next.fetch_add(1); i < ms.size();
           i = next.fetch_add(1))
        out[i] = nullity_over_Q(shift_diagonal(a, ms[i]));
    }));
  for (auto& t : tasks) t.get();
  return out;
}

}  // namespace

CayleyGraph build_cayley(int n, const GeneratingSet& s, int cap) {
  require(s.degree() == n, "build_cayley: generating set degree mismatch");
  require(is_inverse_closed(s),
          "build_cayley: generating set is not inverse closed");
  const auto group = enumerate_group(n, cap);
  CayleyGraph g{n, s, static_cast<std::int64_t>(group.size()), {}};
  g.adj.resize(group.size());
  for (std::size_t u = 0; u < group.size(); ++u) {
    auto& row = g.adj[u];
    row.reserve(s.size());
    for (const auto& gen : s.elements())
      row.push_back(
          static_cast<std::uint32_t>(lex_rank(compose(gen, group[u]))));
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::logic_error("build_cayley: duplicate neighbor");
  }
  return g;
}

IntMat adjacency_matrix(const CayleyGraph& g) {
  const int n = static_cast<int>(g.vertex_count);
  IntMat a(n, n);
  for (int u = 0; u < n; ++u)
    for (auto v : g.adj[u]) a.at(u, static_cast<int>(v)) = 1;
  return a;
}

namespace {

Spectrum cluster_numeric(const std::vector<double>& ascending) {
  std::vector<std::pair<double, std::int64_t>> pairs;
  std::size_t i = 0;
  while (i < ascending.size()) {
    std::size_t j = i + 1;
    double sum = ascending[i];
    while (j < ascending.size() &&
           ascending[j] - ascending[j - 1] <= kAggregationTol) {
      sum += ascending[j];
      ++j;
    }
    pairs.emplace_back(sum / static_cast<double>(j - i),
                       static_cast<std::int64_t>(j - i));
    i = j;
  }
  return Spectrum::from_numeric(std::move(pairs));
}

}  // namespace

Spectrum spectrum_numeric(const CayleyGraph& g, std::int64_t budget) {
  if (g.vertex_count > budget)
    throw std::invalid_argument(
        "spectrum_numeric: " + std::to_string(g.vertex_count) +
        " vertices exceed the dense budget " + std::to_string(budget) +
        "; use the exact or structural paths");
  return cluster_numeric(symmetric_eigenvalues(adjacency_matrix(g)));
}

std::string NonIntegralityCertificate::describe() const {
  std::ostringstream out;
  out << "non-integrality certificate: " << reason << " (dimension "
      << dimension << ", candidate nullities sum to " << nullity_sum;
  if (conclusive)
    out << "; all integers in [-" << bound << ", " << bound
        << "] were tested, so some eigenvalue is irrational";
  out << ")";
  return out.str();
}

ExactSpectrumOutcome exact_integer_spectrum(const IntMat& a) {
  if (!is_symmetric(a))
    throw std::invalid_argument("exact_integer_spectrum: matrix not symmetric");
  const int n = a.rows;
  if (n == 0) {
    ExactSpectrumOutcome out;
    out.spectrum = Spectrum::from_exact({});
    return out;
  }

  const auto numeric = symmetric_eigenvalues(a);
  std::set<std::int64_t> candidate_set;
  for (double v : numeric)
    candidate_set.insert(static_cast<std::int64_t>(std::llround(v)));
  std::vector<std::int64_t> candidates(candidate_set.begin(),
                                       candidate_set.end());

  std::map<std::int64_t, std::int64_t> nullity;
  auto run = [&](const std::vector<std::int64_t>& ms) {
    const auto res = nullities_for(a, ms);
    for (std::size_t i = 0; i < ms.size(); ++i) nullity[ms[i]] = res[i];
  };
  run(candidates);

  const auto moments = power_traces(a);
  auto verdict = [&]() -> std::optional<Spectrum> {
    std::int64_t total = 0;
    __int128 m1 = 0, m2 = 0, m3 = 0;
    std::map<std::int64_t, std::int64_t> mults;
    for (const auto& [m, d] : nullity) {
      if (d == 0) continue;
      mults[m] = d;
      total += d;
      m1 += static_cast<__int128>(d) * m;
      m2 += static_cast<__int128>(d) * m * m;
      m3 += static_cast<__int128>(d) * m * m * m;
    }
    if (total != n) return std::nullopt;
    if (m1 != moments[0] || m2 != moments[1] || m3 != moments[2])
      throw std::logic_error(
          "exact_integer_spectrum: nullities cover the dimension but the "
          "trace moments disagree");
    return Spectrum::from_exact(mults);
  };

  if (auto s = verdict()) return {std::move(s), std::nullopt};

  // Quick candidates fell short. Every integer eigenvalue lies within the
  // row-sum bound, so testing that whole interval decides integrality.
  const std::int64_t bound = row_sum_bound(a);
  const double widening_work = static_cast<double>(2 * bound + 1) *
                               std::pow(static_cast<double>(n), 3);
  bool conclusive = false;
  if (widening_work <= kWideningWorkLimit) {
    std::vector<std::int64_t> missing;
    for (std::int64_t m = -bound; m <= bound; ++m)
      if (!nullity.count(m)) missing.push_back(m);
    run(missing);
    conclusive = true;
    if (auto s = verdict()) return {std::move(s), std::nullopt};
  }

  NonIntegralityCertificate cert;
  cert.dimension = n;
  cert.bound = bound;
  cert.conclusive = conclusive;
  for (const auto& [m, d] : nullity)
    if (d > 0) cert.candidate_nullities.emplace_back(m, d);
  for (const auto& [m, d] : nullity) cert.nullity_sum += d;
  cert.reason = "rational multiplicities of the integer candidates sum to " +
                std::to_string(cert.nullity_sum) + " < dimension " +
                std::to_string(n);
  return {std::nullopt, std::move(cert)};
}

ExactSpectrumOutcome spectrum_exact(const CayleyGraph& g,
                                    std::int64_t budget) {
  if (g.vertex_count > budget)
    throw std::invalid_argument(
        "spectrum_exact: " + std::to_string(g.vertex_count) +
        " vertices exceed the exact budget " + std::to_string(budget));
  return exact_integer_spectrum(adjacency_matrix(g));
}

IntegralityReport verify_integrality(const CayleyGraph& g,
                                     std::int64_t exact_budget,
                                     std::int64_t dense_budget) {
  IntegralityReport report;
  if (g.vertex_count <= exact_budget) {
    auto outcome = spectrum_exact(g, exact_budget);
    report.exact = true;
    if (outcome.ok()) {
      report.verdict = IntegralityVerdict::kIntegral;
      report.spectrum = std::move(outcome.spectrum);
      report.note = "exact rational verification";
    } else if (outcome.certificate && outcome.certificate->conclusive) {
      report.verdict = IntegralityVerdict::kNonIntegral;
      report.certificate = std::move(outcome.certificate);
      report.note = report.certificate->describe();
    } else {
      report.verdict = IntegralityVerdict::kUndecided;
      report.exact = false;
      report.certificate = std::move(outcome.certificate);
      report.note = "candidate widening exceeded the work budget";
    }
    return report;
  }
  if (g.vertex_count <= dense_budget) {
    const auto numeric = spectrum_numeric(g, dense_budget);
    double max_dev = 0.0;
    for (const auto& [v, m] : numeric.numeric_pairs)
      max_dev = std::max(max_dev, std::abs(v - std::llround(v)));
    report.max_round_deviation = max_dev;
    if (max_dev <= kIntegralityScreenTol) {
      report.verdict = IntegralityVerdict::kIntegral;
      report.note = "numeric screen only; not a rational-arithmetic proof";
    } else {
      report.verdict = IntegralityVerdict::kUndecided;
      report.note =
          "numeric eigenvalues stray from integers; a non-integral verdict "
          "requires the exact path";
    }
    return report;
  }
  report.verdict = IntegralityVerdict::kUndecided;
  report.note = "vertex count exceeds every solver budget";
  return report;
}

Spectrum disjoint_union_spectrum(int n, const std::set<int>& t,
                                 const GeneratingSet& s, int cap) {
  require(s.degree() == n, "disjoint_union_spectrum: degree mismatch");
  for (const auto& e : s.elements()) {
    const auto moved = move_set(e);
    require(std::includes(t.begin(), t.end(), moved.begin(), moved.end()),
            "disjoint_union_spectrum: a generator moves points outside T");
  }
  const int small_n = std::max<int>(1, static_cast<int>(t.size()));

  // Relabel the points of T to 1..|T|.
  std::map<int, int> to_small;
  int next = 1;
  for (int v : t) to_small[v] = next++;
  std::vector<Permutation> small_elems;
  for (const auto& e : s.elements()) {
    std::vector<int> imgs(small_n);
    std::iota(imgs.begin(), imgs.end(), 1);
    for (int v : t) imgs[to_small[v] - 1] = to_small[e(v)];
    small_elems.push_back(Permutation(std::move(imgs)));
  }
  const auto small_set =
      GeneratingSet::make(small_n, std::move(small_elems),
                          Provenance::kCustom, "restriction:" + s.label());
  const auto small_graph = build_cayley(small_n, small_set, cap);

  mpz_class index = factorial(n) / factorial(small_n);
  require(index.fits_slong_p(), "disjoint_union_spectrum: index overflow");
  const std::int64_t l = index.get_si();

  if (small_graph.vertex_count <= kExactBudget) {
    auto outcome = exact_integer_spectrum(adjacency_matrix(small_graph));
    if (outcome.ok()) {
      std::map<std::int64_t, std::int64_t> lifted;
      for (const auto& [v, m] : outcome.spectrum->exact_pairs)
        lifted[v] = m * l;
      return Spectrum::from_exact(lifted);
    }
  }
  auto numeric = spectrum_numeric(small_graph);
  for (auto& [v, m] : numeric.numeric_pairs) m *= l;
  return numeric;
}

namespace {

bool eigenvalues_in_combination_set(const Spectrum& combined,
                                    const Spectrum& s1, const Spectrum& s2,
                                    int sign) {
  std::set<std::int64_t> allowed;
  for (const auto& [l1, m1] : s1.exact_pairs)
    for (const auto& [l2, m2] : s2.exact_pairs) allowed.insert(l1 + sign * l2);
  for (const auto& [v, m] : combined.exact_pairs)
    if (!allowed.count(v)) return false;
  return true;
}

}  // namespace

bool CommutingCombinationReport::all_applicable_pass() const {
  for (auto status :
       {products_commute, sum_eigenvalues_in_sumset,
        difference_eigenvalues_in_diffset, union_matrix_identity,
        difference_matrix_identity})
    if (status == CheckStatus::kFail) return false;
  return true;
}

CommutingCombinationReport commuting_combination_check(
    const GeneratingSet& s1, const GeneratingSet& s2, int n) {
  require(s1.degree() == n && s2.degree() == n,
          "commuting_combination_check: degree mismatch");
  CommutingCombinationReport report;
  report.commutative = are_commutative(s1, s2, n);
  std::vector<Permutation> common;
  std::set_intersection(s1.elements().begin(), s1.elements().end(),
                        s2.elements().begin(), s2.elements().end(),
                        std::back_inserter(common));
  report.disjoint = common.empty();
  report.subset = std::includes(s1.elements().begin(), s1.elements().end(),
                                s2.elements().begin(), s2.elements().end());
  if (!report.commutative)
    report.notes.push_back("precondition failed: the sets do not commute");

  const auto g1 = build_cayley(n, s1);
  const auto g2 = build_cayley(n, s2);
  const auto a1 = adjacency_matrix(g1);
  const auto a2 = adjacency_matrix(g2);

  report.products_commute =
      (a1 * a2 == a2 * a1) ? CheckStatus::kPass : CheckStatus::kFail;

  const bool within_exact = g1.vertex_count <= kExactBudget;
  if (report.commutative && within_exact) {
    const auto e1 = exact_integer_spectrum(a1);
    const auto e2 = exact_integer_spectrum(a2);
    if (e1.ok() && e2.ok()) {
      const auto esum = exact_integer_spectrum(a1 + a2);
      report.sum_eigenvalues_in_sumset =
          (esum.ok() &&
           eigenvalues_in_combination_set(*esum.spectrum, *e1.spectrum,
                                          *e2.spectrum, +1))
              ? CheckStatus::kPass
              : CheckStatus::kFail;
      if (report.subset) {
        const auto ediff = exact_integer_spectrum(a1 - a2);
        report.difference_eigenvalues_in_diffset =
            (ediff.ok() &&
             eigenvalues_in_combination_set(*ediff.spectrum, *e1.spectrum,
                                            *e2.spectrum, -1))
                ? CheckStatus::kPass
                : CheckStatus::kFail;
      } else {
        report.notes.push_back(
            "difference checks skipped: s2 is not a subset of s1");
      }
    } else {
      report.sum_eigenvalues_in_sumset = CheckStatus::kFail;
      report.notes.push_back(
          "a side of the pair is not integral, so the combination lemma "
          "does not apply");
    }
  } else if (!report.commutative) {
    report.notes.push_back(
        "eigenvalue combination checks skipped: sets do not commute");
  } else {
    report.notes.push_back(
        "eigenvalue combination checks skipped: beyond the exact budget");
  }

  if (report.disjoint) {
    std::vector<Permutation> both(s1.elements());
    both.insert(both.end(), s2.elements().begin(), s2.elements().end());
    const auto u = GeneratingSet::make(n, std::move(both), Provenance::kCustom,
                                       "union");
    report.union_matrix_identity =
        (adjacency_matrix(build_cayley(n, u)) == a1 + a2)
            ? CheckStatus::kPass
            : CheckStatus::kFail;
  } else {
    report.notes.push_back("union identity skipped: sets are not disjoint");
  }
  if (report.subset) {
    std::vector<Permutation> rest;
    std::set_difference(s1.elements().begin(), s1.elements().end(),
                        s2.elements().begin(), s2.elements().end(),
                        std::back_inserter(rest));
    const auto d = GeneratingSet::make(n, std::move(rest), Provenance::kCustom,
                                       "difference");
    report.difference_matrix_identity =
        (adjacency_matrix(build_cayley(n, d)) == a1 - a2)
            ? CheckStatus::kPass
            : CheckStatus::kFail;
  }
  return report;
}

std::string edge_list_export(const CayleyGraph& g) {
  std::ostringstream out;
  out << "# cayley " << g.n << ' ' << g.genset.label() << '\n';
  for (std::int64_t u = 0; u < g.vertex_count; ++u)
    for (auto v : g.adj[u])
      if (u < v) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace spectra
