#include "sgspectra/arrangement.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spectra {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::pair<std::string, std::string> numeric_extremes(
    const std::vector<double>& ascending) {
  char lo[32], hi[32];
  std::snprintf(lo, sizeof lo, "%.6f", ascending.front());
  std::snprintf(hi, sizeof hi, "%.6f", ascending.back());
  return {lo, hi};
}

std::vector<std::vector<int>> k_permutations(int n, int k) {
  std::vector<std::vector<int>> tuples;
  std::vector<int> current;
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == k) {
      tuples.push_back(current);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      current.push_back(v);
      self(self);
      current.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return tuples;  // recursion order is lexicographic
}

int differing_positions(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++count;
  return count;
}

std::int64_t arrangement_vertex_count(int n, int k) {
  std::int64_t count = 1;
  for (int v = n; v > n - k; --v) count *= v;
  return count;
}

}  // namespace

ArrangementGraph build_arrangement(int n, int k, int r, std::int64_t budget) {
  require(1 <= r && r <= k && k <= n,
          "build_arrangement: need 1 <= r <= k <= n, got n=" +
              std::to_string(n) + ", k=" + std::to_string(k) +
              ", r=" + std::to_string(r));
  const std::int64_t count = arrangement_vertex_count(n, k);
  if (count > budget)
    throw std::invalid_argument(
        "build_arrangement: " + std::to_string(count) +
        " vertices exceed the budget " + std::to_string(budget));

  ArrangementGraph g;
  g.n = n;
  g.k = k;
  g.r = r;
  g.vertices = k_permutations(n, k);
  g.adj.resize(g.vertices.size());
  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v)
      if (differing_positions(g.vertices[u], g.vertices[v]) == r) {
        g.adj[u].push_back(static_cast<std::uint32_t>(v));
        g.adj[v].push_back(static_cast<std::uint32_t>(u));
      }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());

  g.degree = g.adj.empty() ? 0 : static_cast<int>(g.adj[0].size());
  for (const auto& row : g.adj)
    if (static_cast<int>(row.size()) != g.degree)
      throw std::logic_error("build_arrangement: graph is not regular");
  return g;
}

IntMat adjacency_matrix(const ArrangementGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  IntMat a(n, n);
  for (int u = 0; u < n; ++u)
    for (auto v : g.adj[u]) a.at(u, static_cast<int>(v)) = 1;
  return a;
}

std::string edge_list_export(const ArrangementGraph& g) {
  std::ostringstream out;
  out << "# arrangement " << g.n << ' ' << g.k << ' ' << g.r << '\n';
  for (std::int64_t u = 0; u < g.vertex_count(); ++u)
    for (auto v : g.adj[u])
      if (u < v) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

std::set<int> suffix_support(int n, int k) {
  std::set<int> t;
  for (int v = k + 1; v <= n; ++v) t.insert(v);
  return t;
}

/// Quotient of a Cayley graph on S_n by the right cosets of the subgroup
/// fixing {1,...,k}; verifies equitability exhaustively and that entries
/// take only the two allowed values {0, expected_entry}.
QuotientMatrix coset_quotient(const CayleyGraph& host, int k,
                              std::int64_t expected_entry, int cap) {
  const int n = host.n;
  auto cosets = right_cosets(n, suffix_support(n, k), cap);
  const int l = cosets.index();
  const auto group = enumerate_group(n, cap);

  // Block of a vertex = rank of its first-k-images tuple; reps are sorted
  // lexicographically, so tuple order and rep order agree.
  std::vector<std::vector<int>> tuples(l);
  for (int i = 0; i < l; ++i) tuples[i] = coset_vector(cosets, i, k);
  std::vector<int> block_of(group.size());
  for (std::size_t u = 0; u < group.size(); ++u) {
    std::vector<int> tuple(k);
    for (int j = 1; j <= k; ++j) tuple[j - 1] = group[u](j);
    const auto it = std::lower_bound(tuples.begin(), tuples.end(), tuple);
    if (it == tuples.end() || *it != tuple)
      throw std::logic_error("coset_quotient: vertex tuple not found");
    block_of[u] = static_cast<int>(it - tuples.begin());
  }

  IntMat q(l, l);
  std::vector<bool> seen_block(l, false);
  std::vector<std::int64_t> counts(l);
  for (std::size_t u = 0; u < group.size(); ++u) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto v : host.adj[u]) ++counts[block_of[v]];
    const int b = block_of[u];
    if (counts[b] != 0)
      throw std::logic_error(
          "coset_quotient: a block has internal edges; the partition "
          "identity fails");
    if (!seen_block[b]) {
      seen_block[b] = true;
      for (int j = 0; j < l; ++j) q.at(b, j) = counts[j];
    } else {
      for (int j = 0; j < l; ++j)
        if (q.at(b, j) != counts[j])
          throw std::logic_error(
              "coset_quotient: vertices of one block disagree on neighbor "
              "counts; the partition is not equitable");
    }
  }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (q.at(i, j) != 0 && q.at(i, j) != expected_entry)
        throw std::logic_error(
            "coset_quotient: entry " + std::to_string(q.at(i, j)) +
            " is neither 0 nor " + std::to_string(expected_entry));
  return QuotientMatrix{host.genset.label(), std::move(cosets), std::move(q)};
}

}  // namespace

QuotientMatrix equitable_quotient(int n, int k, int r, int cap) {
  require(1 <= r && r <= k && k <= n,
          "equitable_quotient: need 1 <= r <= k <= n");
  const auto host = build_cayley(n, m_set(n, k, r, cap), cap);
  mpz_class expected = factorial(n - k);
  return coset_quotient(host, k, expected.get_si(), cap);
}

bool verify_quotient_identity(int n, int k, int r,
                              std::string* counterexample) {
  const auto quotient = equitable_quotient(n, k, r);
  const auto arrangement = build_arrangement(n, k, r);
  const auto a = adjacency_matrix(arrangement);
  const mpz_class scale = factorial(n - k);
  const std::int64_t f = scale.get_si();
  if (quotient.entries.rows != a.rows) {
    if (counterexample) *counterexample = "dimension mismatch";
    return false;
  }
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (quotient.entries.at(i, j) != f * a.at(i, j)) {
        if (counterexample) {
          std::ostringstream out;
          out << "entry (" << i << ',' << j << "): Q=" << quotient.entries.at(i, j)
              << " vs " << f << "*A=" << f * a.at(i, j);
          *counterexample = out.str();
        }
        return false;
      }
  return true;
}

LiftReport lift_eigenvalues(int n, int k, int r) {
  LiftReport report;
  const auto arrangement = build_arrangement(n, k, r);
  const mpz_class scale = factorial(n - k);
  const std::int64_t f = scale.get_si();

  const auto host = build_cayley(n, m_set(n, k, r));
  if (host.vertex_count > kExactBudget ||
      arrangement.vertex_count() > kExactBudget) {
    report.note = "a side exceeds the exact budget; lift not certified";
    return report;
  }
  const auto arr_spec = exact_integer_spectrum(adjacency_matrix(arrangement));
  const auto host_spec = spectrum_exact(host);
  if (!arr_spec.ok() || !host_spec.ok()) {
    report.note = "a side has no exact integer spectrum";
    return report;
  }
  report.exact = true;
  report.all_contained = true;
  for (const auto& [lambda, mult] : arr_spec.spectrum->exact_pairs) {
    const auto host_mult = host_spec.spectrum->multiplicity_of(f * lambda);
    report.rows.emplace_back(lambda, mult, host_mult);
    if (host_mult < mult) report.all_contained = false;
  }
  return report;
}

QuotientMatrix unique_neighbor_quotient(int n, int k, int cap) {
  require(n > k && k >= 2, "unique_neighbor_quotient: need n > k >= 2");
  // Transpositions crossing the {1..k} | {k+1..n} split, as the nicely
  // separated set of the 2-cycle class over that partition.
  std::vector<int> type_counts(n, 0);
  type_counts[0] = n - 2;
  type_counts[1] = 1;
  std::set<int> left, right;
  for (int v = 1; v <= k; ++v) left.insert(v);
  for (int v = k + 1; v <= n; ++v) right.insert(v);
  const auto s = nicely_separated(n, {CycleType(type_counts)},
                                  GroundPartition(n, {left, right}), cap);
  const auto host = build_cayley(n, s, cap);
  return coset_quotient(host, k, 1, cap);
}

std::vector<ScanRow> integrality_scan(int max_n, std::int64_t budget,
                                      std::int64_t exact_budget) {
  std::vector<ScanRow> rows;
  for (int n = 2; n <= max_n; ++n)
    for (int k = 1; k < n; ++k)
      for (int r = 1; r <= k; ++r) {
        ScanRow row;
        row.n = n;
        row.k = k;
        row.r = r;
        row.vertices = arrangement_vertex_count(n, k);
        if (row.vertices > budget) {
          row.integral = "skipped";
          rows.push_back(row);
          continue;
        }
        const auto g = build_arrangement(n, k, r, budget);
        row.degree = g.degree;
        if (row.vertices <= exact_budget) {
          const auto outcome = exact_integer_spectrum(adjacency_matrix(g));
          if (outcome.ok()) {
            row.integral = "yes";
            row.exact = true;
            row.min_eig =
                std::to_string(outcome.spectrum->exact_pairs.back().first);
            row.max_eig =
                std::to_string(outcome.spectrum->exact_pairs.front().first);
          } else if (outcome.certificate->conclusive) {
            row.integral = "no";
            row.exact = true;
          } else {
            row.integral = "skipped";
          }
        } else {
          const auto extremes =
              numeric_extremes(symmetric_eigenvalues(adjacency_matrix(g)));
          row.integral = "skipped";
          row.min_eig = extremes.first;
          row.max_eig = extremes.second;
        }
        rows.push_back(row);
      }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows, int max_n) {
  std::ostringstream out;
  out << "# arrangement integrality scan, max_n=" << max_n << '\n';
  out << "# r=1 verdicts verify a proved statement; r>=2 verdicts are "
         "observational only\n";
  out << "n,k,r,vertices,degree,integral,min_eig,max_eig,exact\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.k << ',' << row.r << ',' << row.vertices << ','
        << row.degree << ',' << row.integral << ',' << row.min_eig << ','
        << row.max_eig << ',' << (row.exact ? "yes" : "no") << '\n';
  }
  return out.str();
}

}  // namespace spectra
