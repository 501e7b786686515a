#include "sgspectra/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sgspectra/arrangement.hpp"
#include "sgspectra/cayley.hpp"
#include "sgspectra/characters.hpp"
#include "sgspectra/genset.hpp"
#include "sgspectra/perm.hpp"

namespace spectra {

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

class ReportBuilder {
public:
  void add(bool ok, const std::string& id, const std::string& instance,
           const std::string& detail = "") {
    out_ << (ok ? "PASS " : "FAIL ") << id << ' ' << instance;
    if (!ok) out_ << " [" << (detail.empty() ? "mismatch" : detail) << ']';
    out_ << '\n';
    if (ok) ++passes_;
    else ++failures_;
  }

  VerifyReport finish(int max_n) {
    std::ostringstream head;
    head << "# verification report, max_n=" << max_n << '\n';
    return VerifyReport{head.str() + out_.str() + "SUMMARY pass=" +
                            std::to_string(passes_) + " fail=" +
                            std::to_string(failures_) + "\n",
                        passes_, failures_};
  }

private:
  std::ostringstream out_;
  int passes_ = 0;
  int failures_ = 0;
};

std::vector<CycleType> non_identity_types(int n) {
  std::vector<CycleType> types;
  for (const auto& p : partitions_of(n)) {
    auto t = type_of_partition(p);
    if (!t.is_identity_type()) types.push_back(t);
  }
  return types;
}

/// All unordered 2-block partitions of [n]: the block containing 1 runs
/// over subsets of {2..n} adjoined to {1}.
std::vector<GroundPartition> two_block_partitions(int n) {
  std::vector<GroundPartition> result;
  const unsigned full = (1u << (n - 1)) - 1;
  for (unsigned mask = 0; mask < full; ++mask) {
    std::set<int> first{1}, second;
    for (int i = 0; i < n - 1; ++i)
      (mask >> i & 1u ? first : second).insert(i + 2);
    result.push_back(GroundPartition(n, {first, second}));
  }
  return result;
}

void check_class_spectrum_oracle(ReportBuilder& rb, int max_n) {
  for (int n = 3; n <= std::min(max_n, 5); ++n) {
    const auto types = non_identity_types(n);
    std::vector<std::vector<CycleType>> combos;
    for (const auto& t : types) combos.push_back({t});
    for (std::size_t i = 0; i < types.size(); ++i)
      for (std::size_t j = i + 1; j < types.size(); ++j)
        combos.push_back({types[i], types[j]});
    for (const auto& combo : combos) {
      const auto s = class_union(n, combo);
      const auto character_route = normal_cayley_spectrum(n, s);
      const auto matrix_route = spectrum_exact(build_cayley(n, s));
      const bool ok =
          matrix_route.ok() && *matrix_route.spectrum == character_route;
      rb.add(ok, "class-spectrum-oracle",
             "n=" + std::to_string(n) + " genset=" + s.label(),
             ok ? ""
                : "character route " + character_route.to_string() +
                      " != matrix route");
    }
  }
}

void check_cy_integrality(ReportBuilder& rb, int max_n) {
  static constexpr std::pair<int, int> kInstances[] = {
      {3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}, {6, 2}};
  for (const auto& [n, r] : kInstances) {
    if (n > max_n) continue;
    const auto report = verify_integrality(build_cayley(n, cy(n, r)));
    const bool ok =
        report.verdict == IntegralityVerdict::kIntegral && report.exact;
    rb.add(ok, "cy-integral",
           "n=" + std::to_string(n) + " r=" + std::to_string(r),
           ok ? "" : report.note);
  }
}

void check_nicely_separated(ReportBuilder& rb, int max_n) {
  for (int n = 4; n <= std::min(max_n, 5); ++n) {
    for (const auto& type : non_identity_types(n)) {
      for (const auto& partition : two_block_partitions(n)) {
        const auto s = nicely_separated(n, {type}, partition);
        const std::string instance = "n=" + std::to_string(n) + " genset=" +
                                     s.label();

        const auto integrality = verify_integrality(build_cayley(n, s));
        rb.add(integrality.verdict == IntegralityVerdict::kIntegral &&
                   integrality.exact,
               "nicesep-integral", instance, integrality.note);

        if (s.empty()) {
          rb.add(true, "nicesep-reconstruction", instance + " (empty set)");
          continue;
        }

        const auto parts = decompose(s);
        std::vector<Permutation> removed;
        for (const auto& part : parts.parts)
          removed.insert(removed.end(), part.set.elements().begin(),
                         part.set.elements().end());
        std::sort(removed.begin(), removed.end());
        std::vector<Permutation> rebuilt;
        std::set_difference(parts.s0.elements().begin(),
                            parts.s0.elements().end(), removed.begin(),
                            removed.end(), std::back_inserter(rebuilt));
        rb.add(rebuilt == s.elements(), "nicesep-reconstruction", instance);

        bool combos_ok = true;
        std::string combo_detail;
        for (std::size_t i = 0; i < parts.parts.size() && combos_ok; ++i)
          for (std::size_t j = i + 1; j < parts.parts.size() && combos_ok;
               ++j) {
            const auto check = commuting_combination_check(
                parts.parts[i].set, parts.parts[j].set, n);
            if (!check.commutative || !check.all_applicable_pass()) {
              combos_ok = false;
              combo_detail = "disjoint part pair " + std::to_string(i) + "," +
                             std::to_string(j) + " failed";
            }
          }
        if (!removed.empty() && combos_ok) {
          const auto u = GeneratingSet::make(n, removed, Provenance::kCustom,
                                             "union-of-parts");
          const auto check = commuting_combination_check(parts.s0, u, n);
          if (!check.commutative || !check.subset ||
              !check.all_applicable_pass()) {
            combos_ok = false;
            combo_detail = "class union vs part union failed";
          }
        }
        rb.add(combos_ok, "nicesep-combination", instance, combo_detail);
      }
    }
  }
}

void check_quotients(ReportBuilder& rb, int max_n) {
  for (int n = 2; n <= std::min(max_n, 5); ++n)
    for (int k = 1; k < n; ++k)
      for (int r = 1; r <= k; ++r) {
        const std::string instance = "n=" + std::to_string(n) +
                                     " k=" + std::to_string(k) +
                                     " r=" + std::to_string(r);
        bool equitable = true;
        std::string detail;
        try {
          equitable_quotient(n, k, r);
        } catch (const std::exception& e) {
          equitable = false;
          detail = e.what();
        }
        rb.add(equitable, "quotient-equitable", instance, detail);

        std::string counterexample;
        const bool identity = verify_quotient_identity(n, k, r,
                                                       &counterexample);
        rb.add(identity, "quotient-identity", instance, counterexample);

        const auto g = build_arrangement(n, k, r);
        const auto m = m_set(n, k, r);
        const mpz_class unit = factorial(n - k);
        const bool degree_ok =
            mpz_class(g.degree) * unit == mpz_class(m.size());
        rb.add(degree_ok, "arrangement-degree",
               instance + " degree=" + std::to_string(g.degree) +
                   " |M|=" + std::to_string(m.size()));

        const auto lift = lift_eigenvalues(n, k, r);
        rb.add(lift.exact && lift.all_contained, "eigenvalue-lift", instance,
               lift.note);
      }
}

void check_arrangement_integrality(ReportBuilder& rb, int max_n) {
  for (int n = 3; n <= max_n; ++n)
    for (int k = 2; k < n; ++k) {
      const auto g = build_arrangement(n, k, 1);
      const auto outcome = exact_integer_spectrum(adjacency_matrix(g));
      rb.add(outcome.ok(), "arrangement-integral",
             "n=" + std::to_string(n) + " k=" + std::to_string(k),
             outcome.ok() ? "" : outcome.certificate->describe());
    }
  for (int n = 2; n <= max_n; ++n) {
    const auto g = build_arrangement(n, 1, 1);
    const auto outcome = exact_integer_spectrum(adjacency_matrix(g));
    std::map<std::int64_t, std::int64_t> expected{{n - 1, 1}};
    if (n >= 2) expected[-1] = n - 1;
    rb.add(outcome.ok() && *outcome.spectrum == Spectrum::from_exact(expected),
           "complete-graph-spectrum", "n=" + std::to_string(n));
  }
  for (int k = 2; k <= max_n; ++k) {
    const auto g = build_arrangement(k, k, 1);
    const auto outcome = exact_integer_spectrum(adjacency_matrix(g));
    const mpz_class kf = factorial(k);
    std::map<std::int64_t, std::int64_t> expected{{0, kf.get_si()}};
    rb.add(outcome.ok() && *outcome.spectrum == Spectrum::from_exact(expected),
           "edgeless-spectrum", "k=" + std::to_string(k));
  }
}

void check_unique_neighbor(ReportBuilder& rb, int max_n) {
  for (int n = 3; n <= std::min(max_n, 5); ++n)
    for (int k = 2; k < n; ++k) {
      const std::string instance =
          "n=" + std::to_string(n) + " k=" + std::to_string(k);
      bool ok = true;
      std::string detail;
      try {
        const auto quotient = unique_neighbor_quotient(n, k);
        const auto arrangement = build_arrangement(n, k, 1);
        if (!(quotient.entries == adjacency_matrix(arrangement))) {
          ok = false;
          detail = "quotient differs from the arrangement adjacency";
        }
      } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
      }
      rb.add(ok, "unique-neighbor-quotient", instance, detail);
    }

  // Exhaustive per-vertex uniqueness at small n: every vertex has at most
  // one neighbor inside any single coset block.
  for (int n = 3; n <= std::min(max_n, 4); ++n)
    for (int k = 2; k < n; ++k) {
      std::vector<int> counts2(n, 0);
      counts2[0] = n - 2;
      counts2[1] = 1;
      std::set<int> left, right;
      for (int v = 1; v <= k; ++v) left.insert(v);
      for (int v = k + 1; v <= n; ++v) right.insert(v);
      const auto s = nicely_separated(n, {CycleType(counts2)},
                                      GroundPartition(n, {left, right}));
      const auto host = build_cayley(n, s);
      std::set<int> support;
      for (int v = k + 1; v <= n; ++v) support.insert(v);
      const auto cosets = right_cosets(n, support);
      const auto group = enumerate_group(n);
      bool ok = true;
      for (std::size_t u = 0; u < group.size() && ok; ++u) {
        std::vector<int> per_block(cosets.index(), 0);
        for (auto v : host.adj[u])
          if (++per_block[cosets.block_of(group[v])] > 1) ok = false;
        if (per_block[cosets.block_of(group[u])] != 0) ok = false;
      }
      rb.add(ok, "unique-neighbor-exhaustive",
             "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
}

void check_cy2_bounds(ReportBuilder& rb, int max_n) {
  for (int n = 4; n <= std::min(max_n, 5); ++n) {
    const auto outcome = spectrum_exact(build_cayley(n, cy(n, 2)));
    if (!outcome.ok()) {
      rb.add(false, "cy2-eigen-bounds", "n=" + std::to_string(n),
             "no exact spectrum");
      continue;
    }
    const auto& s = *outcome.spectrum;
    bool ok = true;
    std::string detail;
    for (int l = 1; l <= n - 1 && ok; ++l) {
      const std::int64_t needed = binomial(n - 2, l - 1);
      if (s.multiplicity_of(n - l) < needed ||
          s.multiplicity_of(-(n - l)) < needed) {
        ok = false;
        detail = "multiplicity of +-" + std::to_string(n - l) + " below " +
                 std::to_string(needed);
      }
    }
    if (ok && s.multiplicity_of(0) < binomial(n - 1, 2)) {
      ok = false;
      detail = "multiplicity of 0 below " +
               std::to_string(binomial(n - 1, 2));
    }
    rb.add(ok, "cy2-eigen-bounds", "n=" + std::to_string(n), detail);
  }
  if (max_n >= 3) {
    const auto outcome = spectrum_exact(build_cayley(3, cy(3, 2)));
    rb.add(outcome.ok() && outcome.spectrum->multiplicity_of(0) == 0,
           "cy2-zero-absent", "n=3");
  }
}

}  // namespace

VerifyReport run_verify(int max_n) {
  if (max_n < 3 || max_n > 6)
    throw std::invalid_argument(
        "run_verify: max_n must lie in [3, 6] for the exact suite");
  ReportBuilder rb;
  check_class_spectrum_oracle(rb, max_n);
  check_cy_integrality(rb, max_n);
  check_nicely_separated(rb, max_n);
  check_quotients(rb, max_n);
  check_arrangement_integrality(rb, max_n);
  check_unique_neighbor(rb, max_n);
  check_cy2_bounds(rb, max_n);
  return rb.finish(max_n);
}

}  // namespace spectra
