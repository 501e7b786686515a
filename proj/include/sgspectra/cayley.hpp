#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgspectra/exactlin.hpp"
#include "sgspectra/genset.hpp"
#include "sgspectra/spectrum.hpp"

namespace spectra {

/// Dense numeric eigensolves are allowed up to 7! vertices; exact rational
/// verification up to 6!. Both raisable per call.
inline constexpr std::int64_t kDenseBudget = 5040;
inline constexpr std::int64_t kExactBudget = 720;

/// Numeric eigenvalues closer than this collapse into one spectrum entry.
inline constexpr double kAggregationTol = 1e-8;
/// Screening threshold for "looks integral" before exact verification.
inline constexpr double kIntegralityScreenTol = 1e-6;

/// Cayley graph on S_n: vertex ids are lexicographic ranks of the image
/// arrays; u ~ s*u for every generator s. Symmetric and |S|-regular by
/// construction (S inverse-closed, id-free).
struct CayleyGraph {
  int n = 0;
  GeneratingSet genset;
  std::int64_t vertex_count = 0;
  std::vector<std::vector<std::uint32_t>> adj;  // sorted neighbor lists
};

CayleyGraph build_cayley(int n, const GeneratingSet& s,
                         int cap = kEnumerationCap);

IntMat adjacency_matrix(const CayleyGraph& g);

/// Eigenvalues of the adjacency matrix by a dense symmetric solver,
/// clustered at kAggregationTol, descending. exact = false.
Spectrum spectrum_numeric(const CayleyGraph& g,
                          std::int64_t budget = kDenseBudget);

/// Produced when integer candidates fail exact verification. `conclusive`
/// is set when every integer in the eigenvalue range [-bound, bound] was
/// tested, which proves some eigenvalue is irrational.
struct NonIntegralityCertificate {
  std::int64_t dimension = 0;
  std::int64_t bound = 0;
  bool conclusive = false;
  std::vector<std::pair<std::int64_t, std::int64_t>> candidate_nullities;
  std::int64_t nullity_sum = 0;
  std::string reason;

  std::string describe() const;
};

struct ExactSpectrumOutcome {
  std::optional<Spectrum> spectrum;
  std::optional<NonIntegralityCertificate> certificate;
  bool ok() const { return spectrum.has_value(); }
};

/// Exact integer spectrum of any symmetric integer matrix:
///   1. integer candidates from the rounded numeric eigenvalues,
///   2. exact multiplicity of each candidate as the rational nullity of
///      (A - mI),
///   3. accepted iff multiplicities sum to the dimension and the first
///      three power traces match exactly.
/// A symmetric matrix is diagonalizable, so nullities summing to the full
/// dimension already accounts for every eigenvalue; the trace moments are a
/// second, independent consistency gate. If the quick candidates fail, the
/// candidate set is widened to all integers in the row-sum bound before a
/// conclusive certificate is issued.
ExactSpectrumOutcome exact_integer_spectrum(const IntMat& a);

ExactSpectrumOutcome spectrum_exact(const CayleyGraph& g,
                                    std::int64_t budget = kExactBudget);

enum class IntegralityVerdict { kIntegral, kNonIntegral, kUndecided };

struct IntegralityReport {
  IntegralityVerdict verdict = IntegralityVerdict::kUndecided;
  bool exact = false;  // verdict backed by rational arithmetic
  std::optional<Spectrum> spectrum;
  std::optional<NonIntegralityCertificate> certificate;
  /// Numeric path only: max |lambda - round(lambda)|.
  double max_round_deviation = 0.0;
  std::string note;
};

/// Exact verdict within the exact budget; numeric screening (integral /
/// undecided only) within the dense budget; undecided above. A non-integral
/// verdict always carries a rational-arithmetic certificate, never a
/// floating-point observation.
IntegralityReport verify_integrality(const CayleyGraph& g,
                                     std::int64_t exact_budget = kExactBudget,
                                     std::int64_t dense_budget = kDenseBudget);

/// Spectrum of Gamma(S_n, s) for s supported inside t, computed on the
/// small group S_|t| and lifted: every multiplicity scales by the index
/// n!/|t|! because the big graph is that many disjoint copies.
Spectrum disjoint_union_spectrum(int n, const std::set<int>& t,
                                 const GeneratingSet& s,
                                 int cap = kEnumerationCap);

enum class CheckStatus { kPass, kFail, kSkipped };

/// Matrix-level verification that commuting generating sets combine
/// integrally: (a) A1 A2 = A2 A1, (b) eig(A1+A2) lies in the sumset,
/// (c) eig(A1-A2) lies in the difference set (when s2 is a subset of s1),
/// (d) A(S1 u S2) = A1 + A2 and A(S1 \ S2) = A1 - A2.
struct CommutingCombinationReport {
  bool commutative = false;
  bool disjoint = false;
  bool subset = false;  // s2 subset of s1
  CheckStatus products_commute = CheckStatus::kSkipped;
  CheckStatus sum_eigenvalues_in_sumset = CheckStatus::kSkipped;
  CheckStatus difference_eigenvalues_in_diffset = CheckStatus::kSkipped;
  CheckStatus union_matrix_identity = CheckStatus::kSkipped;
  CheckStatus difference_matrix_identity = CheckStatus::kSkipped;
  std::vector<std::string> notes;

  bool all_applicable_pass() const;
};

CommutingCombinationReport commuting_combination_check(const GeneratingSet& s1,
                                                       const GeneratingSet& s2,
                                                       int n);

/// "u v" per line, 0-based canonical ids, u < v, lexicographically sorted;
/// '#' header carries n and the generating-set spec string.
std::string edge_list_export(const CayleyGraph& g);

}  // namespace spectra
