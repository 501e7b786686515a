#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgspectra/cayley.hpp"
#include "sgspectra/perm.hpp"

namespace spectra {

/// Dense arrangement-graph builds are allowed up to 7!/2! vertices; the
/// lift check needs the host Cayley graph as well, which kDenseBudget caps.
inline constexpr std::int64_t kArrangementBudget = 2520;

/// A(n,k,r): vertices are the k-permutations of {1,...,n} in lexicographic
/// order; two tuples are adjacent iff they differ in exactly r positions.
struct ArrangementGraph {
  int n = 0, k = 0, r = 0;
  std::vector<std::vector<int>> vertices;
  std::vector<std::vector<std::uint32_t>> adj;  // sorted neighbor lists
  int degree = 0;

  std::int64_t vertex_count() const {
    return static_cast<std::int64_t>(vertices.size());
  }
};

ArrangementGraph build_arrangement(int n, int k, int r,
                                   std::int64_t budget = kArrangementBudget);

IntMat adjacency_matrix(const ArrangementGraph& g);

/// Same edge-list format as Cayley graphs; header "# arrangement n k r".
std::string edge_list_export(const ArrangementGraph& g);

/// The quotient matrix of an equitable vertex partition of a host graph.
/// Entry (i,j) is the number of neighbors every vertex of block i has in
/// block j; equitability is verified exhaustively at construction.
struct QuotientMatrix {
  std::string host_label;
  CosetSystem partition;
  IntMat entries;
};

/// Partition Gamma(S_n, M(r)) (with k implicit in M(r)) by the right cosets
/// of the subgroup fixing {1,...,k} pointwise. Verifies that the partition
/// is equitable, that blocks have no internal edges, and that every entry
/// is 0 or (n-k)!.
QuotientMatrix equitable_quotient(int n, int k, int r,
                                  int cap = kEnumerationCap);

/// Entrywise test of Q = (n-k)! * A(n,k,r) under the canonical matching of
/// cosets to tuples. On mismatch, fills *counterexample and returns false.
bool verify_quotient_identity(int n, int k, int r,
                              std::string* counterexample = nullptr);

/// Containment of the scaled arrangement spectrum in the host spectrum:
/// each eigenvalue lambda of A(n,k,r) (with multiplicity) must appear as
/// (n-k)! * lambda in the spectrum of Gamma(S_n, M(r)).
struct LiftReport {
  bool exact = false;     // both spectra exact
  bool all_contained = false;
  // lambda, multiplicity in A, multiplicity of (n-k)!*lambda in the host
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> rows;
  std::string note;
};

LiftReport lift_eigenvalues(int n, int k, int r);

/// The one-to-one variant: host Gamma(S_n, S) with S the transpositions
/// swapping a point of {1,...,k} with one outside. Every vertex of a block
/// has at most one neighbor in any other block, so Q is a 0/1 matrix equal
/// to the adjacency matrix of A(n,k,1).
QuotientMatrix unique_neighbor_quotient(int n, int k,
                                        int cap = kEnumerationCap);

/// One scan cell. Verdicts are exact-only ("yes"/"no"); cells beyond the
/// exact budget report "skipped" (numeric extremes still shown when the
/// dense build fits).
struct ScanRow {
  int n = 0, k = 0, r = 0;
  std::int64_t vertices = 0;
  int degree = 0;
  std::string integral;  // yes | no | skipped
  std::string min_eig;
  std::string max_eig;
  bool exact = false;
};

std::vector<ScanRow> integrality_scan(
    int max_n, std::int64_t budget = kArrangementBudget,
    std::int64_t exact_budget = kExactBudget);

std::string scan_csv(const std::vector<ScanRow>& rows, int max_n);

}  // namespace spectra
