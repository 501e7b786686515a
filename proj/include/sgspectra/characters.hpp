#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgspectra/genset.hpp"
#include "sgspectra/perm.hpp"
#include "sgspectra/spectrum.hpp"

namespace spectra {

/// Character tables stay cheap far beyond the graph caps.
inline constexpr int kCharacterCap = 12;

/// A partition of n with weakly decreasing positive parts; indexes one
/// irreducible character of S_n.
class IntegerPartition {
public:
  explicit IntegerPartition(std::vector<int> parts);

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }

  std::string to_string() const;  // "(3,1)"

  bool operator==(const IntegerPartition&) const = default;
  auto operator<=>(const IntegerPartition&) const = default;

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n) first,
/// (1,...,1) last.
std::vector<IntegerPartition> partitions_of(int n);

/// The cycle type whose cycle lengths are the partition's parts, and back.
CycleType type_of_partition(const IntegerPartition& p);
IntegerPartition partition_of_type(const CycleType& t);

/// chi_lambda(mu) by the Murnaghan-Nakayama border-strip recursion on the
/// largest remaining part of mu. Exact integer; memoized process-wide.
std::int64_t character_value(const IntegerPartition& lambda,
                             const CycleType& mu);

/// The full table of irreducible character values of S_n. Rows follow
/// partitions_of(n); columns hold the matching cycle types in the same
/// order. Immutable once built.
class CharacterTable {
public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  const std::vector<IntegerPartition>& partitions() const {
    return partitions_;
  }
  const std::vector<CycleType>& classes() const { return classes_; }

  std::int64_t value(int row, int col) const {
    return values_[row * classes_.size() + col];
  }
  /// chi(1), read off the identity-type column.
  std::int64_t dim(int row) const { return dims_[row]; }

  std::string to_csv() const;

private:
  int n_ = 0;
  std::vector<IntegerPartition> partitions_;
  std::vector<CycleType> classes_;
  std::vector<std::int64_t> values_;
  std::vector<std::int64_t> dims_;
};

inline CharacterTable character_table(int n) { return CharacterTable(n); }

/// Exact spectrum of the normal Cayley graph Gamma(S_n, s): for each
/// irreducible character, eta = (1/chi(1)) * sum_{t in s} chi(t) with
/// multiplicity chi(1)^2. Requires s to be a union of full conjugacy
/// classes; eta is asserted integral (a non-integer value is an internal
/// invariant violation, not a rounding).
Spectrum normal_cayley_spectrum(int n, const GeneratingSet& s);

}  // namespace spectra
