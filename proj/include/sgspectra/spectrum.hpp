#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spectra {

/// A multiset of adjacency eigenvalues. Exact spectra carry integer values
/// (the only exact values this toolkit produces); numeric spectra carry
/// clustered floating-point values. Pairs are sorted by descending value.
struct Spectrum {
  bool exact = false;
  std::vector<std::pair<std::int64_t, std::int64_t>> exact_pairs;
  std::vector<std::pair<double, std::int64_t>> numeric_pairs;

  std::int64_t total() const;
  /// Multiplicity of an integer eigenvalue in an exact spectrum (0 if
  /// absent).
  std::int64_t multiplicity_of(std::int64_t value) const;

  static Spectrum from_exact(const std::map<std::int64_t, std::int64_t>& m);
  static Spectrum from_numeric(
      std::vector<std::pair<double, std::int64_t>> pairs);

  /// Compact display form "{3:1, 0:4, -3:1}".
  std::string to_string() const;
};

bool operator==(const Spectrum& a, const Spectrum& b);

/// The export schema: {"n":..., "genset":"...", "exact":bool,
/// "spectrum":[{"value":..., "multiplicity":...}, ...]}. Exact values are
/// JSON integers; numeric values are decimal strings.
std::string spectrum_to_json(const Spectrum& s, int n,
                             const std::string& genset_label);

}  // namespace spectra
