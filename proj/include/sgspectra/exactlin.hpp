#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace spectra {

/// Dense row-major integer matrix. Entries stay well inside int64 for every
/// adjacency-scale use in this toolkit; products are overflow-checked.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  std::int64_t& at(int r, int c) {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
  std::int64_t at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static IntMat identity(int n);

  bool operator==(const IntMat&) const = default;
};

IntMat operator*(const IntMat& x, const IntMat& y);
IntMat operator+(const IntMat& x, const IntMat& y);
IntMat operator-(const IntMat& x, const IntMat& y);
/// x - s*I
IntMat shift_diagonal(const IntMat& x, std::int64_t s);

bool is_symmetric(const IntMat& x);
std::int64_t trace(const IntMat& x);

/// tr(x^p) for p = 1, 2, 3 in exact integer arithmetic.
std::array<std::int64_t, 3> power_traces(const IntMat& x);

/// Largest absolute row sum; every real eigenvalue lies in [-bound, bound].
std::int64_t row_sum_bound(const IntMat& x);

/// Exact dimension of the rational null space. Runs an integer-preserving
/// elimination with gcd row reduction; falls back to arbitrary precision if
/// 64-bit entries would overflow, so the answer is always exact.
int nullity_over_Q(const IntMat& m);

/// Eigenvalues of a symmetric integer matrix, ascending, via a dense
/// symmetric solver.
std::vector<double> symmetric_eigenvalues(const IntMat& m);

}  // namespace spectra
