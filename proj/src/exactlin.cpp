#include "sgspectra/exactlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>
#include <gmpxx.h>

namespace spectra {

namespace {

constexpr std::int64_t kReduceThreshold = std::int64_t(1) << 40;

struct Int64Overflow {};

std::int64_t checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw Int64Overflow{};
  return static_cast<std::int64_t>(v);
}

// Integer-preserving elimination; pivots chosen by least |value| to slow
// entry growth. Throws Int64Overflow if 64 bits stop being enough.
int rank_elimination_int64(std::vector<std::vector<std::int64_t>> rows) {
  const int nrows = static_cast<int>(rows.size());
  const int ncols = nrows ? static_cast<int>(rows[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r) {
      if (rows[r][col] == 0) continue;
      if (pivot < 0 ||
          std::abs(rows[r][col]) < std::abs(rows[pivot][col]))
        pivot = r;
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::int64_t p = rows[rank][col];
    for (int r = rank + 1; r < nrows; ++r) {
      const std::int64_t b = rows[r][col];
      if (b == 0) continue;
      const std::int64_t g = std::gcd(p, b);
      const std::int64_t mp = p / g;
      const std::int64_t mb = b / g;
      std::int64_t maxabs = 0;
      for (int c = col; c < ncols; ++c) {
        const __int128 v = static_cast<__int128>(rows[r][c]) * mp -
                           static_cast<__int128>(rows[rank][c]) * mb;
        rows[r][c] = checked(v);
        maxabs = std::max(maxabs, std::abs(rows[r][c]));
      }
      if (maxabs > kReduceThreshold) {
        std::int64_t rg = 0;
        for (int c = col; c < ncols; ++c) rg = std::gcd(rg, rows[r][c]);
        if (rg > 1)
          for (int c = col; c < ncols; ++c) rows[r][c] /= rg;
      }
    }
    ++rank;
  }
  return rank;
}

int rank_elimination_mpz(const IntMat& m) {
  const int nrows = m.rows;
  const int ncols = m.cols;
  std::vector<std::vector<mpz_class>> rows(nrows);
  for (int r = 0; r < nrows; ++r) {
    rows[r].resize(ncols);
    for (int c = 0; c < ncols; ++c) rows[r][c] = m.at(r, c);
  }
  int rank = 0;
  mpz_class g, mp, mb, tmp;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r) {
      if (rows[r][col] == 0) continue;
      if (pivot < 0 || mpz_cmpabs(rows[r][col].get_mpz_t(),
                                  rows[pivot][col].get_mpz_t()) < 0)
        pivot = r;
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    const mpz_class& p = rows[rank][col];
    for (int r = rank + 1; r < nrows; ++r) {
      if (rows[r][col] == 0) continue;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), rows[r][col].get_mpz_t());
      mp = p / g;
      mb = rows[r][col] / g;
      for (int c = col; c < ncols; ++c) {
        tmp = rows[r][c] * mp - rows[rank][c] * mb;
        rows[r][c] = tmp;
      }
      g = 0;
      for (int c = col; c < ncols; ++c)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rows[r][c].get_mpz_t());
      if (g > 1)
        for (int c = col; c < ncols; ++c) rows[r][c] /= g;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
  std::vector<__int128> acc(static_cast<std::size_t>(x.rows) * y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      __int128* row = acc.data() + static_cast<std::size_t>(i) * y.cols;
      const std::int64_t* yrow = y.a.data() + static_cast<std::size_t>(k) * y.cols;
      for (int j = 0; j < y.cols; ++j) row[j] += static_cast<__int128>(v) * yrow[j];
    }
  }
  IntMat z(x.rows, y.cols);
  try {
    for (std::size_t i = 0; i < acc.size(); ++i) z.a[i] = checked(acc[i]);
  } catch (const Int64Overflow&) {
    throw std::overflow_error("matmul: entries exceed 64 bits");
  }
  return z;
}

IntMat operator+(const IntMat& x, const IntMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix add: shape mismatch");
  IntMat z(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
  return z;
}

IntMat operator-(const IntMat& x, const IntMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix sub: shape mismatch");
  IntMat z(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
  return z;
}

IntMat shift_diagonal(const IntMat& x, std::int64_t s) {
  IntMat z = x;
  for (int i = 0; i < std::min(x.rows, x.cols); ++i) z.at(i, i) -= s;
  return z;
}

bool is_symmetric(const IntMat& x) {
  if (x.rows != x.cols) return false;
  for (int i = 0; i < x.rows; ++i)
    for (int j = i + 1; j < x.cols; ++j)
      if (x.at(i, j) != x.at(j, i)) return false;
  return true;
}

std::int64_t trace(const IntMat& x) {
  std::int64_t t = 0;
  for (int i = 0; i < std::min(x.rows, x.cols); ++i) t += x.at(i, i);
  return t;
}

std::array<std::int64_t, 3> power_traces(const IntMat& x) {
  if (x.rows != x.cols) throw std::invalid_argument("power_traces: not square");
  const int n = x.rows;
  __int128 t2 = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t2 += static_cast<__int128>(x.at(i, j)) * x.at(j, i);
  const IntMat x2 = x * x;
  __int128 t3 = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t3 += static_cast<__int128>(x2.at(i, j)) * x.at(j, i);
  std::array<std::int64_t, 3> out{};
  try {
    out = {trace(x), checked(t2), checked(t3)};
  } catch (const Int64Overflow&) {
    throw std::overflow_error("power_traces: values exceed 64 bits");
  }
  return out;
}

std::int64_t row_sum_bound(const IntMat& x) {
  std::int64_t bound = 0;
  for (int i = 0; i < x.rows; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < x.cols; ++j) s += std::abs(x.at(i, j));
    bound = std::max(bound, s);
  }
  return bound;
}

int nullity_over_Q(const IntMat& m) {
  try {
    std::vector<std::vector<std::int64_t>> rows(m.rows);
    for (int r = 0; r < m.rows; ++r)
      rows[r].assign(m.a.begin() + static_cast<std::size_t>(r) * m.cols,
                     m.a.begin() + static_cast<std::size_t>(r + 1) * m.cols);
    return m.cols - rank_elimination_int64(std::move(rows));
  } catch (const Int64Overflow&) {
    return m.cols - rank_elimination_mpz(m);
  }
}

std::vector<double> symmetric_eigenvalues(const IntMat& m) {
  if (!is_symmetric(m))
    throw std::invalid_argument("symmetric_eigenvalues: matrix not symmetric");
  Eigen::MatrixXd a(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      a(i, j) = static_cast<double>(m.at(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.compute(a, Eigen::EigenvaluesOnly);
  std::vector<double> values(m.rows);
  for (int i = 0; i < m.rows; ++i) values[i] = solver.eigenvalues()(i);
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace spectra
