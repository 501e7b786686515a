#include "sgspectra/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace spectra {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

IntegerPartition::IntegerPartition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  long long total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] >= 1, "partition parts must be positive");
    require(i == 0 || parts_[i - 1] >= parts_[i],
            "partition parts must be weakly decreasing");
    total += parts_[i];
  }
  require(total > 0, "partition must be non-empty");
  n_ = static_cast<int>(total);
}

std::string IntegerPartition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

std::vector<IntegerPartition> partitions_of(int n) {
  require(n >= 1, "partitions_of: n must be >= 1");
  std::vector<IntegerPartition> all;
  std::vector<int> current;
  // Largest-first descent generates reverse-lexicographic order directly.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      all.push_back(IntegerPartition(current));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return all;
}

CycleType type_of_partition(const IntegerPartition& p) {
  std::vector<int> counts(p.n(), 0);
  for (int part : p.parts()) ++counts[part - 1];
  return CycleType(std::move(counts));
}

IntegerPartition partition_of_type(const CycleType& t) {
  std::vector<int> parts;
  for (int len = t.n(); len >= 1; --len)
    for (int c = 0; c < t.counts()[len - 1]; ++c) parts.push_back(len);
  return IntegerPartition(std::move(parts));
}

namespace {

using Shape = std::vector<int>;  // weakly decreasing, no zero parts

// Border-strip recursion over beta-sets (first-column hook numbers).
// Removing a strip of length t means replacing some beta value b by b - t;
// the sign is (-1)^{number of beta values strictly between them}.
std::int64_t mn_recurse(const Shape& lambda, const std::vector<int>& mu,
                        std::size_t mu_pos) {
  if (lambda.empty()) return 1;

  static std::map<std::pair<Shape, Shape>, std::int64_t> memo;
  static std::mutex memo_mutex;

  Shape mu_rest(mu.begin() + mu_pos, mu.end());
  const auto key = std::make_pair(lambda, mu_rest);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  const int strip = mu[mu_pos];
  const int rows = static_cast<int>(lambda.size());
  std::vector<int> beta(rows);
  for (int i = 0; i < rows; ++i) beta[i] = lambda[i] + (rows - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < rows; ++i) {
    const int nb = beta[i] - strip;
    if (nb < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < rows; ++j) {
      if (j == i) continue;
      if (beta[j] == nb) occupied = true;
      if (beta[j] > nb && beta[j] < beta[i]) ++height;
    }
    if (occupied) continue;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
    Shape next;
    for (int j = 0; j < rows; ++j) {
      const int part = nbeta[j] - (rows - 1 - j);
      if (part > 0) next.push_back(part);
    }
    const std::int64_t sub = mn_recurse(next, mu, mu_pos + 1);
    total += (height % 2 == 0) ? sub : -sub;
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(key, total);
  return total;
}

}  // namespace

std::int64_t character_value(const IntegerPartition& lambda,
                             const CycleType& mu) {
  require(lambda.n() == mu.n(),
          "character_value: |lambda| != n of the cycle type");
  const auto mu_parts = partition_of_type(mu).parts();  // descending
  return mn_recurse(lambda.parts(), mu_parts, 0);
}

CharacterTable::CharacterTable(int n) : n_(n) {
  require(n >= 1, "character_table: n must be >= 1");
  if (n > kCharacterCap)
    throw std::invalid_argument("character_table: n=" + std::to_string(n) +
                                " exceeds the character cap " +
                                std::to_string(kCharacterCap));
  partitions_ = partitions_of(n);
  for (const auto& p : partitions_) classes_.push_back(type_of_partition(p));
  values_.resize(partitions_.size() * classes_.size());
  for (std::size_t row = 0; row < partitions_.size(); ++row)
    for (std::size_t col = 0; col < classes_.size(); ++col)
      values_[row * classes_.size() + col] =
          character_value(partitions_[row], classes_[col]);
  const CycleType identity_type = type_of_partition(partitions_.back());
  const auto id_col = static_cast<std::size_t>(
      std::find(classes_.begin(), classes_.end(), identity_type) -
      classes_.begin());
  for (std::size_t row = 0; row < partitions_.size(); ++row)
    dims_.push_back(value(static_cast<int>(row), static_cast<int>(id_col)));
}

std::string CharacterTable::to_csv() const {
  std::ostringstream out;
  out << "partition";
  for (const auto& c : classes_) out << ',' << c.to_string();
  out << '\n';
  for (std::size_t row = 0; row < partitions_.size(); ++row) {
    out << '"' << partitions_[row].to_string() << '"';
    for (std::size_t col = 0; col < classes_.size(); ++col)
      out << ',' << value(static_cast<int>(row), static_cast<int>(col));
    out << '\n';
  }
  return out.str();
}

Spectrum normal_cayley_spectrum(int n, const GeneratingSet& s) {
  require(s.degree() == n, "normal_cayley_spectrum: degree mismatch");
  require(is_inverse_closed(s), "normal_cayley_spectrum: not inverse closed");

  // The set must be a union of full conjugacy classes; per-type counts
  // decide that exactly.
  std::map<CycleType, std::int64_t> histogram;
  for (const auto& g : s.elements()) ++histogram[cycle_type(g)];
  for (const auto& [type, count] : histogram) {
    if (mpz_class(count) != class_size(type))
      throw std::invalid_argument(
          "normal_cayley_spectrum: set is not closed under conjugation "
          "(class " +
          type.to_string() +
          " is only partially present); use the numeric/exact adjacency "
          "path instead");
  }

  const CharacterTable table = character_table(n);
  std::map<std::int64_t, std::int64_t> spectrum;
  for (std::size_t row = 0; row < table.partitions().size(); ++row) {
    mpz_class sum = 0;
    for (std::size_t col = 0; col < table.classes().size(); ++col) {
      auto it = histogram.find(table.classes()[col]);
      if (it == histogram.end()) continue;
      sum += class_size(table.classes()[col]) *
             table.value(static_cast<int>(row), static_cast<int>(col));
    }
    const mpz_class dim = table.dim(static_cast<int>(row));
    if (!mpz_divisible_p(sum.get_mpz_t(), dim.get_mpz_t()))
      throw std::runtime_error(
          "normal_cayley_spectrum: eigenvalue is not an integer; this "
          "violates the integrality of central characters");
    const mpz_class eta = sum / dim;
    require(eta.fits_slong_p(), "normal_cayley_spectrum: eigenvalue overflow");
    spectrum[eta.get_si()] +=
        table.dim(static_cast<int>(row)) * table.dim(static_cast<int>(row));
  }
  return Spectrum::from_exact(spectrum);
}

}  // namespace spectra
