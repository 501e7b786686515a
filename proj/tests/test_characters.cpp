#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "sgspectra/cayley.hpp"
#include "sgspectra/characters.hpp"

using namespace spectra;

namespace {

// Independent partition-count oracle: Euler's pentagonal-number recurrence
// p(n) = sum_k (-1)^{k+1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
std::int64_t partition_count(int n) {
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  }
  return p[n];
}

// Independent dimension oracle: the hook length formula n! / prod(hooks).
mpz_class hook_length_dimension(const IntegerPartition& lambda) {
  const auto& parts = lambda.parts();
  mpz_class hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) {
      int arm = parts[i] - j - 1;
      int leg = 0;
      for (std::size_t r = i + 1; r < parts.size(); ++r)
        if (parts[r] > j) ++leg;
      hooks *= arm + leg + 1;
    }
  return factorial(lambda.n()) / hooks;
}

}  // namespace

TEST_CASE("partition enumeration in reverse-lexicographic order") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(1) ==
        std::vector<IntegerPartition>{IntegerPartition({1})});
  CHECK(partitions_of(8).size() == 22);
  for (int n = 1; n <= 10; ++n)
    CHECK(partitions_of(n).size() ==
          static_cast<std::size_t>(partition_count(n)));

  const auto p4 = partitions_of(4);
  CHECK(p4[0].parts() == std::vector<int>{4});
  CHECK(p4[1].parts() == std::vector<int>{3, 1});
  CHECK(p4[2].parts() == std::vector<int>{2, 2});
  CHECK(p4[3].parts() == std::vector<int>{2, 1, 1});
  CHECK(p4[4].parts() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("partition/type conversions invert each other") {
  for (const auto& p : partitions_of(7))
    CHECK(partition_of_type(type_of_partition(p)) == p);
}

TEST_CASE("character values of the one-row and one-column shapes") {
  for (const auto& mu : partitions_of(5)) {
    CHECK(character_value(IntegerPartition({5}), type_of_partition(mu)) == 1);
  }
  // sign character at a transposition
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> counts(n, 0);
    counts[0] = n - 2;
    counts[1] = 1;
    CHECK(character_value(IntegerPartition(std::vector<int>(n, 1)),
                          CycleType(counts)) == -1);
  }
  CHECK_THROWS_AS(
      character_value(IntegerPartition({3}), CycleType({2, 1, 0, 0})),
      std::invalid_argument);
}

TEST_CASE("standard representation dimension matches the hook count") {
  for (int n = 2; n <= 8; ++n) {
    const IntegerPartition standard({n - 1, 1});
    std::vector<int> id_counts(n, 0);
    id_counts[0] = n;
    CHECK(character_value(standard, CycleType(id_counts)) == n - 1);
    CHECK(hook_length_dimension(standard) == n - 1);
  }
  // hook dimensions agree with the table at the identity for all shapes
  const auto table = character_table(7);
  for (std::size_t row = 0; row < table.partitions().size(); ++row)
    CHECK(mpz_class(table.dim(static_cast<int>(row))) ==
          hook_length_dimension(table.partitions()[row]));
}

TEST_CASE("small tables are exactly right") {
  const auto t2 = character_table(2);
  REQUIRE(t2.partitions().size() == 2);
  // rows: (2) then (1,1); columns: 2^1 then 1^2
  CHECK(t2.value(0, 0) == 1);
  CHECK(t2.value(0, 1) == 1);
  CHECK(t2.value(1, 0) == -1);
  CHECK(t2.value(1, 1) == 1);

  std::int64_t sum_sq = 0;
  const auto t3 = character_table(3);
  for (std::size_t row = 0; row < t3.partitions().size(); ++row)
    sum_sq += t3.dim(static_cast<int>(row)) * t3.dim(static_cast<int>(row));
  CHECK(sum_sq == 6);

  CHECK_THROWS_AS(character_table(13), std::invalid_argument);
}

TEST_CASE("orthogonality relations hold exactly") {
  for (int n = 2; n <= 6; ++n) {
    const auto table = character_table(n);
    const auto rows = static_cast<int>(table.partitions().size());
    std::vector<mpz_class> weights;
    for (const auto& mu : table.classes()) weights.push_back(class_size(mu));

    for (int a = 0; a < rows; ++a)
      for (int b = a; b < rows; ++b) {
        mpz_class sum = 0;
        for (int c = 0; c < rows; ++c)
          sum += weights[c] * table.value(a, c) * table.value(b, c);
        CHECK(sum == (a == b ? factorial(n) : mpz_class(0)));
      }

    // column orthogonality: sum_lambda chi(mu) chi(mu') = delta * n!/|K|
    for (int c = 0; c < rows; ++c)
      for (int d = c; d < rows; ++d) {
        mpz_class sum = 0;
        for (int a = 0; a < rows; ++a)
          sum += mpz_class(table.value(a, c)) * table.value(a, d);
        CHECK(sum == (c == d ? factorial(n) / weights[c] : mpz_class(0)));
      }
  }
}

TEST_CASE("character table CSV shape") {
  const auto csv = character_table(4).to_csv();
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 6);  // header + p(4)=5 rows
  CHECK(lines[0] == "partition,4^1,1^1 3^1,2^2,1^2 2^1,1^4");
  CHECK(lines[1].rfind("\"(4)\",", 0) == 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    // 5 value cells after the quoted row label
    const auto tail = lines[i].substr(lines[i].rfind('"') + 1);
    CHECK(std::count(tail.begin(), tail.end(), ',') == 5);
  }
}

TEST_CASE("normal Cayley spectra from characters") {
  // brute-force oracle: dense eigensolve of the explicitly built 6x6 matrix
  const auto s3 = enumerate_group(3);
  const auto transpositions = class_union(3, {CycleType({1, 1, 0})});
  IntMat adjacency(6, 6);
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v)
      adjacency.at(u, v) =
          transpositions.contains(compose(s3[v], inverse(s3[u]))) ? 1 : 0;
  std::map<std::int64_t, std::int64_t> observed;
  for (double ev : symmetric_eigenvalues(adjacency))
    ++observed[std::llround(ev)];

  const auto spectrum = normal_cayley_spectrum(3, transpositions);
  CHECK(spectrum.exact);
  CHECK(spectrum == Spectrum::from_exact(observed));
  CHECK(spectrum == Spectrum::from_exact({{3, 1}, {0, 4}, {-3, 1}}));

  // a single class: the trivial character contributes eta = |K|
  const auto cls = class_union(5, {CycleType({1, 2, 0, 0, 0})});
  const auto top = normal_cayley_spectrum(5, cls);
  CHECK(top.exact_pairs.front().first ==
        static_cast<std::int64_t>(cls.size()));

  // S_2 with its transposition is a single edge
  const auto edge = normal_cayley_spectrum(
      2, class_union(2, {CycleType({0, 1})}));
  CHECK(edge == Spectrum::from_exact({{1, 1}, {-1, 1}}));
}

TEST_CASE("normal spectrum bookkeeping invariants") {
  for (int n = 3; n <= 6; ++n) {
    const auto types = [&] {
      std::vector<CycleType> out;
      for (const auto& p : partitions_of(n)) {
        auto t = type_of_partition(p);
        if (!t.is_identity_type()) out.push_back(t);
      }
      return out;
    }();
    const auto s = class_union(n, {types[0], types[1]});
    const auto spectrum = normal_cayley_spectrum(n, s);
    CHECK(mpz_class(static_cast<long>(spectrum.total())) == factorial(n));
    std::int64_t trace_sum = 0;
    for (const auto& [v, m] : spectrum.exact_pairs) trace_sum += v * m;
    CHECK(trace_sum == 0);
  }

  // partial classes are rejected toward the numeric path
  const auto partial = GeneratingSet::make(
      3, {parse_permutation("(1 2)", 3), parse_permutation("(1 3)", 3)},
      Provenance::kCustom, "partial");
  CHECK_THROWS_WITH_AS(normal_cayley_spectrum(3, partial),
                       doctest::Contains("numeric"), std::invalid_argument);
}
