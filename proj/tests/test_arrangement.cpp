#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "sgspectra/arrangement.hpp"
#include "sgspectra/characters.hpp"

using namespace spectra;

TEST_CASE("arrangement graph shapes") {
  const auto complete = build_arrangement(5, 1, 1);
  CHECK(complete.vertex_count() == 5);
  CHECK(complete.degree == 4);
  const auto spec = exact_integer_spectrum(adjacency_matrix(complete));
  REQUIRE(spec.ok());
  CHECK(*spec.spectrum == Spectrum::from_exact({{4, 1}, {-1, 4}}));

  const auto edgeless = build_arrangement(3, 3, 1);
  CHECK(edgeless.vertex_count() == 6);
  CHECK(edgeless.degree == 0);
  const auto zero = exact_integer_spectrum(adjacency_matrix(edgeless));
  REQUIRE(zero.ok());
  CHECK(*zero.spectrum == Spectrum::from_exact({{0, 6}}));

  const auto a421 = build_arrangement(4, 2, 1);
  CHECK(a421.vertex_count() == 12);
  CHECK(a421.degree == 4);  // k(n-k)

  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      mpz_class expected = factorial(n) / factorial(n - k);
      if (expected > 720) continue;
      CHECK(mpz_class(build_arrangement(n, k, 1).vertex_count()) == expected);
    }

  CHECK_THROWS_AS(build_arrangement(4, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_arrangement(4, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_arrangement(8, 6, 1), std::invalid_argument);  // budget
}

TEST_CASE("vertices are lexicographic k-tuples") {
  const auto g = build_arrangement(3, 2, 1);
  REQUIRE(g.vertices.size() == 6);
  CHECK(g.vertices.front() == std::vector<int>{1, 2});
  CHECK(g.vertices.back() == std::vector<int>{3, 2});
  CHECK(std::is_sorted(g.vertices.begin(), g.vertices.end()));
}

TEST_CASE("degree identity k(n-k) for r = 1") {
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      const mpz_class m1 = static_cast<long>(m_set(n, k, 1).size());
      CHECK(m1 == mpz_class(k * (n - k)) * factorial(n - k));
      if (factorial(n) / factorial(n - k) <= 720) {
        const auto g = build_arrangement(n, k, 1);
        CHECK(g.degree == k * (n - k));
      }
    }
}

TEST_CASE("the coset partition is equitable with two-valued entries") {
  const auto q421 = equitable_quotient(4, 2, 1);
  CHECK(q421.entries.rows == 12);
  std::int64_t row_sum = 0;
  for (int j = 0; j < 12; ++j) row_sum += q421.entries.at(0, j);
  CHECK(row_sum == 8);  // |M(1)| for n=4, k=2
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      CHECK((q421.entries.at(i, j) == 0 || q421.entries.at(i, j) == 2));

  // r = 2: Q/2 is exactly the arrangement adjacency
  const auto q422 = equitable_quotient(4, 2, 2);
  const auto a422 = adjacency_matrix(build_arrangement(4, 2, 2));
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      CHECK(q422.entries.at(i, j) == 2 * a422.at(i, j));

  // k = n: the partition is by singletons, Q is the host adjacency itself
  const auto q33 = equitable_quotient(3, 3, 2);
  const auto host = build_cayley(3, m_set(3, 3, 2));
  CHECK(q33.entries == adjacency_matrix(host));
}

TEST_CASE("quotient identity Q = (n-k)! A") {
  for (const auto& [n, k, r] : std::vector<std::tuple<int, int, int>>{
           {4, 2, 1}, {4, 2, 2}, {5, 3, 2}, {3, 3, 2}, {4, 4, 2}}) {
    std::string counterexample;
    CHECK_MESSAGE(verify_quotient_identity(n, k, r, &counterexample),
                  counterexample);
  }
}

TEST_CASE("eigenvalues lift into the host Cayley graph") {
  const auto l321 = lift_eigenvalues(3, 2, 1);
  CHECK(l321.exact);
  CHECK(l321.all_contained);

  const auto l421 = lift_eigenvalues(4, 2, 1);
  CHECK(l421.exact);
  CHECK(l421.all_contained);
  // the top eigenvalue is the degree and lifts to |M(r)|
  const auto g = build_arrangement(4, 2, 1);
  bool found_top = false;
  for (const auto& [lambda, mult, host_mult] : l421.rows)
    if (lambda == g.degree) {
      found_top = true;
      CHECK(host_mult >= 1);
    }
  CHECK(found_top);
  CHECK(2 * g.degree == static_cast<int>(m_set(4, 2, 1).size()));
}

TEST_CASE("unique neighbor quotient equals the arrangement adjacency") {
  const auto q = unique_neighbor_quotient(4, 2);
  const auto a = adjacency_matrix(build_arrangement(4, 2, 1));
  CHECK(q.entries == a);

  // its spectrum is integral
  const auto outcome = exact_integer_spectrum(q.entries);
  CHECK(outcome.ok());

  CHECK_THROWS_AS(unique_neighbor_quotient(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(unique_neighbor_quotient(3, 3), std::invalid_argument);
}

TEST_CASE("the two quotient routes and the direct build agree on spectra") {
  for (const auto& [n, k] :
       std::vector<std::pair<int, int>>{{4, 2}, {4, 3}, {5, 2}}) {
    const auto direct =
        exact_integer_spectrum(adjacency_matrix(build_arrangement(n, k, 1)));
    REQUIRE(direct.ok());

    const auto via_unique = exact_integer_spectrum(
        unique_neighbor_quotient(n, k).entries);
    REQUIRE(via_unique.ok());
    CHECK(*via_unique.spectrum == *direct.spectrum);

    // scaled route: Q = (n-k)! A, so spec(Q) = (n-k)! * spec(A)
    const auto q = equitable_quotient(n, k, 1);
    const auto via_scaled = exact_integer_spectrum(q.entries);
    REQUIRE(via_scaled.ok());
    const mpz_class f = factorial(n - k);
    std::map<std::int64_t, std::int64_t> unscaled;
    for (const auto& [v, m] : via_scaled.spectrum->exact_pairs) {
      CHECK(v % f.get_si() == 0);
      unscaled[v / f.get_si()] = m;
    }
    CHECK(Spectrum::from_exact(unscaled) == *direct.spectrum);
  }
}

TEST_CASE("integrality scan output") {
  const auto rows = integrality_scan(5);
  // every r = 1 cell is integral
  for (const auto& row : rows)
    if (row.r == 1) {
      CHECK(row.integral == "yes");
      CHECK(row.exact);
    }
  // the (4,3,2) cell has an exact verdict recorded
  bool found = false;
  for (const auto& row : rows)
    if (row.n == 4 && row.k == 3 && row.r == 2) {
      found = true;
      CHECK(row.exact);
      CHECK((row.integral == "yes" || row.integral == "no"));
    }
  CHECK(found);

  const auto csv = scan_csv(rows, 5);
  CHECK(csv.find("n,k,r,vertices,degree,integral,min_eig,max_eig,exact\n") !=
        std::string::npos);
  CHECK(csv.find("observational") != std::string::npos);

  // budget-limited cells are marked skipped
  const auto limited = integrality_scan(5, /*budget=*/20, /*exact_budget=*/20);
  bool skipped = false;
  for (const auto& row : limited)
    if (row.integral == "skipped") skipped = true;
  CHECK(skipped);
}

TEST_CASE("edge list export for arrangement graphs") {
  const auto g = build_arrangement(3, 2, 1);
  const auto text = edge_list_export(g);
  CHECK(text.rfind("# arrangement 3 2 1\n", 0) == 0);
  const auto edges = std::count(text.begin(), text.end(), '\n') - 1;
  CHECK(edges == g.vertex_count() * g.degree / 2);
}
