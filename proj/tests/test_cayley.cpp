#include <doctest.h>

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "sgspectra/cayley.hpp"
#include "sgspectra/characters.hpp"

using namespace spectra;

namespace {

Permutation pc(int n, const std::string& text) {
  return parse_permutation(text, n);
}

int component_size(const CayleyGraph& g, std::uint32_t start) {
  std::set<std::uint32_t> seen{start};
  std::queue<std::uint32_t> todo;
  todo.push(start);
  while (!todo.empty()) {
    const auto u = todo.front();
    todo.pop();
    for (auto v : g.adj[u])
      if (seen.insert(v).second) todo.push(v);
  }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("cayley graphs are regular, symmetric, loop-free") {
  const auto ring = build_cayley(3, cy(3, 2));
  CHECK(ring.vertex_count == 6);
  for (const auto& row : ring.adj) CHECK(row.size() == 2);
  CHECK(component_size(ring, 0) == 6);  // one 6-cycle

  const auto k33 = build_cayley(3, class_union(3, {CycleType({1, 1, 0})}));
  for (const auto& row : k33.adj) CHECK(row.size() == 3);
  // bipartition by parity: neighbors flip sign
  const auto group = enumerate_group(3);
  auto parity = [&](const Permutation& g) {
    int inversions = 0;
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        if (g(i) > g(j)) ++inversions;
    return inversions % 2;
  };
  for (std::size_t u = 0; u < group.size(); ++u)
    for (auto v : k33.adj[u])
      CHECK(parity(group[u]) != parity(group[v]));

  // symmetry and the handshake count
  for (int n = 3; n <= 5; ++n) {
    const auto g = build_cayley(n, cy(n, 2));
    std::int64_t edges = 0;
    for (std::int64_t u = 0; u < g.vertex_count; ++u) {
      for (auto v : g.adj[u]) {
        const auto& back = g.adj[v];
        CHECK(std::binary_search(back.begin(), back.end(),
                                 static_cast<std::uint32_t>(u)));
      }
      edges += static_cast<std::int64_t>(g.adj[u].size());
    }
    CHECK(edges == g.vertex_count * static_cast<std::int64_t>(g.genset.size()));
  }

  const auto not_closed = GeneratingSet::make(3, {pc(3, "(1 2 3)")},
                                              Provenance::kCustom, "open");
  CHECK_THROWS_AS(build_cayley(3, not_closed), std::invalid_argument);
}

TEST_CASE("numeric spectra") {
  const auto ring = build_cayley(3, cy(3, 2));
  const auto s = spectrum_numeric(ring);
  CHECK_FALSE(s.exact);
  REQUIRE(s.numeric_pairs.size() == 4);  // 2, 1, -1, -2
  CHECK(s.numeric_pairs[0].first == doctest::Approx(2.0));
  CHECK(s.numeric_pairs[0].second == 1);
  CHECK(s.numeric_pairs[1].first == doctest::Approx(1.0));
  CHECK(s.numeric_pairs[1].second == 2);
  CHECK(s.numeric_pairs[3].first == doctest::Approx(-2.0));
  CHECK(s.total() == 6);

  const auto edgeless =
      build_cayley(3, GeneratingSet::make(3, {}, Provenance::kCustom, "none"));
  const auto zero = spectrum_numeric(edgeless);
  REQUIRE(zero.numeric_pairs.size() == 1);
  CHECK(zero.numeric_pairs[0].first == doctest::Approx(0.0));
  CHECK(zero.numeric_pairs[0].second == 6);

  // the top eigenvalue of a regular graph is its degree
  for (int r = 2; r <= 4; ++r) {
    const auto g = build_cayley(4, cy(4, r));
    CHECK(spectrum_numeric(g).numeric_pairs.front().first ==
          doctest::Approx(static_cast<double>(g.genset.size())));
  }

  CHECK_THROWS_WITH_AS(spectrum_numeric(ring, 3), doctest::Contains("budget"),
                       std::invalid_argument);
}

TEST_CASE("exact spectra verify against the character route") {
  const auto ring_exact = spectrum_exact(build_cayley(3, cy(3, 2)));
  REQUIRE(ring_exact.ok());
  CHECK(*ring_exact.spectrum ==
        Spectrum::from_exact({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}}));

  const auto cls = class_union(4, {CycleType({2, 1, 0, 0})});
  const auto matrix_route = spectrum_exact(build_cayley(4, cls));
  REQUIRE(matrix_route.ok());
  CHECK(*matrix_route.spectrum == normal_cayley_spectrum(4, cls));

  CHECK_THROWS_AS(spectrum_exact(build_cayley(4, cls), 10),
                  std::invalid_argument);
}

TEST_CASE("non-integrality is certified, never guessed") {
  IntMat path3(3, 3);
  path3.at(0, 1) = path3.at(1, 0) = 1;
  path3.at(1, 2) = path3.at(2, 1) = 1;
  const auto outcome = exact_integer_spectrum(path3);
  CHECK_FALSE(outcome.ok());
  REQUIRE(outcome.certificate.has_value());
  CHECK(outcome.certificate->conclusive);
  CHECK(outcome.certificate->nullity_sum == 1);  // only 0 is an eigenvalue
  CHECK(outcome.certificate->dimension == 3);

  // adjacent transpositions of S_4: eigenvalues include 1 +- sqrt(2)
  const auto adjacent = GeneratingSet::make(
      4, {pc(4, "(1 2)"), pc(4, "(2 3)"), pc(4, "(3 4)")},
      Provenance::kCustom, "adjacent-transpositions");
  const auto report = verify_integrality(build_cayley(4, adjacent));
  CHECK(report.verdict == IntegralityVerdict::kNonIntegral);
  CHECK(report.exact);
  REQUIRE(report.certificate.has_value());
  CHECK(report.certificate->conclusive);
}

TEST_CASE("integrality verdicts for the cycle families") {
  for (const auto& [n, r] :
       std::vector<std::pair<int, int>>{{4, 2}, {5, 3}}) {
    const auto report = verify_integrality(build_cayley(n, cy(n, r)));
    CHECK(report.verdict == IntegralityVerdict::kIntegral);
    CHECK(report.exact);
    REQUIRE(report.spectrum.has_value());
    CHECK(report.spectrum->total() == (n == 4 ? 24 : 120));
  }

  // beyond the exact budget the verdict is a numeric screen only
  const auto g = build_cayley(4, cy(4, 2));
  const auto screened = verify_integrality(g, /*exact_budget=*/10);
  CHECK(screened.verdict == IntegralityVerdict::kIntegral);
  CHECK_FALSE(screened.exact);
  CHECK(screened.max_round_deviation <= kIntegralityScreenTol);

  const auto adjacent = GeneratingSet::make(
      4, {pc(4, "(1 2)"), pc(4, "(2 3)"), pc(4, "(3 4)")},
      Provenance::kCustom, "adjacent-transpositions");
  const auto undecided =
      verify_integrality(build_cayley(4, adjacent), /*exact_budget=*/10);
  CHECK(undecided.verdict == IntegralityVerdict::kUndecided);
  CHECK_FALSE(undecided.exact);
  CHECK(undecided.max_round_deviation > kIntegralityScreenTol);
}

TEST_CASE("disjoint-union spectra lift by the coset index") {
  const auto small = GeneratingSet::make(3, {pc(3, "(2 3)")},
                                         Provenance::kCustom, "swap");
  const auto lifted = disjoint_union_spectrum(3, {2, 3}, small);
  CHECK(lifted.exact);
  CHECK(lifted == Spectrum::from_exact({{1, 3}, {-1, 3}}));
  CHECK(lifted.total() == 6);

  // against the direct build, for single classes inside T, n = 4
  for (const std::set<int> support :
       {std::set<int>{3, 4}, std::set<int>{2, 3, 4}}) {
    std::vector<CycleType> inside_types;
    for (const auto& g : enumerate_group(4)) {
      const auto moved = move_set(g);
      if (g.is_identity() ||
          !std::includes(support.begin(), support.end(), moved.begin(),
                         moved.end()))
        continue;
      const auto t = cycle_type(g);
      if (std::find(inside_types.begin(), inside_types.end(), t) ==
          inside_types.end())
        inside_types.push_back(t);
    }
    for (const auto& type : inside_types) {
      std::vector<Permutation> members;
      for (const auto& g : conjugacy_class(type)) {
        const auto moved = move_set(g);
        if (std::includes(support.begin(), support.end(), moved.begin(),
                          moved.end()))
          members.push_back(g);
      }
      const auto s = GeneratingSet::make(4, members, Provenance::kCustom,
                                         "inside-" + type.to_string());
      const auto direct = spectrum_exact(build_cayley(4, s));
      REQUIRE(direct.ok());
      CHECK(disjoint_union_spectrum(4, support, s) == *direct.spectrum);
    }
  }

  CHECK_THROWS_AS(disjoint_union_spectrum(3, {2, 3}, cy(3, 2)),
                  std::invalid_argument);
}

TEST_CASE("commuting combination checks") {
  const auto t4 = class_union(4, {CycleType({2, 1, 0, 0})});
  const auto c4 = class_union(4, {CycleType({1, 0, 1, 0})});
  const auto both = commuting_combination_check(t4, c4, 4);
  CHECK(both.commutative);
  CHECK(both.disjoint);
  CHECK(both.products_commute == CheckStatus::kPass);
  CHECK(both.sum_eigenvalues_in_sumset == CheckStatus::kPass);
  CHECK(both.union_matrix_identity == CheckStatus::kPass);
  CHECK(both.all_applicable_pass());

  // the decomposition of cy(4,2): class union against the parts
  const auto nsep = nicely_separated(4, {CycleType({2, 1, 0, 0})},
                                     GroundPartition(4, {{1}, {2, 3, 4}}));
  CHECK(nsep.elements() == cy(4, 2).elements());
  const auto parts = decompose(nsep);
  std::vector<Permutation> removed;
  for (const auto& part : parts.parts)
    removed.insert(removed.end(), part.set.elements().begin(),
                   part.set.elements().end());
  const auto u =
      GeneratingSet::make(4, removed, Provenance::kCustom, "parts-union");
  const auto difference = commuting_combination_check(parts.s0, u, 4);
  CHECK(difference.commutative);
  CHECK(difference.subset);
  CHECK(difference.products_commute == CheckStatus::kPass);
  CHECK(difference.difference_eigenvalues_in_diffset == CheckStatus::kPass);
  CHECK(difference.difference_matrix_identity == CheckStatus::kPass);
  CHECK(difference.all_applicable_pass());

  const auto s1 = GeneratingSet::make(3, {pc(3, "(1 2)")},
                                      Provenance::kCustom, "a");
  const auto s2 = GeneratingSet::make(3, {pc(3, "(1 3)")},
                                      Provenance::kCustom, "b");
  const auto failing = commuting_combination_check(s1, s2, 3);
  CHECK_FALSE(failing.commutative);
  CHECK(failing.products_commute == CheckStatus::kFail);
  CHECK_FALSE(failing.all_applicable_pass());
  CHECK(failing.sum_eigenvalues_in_sumset == CheckStatus::kSkipped);
}

TEST_CASE("edge list export format") {
  const auto g = build_cayley(3, cy(3, 2));
  const auto text = edge_list_export(g);
  CHECK(text.rfind("# cayley 3 cy:2\n", 0) == 0);
  std::int64_t lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == 1 + 6);  // header + |E| = 6*2/2
  // pairs are "u v" with u < v, sorted
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::pair<int, int>> pairs;
  int u, v;
  while (in >> u >> v) {
    CHECK(u < v);
    pairs.emplace_back(u, v);
  }
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
}

TEST_CASE("large graphs build and export; spectra are budget-gated") {
  // 5040 vertices: structure is fine, exact solving is refused
  const auto big = build_cayley(7, cy(7, 2));
  CHECK(big.vertex_count == 5040);
  for (const auto& row : big.adj) CHECK(row.size() == 6);
  CHECK_THROWS_WITH_AS(spectrum_exact(big), doctest::Contains("exact budget"),
                       std::invalid_argument);
  const auto text = edge_list_export(big);
  CHECK(text.rfind("# cayley 7 cy:2\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 5040 * 6 / 2);
}

TEST_CASE("spectrum json schema") {
  const auto exact = spectrum_to_json(
      Spectrum::from_exact({{2, 1}, {-1, 2}}), 3, "cy:2");
  CHECK(exact.find("\"genset\": \"cy:2\"") != std::string::npos);
  CHECK(exact.find("\"exact\": true") != std::string::npos);
  CHECK(exact.find("\"value\": 2") != std::string::npos);

  // numeric values export as decimal strings
  const auto numeric = spectrum_to_json(
      Spectrum::from_numeric({{1.4142135623, 2}}), 3, "custom");
  CHECK(numeric.find("\"value\": \"1.4142135623\"") != std::string::npos);
  CHECK(numeric.find("\"exact\": false") != std::string::npos);
}

TEST_CASE("trace vanishes for every loop-free build") {
  for (int n = 3; n <= 4; ++n)
    for (int r = 2; r <= n; ++r) {
      const auto outcome = spectrum_exact(build_cayley(n, cy(n, r)));
      REQUIRE(outcome.ok());
      std::int64_t sum = 0;
      for (const auto& [value, mult] : outcome.spectrum->exact_pairs)
        sum += value * mult;
      CHECK(sum == 0);
    }
}
