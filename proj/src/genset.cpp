#include "sgspectra/genset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spectra {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string join_types(const std::vector<CycleType>& types) {
  std::ostringstream out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) out << '|';
    out << types[i].to_string();
  }
  return out.str();
}

}  // namespace

GeneratingSet GeneratingSet::make(int degree,
                                  std::vector<Permutation> elements,
                                  Provenance provenance, std::string label,
                                  std::optional<GroundPartition> partition) {
  GeneratingSet s;
  s.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  for (const auto& e : elements) {
    require(e.degree() == degree, "generating set: element degree mismatch");
    require(!e.is_identity(),
            "generating set must not contain the identity (no self-loops)");
  }
  s.elements_ = std::move(elements);
  s.inverse_closed_ = spectra::is_inverse_closed(s.elements_);
  s.normal_ = spectra::is_normal(degree, s.elements_);
  s.partition_ = std::move(partition);
  s.provenance_ = provenance;
  s.label_ = std::move(label);
  if (s.elements_.empty())
    s.warning_ = "generating set is empty; the Cayley graph is edgeless";
  return s;
}

bool GeneratingSet::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

GeneratingSet cy(int n, int r) {
  require(2 <= r && r <= n, "cy: need 2 <= r <= n, got r=" +
                                std::to_string(r) + ", n=" + std::to_string(n));
  // r-cycles through the point 1, written (1 x_1 ... x_{r-1}); distinct
  // arrangements give distinct cycles.
  std::vector<Permutation> elements;
  std::vector<int> others;
  for (int v = 2; v <= n; ++v) others.push_back(v);
  std::vector<int> pick(r - 1);
  std::vector<bool> used(others.size(), false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == r - 1) {
      std::vector<int> cycle;
      cycle.push_back(1);
      cycle.insert(cycle.end(), pick.begin(), pick.end());
      elements.push_back(Permutation::from_cycles(n, {cycle}));
      return;
    }
    for (std::size_t j = 0; j < others.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      pick[depth] = others[j];
      self(self, depth + 1);
      used[j] = false;
    }
  };
  rec(rec, 0);
  return GeneratingSet::make(n, std::move(elements), Provenance::kCy,
                             "cy:" + std::to_string(r));
}

GeneratingSet m_set(int n, int k, int r, int cap) {
  require(1 <= r && r <= k && k <= n,
          "m_set: need 1 <= r <= k <= n, got n=" + std::to_string(n) +
              ", k=" + std::to_string(k) + ", r=" + std::to_string(r));
  std::vector<Permutation> elements;
  for (const auto& g : enumerate_group(n, cap)) {
    int moved_in_k = 0;
    for (int i = 1; i <= k; ++i)
      if (g(i) != i) ++moved_in_k;
    if (moved_in_k == r) elements.push_back(g);
  }
  return GeneratingSet::make(
      n, std::move(elements), Provenance::kM,
      "m:" + std::to_string(k) + "," + std::to_string(r));
}

GeneratingSet class_union(int n, const std::vector<CycleType>& types,
                          int cap) {
  require(!types.empty(), "class_union: no types given");
  std::vector<Permutation> elements;
  for (const auto& t : types) {
    require(t.n() == n, "class_union: type is for the wrong n");
    require(!t.is_identity_type(),
            "class_union: the identity type 1^n is not allowed");
    auto members = conjugacy_class(t, cap);
    elements.insert(elements.end(), members.begin(), members.end());
  }
  return GeneratingSet::make(n, std::move(elements), Provenance::kClassUnion,
                             "classes:" + join_types(types));
}

std::vector<Permutation> t_complement(const GroundPartition& p, int cap) {
  std::vector<Permutation> result;
  for (const auto& g : enumerate_group(p.n(), cap)) {
    const auto moved = move_set(g);
    bool inside_some_block = false;
    for (const auto& block : p.blocks()) {
      if (std::includes(block.begin(), block.end(), moved.begin(),
                        moved.end())) {
        inside_some_block = true;
        break;
      }
    }
    if (!inside_some_block) result.push_back(g);
  }
  return result;  // id has empty move-set, so it never appears
}

GeneratingSet nicely_separated(int n, const std::vector<CycleType>& types,
                               const GroundPartition& p, int cap) {
  require(p.n() == n, "nicely_separated: partition is for the wrong n");
  const auto classes = class_union(n, types, cap);
  const auto outside = t_complement(p, cap);
  std::vector<Permutation> elements;
  for (const auto& g : outside)
    if (classes.contains(g)) elements.push_back(g);
  return GeneratingSet::make(
      n, std::move(elements), Provenance::kNicelySeparated,
      "nicesep:" + join_types(types) + ";" + p.to_string(), p);
}

Decomposition decompose(const GeneratingSet& s, int cap) {
  require(s.nicely_separated().has_value(),
          "decompose: set does not carry a nicely-separated partition");
  const GroundPartition& p = *s.nicely_separated();
  const int n = s.degree();

  // S0 is the union of the full classes of the elements actually present.
  std::set<CycleType> present;
  for (const auto& g : s.elements()) present.insert(cycle_type(g));
  std::vector<CycleType> types(present.begin(), present.end());
  require(!types.empty(), "decompose: empty set has no class decomposition");
  auto s0 = class_union(n, types, cap);

  Decomposition result{std::move(s0), {}};
  for (const auto& block : p.blocks()) {
    std::vector<Permutation> part;
    for (const auto& g : result.s0.elements()) {
      const auto moved = move_set(g);
      if (std::includes(block.begin(), block.end(), moved.begin(),
                        moved.end()))
        part.push_back(g);
    }
    if (part.empty()) continue;  // ignored term
    std::ostringstream label;
    label << "part:" << result.s0.label() << ";block={";
    bool first = true;
    for (int v : block) {
      if (!first) label << ' ';
      label << v;
      first = false;
    }
    label << '}';
    result.parts.push_back(DecompositionPart{
        block, GeneratingSet::make(n, std::move(part),
                                   Provenance::kDecompositionPart,
                                   label.str())});
  }
  return result;
}

bool is_inverse_closed(const std::vector<Permutation>& elements) {
  for (const auto& e : elements)
    if (!std::binary_search(elements.begin(), elements.end(), inverse(e)))
      return false;
  return true;
}

bool is_inverse_closed(const GeneratingSet& s) {
  return is_inverse_closed(s.elements());
}

bool is_normal(int n, const std::vector<Permutation>& elements) {
  for (int i = 1; i < n; ++i) {
    const auto t = Permutation::from_cycles(n, {{i, i + 1}});
    for (const auto& e : elements)
      if (!std::binary_search(elements.begin(), elements.end(),
                              conjugate(e, t)))
        return false;
  }
  return true;
}

bool is_normal(const GeneratingSet& s) {
  return is_normal(s.degree(), s.elements());
}

bool are_commutative(const GeneratingSet& s1, const GeneratingSet& s2,
                     int n) {
  require(s1.degree() == n && s2.degree() == n,
          "are_commutative: degree mismatch");
  std::vector<Permutation> ab, ba;
  ab.reserve(s1.size() * s2.size());
  ba.reserve(s1.size() * s2.size());
  for (const auto& a : s1.elements())
    for (const auto& b : s2.elements()) {
      ab.push_back(compose(a, b));
      ba.push_back(compose(b, a));
    }
  std::sort(ab.begin(), ab.end());
  std::sort(ba.begin(), ba.end());
  return ab == ba;
}

namespace {

[[noreturn]] void spec_error(const std::string& spec, std::size_t pos,
                             const std::string& what) {
  throw std::invalid_argument("bad genset spec '" + spec + "': " + what +
                              " at position " + std::to_string(pos));
}

std::vector<CycleType> parse_type_list(const std::string& spec,
                                       const std::string& body,
                                       std::size_t offset, int n) {
  std::vector<CycleType> types;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto bar = body.find('|', start);
    const auto token =
        body.substr(start, bar == std::string::npos ? bar : bar - start);
    try {
      types.push_back(CycleType::parse(token, n));
    } catch (const std::exception& e) {
      spec_error(spec, offset + start,
                 "cannot parse cycle type '" + token + "' (" + e.what() + ")");
    }
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return types;
}

}  // namespace

GeneratingSet parse_genset_spec(const std::string& spec, int n, int cap) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    spec_error(spec, 0, "missing ':' after the family name");
  const auto family = spec.substr(0, colon);
  const auto body = spec.substr(colon + 1);
  const std::size_t body_pos = colon + 1;

  if (family == "cy") {
    try {
      return cy(n, std::stoi(body));
    } catch (const std::invalid_argument&) {
      spec_error(spec, body_pos, "expected an integer r, got '" + body + "'");
    }
  }
  if (family == "m") {
    const auto comma = body.find(',');
    if (comma == std::string::npos)
      spec_error(spec, body_pos, "expected 'k,r', got '" + body + "'");
    try {
      const int k = std::stoi(body.substr(0, comma));
      const int r = std::stoi(body.substr(comma + 1));
      return m_set(n, k, r, cap);
    } catch (const std::invalid_argument&) {
      spec_error(spec, body_pos, "expected integers 'k,r', got '" + body + "'");
    }
  }
  if (family == "classes") {
    return class_union(n, parse_type_list(spec, body, body_pos, n), cap);
  }
  if (family == "nicesep") {
    const auto semi = body.find(';');
    if (semi == std::string::npos)
      spec_error(spec, body_pos, "expected '<classes>;<partition>'");
    const auto types =
        parse_type_list(spec, body.substr(0, semi), body_pos, n);
    GroundPartition partition = [&] {
      try {
        return GroundPartition::parse(body.substr(semi + 1), n);
      } catch (const std::exception& e) {
        spec_error(spec, body_pos + semi + 1,
                   std::string("cannot parse partition (") + e.what() + ")");
      }
    }();
    return nicely_separated(n, types, partition, cap);
  }
  spec_error(spec, 0, "unknown family '" + family + "'");
}

}  // namespace spectra
