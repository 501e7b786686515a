#include "sgspectra/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spectra {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Permutation::Permutation(int degree) {
  require(degree >= 1, "permutation degree must be >= 1");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  require(!images_.empty(), "permutation degree must be >= 1");
  const int n = degree();
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    require(v >= 1 && v <= n, "image value out of range 1..n");
    require(!seen[v - 1], "image array is not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result(degree);
  for (const auto& cycle : cycles) {
    std::vector<int> imgs(degree);
    std::iota(imgs.begin(), imgs.end(), 1);
    std::vector<bool> seen(degree, false);
    for (int v : cycle) {
      require(v >= 1 && v <= degree, "cycle entry out of range 1..n");
      require(!seen[v - 1], "cycle entry repeated");
      seen[v - 1] = true;
    }
    for (std::size_t j = 0; j < cycle.size(); ++j)
      imgs[cycle[j] - 1] = cycle[(j + 1) % cycle.size()];
    result = compose(result, Permutation(std::move(imgs)));
  }
  return result;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require(a.degree() == b.degree(), "compose: degree mismatch");
  std::vector<int> c(a.degree());
  for (int i = 0; i < a.degree(); ++i) c[i] = b.images()[a.images()[i] - 1];
  return Permutation(std::move(c));
}

Permutation inverse(const Permutation& a) {
  std::vector<int> inv(a.degree());
  for (int i = 0; i < a.degree(); ++i) inv[a.images()[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation conjugate(const Permutation& a, const Permutation& g) {
  require(a.degree() == g.degree(), "conjugate: degree mismatch");
  return compose(compose(inverse(g), a), g);
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& a) {
  const int n = a.degree();
  std::vector<bool> visited(n, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (visited[start - 1] || a(start) == start) continue;
    std::vector<int> cycle;
    int x = start;
    do {
      visited[x - 1] = true;
      cycle.push_back(x);
      x = a(x);
    } while (x != start);
    cycles.push_back(std::move(cycle));
  }
  // Each cycle already starts at its minimum (scan order), and cycles are
  // sorted by that minimum.
  return cycles;
}

CycleType cycle_type(const Permutation& a) {
  const int n = a.degree();
  std::vector<int> counts(n, 0);
  std::vector<bool> visited(n, false);
  for (int start = 1; start <= n; ++start) {
    if (visited[start - 1]) continue;
    int len = 0;
    int x = start;
    do {
      visited[x - 1] = true;
      ++len;
      x = a(x);
    } while (x != start);
    ++counts[len - 1];
  }
  return CycleType(std::move(counts));
}

std::set<int> move_set(const Permutation& a) {
  std::set<int> moved;
  for (int i = 1; i <= a.degree(); ++i)
    if (a(i) != i) moved.insert(i);
  return moved;
}

CycleType::CycleType(std::vector<int> counts) : counts_(std::move(counts)) {
  require(!counts_.empty(), "cycle type must have at least one slot");
  long long total = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    require(counts_[i] >= 0, "cycle type counts must be non-negative");
    total += static_cast<long long>(i + 1) * counts_[i];
  }
  require(total == static_cast<long long>(counts_.size()),
          "cycle type violates sum i*a_i = n");
  n_ = static_cast<int>(counts_.size());
}

std::string CycleType::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= n_; ++i) {
    if (counts_[i - 1] == 0) continue;
    if (!first) out << ' ';
    out << i << '^' << counts_[i - 1];
    first = false;
  }
  return out.str();
}

CycleType CycleType::parse(const std::string& text, int n) {
  std::vector<int> counts(n, 0);
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    int length = 0;
    int count = 1;
    auto caret = token.find('^');
    try {
      if (caret == std::string::npos) {
        length = std::stoi(token);
      } else {
        length = std::stoi(token.substr(0, caret));
        count = std::stoi(token.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad cycle-type token '" + token + "'");
    }
    require(length >= 1 && length <= n,
            "cycle length out of range in type '" + text + "'");
    counts[length - 1] += count;
  }
  return CycleType(std::move(counts));  // re-validates sum i*a_i = n
}

GroundPartition::GroundPartition(int n, std::vector<std::set<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  require(blocks_.size() >= 2, "ground partition needs at least 2 blocks");
  std::set<int> all;
  for (const auto& block : blocks_) {
    require(!block.empty(), "ground partition blocks must be non-empty");
    for (int v : block) {
      require(v >= 1 && v <= n, "ground partition entry out of range");
      require(all.insert(v).second, "ground partition blocks overlap");
    }
  }
  require(static_cast<int>(all.size()) == n,
          "ground partition must cover 1..n");
}

std::string GroundPartition::to_string() const {
  std::ostringstream out;
  for (const auto& block : blocks_) {
    out << '{';
    bool first = true;
    for (int v : block) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '}';
  }
  return out.str();
}

GroundPartition GroundPartition::parse(const std::string& text, int n) {
  std::vector<std::set<int>> blocks;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    require(text[pos] == '{', "expected '{' in partition '" + text + "'");
    auto end = text.find('}', pos);
    require(end != std::string::npos,
            "unterminated block in partition '" + text + "'");
    std::istringstream in(text.substr(pos + 1, end - pos - 1));
    std::set<int> block;
    int v = 0;
    while (in >> v) block.insert(v);
    blocks.push_back(std::move(block));
    pos = end + 1;
  }
  return GroundPartition(n, std::move(blocks));
}

std::vector<Permutation> enumerate_group(int n, int cap) {
  require(n >= 1, "enumerate_group: n must be >= 1");
  if (n > cap)
    throw std::invalid_argument(
        "enumerate_group: n=" + std::to_string(n) +
        " exceeds the enumeration cap " + std::to_string(cap) +
        " (raise the cap to proceed)");
  std::vector<int> imgs(n);
  std::iota(imgs.begin(), imgs.end(), 1);
  std::vector<Permutation> all;
  all.reserve(static_cast<std::size_t>(factorial(n).get_ui()));
  do {
    all.push_back(Permutation(imgs));
  } while (std::next_permutation(imgs.begin(), imgs.end()));
  return all;
}

std::int64_t lex_rank(const Permutation& a) {
  const int n = a.degree();
  std::int64_t rank = 0;
  std::int64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;  // n!
  for (int i = 0; i < n; ++i) {
    fact /= (n - i);
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (a.images()[j] < a.images()[i]) ++smaller;
    rank += smaller * fact;
  }
  return rank;
}

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

mpz_class class_size(const CycleType& t) {
  mpz_class denom = 1;
  for (int i = 1; i <= t.n(); ++i) {
    const int a = t.counts()[i - 1];
    denom *= factorial(a);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), i, a);
    denom *= p;
  }
  return factorial(t.n()) / denom;
}

std::vector<Permutation> conjugacy_class(const CycleType& t, int cap) {
  std::vector<Permutation> members;
  for (const auto& g : enumerate_group(t.n(), cap))
    if (cycle_type(g) == t) members.push_back(g);
  return members;
}

std::vector<Permutation> young_subgroup(int n, const std::set<int>& t) {
  require(n >= 1, "young_subgroup: n must be >= 1");
  for (int v : t)
    require(v >= 1 && v <= n, "young_subgroup: support out of range");
  std::vector<int> points(t.begin(), t.end());
  const int m = static_cast<int>(points.size());
  // Enumerate S_{|T|} on the points of T directly; the rest stay fixed.
  std::vector<int> arrangement(points);
  std::sort(arrangement.begin(), arrangement.end());
  std::vector<Permutation> members;
  do {
    std::vector<int> imgs(n);
    std::iota(imgs.begin(), imgs.end(), 1);
    for (int j = 0; j < m; ++j) imgs[points[j] - 1] = arrangement[j];
    members.push_back(Permutation(std::move(imgs)));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  std::sort(members.begin(), members.end());
  return members;
}

CosetSystem::CosetSystem(int n, std::set<int> support,
                         std::vector<Permutation> reps)
    : n_(n), support_(std::move(support)), reps_(std::move(reps)) {
  require(!reps_.empty() && reps_[0].is_identity(),
          "coset system must start with the identity representative");
}

int CosetSystem::block_of(const Permutation& g) const {
  // Members of S_n(T) g agree with g outside T; the lex-smallest member
  // additionally carries the unused values ascending on the points of T.
  std::vector<int> imgs(n_);
  std::vector<int> rest;
  std::vector<bool> used(n_, false);
  for (int i = 1; i <= n_; ++i) {
    if (!support_.count(i)) {
      imgs[i - 1] = g(i);
      used[g(i) - 1] = true;
    }
  }
  for (int v = 1; v <= n_; ++v)
    if (!used[v - 1]) rest.push_back(v);
  std::size_t next = 0;
  for (int i : support_) imgs[i - 1] = rest[next++];
  Permutation smallest(std::move(imgs));
  auto it = std::lower_bound(reps_.begin(), reps_.end(), smallest);
  require(it != reps_.end() && *it == smallest,
          "coset system does not contain the given element's coset");
  return static_cast<int>(it - reps_.begin());
}

CosetSystem right_cosets(int n, const std::set<int>& t, int cap) {
  const auto group = enumerate_group(n, cap);
  std::vector<bool> assigned(group.size(), false);
  const auto subgroup = young_subgroup(n, t);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (assigned[i]) continue;
    // group is in lex order, so the first unassigned member of a coset is
    // its lex-smallest member.
    reps.push_back(group[i]);
    for (const auto& h : subgroup) {
      const auto member = compose(h, group[i]);
      assigned[lex_rank(member)] = true;
    }
  }
  return CosetSystem(n, t, std::move(reps));
}

std::vector<int> coset_vector(const CosetSystem& c, int i, int k) {
  std::set<int> expected;
  for (int v = k + 1; v <= c.n(); ++v) expected.insert(v);
  require(c.support() == expected,
          "coset_vector requires support T = {k+1,...,n}");
  require(i >= 0 && i < c.index(), "coset index out of range");
  std::vector<int> tuple(k);
  for (int j = 1; j <= k; ++j) tuple[j - 1] = c.reps()[i](j);
  return tuple;
}

std::string to_image_string(const Permutation& a) {
  std::ostringstream out;
  for (int i = 0; i < a.degree(); ++i) {
    if (i) out << ' ';
    out << a.images()[i];
  }
  return out.str();
}

std::string to_cycle_string(const Permutation& a) {
  const auto cycles = cycle_decomposition(a);
  if (cycles.empty()) return "id";
  std::ostringstream out;
  for (const auto& cycle : cycles) {
    out << '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j) out << ' ';
      out << cycle[j];
    }
    out << ')';
  }
  return out.str();
}

Permutation parse_permutation(const std::string& text, int n) {
  if (text.find('(') != std::string::npos) {
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      require(text[pos] == '(', "expected '(' in '" + text + "'");
      auto end = text.find(')', pos);
      require(end != std::string::npos, "unterminated cycle in '" + text + "'");
      std::string body = text.substr(pos + 1, end - pos - 1);
      for (char& ch : body)
        if (ch == ',') ch = ' ';
      std::istringstream in(body);
      std::vector<int> cycle;
      int v = 0;
      while (in >> v) cycle.push_back(v);
      require(!cycle.empty(), "empty cycle in '" + text + "'");
      cycles.push_back(std::move(cycle));
      pos = end + 1;
    }
    return Permutation::from_cycles(n, cycles);
  }
  if (text == "id") return Permutation(n);
  std::istringstream in(text);
  std::vector<int> imgs;
  int v = 0;
  while (in >> v) imgs.push_back(v);
  require(static_cast<int>(imgs.size()) == n,
          "image array '" + text + "' does not have length " +
              std::to_string(n));
  return Permutation(std::move(imgs));
}

}  // namespace spectra
