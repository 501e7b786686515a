#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spectra {

/// Default cap on the degree for full-group enumeration (8! = 40320
/// elements). Raisable per call; S_9 adjacency work does not fit at
/// dense-matrix scale.
inline constexpr int kEnumerationCap = 8;

/// An element of the symmetric group on {1,...,n}, stored as its image
/// array: images()[i-1] is the image of i.
///
/// Products use the left-factor-first convention throughout:
///   (a * b)(i) = b(a(i)).
class Permutation {
public:
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }
  /// Product of the given cycles (left-to-right), entries 1-based.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;  // lex on images

private:
  std::vector<int> images_;
};

/// Cycle type 1^{a1} 2^{a2} ... n^{a_n}; counts()[i-1] = a_i, with
/// sum i*a_i = n. Fixed points are counted as 1-cycles.
class CycleType {
public:
  explicit CycleType(std::vector<int> counts);

  int n() const { return n_; }
  const std::vector<int>& counts() const { return counts_; }
  bool is_identity_type() const { return counts_[0] == n_; }

  /// Exponent notation, ascending cycle length: "1^2 2^1".
  std::string to_string() const;
  static CycleType parse(const std::string& text, int n);

  bool operator==(const CycleType&) const = default;
  auto operator<=>(const CycleType&) const = default;

private:
  std::vector<int> counts_;
  int n_ = 0;
};

/// A partition T_1,...,T_l of {1,...,n} into l >= 2 disjoint non-empty
/// blocks.
class GroundPartition {
public:
  GroundPartition(int n, std::vector<std::set<int>> blocks);

  int n() const { return n_; }
  const std::vector<std::set<int>>& blocks() const { return blocks_; }

  std::string to_string() const;  // "{1}{2 3 4}"
  static GroundPartition parse(const std::string& text, int n);

  bool operator==(const GroundPartition&) const = default;

private:
  int n_ = 0;
  std::vector<std::set<int>> blocks_;
};

/// The right cosets S_n(T) a_1, ..., S_n(T) a_l of the Young subgroup
/// fixing the complement of T pointwise. Representatives are the
/// lexicographically smallest members, sorted; reps()[0] is the identity.
class CosetSystem {
public:
  CosetSystem(int n, std::set<int> support, std::vector<Permutation> reps);

  int n() const { return n_; }
  const std::set<int>& support() const { return support_; }
  const std::vector<Permutation>& reps() const { return reps_; }
  int index() const { return static_cast<int>(reps_.size()); }

  /// Index of the coset containing g.
  int block_of(const Permutation& g) const;

private:
  int n_ = 0;
  std::set<int> support_;
  std::vector<Permutation> reps_;
};

// --- products and cycle machinery -----------------------------------------

/// (a * b)(i) = b(a(i)); the left factor acts first.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

Permutation inverse(const Permutation& a);

/// g^-1 * a * g. Maps the cycle (c1 ... cl) to (g(c1) ... g(cl)).
Permutation conjugate(const Permutation& a, const Permutation& g);

/// Disjoint cycles of length >= 2, each rotated to start at its minimum,
/// sorted by that minimum. Fixed points are omitted.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& a);

CycleType cycle_type(const Permutation& a);

/// { i : a(i) != i }
std::set<int> move_set(const Permutation& a);

// --- group and class enumeration ------------------------------------------

/// All n! elements in lexicographic order of image arrays. The position in
/// this list is the canonical vertex id.
std::vector<Permutation> enumerate_group(int n, int cap = kEnumerationCap);

/// Lexicographic rank of a in S_n; inverse of enumerate_group indexing.
std::int64_t lex_rank(const Permutation& a);

/// Exact size of the conjugacy class of type t: n! / prod a_i! i^{a_i}.
mpz_class class_size(const CycleType& t);

/// All permutations of cycle type t, sorted.
std::vector<Permutation> conjugacy_class(const CycleType& t,
                                         int cap = kEnumerationCap);

/// S_n(T): the subgroup of permutations moving only points of t, sorted.
std::vector<Permutation> young_subgroup(int n, const std::set<int>& t);

CosetSystem right_cosets(int n, const std::set<int>& t,
                         int cap = kEnumerationCap);

/// The tuple (a_i(1),...,a_i(k)) representing coset i. Requires the
/// system's support to be {k+1,...,n}.
std::vector<int> coset_vector(const CosetSystem& c, int i, int k);

// --- text forms ------------------------------------------------------------

/// One-line image array, e.g. "3 1 2".
std::string to_image_string(const Permutation& a);
/// Cycle notation, e.g. "(1 3 2)" or "id".
std::string to_cycle_string(const Permutation& a);
/// Accepts either an image array "3 1 2" or cycle notation "(1 3 2)".
Permutation parse_permutation(const std::string& text, int n);

mpz_class factorial(int n);

}  // namespace spectra
