#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgspectra/perm.hpp"

namespace spectra {

enum class Provenance {
  kCy,                // r-cycles moving the point 1
  kM,                 // permutations moving exactly r points of {1,...,k}
  kClassUnion,        // union of full conjugacy classes
  kNicelySeparated,   // class union intersected with T(T_1,...,T_l)
  kDecompositionPart, // one S_i of a decomposition
  kCustom,
};

/// An inverse-closed, identity-free subset of S_n, the edge set generator of
/// a Cayley graph. Elements are kept sorted and unique; the closure flags
/// are computed at construction, never assumed.
class GeneratingSet {
public:
  static GeneratingSet make(int degree, std::vector<Permutation> elements,
                            Provenance provenance, std::string label,
                            std::optional<GroundPartition> partition = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const Permutation& p) const;

  bool inverse_closed() const { return inverse_closed_; }
  bool normal() const { return normal_; }
  const std::optional<GroundPartition>& nicely_separated() const {
    return partition_;
  }
  Provenance provenance() const { return provenance_; }
  /// Spec string in the CLI mini-language where one exists ("cy:2",
  /// "m:2,1", "classes:...", "nicesep:...;..."), else a descriptive label.
  const std::string& label() const { return label_; }
  /// Set when a constructor produced a legal but suspicious value (e.g. an
  /// empty intersection).
  const std::optional<std::string>& warning() const { return warning_; }

  bool operator==(const GeneratingSet& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
  }

private:
  GeneratingSet() = default;

  int degree_ = 0;
  std::vector<Permutation> elements_;
  bool inverse_closed_ = false;
  bool normal_ = false;
  std::optional<GroundPartition> partition_;
  Provenance provenance_ = Provenance::kCustom;
  std::string label_;
  std::optional<std::string> warning_;
};

// --- the constructors for the named families -------------------------------

/// All r-cycles that move the point 1; inverse closed, 2 <= r <= n.
GeneratingSet cy(int n, int r);

/// All permutations moving exactly r points of {1,...,k}; 1 <= r <= k <= n.
GeneratingSet m_set(int n, int k, int r, int cap = kEnumerationCap);

/// Union of the full conjugacy classes of the given types. Rejects the
/// identity type (it would inject id into the set).
GeneratingSet class_union(int n, const std::vector<CycleType>& types,
                          int cap = kEnumerationCap);

/// T(T_1,...,T_l): permutations whose move-set is not contained in any
/// single block. Always excludes id.
std::vector<Permutation> t_complement(const GroundPartition& p,
                                      int cap = kEnumerationCap);

/// (union of classes) intersect T(T_1,...,T_l); records the partition.
/// The result may legitimately be empty (warning set).
GeneratingSet nicely_separated(int n, const std::vector<CycleType>& types,
                               const GroundPartition& p,
                               int cap = kEnumerationCap);

/// One block's share of a nicely separated set: S_i = class elements
/// supported inside that block.
struct DecompositionPart {
  std::set<int> block;
  GeneratingSet set;
};

/// S = S0 \ (S_1 u ... u S_l) for a nicely separated S: S0 is the union of
/// the full classes present in S, S_i the class elements supported inside
/// block T_i. Empty parts are omitted.
struct Decomposition {
  GeneratingSet s0;
  std::vector<DecompositionPart> parts;
};

Decomposition decompose(const GeneratingSet& s, int cap = kEnumerationCap);

// --- predicates -------------------------------------------------------------

bool is_inverse_closed(const std::vector<Permutation>& elements);
bool is_inverse_closed(const GeneratingSet& s);

/// Closure under conjugation, decided via the adjacent transpositions
/// (they generate S_n).
bool is_normal(int n, const std::vector<Permutation>& elements);
bool is_normal(const GeneratingSet& s);

/// Whether the element sums of s1 and s2 commute in the group ring,
/// decided exactly by comparing the product multisets {ab} and {ba}.
bool are_commutative(const GeneratingSet& s1, const GeneratingSet& s2, int n);

// --- the CLI mini-language ---------------------------------------------------

/// Grammar: "cy:R" | "m:K,R" | "classes:TYPE|TYPE|..." |
/// "nicesep:TYPE|...;{..}{..}". Errors name the offending token and its
/// position. label() of the result round-trips.
GeneratingSet parse_genset_spec(const std::string& spec, int n,
                                int cap = kEnumerationCap);

}  // namespace spectra
