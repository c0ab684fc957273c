#ifndef CUBICONES_STABLE_GRAPHS_HPP
#define CUBICONES_STABLE_GRAPHS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cubicones/rational.hpp"

namespace cubicones {

/// Markings are 1-based; sets of markings are bitmasks with bit (m-1) set.
using MarkSet = std::uint32_t;

MarkSet full_mark_set(int n);
std::vector<int> marks_of(MarkSet s);
MarkSet mark_set(const std::vector<int>& marks);
int mark_count(MarkSet s);

/// Boundary divisor of the moduli space of n-pointed genus-0 stable curves,
/// labeled by a subset of markings modulo complement. The canonical
/// representative side is the one containing marking 1; sides have between 2
/// and n-2 elements.
class BoundaryDivisor {
 public:
  BoundaryDivisor(int n, MarkSet side);

  int n() const { return n_; }
  MarkSet side() const { return side_; }
  MarkSet complement() const { return full_mark_set(n_) & ~side_; }
  std::vector<int> side_marks() const { return marks_of(side_); }

  friend bool operator==(const BoundaryDivisor&, const BoundaryDivisor&) = default;
  friend auto operator<=>(const BoundaryDivisor&, const BoundaryDivisor&) = default;

 private:
  int n_;
  MarkSet side_;  // canonical: contains marking 1
};

/// Complete, duplicate-free, canonically sorted list. Requires n >= 4.
std::vector<BoundaryDivisor> enumerate_boundary_divisors(int n);

/// Partition of {1..n} into the 4 branches at the 4-valent vertex of a
/// one-dimensional boundary stratum; determines the stratum's curve class.
/// Blocks are kept sorted by (size, smallest element).
struct FPartition {
  int n = 0;
  std::array<MarkSet, 4> blocks{};

  static FPartition from_blocks(int n, std::array<MarkSet, 4> blocks);

  friend bool operator==(const FPartition&, const FPartition&) = default;
  friend auto operator<=>(const FPartition&, const FPartition&) = default;

  std::string to_string() const;
};

/// Dual tree of a boundary stratum: vertices carry marking legs, edges form a
/// tree. Moduli dimension is the sum over vertices of (valence - 3).
struct StableTree {
  int n = 0;
  std::vector<MarkSet> legs;                  // one entry per vertex
  std::vector<std::pair<int, int>> edges;     // vertex index pairs

  int vertex_count() const { return static_cast<int>(legs.size()); }
  int valence(int v) const;
  int moduli_dim() const;
  bool is_stable() const;  // connected, acyclic, all valences >= 3

  /// Index of the unique 4-valent vertex; throws unless the valence profile
  /// is one 4-valent vertex with all others 3-valent.
  int four_valent_vertex() const;

  StableTree relabeled(const std::vector<int>& perm) const;  // perm[i] = image of i+1

  /// Deterministic encoding of the tree rooted at the 4-valent vertex, with
  /// branches sorted; equal trees have equal encodings.
  std::string canonical_encoding() const;
};

/// All isomorphism classes of labeled stable trees with exactly one 4-valent
/// vertex and all other vertices 3-valent. Empty for n = 4. Sorted by
/// canonical encoding.
std::vector<StableTree> enumerate_dim1_strata(int n);

/// The partition of markings into the 4 branches at the 4-valent vertex.
FPartition fpartition_of(const StableTree& t);

/// Intersection number of a boundary divisor with the curve class of a
/// one-dimensional stratum: +1 when the divisor's side (either one) is a
/// union of exactly two blocks, -1 when it is a single block, 0 otherwise.
int pair_divisor_curve(const BoundaryDivisor& d, const FPartition& f);

/// Linear relation lhs = rhs among boundary divisor classes. Compared up to
/// an overall positive rational scale.
struct DivRelation {
  int n = 0;
  std::map<BoundaryDivisor, Rational> lhs;
  std::map<BoundaryDivisor, Rational> rhs;

  /// Coefficient vector lhs - rhs over the full sorted divisor list.
  std::vector<Rational> signed_coefficients() const;

  bool proportional_to(const DivRelation& other) const;

  /// Evaluate (lhs - rhs) against the curve class of a partition.
  Rational evaluate(const FPartition& f) const;
};

/// The relation sum_{i,j in T; k,l not in T} D_T = sum_{i,k in T; j,l not in T} D_T,
/// with all coefficients +1. Markings i,j,k,l must be distinct.
DivRelation keel_relation(int n, int i, int j, int k, int l);

/// Every Keel quadruple relation on n markings (three per 4-element subset).
std::vector<DivRelation> all_keel_relations(int n);

}  // namespace cubicones

#endif
