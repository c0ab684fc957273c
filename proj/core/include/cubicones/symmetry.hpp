#ifndef CUBICONES_SYMMETRY_HPP
#define CUBICONES_SYMMETRY_HPP

#include <string>
#include <vector>

#include "cubicones/rational.hpp"
#include "cubicones/stable_graphs.hpp"

namespace cubicones {

/// Permutation of {1..n}: perm[i-1] is the image of marking i.
using Perm = std::vector<int>;

/// Subgroup of the symmetric group on the markings, given either as a Young
/// subgroup (disjoint blocks, each fully permuted, unlisted markings fixed)
/// or by explicit generators. Elements are materialized once; the groups in
/// play here are tiny.
class GroupSpec {
 public:
  static GroupSpec trivial(int n);
  static GroupSpec young(int n, const std::vector<std::vector<int>>& blocks);
  static GroupSpec from_generators(int n, const std::vector<Perm>& gens);

  int n() const { return n_; }
  const std::vector<Perm>& elements() const { return elements_; }
  bool contains_transposition(int a, int b) const;

  MarkSet apply(const Perm& g, MarkSet s) const;

 private:
  GroupSpec(int n, std::vector<Perm> elements);
  int n_;
  std::vector<Perm> elements_;
};

/// Group orbit of boundary divisors together with the order (1 or 2) of the
/// automorphism group of a generic point of the image divisor.
struct QuotientDivisor {
  std::vector<BoundaryDivisor> orbit;  // canonically sorted
  int stacky_order = 1;
  std::string name;

  const BoundaryDivisor& representative() const { return orbit.front(); }
};

/// 2 when one side of the divisor is a two-element set whose transposition
/// lies in the group, else 1.
int generic_automorphism_order(const BoundaryDivisor& d, const GroupSpec& g);

/// Partition of all boundary divisors into orbits, sorted by the canonical
/// side of the minimal orbit element.
std::vector<QuotientDivisor> orbit_divisors(int n, const GroupSpec& g);

/// Relation among quotient divisor classes, as coefficient vectors aligned
/// with an orbit basis.
struct QuotientRelation {
  std::vector<std::string> labels;
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;

  std::vector<Rational> signed_coefficients() const;
  std::string to_string() const;
};

/// Pushforward of a divisor relation to the quotient. Each upstairs divisor
/// contributes with the degree of the quotient map restricted to it (the
/// stabilizer order of the divisor label divided by the order of the subgroup
/// acting trivially on a generic point). The result is scaled to primitive
/// integer coefficients.
QuotientRelation pushforward_relation(const DivRelation& rel, const GroupSpec& g,
                                      const std::vector<QuotientDivisor>& basis);

/// Group orbit of one-dimensional boundary strata; fclass is the partition of
/// a fixed lift.
struct QuotientStratum {
  std::vector<StableTree> orbit;
  FPartition fclass;
  std::string encoding;  // canonical encoding of the minimal lift
};

std::vector<QuotientStratum> orbit_strata(int n, const GroupSpec& g);

/// Intersection number of the (reduced) image divisor with the stratum class:
/// stacky order times the sum of the upstairs pairings over the divisor orbit
/// against one fixed lift of the stratum.
Rational quotient_pairing(const QuotientDivisor& qd, const QuotientStratum& qs);

/// Rank of the rational Picard group of the quotient: orbit count minus the
/// rank of the span of all pushed Keel relations.
std::size_t picard_rank(int n, const GroupSpec& g);

/// Dimension of the span of the pushed Keel relations over the orbit basis.
std::size_t pushed_relation_rank(int n, const GroupSpec& g,
                                 const std::vector<QuotientDivisor>& basis);

}  // namespace cubicones

#endif
