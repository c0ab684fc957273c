#ifndef CUBICONES_CUBIC_SPACES_HPP
#define CUBICONES_CUBIC_SPACES_HPP

#include <map>
#include <string>
#include <vector>

#include "cubicones/linalg.hpp"
#include "cubicones/polyhedra.hpp"

namespace cubicones {

/// The compactified moduli spaces of cubic surfaces in play.
///   git      - the GIT = Baily-Borel model, Picard rank 1 (basis lambda)
///   toroidal - toroidal compactification, basis (lambda, T3A2)
///   kirwan   - Kirwan blowup of the GIT model, basis (lambda, D3A2)
///   line     - moduli of cubics with a line, basis (delta2, delta4, delta5)
///   marked   - Weyl-invariant slice of the marked space, basis (TA1m, T3A2m)
enum class SpaceId { git, toroidal, kirwan, line, marked };

SpaceId parse_space(const std::string& name);
std::string to_string(SpaceId id);

/// Picard lattice with a table of named divisor classes as exact coefficient
/// vectors over the chosen basis.
struct PicLattice {
  SpaceId space;
  std::vector<std::string> basis;
  std::vector<std::pair<std::string, QVector>> classes;  // insertion-ordered
  /// Number of irreducible components of a named class, where the class is
  /// reducible and only the count is tracked (the marked-space divisors).
  std::map<std::string, int> component_counts;

  const QVector& named(const std::string& name) const;
  bool has(const std::string& name) const;
};

/// Lattice with its standard named classes. Identities encoded here:
///   toroidal: TA1 = 24L - 6T,  TR = 150L - 24T,  K = -90L + 16T
///   kirwan:   DA1 = 24L - 6D,  DR = 150L - 30D,  K = -90L + 20D
///   git:      D = 24L, R = 150L, K = -90L, O(1) = 6L
PicLattice standard_lattice(SpaceId space);

/// Finite cover data between two lattices: pull is target->source on basis
/// columns, push is source->target, push o pull = degree x identity.
struct CoverMap {
  SpaceId source, target;
  int degree = 0;
  QMatrix pull;  // size dim(source) x dim(target)
  QMatrix push;  // size dim(target) x dim(source)

  QVector pull_class(const QVector& target_class) const { return pull * target_class; }
  QVector push_class(const QVector& source_class) const { return push * source_class; }
};

/// The 27:1 cover from the space with a line to the toroidal space.
/// Pull: TA1 -> 2 delta2 + delta5, T3A2 -> delta4.
/// Push: delta2 -> 6 TA1, delta4 -> 27 T3A2, delta5 -> 15 TA1, and the
/// auxiliary Eckardt image gamma -> 3 TR.
CoverMap line_cover();

/// Push of the Eckardt-type class gamma expressed over (lambda, T3A2).
QVector line_cover_push_gamma();

/// Ramification transport to the Weyl-invariant marked slice: order 2 over the
/// discriminant, 1 over the boundary: (a,b) -> primitive (2a, b).
QVector marked_transport(const QVector& ray);

/// Nef cone of the space, in the coordinates noted on SpaceId. The line-space
/// cone is computed from its curve inequalities; the toroidal cone is the
/// pull-membership transform of it; the marked cone is its transport.
ConeV nef_cone(SpaceId space);

/// Effective cone in the same coordinates.
ConeV eff_cone(SpaceId space);

/// Inequalities cutting out the nef cone of the line space, one per
/// non-contracted curve class (coordinates (a,b,c) over (delta2,delta4,delta5)).
ConeH line_nef_inequalities();

/// lambda-coefficient over negated boundary coefficient of a class x*lambda +
/// y*boundary; throws when y is zero.
Rational slope(const QVector& cls);

/// Top intersection data of a two-generator lattice: the pure fourth powers,
/// all mixed products vanishing.
struct TopRing {
  std::string a_label, b_label;
  Rational a4, b4;
};

TopRing top_ring(SpaceId space);  // toroidal or kirwan

/// (x a + y b)^4 = x^4 a^4 + y^4 b^4.
Rational top_intersection(const TopRing& ring, const QVector& xy);

/// Fourth power of an exceptional divisor presented as a finite quotient of a
/// toric variety: (1/quotient_order) * (-1/projective_scale)^3 * (3! * vol).
Rational exceptional_fourth_power(const Rational& vol, const Rational& projective_scale,
                                  int quotient_order);

/// The two published expansions of the Kirwan-space canonical class disagree;
/// both are computed here so the discrepancy can be reported. The lattice
/// stores the blowup-formula value.
struct KirwanCanonicalComparison {
  QVector adopted;      // pull of K plus 20 D3A2
  QVector alternative;  // 5L - (5/6) DA1 - (1/2) DR + 40 D3A2, expanded
  bool consistent() const { return adopted == alternative; }
};

KirwanCanonicalComparison kirwan_canonical_comparison();

}  // namespace cubicones

#endif
