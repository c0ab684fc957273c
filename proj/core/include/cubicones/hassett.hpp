#ifndef CUBICONES_HASSETT_HPP
#define CUBICONES_HASSETT_HPP

#include <string>
#include <vector>

#include "cubicones/eps_rational.hpp"
#include "cubicones/linalg.hpp"
#include "cubicones/stable_graphs.hpp"
#include "cubicones/symmetry.hpp"

namespace cubicones {

/// Weight assignment for the markings. Each weight lies in (0,1] and the
/// total exceeds 2; comparisons use the lexicographic order on EpsRational,
/// so the formal infinitesimal breaks ties at the stability threshold.
struct WeightData {
  int n = 0;
  std::vector<EpsRational> weights;  // index m-1 holds the weight of marking m

  WeightData(int n, std::vector<EpsRational> w);

  const EpsRational& weight(int marking) const { return weights[marking - 1]; }
  EpsRational total(MarkSet marks) const;

  /// Two markings of weight 1/6+e, five of weight 1/3+e: the configuration
  /// whose quotient Hassett space is the moduli of cubic surfaces with a line.
  static WeightData cubic_line_weights();

  /// Weight 1 on every marking (the Deligne-Mumford chamber; eps = 0).
  static WeightData unit_weights(int n);
};

/// True when the component is stable: leg weights plus one per node exceed 2.
bool component_stable(const std::vector<EpsRational>& legs, int nodes, const WeightData& w);

/// Nodal configuration during weight reduction: each vertex carries point
/// clusters (sets of collided markings). Clusters keep their merged weight.
struct WeightedTree {
  int n = 0;
  std::vector<std::vector<MarkSet>> points;  // clusters per vertex
  std::vector<std::pair<int, int>> edges;

  static WeightedTree from_tree(const StableTree& t);

  int moduli_dim() const;
  bool vertex_stable(int v, const WeightData& w) const;

  /// Iteratively contract unstable components, merging their markings into a
  /// single cluster on the attachment vertex. Idempotent.
  WeightedTree reduce(const WeightData& w) const;

  std::string encoding() const;  // canonical, for equality checks
};

struct ReductionImage {
  enum class Kind { divisor, codim_two, curve, point };
  Kind kind;
  std::string label;  // named image class when kind == divisor
  int moduli_dim = 0;
};

std::string to_string(ReductionImage::Kind k);

/// Image of a boundary divisor orbit under the weight reduction morphism.
/// Divisor images are labeled by the collision pattern: delta2 (two light
/// points), delta5 (two heavy points), gamma (one of each), delta4 (nothing
/// contracted).
ReductionImage reduce_divisor(const QuotientDivisor& qd, const WeightData& w);

/// Image of a one-dimensional stratum: kind == point when every modulus dies.
ReductionImage reduce_stratum(const StableTree& t, const WeightData& w);

/// Indices of the strata whose generic curve is contracted to a point: those
/// with a component carrying one node and three marked points, at least one
/// of them of light weight (weight making the component unstable).
std::vector<std::size_t> contracted_strata(const std::vector<QuotientStratum>& strata,
                                           const WeightData& w);

/// Pullback of an image divisor class: the strict transform with coefficient
/// one plus contracted divisors with coefficients solved from the condition
/// that the class pairs to zero with every contracted stratum.
struct PullbackClass {
  std::string target;
  std::vector<Rational> coefficients;  // over the quotient divisor basis
  std::string to_string(const std::vector<QuotientDivisor>& basis) const;
};

PullbackClass pullback_along_h(const std::string& target,
                               const std::vector<QuotientDivisor>& basis,
                               const std::vector<QuotientStratum>& strata,
                               const WeightData& w);

/// Picard presentation of the reduced space: generators are the divisor-type
/// images, the relation is the pushed Keel relation with contracted classes
/// removed.
struct PicardPresentation {
  std::vector<std::string> generators;
  QuotientRelation relation;  // over the generator labels
  std::size_t rank = 0;
};

PicardPresentation picard_presentation(const WeightData& w, const GroupSpec& g);

}  // namespace cubicones

#endif
