#ifndef CUBICONES_POLYHEDRA_HPP
#define CUBICONES_POLYHEDRA_HPP

#include <cstddef>
#include <vector>

#include "cubicones/linalg.hpp"

namespace cubicones {

/// Cone in inequality form: { x : n.x >= 0 for every normal n }.
/// Normals are kept primitive and duplicate-free.
struct ConeH {
  int dim = 0;
  std::vector<QVector> normals;
};

/// Cone in generator form: nonnegative span of the rays plus the linear span
/// of the lineality generators. Rays are kept primitive; a nonzero lineality
/// part is reported separately.
struct ConeV {
  int dim = 0;
  std::vector<QVector> rays;
  std::vector<QVector> lineality;

  bool pointed() const { return lineality.empty(); }
};

/// Double description: minimal extremal rays (modulo lineality) of an
/// inequality-form cone. Deterministic: inequalities are canonicalized and
/// processed in sorted order.
ConeV h_to_v(const ConeH& c);

/// Irredundant facet normals of a generator-form cone. When the cone is not
/// full-dimensional the implicit equalities appear as +/- normal pairs.
ConeH v_to_h(const ConeV& c);

bool member(const ConeH& c, const QVector& x);

/// Exact feasibility of x as a nonnegative combination of the rays (plus an
/// arbitrary lineality part), via rational phase-one simplex.
bool member(const ConeV& c, const QVector& x);

/// True when target = sum y_i columns[i] has a solution with all y_i >= 0.
bool nonneg_solvable(const std::vector<QVector>& columns, const QVector& target);

/// Rational polytope given by its vertex list.
struct Polytope {
  int dim = 0;
  std::vector<QVector> vertices;
};

/// Drop points that are convex combinations of the others.
Polytope canonicalize_vertices(const Polytope& p);

struct VolumeResult {
  Rational volume;
  bool degenerate = false;  // not full-dimensional; volume reported as zero
};

/// Euclidean volume by exact fan triangulation from the lexicographically
/// smallest vertex. normalized = true multiplies by dim!.
VolumeResult polytope_volume(const Polytope& p, bool normalized = false);

}  // namespace cubicones

#endif
