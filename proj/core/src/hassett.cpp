#include "cubicones/hassett.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cubicones {

WeightData::WeightData(int n_in, std::vector<EpsRational> w) : n(n_in), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("WeightData: need one weight per marking");
  const EpsRational zero, one{Rational(1)};
  EpsRational sum;
  for (const auto& x : weights) {
    if (!(zero < x) || one < x)
      throw std::invalid_argument("WeightData: weights must lie in (0,1]");
    sum += x;
  }
  if (!(EpsRational{Rational(2)} < sum))
    throw std::invalid_argument("WeightData: total weight must exceed 2");
}

EpsRational WeightData::total(MarkSet marks) const {
  EpsRational sum;
  for (int m : marks_of(marks)) sum += weight(m);
  return sum;
}

WeightData WeightData::cubic_line_weights() {
  const EpsRational light{Rational(1, 6), Rational(1)};
  const EpsRational heavy{Rational(1, 3), Rational(1)};
  return WeightData(7, {light, light, heavy, heavy, heavy, heavy, heavy});
}

WeightData WeightData::unit_weights(int n) {
  return WeightData(n, std::vector<EpsRational>(n, EpsRational{Rational(1)}));
}

bool component_stable(const std::vector<EpsRational>& legs, int nodes, const WeightData&) {
  EpsRational sum{Rational(nodes)};
  for (const auto& x : legs) sum += x;
  return EpsRational{Rational(2)} < sum;
}

WeightedTree WeightedTree::from_tree(const StableTree& t) {
  WeightedTree wt;
  wt.n = t.n;
  wt.points.resize(t.legs.size());
  for (std::size_t v = 0; v < t.legs.size(); ++v)
    for (int m : marks_of(t.legs[v])) wt.points[v].push_back(MarkSet{1} << (m - 1));
  wt.edges = t.edges;
  return wt;
}

int WeightedTree::moduli_dim() const {
  int d = 0;
  for (std::size_t v = 0; v < points.size(); ++v) {
    int special = static_cast<int>(points[v].size());
    for (const auto& [a, b] : edges)
      special += (a == static_cast<int>(v)) + (b == static_cast<int>(v));
    d += special - 3;
  }
  return d;
}

bool WeightedTree::vertex_stable(int v, const WeightData& w) const {
  EpsRational sum;
  for (MarkSet cluster : points[v]) sum += w.total(cluster);
  for (const auto& [a, b] : edges) sum += EpsRational{Rational((a == v) + (b == v))};
  return EpsRational{Rational(2)} < sum;
}

WeightedTree WeightedTree::reduce(const WeightData& w) const {
  WeightedTree cur = *this;
  for (;;) {
    int victim = -1;
    for (int v = 0; v < static_cast<int>(cur.points.size()); ++v)
      if (!cur.vertex_stable(v, w)) {
        victim = v;
        break;
      }
    if (victim < 0) return cur;
    int degree = 0, neighbor = -1;
    for (const auto& [a, b] : cur.edges) {
      if (a == victim) { ++degree; neighbor = b; }
      if (b == victim) { ++degree; neighbor = a; }
    }
    if (degree != 1)
      throw std::logic_error("WeightedTree::reduce: unstable non-leaf component");
    MarkSet merged = 0;
    for (MarkSet c : cur.points[victim]) merged |= c;
    if (EpsRational{Rational(1)} < w.total(merged))
      throw std::logic_error("WeightedTree::reduce: merged cluster too heavy");
    WeightedTree next;
    next.n = cur.n;
    std::vector<int> remap(cur.points.size(), -1);
    for (int v = 0; v < static_cast<int>(cur.points.size()); ++v) {
      if (v == victim) continue;
      remap[v] = static_cast<int>(next.points.size());
      next.points.push_back(cur.points[v]);
    }
    next.points[remap[neighbor]].push_back(merged);
    for (const auto& [a, b] : cur.edges) {
      if (a == victim || b == victim) continue;
      next.edges.emplace_back(remap[a], remap[b]);
    }
    cur = std::move(next);
  }
}

std::string WeightedTree::encoding() const {
  std::string s;
  for (const auto& verts : points) {
    std::vector<MarkSet> sorted(verts);
    std::sort(sorted.begin(), sorted.end());
    s += '[';
    for (MarkSet c : sorted) s += std::to_string(c) + ',';
    s += ']';
  }
  s += '|';
  for (const auto& [a, b] : edges)
    s += std::to_string(a) + '-' + std::to_string(b) + ',';
  return s;
}

std::string to_string(ReductionImage::Kind k) {
  switch (k) {
    case ReductionImage::Kind::divisor: return "divisor";
    case ReductionImage::Kind::codim_two: return "codim-two";
    case ReductionImage::Kind::curve: return "curve";
    case ReductionImage::Kind::point: return "point";
  }
  return "?";
}

namespace {

// Markings carrying the smaller of exactly two distinct weight values; empty
// when the weights do not split into two classes.
MarkSet light_marks(const WeightData& w) {
  std::set<EpsRational> values(w.weights.begin(), w.weights.end());
  if (values.size() != 2) return 0;
  MarkSet lights = 0;
  for (int m = 1; m <= w.n; ++m)
    if (w.weight(m) == *values.begin()) lights |= MarkSet{1} << (m - 1);
  return lights;
}

std::string divisor_image_label(const QuotientDivisor& qd, const WeightData& w,
                                MarkSet merged_cluster) {
  const MarkSet lights = light_marks(w);
  if (lights == 0) return qd.name;  // no two-class structure to name by
  if (merged_cluster != 0) {
    const int light_count = mark_count(merged_cluster & lights);
    const int heavy_count = mark_count(merged_cluster) - light_count;
    if (light_count == 2 && heavy_count == 0) return "delta2";
    if (light_count == 0 && heavy_count == 2) return "delta5";
    if (light_count == 1 && heavy_count == 1) return "gamma";
    return qd.name;
  }
  // Nothing contracted: the image keeps the divisor's type; index it by the
  // size of the side containing both light markings.
  const BoundaryDivisor& rep = qd.representative();
  for (MarkSet side : {rep.side(), rep.complement()})
    if ((side & lights) == lights) return "delta" + std::to_string(mark_count(side));
  return qd.name;
}

}  // namespace

ReductionImage reduce_divisor(const QuotientDivisor& qd, const WeightData& w) {
  const BoundaryDivisor& rep = qd.representative();
  if (rep.n() != w.n) throw std::invalid_argument("reduce_divisor: marking count mismatch");
  StableTree t;
  t.n = rep.n();
  t.legs = {rep.side(), rep.complement()};
  t.edges = {{0, 1}};
  const WeightedTree reduced = WeightedTree::from_tree(t).reduce(w);
  ReductionImage img;
  img.moduli_dim = reduced.moduli_dim();
  if (img.moduli_dim == w.n - 4) {
    img.kind = ReductionImage::Kind::divisor;
    MarkSet merged = 0;
    for (const auto& verts : reduced.points)
      for (MarkSet c : verts)
        if (mark_count(c) >= 2) merged = c;
    img.label = divisor_image_label(qd, w, merged);
  } else {
    img.kind = ReductionImage::Kind::codim_two;
  }
  return img;
}

ReductionImage reduce_stratum(const StableTree& t, const WeightData& w) {
  if (t.n != w.n) throw std::invalid_argument("reduce_stratum: marking count mismatch");
  const WeightedTree reduced = WeightedTree::from_tree(t).reduce(w);
  ReductionImage img;
  img.moduli_dim = reduced.moduli_dim();
  img.kind = img.moduli_dim == 0 ? ReductionImage::Kind::point : ReductionImage::Kind::curve;
  return img;
}

std::vector<std::size_t> contracted_strata(const std::vector<QuotientStratum>& strata,
                                           const WeightData& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const StableTree& t = strata[i].orbit.front();
    bool contracted = false;
    for (int v = 0; v < t.vertex_count() && !contracted; ++v) {
      int degree = 0;
      for (const auto& [a, b] : t.edges) degree += (a == v) + (b == v);
      if (degree != 1 || mark_count(t.legs[v]) != 3) continue;
      // One node and three marked points: contracted iff the component fails
      // stability for these weights.
      std::vector<EpsRational> legs;
      for (int m : marks_of(t.legs[v])) legs.push_back(w.weight(m));
      contracted = !component_stable(legs, 1, w);
    }
    if (contracted) out.push_back(i);
  }
  return out;
}

std::string PullbackClass::to_string(const std::vector<QuotientDivisor>& basis) const {
  std::string s;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coefficients[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += coefficients[i].to_string() + " " + basis[i].name;
  }
  return target + " -> " + (s.empty() ? "0" : s);
}

PullbackClass pullback_along_h(const std::string& target,
                               const std::vector<QuotientDivisor>& basis,
                               const std::vector<QuotientStratum>& strata,
                               const WeightData& w) {
  std::size_t strict = basis.size();
  std::vector<std::size_t> contracted_divisors;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ReductionImage img = reduce_divisor(basis[i], w);
    if (img.kind == ReductionImage::Kind::divisor && img.label == target) strict = i;
    if (img.kind == ReductionImage::Kind::codim_two) contracted_divisors.push_back(i);
  }
  if (strict == basis.size())
    throw std::invalid_argument("pullback_along_h: unknown image divisor '" + target + "'");
  const auto curves = contracted_strata(strata, w);
  QMatrix a(curves.size(), contracted_divisors.size());
  QVector b(curves.size());
  for (std::size_t r = 0; r < curves.size(); ++r) {
    for (std::size_t c = 0; c < contracted_divisors.size(); ++c)
      a.at(r, c) = quotient_pairing(basis[contracted_divisors[c]], strata[curves[r]]);
    b[r] = -quotient_pairing(basis[strict], strata[curves[r]]);
  }
  const auto solution = solve_linear(a, b);
  if (!solution)
    throw std::runtime_error("pullback_along_h: zero-intersection system is inconsistent");
  if (!kernel_basis(a).empty())
    throw std::runtime_error("pullback_along_h: zero-intersection system is underdetermined");
  PullbackClass out;
  out.target = target;
  out.coefficients.assign(basis.size(), Rational(0));
  out.coefficients[strict] = 1;
  for (std::size_t c = 0; c < contracted_divisors.size(); ++c)
    out.coefficients[contracted_divisors[c]] = (*solution)[c];
  return out;
}

PicardPresentation picard_presentation(const WeightData& w, const GroupSpec& g) {
  const auto basis = orbit_divisors(w.n, g);
  std::vector<std::size_t> generator_cols;
  PicardPresentation out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ReductionImage img = reduce_divisor(basis[i], w);
    if (img.kind == ReductionImage::Kind::divisor) {
      generator_cols.push_back(i);
      out.generators.push_back(img.label);
    }
  }
  // Restrict the pushed Keel relation to the surviving generators.
  const QuotientRelation pushed =
      pushforward_relation(keel_relation(w.n, 1, 2, 3, 4), g, basis);
  out.relation.labels = out.generators;
  for (std::size_t c : generator_cols) {
    out.relation.lhs.push_back(pushed.lhs[c]);
    out.relation.rhs.push_back(pushed.rhs[c]);
  }
  // Rank: generators minus the dimension of the span of all pushed relations
  // restricted to the generator columns.
  std::vector<QVector> rows;
  const auto index_basis = basis;  // evaluated once
  for (const auto& rel : all_keel_relations(w.n)) {
    const QuotientRelation p = pushforward_relation(rel, g, index_basis);
    QVector row;
    const QVector all = p.signed_coefficients();
    for (std::size_t c : generator_cols) row.push_back(all[c]);
    if (!is_zero_vector(row)) rows.push_back(std::move(row));
  }
  const std::size_t rel_rank = rows.empty() ? 0 : rank(QMatrix(rows));
  out.rank = out.generators.size() - rel_rank;
  return out;
}

}  // namespace cubicones
