#include "cubicones/polyhedra.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubicones {

namespace {

struct TrackedRay {
  QVector vec;
  std::vector<bool> zero;  // tight flags over the processed inequalities
};

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::vector<QVector> canonical_normals(const std::vector<QVector>& normals, int dim) {
  std::vector<QVector> out;
  for (const auto& n : normals) {
    if (static_cast<int>(n.size()) != dim)
      throw std::invalid_argument("cone: normal has wrong dimension");
    if (is_zero_vector(n)) continue;
    out.push_back(primitive(n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ConeV h_to_v(const ConeH& c) {
  if (c.dim < 1) throw std::invalid_argument("h_to_v: need dim >= 1");
  const std::vector<QVector> normals = canonical_normals(c.normals, c.dim);

  // Start from all of R^dim as pure lineality and insert one inequality at a
  // time, maintaining extremal rays with their tight sets.
  std::vector<QVector> lin;
  for (int i = 0; i < c.dim; ++i) {
    QVector e(c.dim);
    e[i] = 1;
    lin.push_back(e);
  }
  std::vector<TrackedRay> rays;

  for (std::size_t k = 0; k < normals.size(); ++k) {
    const QVector& a = normals[k];
    // A lineality vector with nonzero value against a becomes the pivot.
    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (!dot(a, lin[i]).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < lin.size()) {
      QVector v = lin[pivot];
      Rational av = dot(a, v);
      if (av.sign() < 0) {
        v = scale(v, Rational(-1));
        av = -av;
      }
      std::vector<QVector> new_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pivot) continue;
        const Rational al = dot(a, lin[i]);
        new_lin.push_back(al.is_zero() ? lin[i] : sub(lin[i], scale(v, al / av)));
      }
      lin = std::move(new_lin);
      for (auto& r : rays) {
        const Rational ar = dot(a, r.vec);
        if (!ar.is_zero()) r.vec = primitive(sub(r.vec, scale(v, ar / av)));
        r.zero.push_back(true);
      }
      TrackedRay nr;
      nr.vec = primitive(v);
      nr.zero.assign(k + 1, true);  // in the old lineality: tight everywhere before
      nr.zero[k] = false;
      rays.push_back(std::move(nr));
      continue;
    }
    // Classic double description step.
    std::vector<std::size_t> pos, neg;
    std::vector<Rational> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].vec);
      if (val[i].sign() > 0) pos.push_back(i);
      if (val[i].sign() < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) rays[i].zero.push_back(val[i].is_zero());
      continue;
    }
    std::vector<TrackedRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i].sign() < 0) continue;
      TrackedRay r = rays[i];
      r.zero.push_back(val[i].is_zero());
      next.push_back(std::move(r));
    }
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        // Combinatorial adjacency: no third ray is tight wherever both are.
        std::vector<bool> common(k, false);
        for (std::size_t t = 0; t < k; ++t) common[t] = rays[p].zero[t] && rays[n].zero[t];
        bool adjacent = true;
        for (std::size_t q = 0; q < rays.size() && adjacent; ++q) {
          if (q == p || q == n) continue;
          if (subset(common, rays[q].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        TrackedRay w;
        w.vec = primitive(sub(scale(rays[n].vec, val[p]), scale(rays[p].vec, val[n])));
        w.zero = std::move(common);
        w.zero.push_back(true);
        next.push_back(std::move(w));
      }
    rays = std::move(next);
  }

  ConeV out;
  out.dim = c.dim;
  for (auto& r : rays) out.rays.push_back(std::move(r.vec));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  // Canonical lineality basis: the null space of the normal matrix.
  if (!normals.empty()) {
    out.lineality = kernel_basis(QMatrix(normals));
  } else {
    for (int i = 0; i < c.dim; ++i) {
      QVector e(c.dim);
      e[i] = 1;
      out.lineality.push_back(e);
    }
  }
  return out;
}

ConeH v_to_h(const ConeV& c) {
  if (c.dim < 1) throw std::invalid_argument("v_to_h: need dim >= 1");
  // The facet normals are the extremal rays of the dual cone
  // { n : n.r >= 0 for rays r, n.l = 0 for lineality l }.
  ConeH dual_h;
  dual_h.dim = c.dim;
  for (const auto& r : c.rays) dual_h.normals.push_back(r);
  for (const auto& l : c.lineality) {
    dual_h.normals.push_back(l);
    dual_h.normals.push_back(scale(l, Rational(-1)));
  }
  const ConeV dual = h_to_v(dual_h);
  ConeH out;
  out.dim = c.dim;
  out.normals = dual.rays;
  // Implicit equalities of the input span appear as +/- pairs.
  for (const auto& l : dual.lineality) {
    out.normals.push_back(l);
    out.normals.push_back(primitive(scale(l, Rational(-1))));
  }
  std::sort(out.normals.begin(), out.normals.end());
  return out;
}

bool member(const ConeH& c, const QVector& x) {
  if (static_cast<int>(x.size()) != c.dim)
    throw std::invalid_argument("member: dimension mismatch");
  for (const auto& n : c.normals)
    if (dot(n, x).sign() < 0) return false;
  return true;
}

bool nonneg_solvable(const std::vector<QVector>& columns, const QVector& target) {
  const std::size_t d = target.size();
  for (const auto& col : columns)
    if (col.size() != d) throw std::invalid_argument("nonneg_solvable: dimension mismatch");
  const std::size_t n = columns.size();
  // Phase-one simplex with artificial variables and Bland's rule.
  std::vector<QVector> t(d, QVector(n + d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    const bool flip = target[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -columns[j][i] : columns[j][i];
    t[i][n + i] = 1;
    t[i][n + d] = flip ? -target[i] : target[i];
  }
  std::vector<std::size_t> basis(d);
  for (std::size_t i = 0; i < d; ++i) basis[i] = n + i;
  for (;;) {
    // Reduced cost of column j: cost_j - sum over artificial basic rows.
    std::size_t enter = n + d;
    for (std::size_t j = 0; j < n + d && enter == n + d; ++j) {
      Rational z;
      for (std::size_t i = 0; i < d; ++i)
        if (basis[i] >= n) z += t[i][j];
      const Rational reduced = (j >= n ? Rational(1) : Rational(0)) - z;
      if (reduced.sign() < 0) enter = j;
    }
    if (enter == n + d) break;
    std::size_t leave = d;
    Rational best;
    for (std::size_t i = 0; i < d; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      const Rational ratio = t[i][n + d] / t[i][enter];
      if (leave == d || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == d) throw std::logic_error("nonneg_solvable: unbounded phase-one pivot");
    const Rational inv = Rational(1) / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= n + d; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  Rational cost;
  for (std::size_t i = 0; i < d; ++i)
    if (basis[i] >= n) cost += t[i][n + d];
  return cost.is_zero();
}

bool member(const ConeV& c, const QVector& x) {
  if (static_cast<int>(x.size()) != c.dim)
    throw std::invalid_argument("member: dimension mismatch");
  std::vector<QVector> columns = c.rays;
  for (const auto& l : c.lineality) {
    columns.push_back(l);
    columns.push_back(scale(l, Rational(-1)));
  }
  return nonneg_solvable(columns, x);
}

namespace {

QVector homogenize(const QVector& v) {
  QVector h(v.size() + 1);
  h[0] = 1;
  for (std::size_t i = 0; i < v.size(); ++i) h[i + 1] = v[i];
  return h;
}

// Facet cuts of conv(V): extremal rays of the dual of the cone over the
// homogenized vertices. Equalities (the affine span) are excluded.
std::vector<QVector> facet_cuts(const std::vector<QVector>& verts, int dim) {
  ConeH dual;
  dual.dim = dim + 1;
  for (const auto& v : verts) dual.normals.push_back(homogenize(v));
  return h_to_v(dual).rays;
}

// Recursive fan triangulation: apex at the lexicographically smallest vertex,
// one simplex per simplex of each facet not containing the apex.
void triangulate(const std::vector<QVector>& verts, int affine_dim,
                 std::vector<std::vector<QVector>>& out) {
  if (static_cast<int>(verts.size()) == affine_dim + 1) {
    out.push_back(verts);
    return;
  }
  const QVector apex = *std::min_element(verts.begin(), verts.end());
  for (const auto& cut : facet_cuts(verts, static_cast<int>(verts.front().size()))) {
    if (dot(cut, homogenize(apex)).is_zero()) continue;
    std::vector<QVector> facet;
    for (const auto& v : verts)
      if (dot(cut, homogenize(v)).is_zero()) facet.push_back(v);
    std::vector<std::vector<QVector>> sub;
    triangulate(facet, affine_dim - 1, sub);
    for (auto& s : sub) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

Rational det(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  Rational result(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m.at(piv, c).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m.at(piv, k), m.at(c, k));
      result = -result;
    }
    result *= m.at(c, c);
    const Rational inv = Rational(1) / m.at(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      const Rational f = m.at(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m.at(r, k) -= f * m.at(c, k);
    }
  }
  return result;
}

}  // namespace

Polytope canonicalize_vertices(const Polytope& p) {
  Polytope out;
  out.dim = p.dim;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    std::vector<QVector> others;
    for (std::size_t j = 0; j < p.vertices.size(); ++j)
      if (j != i && p.vertices[j] != p.vertices[i]) others.push_back(homogenize(p.vertices[j]));
    if (!nonneg_solvable(others, homogenize(p.vertices[i])))
      out.vertices.push_back(p.vertices[i]);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  return out;
}

VolumeResult polytope_volume(const Polytope& p, bool normalized) {
  if (p.dim < 1) throw std::invalid_argument("polytope_volume: need dim >= 1");
  for (const auto& v : p.vertices)
    if (static_cast<int>(v.size()) != p.dim)
      throw std::invalid_argument("polytope_volume: vertex has wrong dimension");
  const Polytope q = canonicalize_vertices(p);
  if (q.vertices.empty()) return {Rational(0), true};
  // Affine dimension: rank of the differences from the first vertex.
  std::vector<QVector> diffs;
  for (std::size_t i = 1; i < q.vertices.size(); ++i)
    diffs.push_back(sub(q.vertices[i], q.vertices.front()));
  const std::size_t affine_dim = diffs.empty() ? 0 : rank(QMatrix(diffs));
  if (affine_dim < static_cast<std::size_t>(p.dim)) return {Rational(0), true};

  std::vector<std::vector<QVector>> simplices;
  triangulate(q.vertices, p.dim, simplices);
  Rational total;
  Rational factorial(1);
  for (int i = 2; i <= p.dim; ++i) factorial *= i;
  for (const auto& s : simplices) {
    QMatrix m(p.dim, p.dim);
    for (int r = 0; r < p.dim; ++r)
      for (int c = 0; c < p.dim; ++c) m.at(r, c) = s[r][c] - s.back()[c];
    total += det(m).abs() / factorial;
  }
  if (normalized) total *= factorial;
  return {total, false};
}

}  // namespace cubicones
