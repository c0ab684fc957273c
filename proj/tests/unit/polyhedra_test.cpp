#include <doctest.h>

#include <algorithm>
#include <random>

#include "cubicones/polyhedra.hpp"

using namespace cubicones;

namespace {

QVector qv(std::initializer_list<long long> xs) {
  QVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

ConeH seven_inequalities() {
  ConeH c;
  c.dim = 3;
  c.normals = {qv({2, -1, 2}), qv({0, 1, -2}), qv({1, 0, 0}), qv({-1, 1, 0}),
               qv({0, -1, 6}), qv({0, 0, 1}),  qv({0, 1, 2})};
  return c;
}

}  // namespace

TEST_CASE("orthant round trip") {
  ConeH h;
  h.dim = 2;
  h.normals = {qv({1, 0}), qv({0, 1})};
  const ConeV v = h_to_v(h);
  CHECK(v.rays == std::vector<QVector>{qv({0, 1}), qv({1, 0})});
  CHECK(v.pointed());
  const ConeH back = v_to_h(v);
  CHECK(back.normals == std::vector<QVector>{qv({0, 1}), qv({1, 0})});
}

TEST_CASE("the seven curve inequalities cut a four-ray cone") {
  const ConeV v = h_to_v(seven_inequalities());
  std::vector<QVector> want = {qv({0, 2, 1}), qv({2, 2, 1}), qv({2, 6, 1}), qv({6, 6, 1})};
  std::sort(want.begin(), want.end());
  CHECK(v.rays == want);
  CHECK(v.pointed());

  // redundant inequalities change nothing
  ConeH padded = seven_inequalities();
  padded.normals.push_back(qv({1, 1, 1}));
  padded.normals.push_back(qv({4, -2, 4}));  // duplicate direction
  CHECK(h_to_v(padded).rays == want);

  // the four facets
  const ConeH facets = v_to_h(v);
  std::vector<QVector> want_facets = {qv({-1, 1, 0}), qv({0, 1, -2}), qv({0, -1, 6}),
                                      qv({2, -1, 2})};
  std::sort(want_facets.begin(), want_facets.end());
  CHECK(facets.normals == want_facets);
}

TEST_CASE("membership") {
  const ConeH facets = v_to_h(h_to_v(seven_inequalities()));
  CHECK(member(facets, qv({2, 4, 1})));
  CHECK_FALSE(member(facets, qv({1, 1, 1})));
  CHECK(member(facets, qv({0, 0, 0})));

  ConeV v;
  v.dim = 3;
  v.rays = {qv({0, 2, 1}), qv({2, 2, 1}), qv({2, 6, 1}), qv({6, 6, 1})};
  CHECK(member(v, qv({2, 4, 1})));
  CHECK_FALSE(member(v, qv({1, 1, 1})));
  CHECK(member(v, qv({0, 0, 0})));
}

TEST_CASE("degenerate single ray in the plane") {
  ConeV ray;
  ray.dim = 2;
  ray.rays = {qv({1, 0})};
  const ConeH h = v_to_h(ray);
  // the minimal inequality description needs the equality pair plus one cut
  CHECK(h.normals == std::vector<QVector>{qv({0, -1}), qv({0, 1}), qv({1, 0})});
  const ConeV back = h_to_v(h);
  CHECK(back.rays == std::vector<QVector>{qv({1, 0})});
  CHECK(back.pointed());
}

TEST_CASE("lineality is split off and reported") {
  ConeH h;
  h.dim = 3;
  h.normals = {qv({1, 0, 0})};  // half-space
  const ConeV v = h_to_v(h);
  CHECK(v.rays == std::vector<QVector>{qv({1, 0, 0})});
  CHECK(v.lineality.size() == 2);
}

TEST_CASE("duality round trip on random pointed cones") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> extra(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 2 + trial % 4;
    std::vector<QVector> gens;
    for (int i = 0, count = dim + extra(rng); i < count; ++i) {
      QVector v(dim);
      v[0] = Rational(1 + std::abs(entry(rng)));
      for (int j = 1; j < dim; ++j) v[j] = Rational(entry(rng));
      gens.push_back(primitive(v));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<QVector> extremal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<QVector> others;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(gens[j]);
      if (!nonneg_solvable(others, gens[i])) extremal.push_back(gens[i]);
    }
    std::sort(extremal.begin(), extremal.end());
    ConeV input;
    input.dim = dim;
    input.rays = gens;
    const ConeH h = v_to_h(input);
    const ConeV back = h_to_v(h);
    CHECK(back.rays == extremal);
    CHECK(back.pointed());
    CHECK(v_to_h(back).normals == h.normals);
    // extremality certificate: each ray is tight on dim-1 independent normals
    for (const auto& r : back.rays) {
      std::vector<QVector> tight;
      for (const auto& n : h.normals)
        if (dot(n, r).is_zero()) tight.push_back(n);
      CHECK(rank(QMatrix(tight)) == static_cast<std::size_t>(dim - 1));
    }
  }
}

TEST_CASE("volumes of reference bodies") {
  Polytope simplex;
  simplex.dim = 3;
  simplex.vertices = {qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})};
  CHECK(polytope_volume(simplex).volume == Rational(1, 6));
  CHECK(polytope_volume(simplex, true).volume == Rational(1));

  Polytope cube;
  cube.dim = 3;
  for (long long x = 0; x <= 1; ++x)
    for (long long y = 0; y <= 1; ++y)
      for (long long z = 0; z <= 1; ++z) cube.vertices.push_back(qv({x, y, z}));
  CHECK(polytope_volume(cube).volume == Rational(1));

  Polytope square;  // not full-dimensional in 3 space
  square.dim = 3;
  square.vertices = {qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({1, 1, 0})};
  const VolumeResult flat = polytope_volume(square);
  CHECK(flat.degenerate);
  CHECK(flat.volume == Rational(0));
}

TEST_CASE("volume is additive across a vertex hyperplane split") {
  Polytope prism1, prism2;
  prism1.dim = prism2.dim = 3;
  // unit cube split along x + y = 1
  prism1.vertices = {qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}),
                     qv({0, 0, 1}), qv({1, 0, 1}), qv({0, 1, 1})};
  prism2.vertices = {qv({1, 0, 0}), qv({0, 1, 0}), qv({1, 1, 0}),
                     qv({1, 0, 1}), qv({0, 1, 1}), qv({1, 1, 1})};
  const Rational total = polytope_volume(prism1).volume + polytope_volume(prism2).volume;
  CHECK(total == Rational(1));
  CHECK(polytope_volume(prism1).volume == Rational(1, 2));
}

TEST_CASE("interior points are dropped by canonicalization") {
  Polytope p;
  p.dim = 2;
  p.vertices = {qv({0, 0}), qv({2, 0}), qv({0, 2}), qv({1, 1}),  // on the boundary
                qv({1, 0})};                                     // on an edge
  const Polytope q = canonicalize_vertices(p);
  CHECK(q.vertices == std::vector<QVector>{qv({0, 0}), qv({0, 2}), qv({2, 0})});
  CHECK(polytope_volume(p).volume == Rational(2));
}
