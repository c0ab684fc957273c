#include <doctest.h>

#include <random>

#include "cubicones/json_io.hpp"

using namespace cubicones;

TEST_CASE("group spec JSON") {
  const GroupSpec g = parse_group_json(R"({"n":7,"young":[[1,2],[3,4,5,6,7]]})");
  CHECK(g.elements().size() == 240);
  CHECK(g.elements() == resolve_group("S2xS5", 7).elements());

  // generators in cycle notation: the swap (1 2) and the 5-cycle (3 4 5 6 7)
  const GroupSpec h = parse_group_json(R"({"n":7,"gens":[[[1,2]],[[3,4,5,6,7]],[[3,4]]]})");
  CHECK(h.elements().size() == 240);

  CHECK(resolve_group("S5", 7).elements().size() == 120);
  CHECK(resolve_group("trivial", 5).elements().size() == 1);
  CHECK_THROWS(parse_group_json("{not json"));
}

TEST_CASE("weight JSON") {
  const WeightData w = parse_weights_json(
      R"({"weights":[{"std":"1/6","eps":"1"},{"std":"1/6","eps":"1"},
          {"std":"1/3","eps":"1"},{"std":"1/3","eps":"1"},{"std":"1/3","eps":"1"},
          {"std":"1/3","eps":"1"},{"std":"1/3","eps":"1"}]})");
  CHECK(w.n == 7);
  CHECK(w.weight(1) == EpsRational(Rational(1, 6), Rational(1)));
  CHECK(w.weight(7) == EpsRational(Rational(1, 3), Rational(1)));
  CHECK(resolve_weights("").weights == WeightData::cubic_line_weights().weights);
}

TEST_CASE("cone JSON round trip") {
  const ConeH h = parse_cone_h_json(R"({"dim":3,"normals":[["2","-1","2"],["0","1","-2"]]})");
  CHECK(h.normals.size() == 2);
  CHECK(h.normals[0] == QVector{Rational(2), Rational(-1), Rational(2)});
  const ConeH h2 = parse_cone_h_json(cone_h_to_json(h));
  CHECK(h2.normals == h.normals);

  const ConeV v = parse_cone_v_json(R"({"dim":2,"rays":[["1","0"],["1/2","1"]]})");
  const ConeV v2 = parse_cone_v_json(cone_v_to_json(v));
  CHECK(v2.rays == v.rays);

  const Polytope p =
      parse_polytope_json(R"({"dim":2,"vertices":[["0","0"],["1","0"],["0","1"]]})");
  CHECK(polytope_volume(p).volume == Rational(1, 2));
  CHECK_THROWS(parse_polytope_json(R"({"dim":3,"vertices":[["0","0"]]})"));
}

TEST_CASE("tree and divisor JSON") {
  CHECK(divisor_to_json(BoundaryDivisor(7, mark_set({3, 4}))) == "[1,2,5,6,7]");
  StableTree chain;
  chain.n = 7;
  chain.legs = {mark_set({1, 2, 3}), mark_set({4}), mark_set({5}), mark_set({6, 7})};
  chain.edges = {{0, 1}, {1, 2}, {2, 3}};
  CHECK(tree_to_json(chain) == "[1,2,3,[4,[5,[6,7]]]]");
  const FPartition f = fpartition_of(chain);
  CHECK(fpartition_to_json(f) == "[[1],[2],[3],[4,5,6,7]]");
}

TEST_CASE("matrix CSV round trip") {
  const WeightData w = WeightData::cubic_line_weights();
  const GroupSpec g = resolve_group("S2xS5", 7);
  const auto basis = orbit_divisors(7, g);
  const auto strata = orbit_strata(7, g);
  const PairingMatrix m = build_pairing_matrix(basis, strata, w);
  CHECK(m.row_labels.size() == 6);
  CHECK(m.column_labels.size() == 24);
  const PairingMatrix back = parse_matrix_csv(matrix_to_csv(m));
  CHECK(back.row_labels == m.row_labels);
  CHECK(back.column_labels == m.column_labels);
  CHECK(back.contracted == m.contracted);
  CHECK(back.entries == m.entries);
}

TEST_CASE("spaces manifest lists every lattice") {
  const std::string manifest = spaces_manifest_json();
  for (const char* key : {"git", "toroidal", "kirwan", "line", "marked"})
    CHECK(manifest.find(key) != std::string::npos);
}
