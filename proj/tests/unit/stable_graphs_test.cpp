#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cubicones/stable_graphs.hpp"

using namespace cubicones;

namespace {

// Independent oracle: enumerate every labeled tree on n-3 vertices together
// with every assignment of markings to vertices, filter the valence profile,
// and deduplicate by canonical encoding. Purely generate-and-test; shares no
// code path with the constructive enumeration.
std::set<std::string> oracle_dim1_encodings(int n) {
  const int k = n - 3;
  std::vector<std::pair<int, int>> all_edges;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) all_edges.emplace_back(a, b);
  std::set<std::string> encodings;

  std::vector<std::pair<int, int>> chosen;
  std::function<void(std::size_t)> pick = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == k - 1) {
      // connectivity check
      std::vector<int> root(k);
      for (int v = 0; v < k; ++v) root[v] = v;
      std::function<int(int)> find = [&](int v) { return root[v] == v ? v : root[v] = find(root[v]); };
      for (auto [a, b] : chosen) root[find(a)] = find(b);
      for (int v = 0; v < k; ++v)
        if (find(v) != find(0)) return;
      // all marking assignments
      std::vector<int> assign(n, 0);
      for (;;) {
        StableTree t;
        t.n = n;
        t.legs.assign(k, 0);
        for (int m = 0; m < n; ++m) t.legs[assign[m]] |= MarkSet{1} << m;
        t.edges = chosen;
        int fours = 0;
        bool ok = true;
        for (int v = 0; v < k; ++v) {
          const int val = t.valence(v);
          if (val == 4) {
            ++fours;
          } else if (val != 3) {
            ok = false;
            break;
          }
        }
        if (ok && fours == 1) encodings.insert(t.canonical_encoding());
        int pos = n - 1;
        while (pos >= 0 && ++assign[pos] == k) assign[pos--] = 0;
        if (pos < 0) break;
      }
      return;
    }
    for (std::size_t i = from; i < all_edges.size(); ++i) {
      chosen.push_back(all_edges[i]);
      pick(i + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return encodings;
}

std::set<std::string> constructive_encodings(int n) {
  std::set<std::string> out;
  for (const auto& t : enumerate_dim1_strata(n)) out.insert(t.canonical_encoding());
  return out;
}

}  // namespace

TEST_CASE("boundary divisor enumeration") {
  CHECK(enumerate_boundary_divisors(4).size() == 3);
  CHECK(enumerate_boundary_divisors(5).size() == 10);
  CHECK(enumerate_boundary_divisors(7).size() == 56);
  CHECK_THROWS_AS(enumerate_boundary_divisors(3), std::invalid_argument);
  // canonical side contains marking 1; a label and its complement are equal
  for (const auto& d : enumerate_boundary_divisors(6)) {
    CHECK((d.side() & 1u) != 0);
    CHECK(d == BoundaryDivisor(6, d.complement()));
  }
  CHECK_THROWS_AS(BoundaryDivisor(6, mark_set({1})), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryDivisor(6, mark_set({1, 2, 3, 4, 5})), std::invalid_argument);
}

TEST_CASE("keel relation term counts") {
  const DivRelation r7 = keel_relation(7, 1, 2, 3, 4);
  CHECK(r7.lhs.size() == 8);
  CHECK(r7.rhs.size() == 8);

  const DivRelation r4 = keel_relation(4, 1, 2, 3, 4);
  REQUIRE(r4.lhs.size() == 1);
  REQUIRE(r4.rhs.size() == 1);
  CHECK(r4.lhs.begin()->first == BoundaryDivisor(4, mark_set({1, 2})));
  CHECK(r4.rhs.begin()->first == BoundaryDivisor(4, mark_set({1, 3})));

  const DivRelation r5 = keel_relation(5, 1, 2, 3, 4);
  std::set<BoundaryDivisor> lhs, rhs;
  for (const auto& [d, c] : r5.lhs) lhs.insert(d);
  for (const auto& [d, c] : r5.rhs) rhs.insert(d);
  CHECK(lhs == std::set<BoundaryDivisor>{BoundaryDivisor(5, mark_set({1, 2})),
                                         BoundaryDivisor(5, mark_set({1, 2, 5}))});
  CHECK(rhs == std::set<BoundaryDivisor>{BoundaryDivisor(5, mark_set({1, 3})),
                                         BoundaryDivisor(5, mark_set({1, 3, 5}))});

  CHECK_THROWS_AS(keel_relation(7, 1, 1, 3, 4), std::invalid_argument);
}

TEST_CASE("dim-1 stratum enumeration matches the brute-force oracle") {
  CHECK(enumerate_dim1_strata(4).empty());

  const auto mine5 = constructive_encodings(5);
  CHECK(mine5 == oracle_dim1_encodings(5));
  CHECK(mine5.size() == 10);

  const auto mine6 = constructive_encodings(6);
  CHECK(mine6 == oracle_dim1_encodings(6));
  CHECK(mine6.size() == 105);

  const auto mine7 = constructive_encodings(7);
  CHECK(mine7 == oracle_dim1_encodings(7));
  CHECK(mine7.size() == 1260);

  // every enumerated tree is stable with exactly one modulus
  for (const auto& t : enumerate_dim1_strata(6)) {
    CHECK(t.is_stable());
    CHECK(t.moduli_dim() == 1);
  }
}

TEST_CASE("fpartition reads the branches at the 4-valent vertex") {
  // chain with three legs on the end component: branches there are three
  // singletons plus everything beyond the edge
  StableTree chain;
  chain.n = 7;
  chain.legs = {mark_set({1, 2, 3}), mark_set({4}), mark_set({5}), mark_set({6, 7})};
  chain.edges = {{0, 1}, {1, 2}, {2, 3}};
  CHECK(chain.four_valent_vertex() == 0);
  const FPartition f = fpartition_of(chain);
  std::multiset<int> sizes;
  for (MarkSet b : f.blocks) sizes.insert(mark_count(b));
  CHECK(sizes == std::multiset<int>{1, 1, 1, 4});
  CHECK(f == FPartition::from_blocks(7, {mark_set({1}), mark_set({2}), mark_set({3}),
                                         mark_set({4, 5, 6, 7})}));

  // centered tree: two legs at the center, two 3-valent tails
  StableTree star;
  star.n = 6;
  star.legs = {mark_set({1, 2}), mark_set({3, 4}), mark_set({5, 6})};
  star.edges = {{0, 1}, {0, 2}};
  CHECK(fpartition_of(star) == FPartition::from_blocks(6, {mark_set({1}), mark_set({2}),
                                                           mark_set({3, 4}), mark_set({5, 6})}));

  StableTree no_center;
  no_center.n = 5;
  no_center.legs = {mark_set({1, 2, 3, 4, 5})};
  no_center.edges = {};
  CHECK_THROWS_AS(fpartition_of(no_center), std::invalid_argument);
}

TEST_CASE("divisor-curve pairing") {
  const FPartition f = FPartition::from_blocks(
      7, {mark_set({1}), mark_set({2}), mark_set({3, 4}), mark_set({5, 6, 7})});
  CHECK(pair_divisor_curve(BoundaryDivisor(7, mark_set({1, 2})), f) == 1);
  CHECK(pair_divisor_curve(BoundaryDivisor(7, mark_set({3, 4})), f) == -1);
  CHECK(pair_divisor_curve(BoundaryDivisor(7, mark_set({1, 3})), f) == 0);
  // complement invariance
  for (const auto& d : enumerate_boundary_divisors(7))
    CHECK(pair_divisor_curve(d, f) == pair_divisor_curve(BoundaryDivisor(7, d.complement()), f));
}

TEST_CASE("relations annihilate stratum curve classes") {
  std::set<FPartition> classes;
  for (const auto& t : enumerate_dim1_strata(5)) classes.insert(fpartition_of(t));
  for (const auto& rel : all_keel_relations(5))
    for (const auto& f : classes) CHECK(rel.evaluate(f) == Rational(0));
}

TEST_CASE("relation proportionality") {
  const DivRelation a = keel_relation(6, 1, 2, 3, 4);
  DivRelation b = a;
  for (auto& [d, c] : b.lhs) c *= Rational(7, 3);
  for (auto& [d, c] : b.rhs) c *= Rational(7, 3);
  CHECK(a.proportional_to(b));
  const DivRelation c = keel_relation(6, 1, 2, 3, 5);
  CHECK_FALSE(a.proportional_to(c));
}
