#include "cubicones/stable_graphs.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "cubicones/linalg.hpp"

namespace cubicones {

MarkSet full_mark_set(int n) { return (MarkSet{1} << n) - 1; }

std::vector<int> marks_of(MarkSet s) {
  std::vector<int> out;
  for (int m = 1; s != 0; ++m, s >>= 1)
    if (s & 1u) out.push_back(m);
  return out;
}

MarkSet mark_set(const std::vector<int>& marks) {
  MarkSet s = 0;
  for (int m : marks) {
    if (m < 1 || m > 31) throw std::invalid_argument("mark_set: marking out of range");
    s |= MarkSet{1} << (m - 1);
  }
  return s;
}

int mark_count(MarkSet s) { return std::popcount(s); }

BoundaryDivisor::BoundaryDivisor(int n, MarkSet side) : n_(n), side_(side) {
  if (n < 4) throw std::invalid_argument("BoundaryDivisor: need n >= 4");
  const MarkSet full = full_mark_set(n);
  if ((side & ~full) != 0) throw std::invalid_argument("BoundaryDivisor: side not in {1..n}");
  if (!(side & 1u)) side_ = full & ~side;  // representative side contains marking 1
  const int k = mark_count(side_);
  if (k < 2 || k > n - 2)
    throw std::invalid_argument("BoundaryDivisor: side size must be in [2, n-2]");
}

std::vector<BoundaryDivisor> enumerate_boundary_divisors(int n) {
  if (n < 4) throw std::invalid_argument("enumerate_boundary_divisors: need n >= 4");
  std::vector<BoundaryDivisor> out;
  const MarkSet rest = full_mark_set(n) & ~MarkSet{1};
  // Canonical sides are {1} together with a nonempty subset of the others.
  for (MarkSet sub = rest; sub != 0; sub = (sub - 1) & rest) {
    const MarkSet side = sub | 1u;
    const int k = mark_count(side);
    if (k >= 2 && k <= n - 2) out.emplace_back(n, side);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FPartition FPartition::from_blocks(int n, std::array<MarkSet, 4> blocks) {
  MarkSet seen = 0;
  for (MarkSet b : blocks) {
    if (b == 0) throw std::invalid_argument("FPartition: empty block");
    if (seen & b) throw std::invalid_argument("FPartition: blocks not disjoint");
    seen |= b;
  }
  if (seen != full_mark_set(n)) throw std::invalid_argument("FPartition: blocks must cover {1..n}");
  std::sort(blocks.begin(), blocks.end(), [](MarkSet a, MarkSet b) {
    const int sa = mark_count(a), sb = mark_count(b);
    if (sa != sb) return sa < sb;
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return FPartition{n, blocks};
}

std::string FPartition::to_string() const {
  std::string s = "{";
  for (int i = 0; i < 4; ++i) {
    if (i) s += '|';
    const auto ms = marks_of(blocks[i]);
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(ms[j]);
    }
  }
  s += '}';
  return s;
}

int StableTree::valence(int v) const {
  int val = mark_count(legs[v]);
  for (const auto& [a, b] : edges) val += (a == v) + (b == v);
  return val;
}

int StableTree::moduli_dim() const {
  int d = 0;
  for (int v = 0; v < vertex_count(); ++v) d += valence(v) - 3;
  return d;
}

bool StableTree::is_stable() const {
  const int k = vertex_count();
  if (k == 0 || static_cast<int>(edges.size()) != k - 1) return false;
  std::vector<int> comp(k, -1);
  std::function<void(int)> visit = [&](int v) {
    comp[v] = 0;
    for (const auto& [a, b] : edges) {
      if (a == v && comp[b] < 0) visit(b);
      if (b == v && comp[a] < 0) visit(a);
    }
  };
  visit(0);
  for (int v = 0; v < k; ++v)
    if (comp[v] < 0 || valence(v) < 3) return false;
  MarkSet all = 0;
  for (MarkSet l : legs) {
    if (all & l) return false;
    all |= l;
  }
  return all == full_mark_set(n);
}

int StableTree::four_valent_vertex() const {
  int found = -1;
  for (int v = 0; v < vertex_count(); ++v) {
    const int val = valence(v);
    if (val == 4) {
      if (found >= 0) throw std::invalid_argument("StableTree: two 4-valent vertices");
      found = v;
    } else if (val != 3) {
      throw std::invalid_argument("StableTree: vertex valence not in {3,4}");
    }
  }
  if (found < 0) throw std::invalid_argument("StableTree: no 4-valent vertex");
  return found;
}

StableTree StableTree::relabeled(const std::vector<int>& perm) const {
  StableTree out = *this;
  for (auto& l : out.legs) {
    MarkSet nl = 0;
    for (int m : marks_of(l)) nl |= MarkSet{1} << (perm[m - 1] - 1);
    l = nl;
  }
  return out;
}

namespace {

// Encoding of the subtree hanging below `v` (coming from `parent`): a bare
// marking prints as its number, an internal vertex as the sorted list of its
// child encodings in parentheses. Leg entries sort before subtree entries.
std::string encode_branch(const StableTree& t, int v, int parent) {
  std::vector<int> leg_marks = marks_of(t.legs[v]);
  std::vector<std::string> subs;
  for (const auto& [a, b] : t.edges) {
    int w = -1;
    if (a == v && b != parent) w = b;
    if (b == v && a != parent) w = a;
    if (w >= 0) subs.push_back(encode_branch(t, w, v));
  }
  std::sort(leg_marks.begin(), leg_marks.end());
  std::sort(subs.begin(), subs.end());
  std::string s = "(";
  bool first = true;
  for (int m : leg_marks) {
    if (!first) s += ',';
    s += std::to_string(m);
    first = false;
  }
  for (const auto& sub : subs) {
    if (!first) s += ',';
    s += sub;
    first = false;
  }
  s += ')';
  return s;
}

}  // namespace

std::string StableTree::canonical_encoding() const {
  return encode_branch(*this, four_valent_vertex(), -1);
}

namespace {

// All shapes of a branch on marking set `s`: a single marking is a bare leg,
// larger sets get a 3-valent root vertex splitting the set in two. The
// callback receives, for multi-mark branches, the local tree (vertex 0 = the
// branch root) to be grafted onto the central vertex.
struct BranchShape {
  std::vector<MarkSet> legs;
  std::vector<std::pair<int, int>> edges;
};

void branch_shapes(MarkSet s, std::vector<BranchShape>& out) {
  if (mark_count(s) <= 1) throw std::logic_error("branch_shapes: need >= 2 marks");
  if (mark_count(s) == 2) {
    out.push_back({{s}, {}});
    return;
  }
  // Unordered splits {A, B}: fix the lowest marking in A.
  const MarkSet low = s & (~s + 1);
  const MarkSet rest = s & ~low;
  for (MarkSet sub = rest;; sub = (sub - 1) & rest) {
    const MarkSet a = low | sub;
    const MarkSet b = s & ~a;
    if (b != 0) {
      std::vector<BranchShape> lefts, rights;
      if (mark_count(a) == 1) {
        lefts.push_back({{}, {}});
      } else {
        branch_shapes(a, lefts);
      }
      if (mark_count(b) == 1) {
        rights.push_back({{}, {}});
      } else {
        branch_shapes(b, rights);
      }
      for (const auto& l : lefts)
        for (const auto& r : rights) {
          BranchShape shape;
          shape.legs.push_back(0);  // root vertex
          auto graft = [&shape](const BranchShape& side, MarkSet side_marks) {
            if (side.legs.empty()) {
              shape.legs[0] |= side_marks;  // single marking: bare leg on root
              return;
            }
            const int off = static_cast<int>(shape.legs.size());
            for (MarkSet lg : side.legs) shape.legs.push_back(lg);
            for (auto [x, y] : side.edges) shape.edges.emplace_back(x + off, y + off);
            shape.edges.emplace_back(0, off);
          };
          graft(l, a);
          graft(r, b);
          out.push_back(std::move(shape));
        }
    }
    if (sub == 0) break;
  }
}

// Partitions of `s` into exactly `k` nonempty unordered blocks; the block
// containing the lowest remaining marking is chosen first to avoid repeats.
void partitions_into(MarkSet s, int k, std::array<MarkSet, 4>& acc, int depth,
                     const std::function<void(const std::array<MarkSet, 4>&)>& emit) {
  if (k == 1) {
    acc[depth] = s;
    emit(acc);
    return;
  }
  const MarkSet low = s & (~s + 1);
  const MarkSet rest = s & ~low;
  for (MarkSet sub = rest;; sub = (sub - 1) & rest) {
    const MarkSet block = low | sub;
    const MarkSet remaining = s & ~block;
    if (mark_count(remaining) >= k - 1) {
      acc[depth] = block;
      partitions_into(remaining, k - 1, acc, depth + 1, emit);
    }
    if (sub == 0) break;
  }
}

}  // namespace

std::vector<StableTree> enumerate_dim1_strata(int n) {
  if (n < 4) throw std::invalid_argument("enumerate_dim1_strata: need n >= 4");
  std::vector<StableTree> out;
  if (n == 4) return out;  // the only candidate is the whole space, not a stratum
  std::array<MarkSet, 4> acc{};
  partitions_into(full_mark_set(n), 4, acc, 0, [&](const std::array<MarkSet, 4>& blocks) {
    // Build every tree with central 4-valent vertex 0 and one branch per block.
    std::vector<std::vector<BranchShape>> options(4);
    for (int i = 0; i < 4; ++i) {
      if (mark_count(blocks[i]) == 1) {
        options[i].push_back({{}, {}});  // bare leg
      } else {
        branch_shapes(blocks[i], options[i]);
      }
    }
    std::array<std::size_t, 4> idx{};
    while (true) {
      StableTree t;
      t.n = n;
      t.legs.push_back(0);  // central vertex
      for (int i = 0; i < 4; ++i) {
        const BranchShape& shape = options[i][idx[i]];
        if (shape.legs.empty()) {
          t.legs[0] |= blocks[i];
        } else {
          const int off = t.vertex_count();
          for (MarkSet lg : shape.legs) t.legs.push_back(lg);
          for (auto [x, y] : shape.edges) t.edges.emplace_back(x + off, y + off);
          t.edges.emplace_back(0, off);
        }
      }
      out.push_back(std::move(t));
      int pos = 3;
      while (pos >= 0 && ++idx[pos] == options[pos].size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  });
  std::sort(out.begin(), out.end(), [](const StableTree& a, const StableTree& b) {
    return a.canonical_encoding() < b.canonical_encoding();
  });
  return out;
}

FPartition fpartition_of(const StableTree& t) {
  const int center = t.four_valent_vertex();
  std::array<MarkSet, 4> blocks{};
  int filled = 0;
  // Each leg on the center is its own block.
  for (int m : marks_of(t.legs[center])) blocks[filled++] = MarkSet{1} << (m - 1);
  // Each edge at the center contributes the markings beyond it.
  std::function<MarkSet(int, int)> collect = [&](int v, int parent) {
    MarkSet s = t.legs[v];
    for (const auto& [a, b] : t.edges) {
      if (a == v && b != parent) s |= collect(b, v);
      if (b == v && a != parent) s |= collect(a, v);
    }
    return s;
  };
  for (const auto& [a, b] : t.edges) {
    if (a == center) blocks[filled++] = collect(b, a);
    if (b == center) blocks[filled++] = collect(a, b);
  }
  if (filled != 4) throw std::logic_error("fpartition_of: center valence != 4");
  return FPartition::from_blocks(t.n, blocks);
}

int pair_divisor_curve(const BoundaryDivisor& d, const FPartition& f) {
  if (d.n() != f.n) throw std::invalid_argument("pair_divisor_curve: marking count mismatch");
  const MarkSet side = d.side(), comp = d.complement();
  for (int i = 0; i < 4; ++i)
    if (side == f.blocks[i] || comp == f.blocks[i]) return -1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const MarkSet u = f.blocks[i] | f.blocks[j];
      if (side == u || comp == u) return 1;
    }
  return 0;
}

std::vector<Rational> DivRelation::signed_coefficients() const {
  const auto divisors = enumerate_boundary_divisors(n);
  std::vector<Rational> out(divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (auto it = lhs.find(divisors[i]); it != lhs.end()) out[i] += it->second;
    if (auto it = rhs.find(divisors[i]); it != rhs.end()) out[i] -= it->second;
  }
  return out;
}

bool DivRelation::proportional_to(const DivRelation& other) const {
  if (n != other.n) return false;
  return positively_proportional(signed_coefficients(), other.signed_coefficients());
}

Rational DivRelation::evaluate(const FPartition& f) const {
  Rational s;
  for (const auto& [d, c] : lhs) s += c * Rational(pair_divisor_curve(d, f));
  for (const auto& [d, c] : rhs) s -= c * Rational(pair_divisor_curve(d, f));
  return s;
}

DivRelation keel_relation(int n, int i, int j, int k, int l) {
  if (n < 4) throw std::invalid_argument("keel_relation: need n >= 4");
  const int marks[4] = {i, j, k, l};
  MarkSet used = 0;
  for (int m : marks) {
    if (m < 1 || m > n) throw std::invalid_argument("keel_relation: marking out of range");
    const MarkSet bit = MarkSet{1} << (m - 1);
    if (used & bit) throw std::invalid_argument("keel_relation: repeated marking");
    used |= bit;
  }
  DivRelation rel;
  rel.n = n;
  const MarkSet bi = MarkSet{1} << (i - 1), bj = MarkSet{1} << (j - 1);
  const MarkSet bk = MarkSet{1} << (k - 1), bl = MarkSet{1} << (l - 1);
  const MarkSet rest = full_mark_set(n) & ~(bi | bj | bk | bl);
  for (MarkSet sub = rest;; sub = (sub - 1) & rest) {
    rel.lhs[BoundaryDivisor(n, bi | bj | sub)] += 1;
    rel.rhs[BoundaryDivisor(n, bi | bk | sub)] += 1;
    if (sub == 0) break;
  }
  return rel;
}

std::vector<DivRelation> all_keel_relations(int n) {
  std::vector<DivRelation> rels;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          rels.push_back(keel_relation(n, a, b, c, d));
          rels.push_back(keel_relation(n, a, c, b, d));
          rels.push_back(keel_relation(n, a, d, b, c));
        }
  return rels;
}

}  // namespace cubicones
