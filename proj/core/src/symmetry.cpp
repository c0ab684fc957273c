#include "cubicones/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cubicones/linalg.hpp"

namespace cubicones {

namespace {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm compose(const Perm& f, const Perm& g) {  // (f*g)(x) = f(g(x))
  Perm out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i] - 1];
  return out;
}

void validate_perm(int n, const Perm& p) {
  if (static_cast<int>(p.size()) != n) throw std::invalid_argument("GroupSpec: bad permutation size");
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("GroupSpec: not a permutation");
    seen[v - 1] = true;
  }
}

}  // namespace

GroupSpec::GroupSpec(int n, std::vector<Perm> elements) : n_(n), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

GroupSpec GroupSpec::trivial(int n) { return GroupSpec(n, {identity_perm(n)}); }

GroupSpec GroupSpec::young(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<bool> used(n, false);
  for (const auto& b : blocks)
    for (int m : b) {
      if (m < 1 || m > n || used[m - 1]) throw std::invalid_argument("GroupSpec::young: bad blocks");
      used[m - 1] = true;
    }
  std::vector<Perm> elements{identity_perm(n)};
  for (const auto& block : blocks) {
    std::vector<int> order(block);
    std::sort(order.begin(), order.end());
    std::vector<Perm> expanded;
    do {
      Perm p = identity_perm(n);
      for (std::size_t i = 0; i < block.size(); ++i) {
        std::vector<int> sorted_block(block);
        std::sort(sorted_block.begin(), sorted_block.end());
        p[sorted_block[i] - 1] = order[i];
      }
      for (const auto& e : elements) expanded.push_back(compose(p, e));
    } while (std::next_permutation(order.begin(), order.end()));
    elements = std::move(expanded);
  }
  return GroupSpec(n, std::move(elements));
}

GroupSpec GroupSpec::from_generators(int n, const std::vector<Perm>& gens) {
  for (const auto& g : gens) validate_perm(n, g);
  std::set<Perm> closure{identity_perm(n)};
  std::vector<Perm> frontier{identity_perm(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Perm p = compose(g, e);
        if (closure.insert(p).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
    if (closure.size() > 2'000'000) throw std::runtime_error("GroupSpec: group too large");
  }
  return GroupSpec(n, std::vector<Perm>(closure.begin(), closure.end()));
}

bool GroupSpec::contains_transposition(int a, int b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_ || a == b) return false;
  Perm t = identity_perm(n_);
  std::swap(t[a - 1], t[b - 1]);
  return std::binary_search(elements_.begin(), elements_.end(), t);
}

MarkSet GroupSpec::apply(const Perm& g, MarkSet s) const {
  MarkSet out = 0;
  for (int m : marks_of(s)) out |= MarkSet{1} << (g[m - 1] - 1);
  return out;
}

int generic_automorphism_order(const BoundaryDivisor& d, const GroupSpec& g) {
  for (MarkSet side : {d.side(), d.complement()}) {
    if (mark_count(side) != 2) continue;
    const auto ms = marks_of(side);
    if (g.contains_transposition(ms[0], ms[1])) return 2;
  }
  return 1;
}

namespace {

enum class PaperGroup { Trivial, TailSymmetric, LightSwapTailSymmetric, Other };

// Recognize the two quotient configurations used throughout: the symmetric
// group on the markings {3..n} (points 1 and 2 fixed), optionally extended by
// the swap of 1 and 2.
PaperGroup classify_group(const GroupSpec& g) {
  const int n = g.n();
  if (g.elements().size() == 1) return PaperGroup::Trivial;
  if (n < 4) return PaperGroup::Other;
  std::vector<int> tail;
  for (int m = 3; m <= n; ++m) tail.push_back(m);
  if (g.elements() == GroupSpec::young(n, {tail}).elements()) return PaperGroup::TailSymmetric;
  if (g.elements() == GroupSpec::young(n, {{1, 2}, tail}).elements())
    return PaperGroup::LightSwapTailSymmetric;
  return PaperGroup::Other;
}

std::string join_marks(MarkSet s) {
  std::string out;
  bool wide = false;
  const auto ms = marks_of(s);
  for (int m : ms) wide |= m > 9;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i && wide) out += ',';
    out += std::to_string(ms[i]);
  }
  return out;
}

std::string orbit_name(const BoundaryDivisor& rep, PaperGroup kind) {
  const int n = rep.n();
  const MarkSet lights = mark_set({1, 2});
  const MarkSet side = rep.side();
  const int in_side = mark_count(side & lights);
  const int size = mark_count(side);
  switch (kind) {
    case PaperGroup::TailSymmetric:
      if (in_side == 2) return "D12_" + std::to_string(size);
      return "D1_" + std::to_string(size);
    case PaperGroup::LightSwapTailSymmetric:
      if (in_side == 2) return "Doo_" + std::to_string(size);
      return "Do_" + std::to_string(std::min(size, n - size));
    default:
      return "D_" + join_marks(side);
  }
}

}  // namespace

std::vector<QuotientDivisor> orbit_divisors(int n, const GroupSpec& g) {
  if (g.n() != n) throw std::invalid_argument("orbit_divisors: group is on a different marking set");
  const auto divisors = enumerate_boundary_divisors(n);
  const PaperGroup kind = classify_group(g);
  std::set<BoundaryDivisor> unseen(divisors.begin(), divisors.end());
  std::vector<QuotientDivisor> out;
  for (const auto& d : divisors) {
    if (!unseen.count(d)) continue;
    QuotientDivisor q;
    std::set<BoundaryDivisor> orbit;
    for (const auto& e : g.elements()) orbit.insert(BoundaryDivisor(n, g.apply(e, d.side())));
    for (const auto& x : orbit) unseen.erase(x);
    q.orbit.assign(orbit.begin(), orbit.end());
    q.stacky_order = generic_automorphism_order(q.orbit.front(), g);
    q.name = orbit_name(q.orbit.front(), kind);
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), [](const QuotientDivisor& a, const QuotientDivisor& b) {
    return a.representative().side_marks() < b.representative().side_marks();
  });
  return out;
}

std::vector<Rational> QuotientRelation::signed_coefficients() const {
  std::vector<Rational> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = lhs[i] - rhs[i];
  return out;
}

std::string QuotientRelation::to_string() const {
  auto side = [&](const std::vector<Rational>& coeffs) {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += coeffs[i].to_string() + " " + labels[i];
    }
    return s.empty() ? std::string("0") : s;
  };
  return side(lhs) + " = " + side(rhs);
}

namespace {

// Degree of the quotient map restricted to the divisor: the number of group
// elements stabilizing the divisor label, divided by the order of the
// subgroup acting trivially on a generic point (swaps of a two-element side).
long push_degree(const BoundaryDivisor& d, const GroupSpec& g) {
  const MarkSet side = d.side(), comp = d.complement();
  long stab = 0, trivial = 0;
  for (const auto& e : g.elements()) {
    const MarkSet image = g.apply(e, side);
    if (image != side && image != comp) continue;
    ++stab;
    if (image != side) continue;
    bool acts_trivially = true;
    for (MarkSet s : {side, comp}) {
      if (mark_count(s) == 2) continue;  // a swap there is a generic automorphism
      for (int m : marks_of(s))
        if (e[m - 1] != m) {
          acts_trivially = false;
          break;
        }
      if (!acts_trivially) break;
    }
    if (acts_trivially) ++trivial;
  }
  if (stab % trivial != 0) throw std::logic_error("push_degree: stabilizer not divisible");
  return stab / trivial;
}

std::map<MarkSet, std::size_t> orbit_index_by_side(const std::vector<QuotientDivisor>& basis) {
  std::map<MarkSet, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& d : basis[i].orbit) index[d.side()] = i;
  return index;
}

void accumulate_pushforward(const std::map<BoundaryDivisor, Rational>& terms,
                            const GroupSpec& g,
                            const std::map<MarkSet, std::size_t>& index,
                            std::vector<Rational>& acc) {
  for (const auto& [d, c] : terms) {
    const auto it = index.find(d.side());
    if (it == index.end()) throw std::invalid_argument("pushforward: divisor not in basis");
    acc[it->second] += c * Rational(push_degree(d, g));
  }
}

}  // namespace

QuotientRelation pushforward_relation(const DivRelation& rel, const GroupSpec& g,
                                      const std::vector<QuotientDivisor>& basis) {
  if (rel.n != g.n()) throw std::invalid_argument("pushforward_relation: marking count mismatch");
  const auto index = orbit_index_by_side(basis);
  QuotientRelation out;
  out.labels.reserve(basis.size());
  for (const auto& q : basis) out.labels.push_back(q.name);
  out.lhs.assign(basis.size(), Rational(0));
  out.rhs.assign(basis.size(), Rational(0));
  accumulate_pushforward(rel.lhs, g, index, out.lhs);
  accumulate_pushforward(rel.rhs, g, index, out.rhs);
  // Primitive integer scaling across both sides at once.
  QVector joint(out.lhs);
  joint.insert(joint.end(), out.rhs.begin(), out.rhs.end());
  const QVector prim = primitive(joint);
  Rational factor(1);
  for (std::size_t i = 0; i < joint.size(); ++i)
    if (!joint[i].is_zero()) {
      factor = prim[i] / joint[i];
      break;
    }
  for (auto& x : out.lhs) x *= factor;
  for (auto& x : out.rhs) x *= factor;
  return out;
}

std::vector<QuotientStratum> orbit_strata(int n, const GroupSpec& g) {
  if (g.n() != n) throw std::invalid_argument("orbit_strata: group is on a different marking set");
  const auto strata = enumerate_dim1_strata(n);
  std::map<std::string, std::size_t> by_encoding;
  for (std::size_t i = 0; i < strata.size(); ++i)
    by_encoding.emplace(strata[i].canonical_encoding(), i);
  std::set<std::string> unseen;
  for (const auto& [enc, idx] : by_encoding) unseen.insert(enc);
  std::vector<QuotientStratum> out;
  for (const auto& t : strata) {
    const std::string enc = t.canonical_encoding();
    if (!unseen.count(enc)) continue;
    std::set<std::string> orbit_encodings;
    for (const auto& e : g.elements()) orbit_encodings.insert(t.relabeled(e).canonical_encoding());
    QuotientStratum qs;
    for (const auto& oe : orbit_encodings) {
      unseen.erase(oe);
      qs.orbit.push_back(strata[by_encoding.at(oe)]);
    }
    qs.encoding = *orbit_encodings.begin();
    qs.fclass = fpartition_of(qs.orbit.front());
    out.push_back(std::move(qs));
  }
  std::sort(out.begin(), out.end(), [](const QuotientStratum& a, const QuotientStratum& b) {
    return a.encoding < b.encoding;
  });
  return out;
}

Rational quotient_pairing(const QuotientDivisor& qd, const QuotientStratum& qs) {
  Rational sum;
  for (const auto& d : qd.orbit) sum += Rational(pair_divisor_curve(d, qs.fclass));
  return Rational(qd.stacky_order) * sum;
}

std::size_t pushed_relation_rank(int n, const GroupSpec& g,
                                 const std::vector<QuotientDivisor>& basis) {
  const auto index = orbit_index_by_side(basis);
  std::vector<QVector> rows;
  for (const auto& rel : all_keel_relations(n)) {
    QVector acc(basis.size());
    accumulate_pushforward(rel.lhs, g, index, acc);
    std::vector<Rational> neg(basis.size());
    accumulate_pushforward(rel.rhs, g, index, neg);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= neg[i];
    if (!is_zero_vector(acc)) rows.push_back(std::move(acc));
  }
  if (rows.empty()) return 0;
  return rank(QMatrix(rows));
}

std::size_t picard_rank(int n, const GroupSpec& g) {
  const auto basis = orbit_divisors(n, g);
  return basis.size() - pushed_relation_rank(n, g, basis);
}

}  // namespace cubicones
