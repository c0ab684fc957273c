#include "cubicones/cubic_spaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubicones {

SpaceId parse_space(const std::string& name) {
  if (name == "git") return SpaceId::git;
  if (name == "toroidal") return SpaceId::toroidal;
  if (name == "kirwan") return SpaceId::kirwan;
  if (name == "line") return SpaceId::line;
  if (name == "marked") return SpaceId::marked;
  throw std::invalid_argument("unknown space '" + name + "'");
}

std::string to_string(SpaceId id) {
  switch (id) {
    case SpaceId::git: return "git";
    case SpaceId::toroidal: return "toroidal";
    case SpaceId::kirwan: return "kirwan";
    case SpaceId::line: return "line";
    case SpaceId::marked: return "marked";
  }
  return "?";
}

const QVector& PicLattice::named(const std::string& name) const {
  for (const auto& [label, vec] : classes)
    if (label == name) return vec;
  throw std::invalid_argument("PicLattice: no class named '" + name + "'");
}

bool PicLattice::has(const std::string& name) const {
  for (const auto& [label, vec] : classes)
    if (label == name) return true;
  return false;
}

PicLattice standard_lattice(SpaceId space) {
  PicLattice lat;
  lat.space = space;
  auto q = [](long long a, long long b = 1) { return Rational(a, b); };
  switch (space) {
    case SpaceId::git:
      lat.basis = {"lambda"};
      lat.classes = {
          {"lambda", {q(1)}}, {"O1", {q(6)}},      {"D", {q(24)}},
          {"R", {q(150)}},    {"K", {q(-90)}},
      };
      break;
    case SpaceId::toroidal:
      lat.basis = {"lambda", "T3A2"};
      lat.classes = {
          {"lambda", {q(1), q(0)}},  {"T3A2", {q(0), q(1)}},
          {"TA1", {q(24), q(-6)}},   {"TR", {q(150), q(-24)}},
          {"K", {q(-90), q(16)}},    {"pO1", {q(6), q(0)}},
      };
      break;
    case SpaceId::kirwan:
      lat.basis = {"lambda", "D3A2"};
      lat.classes = {
          {"lambda", {q(1), q(0)}},  {"D3A2", {q(0), q(1)}},
          {"DA1", {q(24), q(-6)}},   {"DR", {q(150), q(-30)}},
          {"K", {q(-90), q(20)}},    {"pO1", {q(6), q(0)}},
      };
      break;
    case SpaceId::line:
      lat.basis = {"delta2", "delta4", "delta5"};
      lat.classes = {
          {"delta2", {q(1), q(0), q(0)}},
          {"delta4", {q(0), q(1), q(0)}},
          {"delta5", {q(0), q(0), q(1)}},
          // 8 gamma = 20 delta2 + 12 delta4 + 2 delta5
          {"gamma", {q(5, 2), q(3, 2), q(1, 4)}},
          // lambda pulled from the toroidal space: 24 lambda pulls to
          // 2 delta2 + 6 delta4 + delta5
          {"lambda", {q(1, 12), q(1, 4), q(1, 24)}},
      };
      break;
    case SpaceId::marked:
      lat.basis = {"TA1m", "T3A2m"};
      lat.classes = {
          {"TA1m", {q(1), q(0)}},   // 36 irreducible components
          {"T3A2m", {q(0), q(1)}},  // 40 irreducible components
      };
      break;
  }
  return lat;
}

CoverMap line_cover() {
  CoverMap c;
  c.source = SpaceId::line;
  c.target = SpaceId::toroidal;
  c.degree = 27;
  auto q = [](long long a, long long b = 1) { return Rational(a, b); };
  // Columns = images of the target basis (lambda, T3A2) in the delta basis.
  c.pull = QMatrix(3, 2);
  c.pull.at(0, 0) = q(1, 12);
  c.pull.at(1, 0) = q(1, 4);
  c.pull.at(2, 0) = q(1, 24);
  c.pull.at(1, 1) = q(1);
  // Columns = images of (delta2, delta4, delta5) over (lambda, T3A2):
  // delta2 -> 6 TA1, delta4 -> 27 T3A2, delta5 -> 15 TA1.
  const PicLattice tor = standard_lattice(SpaceId::toroidal);
  const QVector ta1 = tor.named("TA1");
  c.push = QMatrix(2, 3);
  c.push.at(0, 0) = q(6) * ta1[0];
  c.push.at(1, 0) = q(6) * ta1[1];
  c.push.at(0, 1) = q(0);
  c.push.at(1, 1) = q(27);
  c.push.at(0, 2) = q(15) * ta1[0];
  c.push.at(1, 2) = q(15) * ta1[1];
  return c;
}

QVector line_cover_push_gamma() {
  const PicLattice tor = standard_lattice(SpaceId::toroidal);
  return scale(tor.named("TR"), Rational(3));
}

QVector marked_transport(const QVector& ray) {
  if (ray.size() != 2) throw std::invalid_argument("marked_transport: need (TA1, T3A2) coordinates");
  return primitive({ray[0] * Rational(2), ray[1]});
}

ConeH line_nef_inequalities() {
  ConeH c;
  c.dim = 3;
  auto q = [](long long v) { return Rational(v); };
  // One inequality per non-contracted curve class of the quotient space,
  // coordinates (a, b, c) over (delta2, delta4, delta5).
  c.normals = {
      {q(2), q(-1), q(2)},  // 2a - b + 2c >= 0
      {q(0), q(1), q(-2)},  // b - 2c >= 0
      {q(1), q(0), q(0)},   // a >= 0
      {q(-1), q(1), q(0)},  // b - a >= 0
      {q(0), q(-1), q(6)},  // 6c - b >= 0
      {q(0), q(0), q(1)},   // c >= 0
      {q(0), q(1), q(2)},   // b + 2c >= 0
  };
  return c;
}

ConeV nef_cone(SpaceId space) {
  auto q = [](long long v) { return Rational(v); };
  switch (space) {
    case SpaceId::line:
      return h_to_v(line_nef_inequalities());
    case SpaceId::toroidal: {
      // (a, b) over (TA1, T3A2) is nef iff its pull 2a delta2 + b delta4 +
      // a delta5 satisfies every facet of the line-space nef cone.
      const ConeH facets = v_to_h(nef_cone(SpaceId::line));
      ConeH pulled;
      pulled.dim = 2;
      for (const auto& n : facets.normals)
        pulled.normals.push_back({q(2) * n[0] + n[2], n[1]});
      return h_to_v(pulled);
    }
    case SpaceId::marked: {
      const ConeV tor = nef_cone(SpaceId::toroidal);
      ConeV out;
      out.dim = 2;
      for (const auto& r : tor.rays) out.rays.push_back(marked_transport(r));
      std::sort(out.rays.begin(), out.rays.end());
      return out;
    }
    default:
      throw std::invalid_argument("nef_cone: no cone data for this space");
  }
}

ConeV eff_cone(SpaceId space) {
  auto q = [](long long v) { return Rational(v); };
  ConeV out;
  switch (space) {
    case SpaceId::line:
      out.dim = 3;
      out.rays = {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}};
      break;
    case SpaceId::toroidal:
    case SpaceId::marked:
      out.dim = 2;
      out.rays = {{q(1), q(0)}, {q(0), q(1)}};
      break;
    default:
      throw std::invalid_argument("eff_cone: no cone data for this space");
  }
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

Rational slope(const QVector& cls) {
  if (cls.size() != 2) throw std::invalid_argument("slope: need (lambda, boundary) coordinates");
  if (cls[1].is_zero()) throw std::invalid_argument("slope: boundary coefficient is zero");
  return cls[0] / (-cls[1]);
}

TopRing top_ring(SpaceId space) {
  switch (space) {
    case SpaceId::toroidal:
      return {"lambda", "T3A2", Rational(1, 155520), Rational(-1, 216)};
    case SpaceId::kirwan:
      return {"lambda", "D3A2", Rational(1, 155520), Rational(-1, 504)};
    default:
      throw std::invalid_argument("top_ring: only the toroidal and kirwan rings are stored");
  }
}

Rational top_intersection(const TopRing& ring, const QVector& xy) {
  if (xy.size() != 2) throw std::invalid_argument("top_intersection: need 2 coordinates");
  const Rational x4 = xy[0] * xy[0] * xy[0] * xy[0];
  const Rational y4 = xy[1] * xy[1] * xy[1] * xy[1];
  return x4 * ring.a4 + y4 * ring.b4;
}

Rational exceptional_fourth_power(const Rational& vol, const Rational& projective_scale,
                                  int quotient_order) {
  if (vol.sign() <= 0) throw std::invalid_argument("exceptional_fourth_power: volume must be positive");
  if (projective_scale.is_zero())
    throw std::invalid_argument("exceptional_fourth_power: zero projective scale");
  if (quotient_order < 1)
    throw std::invalid_argument("exceptional_fourth_power: quotient order must be >= 1");
  const Rational s = Rational(-1) / projective_scale;
  return Rational(1, quotient_order) * s * s * s * (Rational(6) * vol);
}

KirwanCanonicalComparison kirwan_canonical_comparison() {
  const PicLattice k = standard_lattice(SpaceId::kirwan);
  KirwanCanonicalComparison cmp;
  cmp.adopted = k.named("K");
  // 5 lambda - (5/6) DA1 - (1/2) DR + 40 D3A2, expanded over (lambda, D3A2).
  QVector alt = scale(k.named("lambda"), Rational(5));
  alt = sub(alt, scale(k.named("DA1"), Rational(5, 6)));
  alt = sub(alt, scale(k.named("DR"), Rational(1, 2)));
  alt = add(alt, scale(k.named("D3A2"), Rational(40)));
  cmp.alternative = alt;
  return cmp;
}

}  // namespace cubicones
