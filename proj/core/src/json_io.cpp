#include "cubicones/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cubicones {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
  return j;
}

QVector parse_qvector(const json& arr) {
  QVector v;
  for (const auto& x : arr) v.push_back(Rational::parse(x.get<std::string>()));
  return v;
}

json qvector_to_json(const QVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.to_string());
  return arr;
}

std::vector<QVector> parse_vector_list(const json& j, const char* key, int dim) {
  std::vector<QVector> out;
  if (!j.contains(key)) return out;
  for (const auto& row : j.at(key)) {
    QVector v = parse_qvector(row);
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument(std::string("cone JSON: entry size differs from dim in ") + key);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupSpec parse_group_json(const std::string& text) {
  const json j = parse(text);
  const int n = j.at("n").get<int>();
  if (j.contains("young")) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j.at("young")) blocks.push_back(b.get<std::vector<int>>());
    return GroupSpec::young(n, blocks);
  }
  if (j.contains("gens")) {
    std::vector<Perm> gens;
    for (const auto& cycles : j.at("gens")) {
      Perm p(n);
      for (int i = 0; i < n; ++i) p[i] = i + 1;
      for (const auto& cyc : cycles) {
        const auto marks = cyc.get<std::vector<int>>();
        for (std::size_t i = 0; i < marks.size(); ++i) {
          const int from = marks[i], to = marks[(i + 1) % marks.size()];
          if (from < 1 || from > n) throw std::invalid_argument("group JSON: marking out of range");
          p[from - 1] = to;
        }
      }
      gens.push_back(std::move(p));
    }
    return GroupSpec::from_generators(n, gens);
  }
  return GroupSpec::trivial(n);
}

GroupSpec resolve_group(const std::string& name_or_path, int n) {
  if (name_or_path.empty() || name_or_path == "trivial") return GroupSpec::trivial(n);
  if (name_or_path == "S5") {
    std::vector<int> tail;
    for (int m = 3; m <= n; ++m) tail.push_back(m);
    return GroupSpec::young(n, {tail});
  }
  if (name_or_path == "S2xS5") {
    std::vector<int> tail;
    for (int m = 3; m <= n; ++m) tail.push_back(m);
    return GroupSpec::young(n, {{1, 2}, tail});
  }
  return parse_group_json(read_file(name_or_path));
}

WeightData parse_weights_json(const std::string& text) {
  const json j = parse(text);
  std::vector<EpsRational> weights;
  for (const auto& w : j.at("weights")) {
    EpsRational x;
    x.std_part = Rational::parse(w.at("std").get<std::string>());
    if (w.contains("eps")) x.eps_part = Rational::parse(w.at("eps").get<std::string>());
    weights.push_back(x);
  }
  const int n = static_cast<int>(weights.size());
  return WeightData(n, std::move(weights));
}

WeightData resolve_weights(const std::string& path_or_empty) {
  if (path_or_empty.empty()) return WeightData::cubic_line_weights();
  return parse_weights_json(read_file(path_or_empty));
}

ConeH parse_cone_h_json(const std::string& text) {
  const json j = parse(text);
  ConeH c;
  c.dim = j.at("dim").get<int>();
  c.normals = parse_vector_list(j, "normals", c.dim);
  return c;
}

ConeV parse_cone_v_json(const std::string& text) {
  const json j = parse(text);
  ConeV c;
  c.dim = j.at("dim").get<int>();
  c.rays = parse_vector_list(j, "rays", c.dim);
  c.lineality = parse_vector_list(j, "lineality", c.dim);
  return c;
}

Polytope parse_polytope_json(const std::string& text) {
  const json j = parse(text);
  Polytope p;
  p.dim = j.at("dim").get<int>();
  for (const auto& row : j.at("vertices")) {
    QVector v = parse_qvector(row);
    if (static_cast<int>(v.size()) != p.dim)
      throw std::invalid_argument("polytope JSON: vertex size differs from dim");
    p.vertices.push_back(std::move(v));
  }
  return p;
}

std::string cone_h_to_json(const ConeH& c) {
  json j;
  j["dim"] = c.dim;
  j["normals"] = json::array();
  for (const auto& n : c.normals) j["normals"].push_back(qvector_to_json(n));
  return j.dump();
}

std::string cone_v_to_json(const ConeV& c) {
  json j;
  j["dim"] = c.dim;
  j["rays"] = json::array();
  for (const auto& r : c.rays) j["rays"].push_back(qvector_to_json(r));
  if (!c.lineality.empty()) {
    j["lineality"] = json::array();
    for (const auto& l : c.lineality) j["lineality"].push_back(qvector_to_json(l));
  }
  return j.dump();
}

std::string divisor_to_json(const BoundaryDivisor& d) {
  return json(d.side_marks()).dump();
}

namespace {

json branch_json(const StableTree& t, int v, int parent) {
  json arr = json::array();
  for (int m : marks_of(t.legs[v])) arr.push_back(m);
  for (const auto& [a, b] : t.edges) {
    if (a == v && b != parent) arr.push_back(branch_json(t, b, v));
    if (b == v && a != parent) arr.push_back(branch_json(t, a, v));
  }
  return arr;
}

}  // namespace

std::string tree_to_json(const StableTree& t) {
  return branch_json(t, t.four_valent_vertex(), -1).dump();
}

std::string fpartition_to_json(const FPartition& f) {
  json arr = json::array();
  for (MarkSet b : f.blocks) arr.push_back(marks_of(b));
  return arr.dump();
}

std::string spaces_manifest_json() {
  json j;
  for (SpaceId space : {SpaceId::git, SpaceId::toroidal, SpaceId::kirwan, SpaceId::line,
                        SpaceId::marked}) {
    const PicLattice lat = standard_lattice(space);
    json entry;
    entry["basis"] = lat.basis;
    for (const auto& [name, vec] : lat.classes) entry["classes"][name] = qvector_to_json(vec);
    j[to_string(space)] = entry;
  }
  return j.dump(2);
}

PairingMatrix build_pairing_matrix(const std::vector<QuotientDivisor>& basis,
                                   const std::vector<QuotientStratum>& strata,
                                   const WeightData& w) {
  PairingMatrix m;
  for (const auto& q : basis) m.row_labels.push_back(q.name);
  for (const auto& s : strata) m.column_labels.push_back(s.encoding);
  const auto contracted = contracted_strata(strata, w);
  m.contracted.assign(strata.size(), false);
  for (std::size_t i : contracted) m.contracted[i] = true;
  m.entries.resize(basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (const auto& s : strata) m.entries[r].push_back(quotient_pairing(basis[r], s));
  return m;
}

std::string matrix_to_csv(const PairingMatrix& m) {
  std::ostringstream out;
  out << "divisor";
  for (const auto& c : m.column_labels) out << ',' << '"' << c << '"';
  out << '\n' << "contracted";
  for (bool c : m.contracted) out << ',' << (c ? 1 : 0);
  out << '\n';
  for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
    out << m.row_labels[r];
    for (const auto& x : m.entries[r]) out << ',' << x.to_string();
    out << '\n';
  }
  return out.str();
}

PairingMatrix parse_matrix_csv(const std::string& text) {
  PairingMatrix m;
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (char ch : s) {
      if (ch == '"') {
        quoted = !quoted;
      } else if (ch == ',' && !quoted) {
        cells.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    cells.push_back(cur);
    return cells;
  };
  if (!std::getline(in, line)) throw std::invalid_argument("matrix CSV: empty input");
  auto header = split(line);
  m.column_labels.assign(header.begin() + 1, header.end());
  if (!std::getline(in, line)) throw std::invalid_argument("matrix CSV: missing contracted row");
  auto flags = split(line);
  for (std::size_t i = 1; i < flags.size(); ++i) m.contracted.push_back(flags[i] == "1");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    m.row_labels.push_back(cells.front());
    std::vector<Rational> row;
    for (std::size_t i = 1; i < cells.size(); ++i) row.push_back(Rational::parse(cells[i]));
    m.entries.push_back(std::move(row));
  }
  return m;
}

std::string matrix_to_json(const PairingMatrix& m) {
  json j;
  j["rows"] = m.row_labels;
  j["columns"] = m.column_labels;
  j["contracted"] = m.contracted;
  j["entries"] = json::array();
  for (const auto& row : m.entries) j["entries"].push_back(qvector_to_json(row));
  return j.dump();
}

}  // namespace cubicones
