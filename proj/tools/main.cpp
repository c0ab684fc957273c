// Command-line driver: boundary calculus on the seven-point moduli space,
// weight reduction to the space of cubic surfaces with a line, cone and
// intersection-ring computations, and the one-shot verification report.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubicones/cubic_spaces.hpp"
#include "cubicones/hassett.hpp"
#include "cubicones/json_io.hpp"
#include "cubicones/linalg.hpp"
#include "cubicones/polyhedra.hpp"
#include "cubicones/stable_graphs.hpp"
#include "cubicones/symmetry.hpp"
#include "cubicones/verification.hpp"

namespace {

using namespace cubicones;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct KeelArgs {
  int n = 7, i = 1, j = 2, k = 3, l = 4;
  std::string group;
  bool quotient = false;
};

int cmd_keel(const KeelArgs& args) {
  const GroupSpec g = resolve_group(args.group, args.n);
  const auto basis = orbit_divisors(args.n, g);
  const DivRelation rel = keel_relation(args.n, args.i, args.j, args.k, args.l);
  const QuotientRelation pushed = pushforward_relation(rel, g, basis);
  std::cout << pushed.to_string() << "\n";
  return kExitOk;
}

int cmd_strata(int n, const std::string& group, bool as_json) {
  const GroupSpec g = resolve_group(group, n);
  const auto orbits = orbit_strata(n, g);
  if (as_json) {
    std::cout << "[";
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << "{\"encoding\":\"" << orbits[i].encoding << "\",\"orbit_size\":"
                << orbits[i].orbit.size() << ",\"partition\":"
                << fpartition_to_json(orbits[i].fclass) << ",\"tree\":"
                << tree_to_json(orbits[i].orbit.front()) << "}";
    }
    std::cout << "]\n";
    return kExitOk;
  }
  for (const auto& qs : orbits)
    std::cout << qs.encoding << "  partition " << qs.fclass.to_string() << "  orbit size "
              << qs.orbit.size() << "\n";
  std::cout << orbits.size() << " stratum orbit(s)\n";
  return kExitOk;
}

int cmd_matrix(const std::string& weights, const std::string& group, bool as_csv, bool as_json) {
  const WeightData w = resolve_weights(weights);
  const GroupSpec g = resolve_group(group.empty() ? "S2xS5" : group, w.n);
  const auto basis = orbit_divisors(w.n, g);
  const auto strata = orbit_strata(w.n, g);
  const PairingMatrix m = build_pairing_matrix(basis, strata, w);
  if (as_csv) {
    std::cout << matrix_to_csv(m);
    return kExitOk;
  }
  if (as_json) {
    std::cout << matrix_to_json(m) << "\n";
    return kExitOk;
  }
  std::cout << "columns (" << m.column_labels.size() << " stratum orbits, * = contracted):\n";
  for (std::size_t c = 0; c < m.column_labels.size(); ++c)
    std::cout << "  [" << c + 1 << "]" << (m.contracted[c] ? "*" : " ") << " "
              << m.column_labels[c] << "\n";
  for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
    std::cout << m.row_labels[r] << ":";
    for (const auto& x : m.entries[r]) std::cout << " " << x.to_string();
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_reduce(const std::string& weights, bool as_json) {
  const WeightData w = resolve_weights(weights);
  const GroupSpec g = resolve_group("S2xS5", w.n);
  const auto basis = orbit_divisors(w.n, g);
  const auto strata = orbit_strata(w.n, g);
  std::vector<std::string> lines;
  std::string json = "[";
  for (const auto& qd : basis) {
    const ReductionImage img = reduce_divisor(qd, w);
    lines.push_back(qd.name + " -> " + to_string(img.kind) +
                    (img.label.empty() ? "" : " " + img.label));
    json += "{\"stratum\":\"" + qd.name + "\",\"image_kind\":\"" + to_string(img.kind) +
            "\",\"image_label\":\"" + img.label + "\"},";
  }
  for (const auto& qs : strata) {
    const ReductionImage img = reduce_stratum(qs.orbit.front(), w);
    lines.push_back(qs.encoding + " -> " + to_string(img.kind));
    json += "{\"stratum\":\"" + qs.encoding + "\",\"image_kind\":\"" + to_string(img.kind) +
            "\",\"image_label\":\"\"},";
  }
  if (json.back() == ',') json.pop_back();
  json += "]";
  if (as_json) {
    std::cout << json << "\n";
  } else {
    for (const auto& l : lines) std::cout << l << "\n";
  }
  return kExitOk;
}

int cmd_pullback(const std::string& target, bool as_json) {
  const WeightData w = WeightData::cubic_line_weights();
  const GroupSpec g = resolve_group("S2xS5", w.n);
  const auto basis = orbit_divisors(w.n, g);
  const auto strata = orbit_strata(w.n, g);
  std::vector<std::string> targets;
  if (target.empty() || target == "all") {
    targets = {"delta2", "delta4", "delta5", "gamma"};
  } else {
    targets = {target};
  }
  std::string json = "[";
  for (const auto& t : targets) {
    const PullbackClass pb = pullback_along_h(t, basis, strata, w);
    if (as_json) {
      json += "{\"target\":\"" + t + "\",\"coefficients\":[";
      for (std::size_t i = 0; i < pb.coefficients.size(); ++i) {
        if (i) json += ",";
        json += "\"" + pb.coefficients[i].to_string() + "\"";
      }
      json += "]},";
    } else {
      std::cout << pb.to_string(basis) << "\n";
    }
  }
  if (as_json) {
    if (json.back() == ',') json.pop_back();
    std::cout << json << "]\n";
  }
  return kExitOk;
}

int cmd_cones(const std::string& space_name, bool nef, bool eff, bool as_json) {
  const SpaceId space = parse_space(space_name);
  const bool show_nef = nef || !eff;
  const ConeV cone = show_nef ? nef_cone(space) : eff_cone(space);
  if (as_json) {
    std::cout << cone_v_to_json(cone) << "\n";
    return kExitOk;
  }
  std::cout << (show_nef ? "nef" : "effective") << " cone of " << to_string(space) << ", "
            << cone.rays.size() << " extremal ray(s):\n";
  for (const auto& r : cone.rays) {
    std::cout << " ";
    for (const auto& x : r) std::cout << " " << x.to_string();
    std::cout << "\n";
  }
  if (show_nef && space == SpaceId::line) {
    std::cout << "facets:\n";
    for (const auto& n : v_to_h(cone).normals) {
      std::cout << " ";
      for (const auto& x : n) std::cout << " " << x.to_string();
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_ring(const std::string& space_name, bool as_json) {
  if (as_json) {
    std::cout << spaces_manifest_json() << "\n";
    return kExitOk;
  }
  std::vector<SpaceId> spaces;
  if (space_name.empty()) {
    spaces = {SpaceId::git, SpaceId::toroidal, SpaceId::kirwan, SpaceId::line, SpaceId::marked};
  } else {
    spaces = {parse_space(space_name)};
  }
  for (const SpaceId space : spaces) {
    const PicLattice lat = standard_lattice(space);
    std::cout << to_string(space) << "  basis (";
    for (std::size_t i = 0; i < lat.basis.size(); ++i)
      std::cout << (i ? ", " : "") << lat.basis[i];
    std::cout << ")\n";
    const bool has_ring = space == SpaceId::toroidal || space == SpaceId::kirwan;
    for (const auto& [name, vec] : lat.classes) {
      std::cout << "  " << name << " = (";
      for (std::size_t i = 0; i < vec.size(); ++i)
        std::cout << (i ? ", " : "") << vec[i].to_string();
      std::cout << ")";
      if (vec.size() == 2 && !vec[1].is_zero())
        std::cout << "  slope " << slope(vec).to_string();
      if (has_ring) std::cout << "  fourth power " << top_intersection(top_ring(space), vec).to_string();
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_volume(const std::string& file, bool normalized) {
  const Polytope p = parse_polytope_json(read_file(file));
  const VolumeResult r = polytope_volume(p, normalized);
  if (r.degenerate) {
    std::cout << "degenerate (not full-dimensional): volume 0\n";
    return kExitOk;
  }
  std::cout << (normalized ? "normalized volume " : "volume ") << r.volume.to_string() << "\n";
  return kExitOk;
}

int cmd_verify(bool as_json) {
  VerificationOptions opts;
  if (const char* path = std::getenv("CUBICONES_PA_VERTICES")) opts.polytope_vertex_file = path;
  const VerificationReport report = run_verification(opts);
  if (as_json) {
    std::cout << report.to_json() << "\n";
  } else {
    for (const auto& c : report.checks) {
      const char* tag = c.status == CheckResult::Status::pass      ? "PASS"
                        : c.status == CheckResult::Status::flagged ? "FLAG"
                                                                   : "FAIL";
      std::cout << "[" << tag << "] " << c.name << ": expected " << c.expected << ", computed "
                << c.computed << "\n";
      if (c.status != CheckResult::Status::pass) std::cout << "       " << c.detail << "\n";
    }
    std::cout << report.checks.size() << " checks, " << report.fail_count() << " failure(s)\n";
  }
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact divisor-cone calculus for moduli of cubic surfaces"};
  app.require_subcommand(1);

  KeelArgs keel_args;
  auto* keel = app.add_subcommand("keel", "boundary relation for a marking quadruple");
  keel->add_option("n", keel_args.n, "number of markings")->required();
  keel->add_option("i", keel_args.i)->required();
  keel->add_option("j", keel_args.j)->required();
  keel->add_option("k", keel_args.k)->required();
  keel->add_option("l", keel_args.l)->required();
  keel->add_option("--group", keel_args.group, "trivial, S5, S2xS5, or a group JSON file");
  keel->add_flag("--quotient", keel_args.quotient, "push to the quotient (implied by --group)");

  int strata_n = 7;
  std::string strata_group;
  bool strata_json = false;
  auto* strata = app.add_subcommand("strata", "one-dimensional boundary stratum orbits");
  strata->add_option("n", strata_n, "number of markings");
  strata->add_option("--group", strata_group);
  strata->add_flag("--json", strata_json);

  std::string matrix_weights, matrix_group;
  bool matrix_csv = false, matrix_json = false;
  auto* matrix = app.add_subcommand("matrix", "divisor/stratum intersection matrix");
  matrix->add_option("--weights", matrix_weights, "weight JSON file (default: line-space weights)");
  matrix->add_option("--group", matrix_group);
  matrix->add_flag("--csv", matrix_csv);
  matrix->add_flag("--json", matrix_json);

  std::string reduce_weights;
  bool reduce_json = false;
  auto* reduce = app.add_subcommand("reduce", "weight-reduction images of divisors and strata");
  reduce->add_option("--weights", reduce_weights);
  reduce->add_flag("--json", reduce_json);

  std::string pullback_target;
  bool pullback_json = false;
  auto* pullback = app.add_subcommand("pullback", "pullbacks of the reduced boundary divisors");
  pullback->add_option("--target", pullback_target, "delta2, delta4, delta5, gamma, or all");
  pullback->add_flag("--json", pullback_json);

  std::string cones_space;
  bool cones_nef = false, cones_eff = false, cones_json = false;
  auto* cones = app.add_subcommand("cones", "nef and effective cones");
  cones->add_option("space", cones_space, "toroidal, line, or marked")->required();
  cones->add_flag("--nef", cones_nef);
  cones->add_flag("--eff", cones_eff);
  cones->add_flag("--json", cones_json);

  std::string ring_space;
  bool ring_json = false;
  auto* ring = app.add_subcommand("ring", "named divisor classes, slopes, fourth powers");
  ring->add_option("space", ring_space, "git, toroidal, kirwan, line, marked");
  ring->add_flag("--json", ring_json, "emit the full spaces manifest");

  std::string volume_file;
  bool volume_normalized = false;
  auto* volume = app.add_subcommand("volume", "exact volume of a rational polytope");
  volume->add_option("file", volume_file, "polytope JSON file")->required();
  volume->add_flag("--normalized", volume_normalized, "multiply by dim!");

  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run the full verification report");
  verify->add_flag("--json", verify_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (keel->parsed()) return cmd_keel(keel_args);
    if (strata->parsed()) return cmd_strata(strata_n, strata_group, strata_json);
    if (matrix->parsed()) return cmd_matrix(matrix_weights, matrix_group, matrix_csv, matrix_json);
    if (reduce->parsed()) return cmd_reduce(reduce_weights, reduce_json);
    if (pullback->parsed()) return cmd_pullback(pullback_target, pullback_json);
    if (cones->parsed()) return cmd_cones(cones_space, cones_nef, cones_eff, cones_json);
    if (ring->parsed()) return cmd_ring(ring_space, ring_json);
    if (volume->parsed()) return cmd_volume(volume_file, volume_normalized);
    if (verify->parsed()) return cmd_verify(verify_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
