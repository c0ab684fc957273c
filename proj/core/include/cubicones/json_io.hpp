#ifndef CUBICONES_JSON_IO_HPP
#define CUBICONES_JSON_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cubicones/cubic_spaces.hpp"
#include "cubicones/hassett.hpp"
#include "cubicones/polyhedra.hpp"
#include "cubicones/stable_graphs.hpp"
#include "cubicones/symmetry.hpp"

namespace cubicones {

// Group specs: {"n":7,"young":[[1,2],[3,4,5,6,7]]} or
// {"n":7,"gens":[[[1,2]],[[3,4,5],[6,7]]]} with generators in cycle form.
GroupSpec parse_group_json(const std::string& text);

// Built-in names: "trivial", "S5" (markings 3..7 permuted) and "S2xS5"
// (additionally swapping 1 and 2); anything else is read as a file path.
GroupSpec resolve_group(const std::string& name_or_path, int n);

// Weights: {"weights":[{"std":"1/6","eps":"1"}, ...]}, one per marking.
WeightData parse_weights_json(const std::string& text);
WeightData resolve_weights(const std::string& path_or_empty);

// Cones and polytopes: {"dim":3,"normals":[["2","-1","2"],...]}, same layout
// with "rays" or "vertices". Entries are "p/q" strings.
ConeH parse_cone_h_json(const std::string& text);
ConeV parse_cone_v_json(const std::string& text);
Polytope parse_polytope_json(const std::string& text);
std::string cone_h_to_json(const ConeH& c);
std::string cone_v_to_json(const ConeV& c);

std::string divisor_to_json(const BoundaryDivisor& d);
std::string tree_to_json(const StableTree& t);
std::string fpartition_to_json(const FPartition& f);

// Named-class manifest for every standard lattice.
std::string spaces_manifest_json();

// Pairing matrix of the quotient divisors against the stratum orbits, with
// contracted columns marked. Round-trips through parse_matrix_csv.
struct PairingMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<bool> contracted;
  std::vector<std::vector<Rational>> entries;  // rows x columns
};

PairingMatrix build_pairing_matrix(const std::vector<QuotientDivisor>& basis,
                                   const std::vector<QuotientStratum>& strata,
                                   const WeightData& w);
std::string matrix_to_csv(const PairingMatrix& m);
PairingMatrix parse_matrix_csv(const std::string& text);
std::string matrix_to_json(const PairingMatrix& m);

std::string read_file(const std::string& path);

}  // namespace cubicones

#endif
