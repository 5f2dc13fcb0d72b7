#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilhom/charlib.hpp"
#include "nilhom/kostant.hpp"

namespace nilhom {

struct BasisElement {
    std::string name;
    std::vector<int> weight;  // torus weight (k | n | l slots)
    int step = 1;             // 1: E(x)V / V*(x)F part, 2: center
};

// Finite-dimensional 2-step nilpotent Lie algebra with integer structure
// constants, weight-graded basis. Antisymmetry, weight-additivity and the
// Jacobi identity are checked at construction.
struct LieStructure {
    TableFamily family = TableFamily::sp;
    int n = 0, k = 0, l = 0, m = 0;
    std::vector<BasisElement> basis;
    // both orientations stored; [i,j] = sum coeff * basis[t]
    std::map<std::pair<int, int>, std::vector<std::pair<long long, int>>> brackets;
};

// Total dimension capped at 14.
LieStructure build_lie_structure_sp(int n, int k);
LieStructure build_lie_structure_o(int m, int k);
LieStructure build_lie_structure_gl(int n, int k, int l);

// Torus character of H_p for p = 0..dim, via exact per-weight-block ranks of
// the Chevalley-Eilenberg differential
//   d(x_1 ^ ... ^ x_p) = sum_{r<s} (-1)^{r+s} [x_r, x_s] ^ x_1 ... ^x_r ... ^x_s ... ^ x_p
// (1-based signs). Blocks run concurrently under the NILHOM_THREADS cap.
std::vector<WeightMap> ce_homology_weights(const LieStructure& g);

// Decomposes each degree under GL(k) x G(V) (x GL(l)) and emits rows in the
// kostant table schema (levi_weight left empty; comparisons ignore it).
HomologyTable equivariant_table_from_oracle(const LieStructure& g);

struct TableDiff {
    std::vector<HomologySummand> only_in_a;
    std::vector<HomologySummand> only_in_b;
    bool empty() const { return only_in_a.empty() && only_in_b.empty(); }
};

// Multiset diff on (degree, e_label, v_label, f_label); levi_weight ignored.
TableDiff compare_tables(const HomologyTable& a, const HomologyTable& b);

// sum_p (-1)^p ch Lambda^p(g) == sum_p (-1)^p ch H_p as virtual characters.
bool euler_characteristic_holds(const LieStructure& g, const std::vector<WeightMap>& homology);

// Structure constants and per-block differential matrices, for external audit.
std::string dump_structure_json(const LieStructure& g);

}  // namespace nilhom
