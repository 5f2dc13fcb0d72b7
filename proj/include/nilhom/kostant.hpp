#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilhom/modrule.hpp"
#include "nilhom/partition.hpp"
#include "nilhom/weyl.hpp"

namespace nilhom {

// One homology summand. v_label is the V-block of w(rho)-rho:
//   sp / o_odd: a partition (trailing zeros stripped for sp);
//   o_even:     raw signed block, only the last entry may be negative;
//   gl:         raw mixed block (alpha_1..alpha_p, 0.., -beta_q..-beta_1).
struct HomologySummand {
    int degree = 0;
    Partition e_label;
    std::vector<long long> v_label;
    std::optional<Partition> f_label;      // gl only
    std::vector<long long> levi_weight;    // raw w(rho)-rho

    bool operator==(const HomologySummand&) const = default;
};

enum class TableFamily { sp, o, gl };

struct HomologyTable {
    TableFamily family = TableFamily::sp;
    int n = 0;  // sp/gl rank of V; for o this is m/2
    int k = 0;
    int l = 0;  // gl only
    int m = 0;  // o only: dim V
    std::vector<HomologySummand> rows;  // sorted by (degree, levi_weight)
};

// Mixed gl V-label as a pair of partitions (alpha; beta).
std::pair<Partition, Partition> mixed_pair(const std::vector<long long>& v_label);

// o_even bookkeeping: the O(m) label is |v_label| with a sign tag on the last entry.
bool negative_tag(const std::vector<long long>& v_label);
Partition abs_partition(const std::vector<long long>& v_label);

// w_lambda for lambda inside the n x k rectangle: w(rho) = (rev beta | rev alpha)
// from the lattice path of lambda. Postconditions asserted: w^{-1} in W^P,
// l(w) = |lambda|, and w . 0 = (-lambda^T_k, ..., -lambda^T_1, lambda_1, ..., lambda_n).
SignedPermutation w_from_partition(const Partition& lambda, int n, int k);

// Moves E-block entry gamma_c (1 <= c <= k, position k-c from the left) to the
// E-block end, negated, shifting the entries in between left by one.
SignedPermutation strip_lift(const SignedPermutation& w, int c, int k);

struct ProvenancedElement {
    Partition lambda;         // source partition in the n x k rectangle
    std::vector<int> subset;  // strip-lift positions, ascending subset of {1..k}
    SignedPermutation w;
};

// All of {w : w^{-1} in W^P} for the symplectic family, each exactly once,
// tagged with its (lambda, S) provenance; 2^k * C(n+k, k) elements.
std::vector<ProvenancedElement> enumerate_WP_structured_sp(int n, int k);

struct ParsedLabels {
    Partition e_label;
    std::vector<long long> v_label;
    std::optional<Partition> f_label;
};

// Splits w0 = w(rho)-rho into labels: e_label is the reverse-negate of the
// first k entries; the V block is kept raw; gl adds the F tail.
ParsedLabels parse_levi_weight(const std::vector<long long>& w0, TableFamily family,
                               int n, int k, int l = 0);

HomologyTable homology_table_sp(int n, int k);
HomologyTable homology_table_o(int m, int k);
HomologyTable homology_table_gl(int n, int k, int l);

// Same (degree, e_label, v_label) multisets predicted by the modification
// rules, for cross-checking the enumeration route.
struct ModRuleRow {
    int degree = 0;
    Partition e_label;
    std::vector<long long> v_label;

    bool operator==(const ModRuleRow&) const = default;
    auto operator<=>(const ModRuleRow&) const = default;
};

// Sum over lambda with lambda_1 <= k, finite i_{2n}, inside the (k+2n+1) x k
// box: S_{lambda^T}(E) (x) S_{[tau]}(V) in degree |lambda| - i_{2n}(lambda).
std::vector<ModRuleRow> table_from_modification_rule_sp(int n, int k);

// Orthogonal analogue at the SO level: labels with more than m/2 transpose-rows
// are collapsed to the associated partition, and for even m a length-n label
// with positive last part splits into a +/- pair.
std::vector<ModRuleRow> table_from_modification_rule_o(int m, int k);

// Collapse of a tau label to its SO(m) dominant form (associated partition
// when lambda^T_1 > m/2), before the even-m +/- splitting.
Partition so_collapse(const Partition& tau, int m);

std::string render_json(const HomologyTable& table);
std::string render_tsv(const HomologyTable& table);
std::string render_paper(const HomologyTable& table);

}  // namespace nilhom
