#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace nilhom {

using Weight = std::vector<int>;
// Finite map weight -> multiplicity. Multiplicities may be negative in virtual
// characters built by callers; everything produced here is a genuine character.
using WeightMap = std::map<Weight, long long>;

enum class GroupKind { GL, Sp, SO };

struct GroupDesc {
    GroupKind kind;
    int rank;   // GL: N; Sp: n (V = C^{2n}); SO: m/2
    int m = 0;  // SO only: dim V

    bool operator==(const GroupDesc&) const = default;
    auto operator<=>(const GroupDesc&) const = default;
};

struct Character {
    GroupDesc group;
    WeightMap weights;
};

enum class RootType { B, C, D };

// Weight multiplicities of the GL(N) irreducible with the given weakly
// decreasing label (negative entries allowed), by interlacing-pattern
// recursion. Memoized; safe for concurrent use.
WeightMap gl_weights(const std::vector<int>& label, int N);

// Dominant weight multiplicities by Freudenthal's recursion, exact arithmetic.
// Memoized; safe for concurrent use.
WeightMap freudenthal(RootType type, const std::vector<int>& lambda);

long long weyl_dim(RootType type, const std::vector<int>& lambda);

// Full weight support from dominant multiplicities: Weyl-orbit spread. For D,
// sign patterns of odd parity are dropped unless a zero entry absorbs them.
WeightMap orbit_spread(RootType type, const WeightMap& dominant);

bool is_dominant(RootType type, const std::vector<int>& v);
Weight dominant_reflect(RootType type, const Weight& v);

Character irrep_character(const GroupDesc& group, const std::vector<int>& label);

long long dimension(const WeightMap& weights);
long long irrep_dimension(const GroupDesc& group, const std::vector<int>& label);

// Greedy decomposition: repeatedly subtract the irreducible at the
// lexicographically maximal dominant weight. Returns (label, multiplicity)
// pairs; throws if a subtraction drives any multiplicity negative.
std::vector<std::pair<Weight, long long>> decompose(const Character& chi);

// Product-group decomposition for table assembly: the weight vectors of ch are
// concatenations of per-factor blocks.
enum class BlockKind { GL_E, Sp_V, SO_V, GL_V, GL_F };

struct BlockSpec {
    BlockKind kind;
    int size;
    int m = 0;  // SO_V only
};

std::vector<std::pair<std::vector<Weight>, long long>> decompose_product(
    WeightMap ch, const std::vector<BlockSpec>& blocks);

bool dominant_gl(const Weight& w);
bool dominant_sp(const Weight& w);
bool dominant_so(const Weight& w, int m);

}  // namespace nilhom
