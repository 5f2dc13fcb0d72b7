#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/rational.hpp>

namespace nilhom {

// Exact scalar for rho coordinates (half-integers in the odd-orthogonal case).
using Rat = boost::rational<long long>;

enum class WeylKind { BC, D, A };

struct WeylType {
    WeylKind kind;
    int rank;
};

enum class Family { sp, o_odd, o_even, gl };

WeylKind kind_of(Family family);

// Block sizes: k = dim E block, n = V block, l = F block (gl only).
std::vector<Rat> rho_vector(Family family, int n, int k, int l = 0);

struct LengthStats {
    long long inv = 0;  // #{i<j : v_i < v_j}
    long long neg = 0;  // #{i : v_i < 0}
    long long nsp = 0;  // #{i<j : v_i + v_j < 0}
};

LengthStats statistics(const std::vector<Rat>& v);

// BC: inv+neg+nsp; D: inv+nsp (zero entries count as nonnegative); A: inv.
long long length(WeylKind kind, const std::vector<Rat>& image);

// A Weyl group element stored by its action on the rho-coordinates, i.e. the
// vector w(rho). For D with a zero rho entry the displayed image determines the
// element only up to the sign on the zero slot; we canonicalize that sign to +.
struct SignedPermutation {
    WeylType type;
    std::vector<Rat> image;  // w(rho)

    bool operator==(const SignedPermutation&) const = default;
};

long long length(const SignedPermutation& w);

// w . lam = w(lam + rho) - rho. The underlying permutation/signs are recovered
// by matching |image| against |rho|; requires distinct absolute values in rho
// (one zero allowed, where the canonical + sign is used).
std::vector<Rat> dot_action(const SignedPermutation& w, const std::vector<Rat>& lam,
                            const std::vector<Rat>& rho);

// Cayley-graph distances from the identity over the simple reflections, keyed
// by image vector. Generators act on v = w(rho): s_i swaps v_i, v_{i+1};
// BC additionally negates the last entry; D negates and swaps the last two.
std::map<std::vector<Rat>, long long> bfs_length_map(WeylKind kind,
                                                     const std::vector<Rat>& rho);

long long word_length_bfs(const SignedPermutation& w, const std::vector<Rat>& rho);

// Minimal coset representative test on v = w(rho):
//   sp/o_odd: first k strictly decreasing; last n strictly decreasing, positive.
//   o_even:   first k strictly decreasing; V block strictly decreasing with the
//             last entry compared by absolute value (vacuous at n = 1).
//   gl:       three strictly decreasing blocks of sizes k, n, l.
bool in_WP(Family family, const std::vector<Rat>& image, int n, int k, int l = 0);

// All w with w^{-1} in W^P, by direct block construction: choose the V-block
// value set, sort blocks descending, run signs over the E block (families with
// signs). For sp the count is 2^k * C(n+k, k).
std::vector<SignedPermutation> enumerate_WP(Family family, int n, int k, int l = 0);

// Cross-check route: filter the whole group orbit of rho. Rank <= 8.
std::vector<SignedPermutation> enumerate_WP_brute(Family family, int n, int k, int l = 0);

}  // namespace nilhom
