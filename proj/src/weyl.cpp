#include "nilhom/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilhom {

namespace {

Rat rat_abs(const Rat& x) { return x < 0 ? -x : x; }

// size-r index subsets of {0..N-1}, lexicographic
template <typename F>
void for_each_combination(int N, int r, F&& f) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        f(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == N - r + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

WeylKind kind_of(Family family) {
    switch (family) {
        case Family::sp:
        case Family::o_odd: return WeylKind::BC;
        case Family::o_even: return WeylKind::D;
        case Family::gl: return WeylKind::A;
    }
    throw std::invalid_argument("unknown family");
}

std::vector<Rat> rho_vector(Family family, int n, int k, int l) {
    std::vector<Rat> r;
    switch (family) {
        case Family::sp:
            for (int i = 0; i < n + k; ++i) r.emplace_back(n + k - i);
            break;
        case Family::o_odd:
            for (int i = 0; i < n + k; ++i) r.emplace_back(2 * (n + k) - 1 - 2 * i, 2);
            break;
        case Family::o_even:
            for (int i = 0; i < n + k; ++i) r.emplace_back(n + k - 1 - i);
            break;
        case Family::gl:
            for (int i = 0; i < n + k + l; ++i) r.emplace_back(n + k + l - 1 - i);
            break;
    }
    if (r.empty()) throw std::invalid_argument("empty rho");
    return r;
}

LengthStats statistics(const std::vector<Rat>& v) {
    LengthStats s;
    const int N = static_cast<int>(v.size());
    for (int i = 0; i < N; ++i) {
        if (v[i] < 0) ++s.neg;
        for (int j = i + 1; j < N; ++j) {
            if (v[i] < v[j]) ++s.inv;
            if (v[i] + v[j] < 0) ++s.nsp;
        }
    }
    return s;
}

long long length(WeylKind kind, const std::vector<Rat>& image) {
    LengthStats s = statistics(image);
    switch (kind) {
        case WeylKind::BC: return s.inv + s.neg + s.nsp;
        case WeylKind::D: return s.inv + s.nsp;
        case WeylKind::A: return s.inv;
    }
    throw std::invalid_argument("unknown Weyl kind");
}

long long length(const SignedPermutation& w) { return length(w.type.kind, w.image); }

std::vector<Rat> dot_action(const SignedPermutation& w, const std::vector<Rat>& lam,
                            const std::vector<Rat>& rho) {
    const auto& img = w.image;
    const int N = static_cast<int>(rho.size());
    if (static_cast<int>(lam.size()) != N || static_cast<int>(img.size()) != N)
        throw std::invalid_argument("dot_action: dimension mismatch");
    std::vector<Rat> out(N);
    for (int i = 0; i < N; ++i) {
        const Rat a = rat_abs(img[i]);
        int pos = -1;
        for (int j = 0; j < N; ++j)
            if (a == rat_abs(rho[j])) { pos = j; break; }
        if (pos < 0) throw std::invalid_argument("dot_action: image does not match rho");
        const Rat eps = img[i] < 0 ? Rat(-1) : Rat(1);
        out[i] = eps * (lam[pos] + rho[pos]) - rho[i];
    }
    return out;
}

std::map<std::vector<Rat>, long long> bfs_length_map(WeylKind kind,
                                                     const std::vector<Rat>& rho) {
    const int N = static_cast<int>(rho.size());
    std::map<std::vector<Rat>, long long> dist;
    dist[rho] = 0;
    std::vector<std::vector<Rat>> frontier{rho};
    while (!frontier.empty()) {
        std::vector<std::vector<Rat>> next;
        for (const auto& v : frontier) {
            std::vector<std::vector<Rat>> cands;
            for (int i = 0; i + 1 < N; ++i) {
                auto u = v;
                std::swap(u[i], u[i + 1]);
                cands.push_back(std::move(u));
            }
            if (kind == WeylKind::BC) {
                auto u = v;
                u[N - 1] = -u[N - 1];
                cands.push_back(std::move(u));
            } else if (kind == WeylKind::D && N >= 2) {
                auto u = v;
                Rat a = u[N - 2], b = u[N - 1];
                u[N - 2] = -b;
                u[N - 1] = -a;
                cands.push_back(std::move(u));
            }
            for (auto& u : cands) {
                if (dist.find(u) == dist.end()) {
                    dist[u] = dist[v] + 1;
                    next.push_back(std::move(u));
                }
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

long long word_length_bfs(const SignedPermutation& w, const std::vector<Rat>& rho) {
    if (w.type.rank > 5) throw std::invalid_argument("word_length_bfs: rank exceeds BFS budget");
    auto dist = bfs_length_map(w.type.kind, rho);
    auto it = dist.find(w.image);
    if (it == dist.end())
        throw std::invalid_argument("word_length_bfs: element not in the group orbit");
    return it->second;
}

bool in_WP(Family family, const std::vector<Rat>& v, int n, int k, int l) {
    auto strictly_dec = [&](int lo, int hi) {
        for (int i = lo; i + 1 < hi; ++i)
            if (!(v[i] > v[i + 1])) return false;
        return true;
    };
    switch (family) {
        case Family::sp:
        case Family::o_odd: {
            if (!strictly_dec(0, k) || !strictly_dec(k, k + n)) return false;
            for (int i = k; i < k + n; ++i)
                if (!(v[i] > 0)) return false;
            return true;
        }
        case Family::o_even: {
            if (!strictly_dec(0, k)) return false;
            if (n == 1) return true;
            if (!strictly_dec(k, k + n - 1)) return false;
            return v[k + n - 2] > rat_abs(v[k + n - 1]);
        }
        case Family::gl:
            return strictly_dec(0, k) && strictly_dec(k, k + n) && strictly_dec(k + n, k + n + l);
    }
    throw std::invalid_argument("unknown family");
}

std::vector<SignedPermutation> enumerate_WP(Family family, int n, int k, int l) {
    const int N = family == Family::gl ? n + k + l : n + k;
    if (N > 12) throw std::invalid_argument("enumerate_WP: rank exceeds enumeration budget");
    const auto r = rho_vector(family, n, k, l);
    const WeylType type{kind_of(family), N};
    std::vector<std::vector<Rat>> images;

    auto desc = [](std::vector<Rat> xs) {
        std::sort(xs.begin(), xs.end(), std::greater<Rat>());
        return xs;
    };

    if (family == Family::sp || family == Family::o_odd) {
        for_each_combination(N, n, [&](const std::vector<int>& vset) {
            std::vector<Rat> V;
            for (int i : vset) V.push_back(r[i]);
            V = desc(std::move(V));
            std::vector<Rat> rest;
            for (int i = 0; i < N; ++i)
                if (std::find(vset.begin(), vset.end(), i) == vset.end()) rest.push_back(r[i]);
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                std::vector<Rat> E;
                for (int j = 0; j < k; ++j) E.push_back(mask >> j & 1 ? -rest[j] : rest[j]);
                E = desc(std::move(E));
                E.insert(E.end(), V.begin(), V.end());
                images.push_back(std::move(E));
            }
        });
    } else if (family == Family::o_even) {
        for_each_combination(N, n, [&](const std::vector<int>& vset) {
            std::vector<Rat> Vabs;
            for (int i : vset) Vabs.push_back(r[i]);
            Vabs = desc(std::move(Vabs));
            std::vector<Rat> rest;
            for (int i = 0; i < N; ++i)
                if (std::find(vset.begin(), vset.end(), i) == vset.end()) rest.push_back(r[i]);
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                std::vector<Rat> E;
                for (int j = 0; j < k; ++j) E.push_back(mask >> j & 1 ? -rest[j] : rest[j]);
                E = desc(std::move(E));
                int negs_E = static_cast<int>(std::count_if(E.begin(), E.end(),
                                                            [](const Rat& x) { return x < 0; }));
                bool zero_somewhere = std::any_of(E.begin(), E.end(),
                                                  [](const Rat& x) { return x == Rat(0); }) ||
                                      std::any_of(Vabs.begin(), Vabs.end(),
                                                  [](const Rat& x) { return x == Rat(0); });
                for (int last_sign : {1, -1}) {
                    std::vector<Rat> V = Vabs;
                    if (!V.empty()) V.back() = Rat(last_sign) * V.back();
                    if (!V.empty() && V.back() == Rat(0) && last_sign == -1) continue;
                    int total_negs = negs_E + ((!V.empty() && V.back() < 0) ? 1 : 0);
                    // odd sign count is only allowed when a zero slot absorbs it
                    if (total_negs % 2 == 1 && !zero_somewhere) continue;
                    auto img = E;
                    img.insert(img.end(), V.begin(), V.end());
                    images.push_back(std::move(img));
                }
            }
        });
    } else {  // gl
        for_each_combination(N, k, [&](const std::vector<int>& eset) {
            std::vector<int> rest_e;
            for (int i = 0; i < N; ++i)
                if (std::find(eset.begin(), eset.end(), i) == eset.end()) rest_e.push_back(i);
            for_each_combination(static_cast<int>(rest_e.size()), n,
                                 [&](const std::vector<int>& vpick) {
                std::vector<Rat> E, V, F;
                for (int i : eset) E.push_back(r[i]);
                std::vector<bool> used(rest_e.size(), false);
                for (int j : vpick) {
                    V.push_back(r[rest_e[j]]);
                    used[j] = true;
                }
                for (std::size_t j = 0; j < rest_e.size(); ++j)
                    if (!used[j]) F.push_back(r[rest_e[j]]);
                auto img = desc(std::move(E));
                auto Vd = desc(std::move(V));
                auto Fd = desc(std::move(F));
                img.insert(img.end(), Vd.begin(), Vd.end());
                img.insert(img.end(), Fd.begin(), Fd.end());
                images.push_back(std::move(img));
            });
        });
    }

    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    std::vector<SignedPermutation> out;
    out.reserve(images.size());
    for (auto& img : images) out.push_back(SignedPermutation{type, std::move(img)});
    return out;
}

std::vector<SignedPermutation> enumerate_WP_brute(Family family, int n, int k, int l) {
    const int N = family == Family::gl ? n + k + l : n + k;
    if (N > 8) throw std::invalid_argument("enumerate_WP_brute: rank exceeds brute budget");
    const auto r = rho_vector(family, n, k, l);
    const WeylType type{kind_of(family), N};
    std::vector<std::vector<Rat>> images;

    std::vector<int> perm(N);
    for (int i = 0; i < N; ++i) perm[i] = i;
    do {
        if (family == Family::gl) {
            std::vector<Rat> v(N);
            for (int i = 0; i < N; ++i) v[i] = r[perm[i]];
            if (in_WP(family, v, n, k, l)) images.push_back(std::move(v));
            continue;
        }
        for (unsigned mask = 0; mask < (1u << N); ++mask) {
            int negs = __builtin_popcount(mask);
            if (family == Family::o_even && negs % 2 == 1) continue;
            std::vector<Rat> v(N);
            for (int i = 0; i < N; ++i)
                v[i] = (mask >> i & 1) ? -r[perm[i]] : r[perm[i]];
            if (in_WP(family, v, n, k, l)) images.push_back(std::move(v));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    std::vector<SignedPermutation> out;
    out.reserve(images.size());
    for (auto& img : images) out.push_back(SignedPermutation{type, std::move(img)});
    return out;
}

}  // namespace nilhom
