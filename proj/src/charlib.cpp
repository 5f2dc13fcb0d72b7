#include "nilhom/charlib.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/rational.hpp>

namespace nilhom {

namespace {

using Rat = boost::rational<long long>;

std::mutex memo_mutex;

std::vector<int> pad_gl_label(const std::vector<int>& label, int N) {
    if (static_cast<int>(label.size()) > N)
        throw std::invalid_argument("gl_weights: label longer than the rank");
    std::vector<int> pos, neg;
    for (int x : label) {
        if (x > 0) pos.push_back(x);
        else if (x < 0) neg.push_back(x);
    }
    std::vector<int> lab = pos;
    lab.resize(N - neg.size(), 0);
    lab.insert(lab.end(), neg.begin(), neg.end());
    for (int i = 0; i + 1 < N; ++i)
        if (lab[i] < lab[i + 1]) throw std::invalid_argument("gl_weights: label not dominant");
    return lab;
}

WeightMap gl_rec(const std::vector<int>& lam) {
    const int n = static_cast<int>(lam.size());
    if (n == 0) return {{{}, 1}};
    if (n == 1) return {{{lam[0]}, 1}};
    WeightMap out;
    const long long total = std::accumulate(lam.begin(), lam.end(), 0LL);
    std::vector<int> mu(n - 1);
    auto gen = [&](auto&& self, int i) -> void {
        if (i == n - 1) {
            const long long wN = total - std::accumulate(mu.begin(), mu.end(), 0LL);
            for (auto& [w, mult] : gl_rec(mu)) {
                Weight key = w;
                key.push_back(static_cast<int>(wN));
                out[key] += mult;
            }
            return;
        }
        for (int v = lam[i + 1]; v <= lam[i]; ++v) {
            mu[i] = v;
            self(self, i + 1);
        }
    };
    gen(gen, 0);
    return out;
}

std::vector<Weight> pos_roots(RootType tp, int n) {
    std::vector<Weight> R;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Weight a(n, 0);
            a[i] = 1;
            a[j] = -1;
            R.push_back(a);
            a[j] = 1;
            R.push_back(a);
        }
    }
    if (tp == RootType::C)
        for (int i = 0; i < n; ++i) {
            Weight a(n, 0);
            a[i] = 2;
            R.push_back(a);
        }
    if (tp == RootType::B)
        for (int i = 0; i < n; ++i) {
            Weight a(n, 0);
            a[i] = 1;
            R.push_back(a);
        }
    return R;
}

std::vector<Rat> rho_rs(RootType tp, int n) {
    std::vector<Rat> r(n);
    for (int i = 0; i < n; ++i) {
        switch (tp) {
            case RootType::C: r[i] = Rat(n - i); break;
            case RootType::B: r[i] = Rat(2 * (n - i) - 1, 2); break;
            case RootType::D: r[i] = Rat(n - 1 - i); break;
        }
    }
    return r;
}

template <typename A, typename B>
Rat dot(const A& a, const B& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * Rat(b[i]);
    return s;
}

bool in_Qplus(RootType tp, const std::vector<long long>& d) {
    const int n = static_cast<int>(d.size());
    std::vector<long long> s(n);
    std::partial_sum(d.begin(), d.end(), s.begin());
    switch (tp) {
        case RootType::B:
            return std::all_of(s.begin(), s.end(), [](long long x) { return x >= 0; });
        case RootType::C: {
            for (int i = 0; i + 1 < n; ++i)
                if (s[i] < 0) return false;
            return s[n - 1] >= 0 && s[n - 1] % 2 == 0;
        }
        case RootType::D: {
            if (n == 1) return d[0] == 0;
            if (s[n - 1] % 2 != 0) return false;
            const long long cn = s[n - 1] / 2;
            const long long cn1 = cn - d[n - 1];
            for (int i = 0; i + 2 < n; ++i)
                if (s[i] < 0) return false;
            return cn >= 0 && cn1 >= 0;
        }
    }
    throw std::invalid_argument("unknown root type");
}

// simple-root coefficient total of lam - mu; the recursion order
Rat qplus_level(RootType tp, const std::vector<long long>& d) {
    const int n = static_cast<int>(d.size());
    std::vector<long long> s(n);
    std::partial_sum(d.begin(), d.end(), s.begin());
    switch (tp) {
        case RootType::B:
            return Rat(std::accumulate(s.begin(), s.end(), 0LL));
        case RootType::C:
            return Rat(std::accumulate(s.begin(), s.end() - 1, 0LL)) + Rat(s[n - 1], 2);
        case RootType::D: {
            const Rat cn(s[n - 1], 2);
            const Rat cn1 = cn - Rat(d[n - 1]);
            Rat tot = cn + cn1;
            for (int i = 0; i + 2 < n; ++i) tot += Rat(s[i]);
            return tot;
        }
    }
    throw std::invalid_argument("unknown root type");
}

}  // namespace

bool is_dominant(RootType tp, const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    if (n == 0) return true;
    for (int i = 0; i + 1 < n; ++i)
        if (v[i] < v[i + 1]) return false;
    if (tp == RootType::B || tp == RootType::C) return v[n - 1] >= 0;
    return n == 1 || v[n - 2] >= std::abs(v[n - 1]);
}

Weight dominant_reflect(RootType tp, const Weight& v) {
    Weight a(v.size());
    std::transform(v.begin(), v.end(), a.begin(), [](int x) { return std::abs(x); });
    std::sort(a.begin(), a.end(), std::greater<int>());
    if (tp == RootType::D) {
        const int negs = static_cast<int>(std::count_if(v.begin(), v.end(),
                                                        [](int x) { return x < 0; }));
        if (negs % 2 == 1) a.back() = -a.back();
    }
    return a;
}

WeightMap gl_weights(const std::vector<int>& label, int N) {
    const std::vector<int> lab = pad_gl_label(label, N);
    static std::map<std::pair<std::vector<int>, int>, WeightMap> memo;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({lab, N});
        if (it != memo.end()) return it->second;
    }
    WeightMap result = gl_rec(lab);
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(std::make_pair(lab, N), std::move(result)).first->second;
}

WeightMap freudenthal(RootType tp, const std::vector<int>& lam) {
    const int n = static_cast<int>(lam.size());
    if (!is_dominant(tp, lam)) throw std::invalid_argument("freudenthal: label not dominant");
    if (tp == RootType::D && n == 1) return {{lam, 1}};

    static std::map<std::pair<RootType, std::vector<int>>, WeightMap> memo;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({tp, lam});
        if (it != memo.end()) return it->second;
    }

    const auto R = pos_roots(tp, n);
    const auto rh = rho_rs(tp, n);
    const int top = lam[0];

    // dominant candidates in the cone below lam
    std::vector<Weight> cands;
    Weight mu(n);
    auto gen = [&](auto&& self, int i) -> void {
        if (i == n - 1) {
            const int lo = tp == RootType::D ? -top : 0;
            for (int last = lo; last <= top; ++last) {
                mu[n - 1] = last;
                if (!is_dominant(tp, mu)) continue;
                std::vector<long long> d(n);
                for (int j = 0; j < n; ++j) d[j] = lam[j] - mu[j];
                if (in_Qplus(tp, d)) cands.push_back(mu);
            }
            return;
        }
        for (int v = top; v >= 0; --v) {
            mu[i] = v;
            self(self, i + 1);
        }
    };
    gen(gen, 0);

    std::stable_sort(cands.begin(), cands.end(), [&](const Weight& a, const Weight& b) {
        std::vector<long long> da(n), db(n);
        for (int j = 0; j < n; ++j) {
            da[j] = lam[j] - a[j];
            db[j] = lam[j] - b[j];
        }
        return qplus_level(tp, da) < qplus_level(tp, db);
    });

    WeightMap mults;
    std::vector<Rat> lr(n);
    for (int j = 0; j < n; ++j) lr[j] = Rat(lam[j]) + rh[j];
    const Rat norm_l = dot(lr, lr);

    for (const Weight& muw : cands) {
        if (muw == lam) {
            mults[muw] = 1;
            continue;
        }
        Rat tot(0);
        for (const Weight& a : R) {
            for (long long j = 1;; ++j) {
                Weight nu(n);
                for (int t = 0; t < n; ++t) nu[t] = muw[t] + static_cast<int>(j) * a[t];
                const Weight dn = dominant_reflect(tp, nu);
                auto it = mults.find(dn);
                const long long mm = it == mults.end() ? 0 : it->second;
                if (mm == 0) {
                    std::vector<long long> d(n);
                    for (int t = 0; t < n; ++t) d[t] = lam[t] - nu[t];
                    if (!in_Qplus(tp, d)) break;
                }
                tot += Rat(mm) * dot(nu, a);
            }
        }
        std::vector<Rat> mr(n);
        for (int j = 0; j < n; ++j) mr[j] = Rat(muw[j]) + rh[j];
        const Rat denom = norm_l - dot(mr, mr);
        if (!(denom > 0)) throw std::logic_error("freudenthal: nonpositive denominator");
        const Rat val = Rat(2) * tot / denom;
        if (val.denominator() != 1 || val.numerator() < 0)
            throw std::logic_error("freudenthal: non-integral multiplicity");
        if (val.numerator() != 0) mults[muw] = val.numerator();
    }

    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(std::make_pair(tp, lam), std::move(mults)).first->second;
}

long long weyl_dim(RootType tp, const std::vector<int>& lam) {
    const int n = static_cast<int>(lam.size());
    if (tp == RootType::D && n == 1) return 1;
    const auto R = pos_roots(tp, n);
    const auto rh = rho_rs(tp, n);
    std::vector<Rat> lr(n);
    for (int j = 0; j < n; ++j) lr[j] = Rat(lam[j]) + rh[j];
    Rat num(1), den(1);
    for (const Weight& a : R) {
        num *= dot(lr, a);
        den *= dot(rh, a);
    }
    const Rat d = num / den;
    if (d.denominator() != 1) throw std::logic_error("weyl_dim: non-integral dimension");
    return d.numerator();
}

WeightMap orbit_spread(RootType tp, const WeightMap& dominant) {
    WeightMap out;
    for (const auto& [mu, c] : dominant) {
        const int n = static_cast<int>(mu.size());
        std::set<Weight> seen;
        Weight perm = mu;
        std::sort(perm.begin(), perm.end());
        do {
            const bool has_zero = std::find(perm.begin(), perm.end(), 0) != perm.end();
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (tp == RootType::D && !has_zero &&
                    __builtin_popcount(mask) % 2 == 1)
                    continue;
                Weight v(n);
                for (int i = 0; i < n; ++i) v[i] = (mask >> i & 1) ? -perm[i] : perm[i];
                seen.insert(std::move(v));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (const Weight& w : seen) out[w] += c;
    }
    return out;
}

Character irrep_character(const GroupDesc& group, const std::vector<int>& label) {
    Character chi{group, {}};
    switch (group.kind) {
        case GroupKind::GL:
            chi.weights = gl_weights(label, group.rank);
            return chi;
        case GroupKind::Sp: {
            if (static_cast<int>(label.size()) > group.rank)
                throw std::invalid_argument("irrep_character: Sp label longer than rank");
            if (group.rank == 0) {
                chi.weights = {{{}, 1}};
                return chi;
            }
            std::vector<int> lab = label;
            lab.resize(group.rank, 0);
            chi.weights = orbit_spread(RootType::C, freudenthal(RootType::C, lab));
            return chi;
        }
        case GroupKind::SO: {
            const int n = group.m / 2;
            if (static_cast<int>(label.size()) > n)
                throw std::invalid_argument("irrep_character: SO label longer than rank");
            if (n == 0) {
                chi.weights = {{{}, 1}};
                return chi;
            }
            std::vector<int> lab = label;
            lab.resize(n, 0);
            const RootType tp = group.m % 2 ? RootType::B : RootType::D;
            chi.weights = orbit_spread(tp, freudenthal(tp, lab));
            return chi;
        }
    }
    throw std::invalid_argument("unknown group kind");
}

long long dimension(const WeightMap& weights) {
    long long d = 0;
    for (const auto& [w, c] : weights) d += c;
    return d;
}

long long irrep_dimension(const GroupDesc& group, const std::vector<int>& label) {
    switch (group.kind) {
        case GroupKind::GL:
            return dimension(gl_weights(label, group.rank));
        case GroupKind::Sp: {
            if (group.rank == 0) return 1;
            std::vector<int> lab = label;
            lab.resize(group.rank, 0);
            return weyl_dim(RootType::C, lab);
        }
        case GroupKind::SO: {
            const int n = group.m / 2;
            if (n == 0) return 1;
            std::vector<int> lab = label;
            lab.resize(n, 0);
            return weyl_dim(group.m % 2 ? RootType::B : RootType::D, lab);
        }
    }
    throw std::invalid_argument("unknown group kind");
}

bool dominant_gl(const Weight& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

bool dominant_sp(const Weight& w) {
    return dominant_gl(w) && (w.empty() || w.back() >= 0);
}

bool dominant_so(const Weight& w, int m) {
    const int n = m / 2;
    if (n == 0) return true;
    if (m % 2) return dominant_sp(w);
    for (int i = 0; i + 1 < n - 1; ++i)
        if (w[i] < w[i + 1]) return false;
    return n == 1 || w[n - 2] >= std::abs(w[n - 1]);
}

std::vector<std::pair<std::vector<Weight>, long long>> decompose_product(
    WeightMap ch, const std::vector<BlockSpec>& blocks) {
    std::vector<std::pair<std::vector<Weight>, long long>> out;

    auto split = [&](const Weight& w) {
        std::vector<Weight> bs;
        std::size_t off = 0;
        for (const BlockSpec& b : blocks) {
            bs.emplace_back(w.begin() + off, w.begin() + off + b.size);
            off += b.size;
        }
        return bs;
    };
    auto all_dominant = [&](const std::vector<Weight>& bs) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            switch (blocks[i].kind) {
                case BlockKind::GL_E:
                case BlockKind::GL_V:
                case BlockKind::GL_F:
                    if (!dominant_gl(bs[i])) return false;
                    break;
                case BlockKind::Sp_V:
                    if (!dominant_sp(bs[i])) return false;
                    break;
                case BlockKind::SO_V:
                    if (!dominant_so(bs[i], blocks[i].m)) return false;
                    break;
            }
        }
        return true;
    };
    auto full_support = [&](const BlockSpec& b, const Weight& lab) -> WeightMap {
        switch (b.kind) {
            case BlockKind::GL_E:
            case BlockKind::GL_V:
            case BlockKind::GL_F:
                return gl_weights(lab, b.size);
            case BlockKind::Sp_V:
                return irrep_character(GroupDesc{GroupKind::Sp, b.size}, lab).weights;
            case BlockKind::SO_V:
                return irrep_character(GroupDesc{GroupKind::SO, b.m / 2, b.m}, lab).weights;
        }
        throw std::invalid_argument("unknown block kind");
    };

    while (true) {
        for (auto it = ch.begin(); it != ch.end();)
            it = it->second == 0 ? ch.erase(it) : std::next(it);
        if (ch.empty()) break;

        const Weight* top = nullptr;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
            if (all_dominant(split(it->first))) {
                top = &it->first;
                break;
            }
        }
        if (!top) throw std::runtime_error("decompose_product: no dominant weight left");
        const long long mult = ch.at(*top);
        if (mult < 0) throw std::runtime_error("decompose_product: negative leading multiplicity");
        const std::vector<Weight> bs = split(*top);

        WeightMap prod{{{}, 1}};
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            WeightMap f = full_support(blocks[i], bs[i]);
            WeightMap next;
            for (const auto& [wa, ma] : prod)
                for (const auto& [wb, mb] : f) {
                    Weight key = wa;
                    key.insert(key.end(), wb.begin(), wb.end());
                    next[key] += ma * mb;
                }
            prod = std::move(next);
        }
        for (const auto& [w, mv] : prod) {
            auto& slot = ch[w];
            slot -= mult * mv;
            if (slot < 0) throw std::runtime_error("decompose_product: negative multiplicity");
        }
        out.emplace_back(bs, mult);
    }
    return out;
}

std::vector<std::pair<Weight, long long>> decompose(const Character& chi) {
    BlockSpec b;
    const int n = chi.group.kind == GroupKind::SO ? chi.group.m / 2 : chi.group.rank;
    switch (chi.group.kind) {
        case GroupKind::GL: b = {BlockKind::GL_V, n, 0}; break;
        case GroupKind::Sp: b = {BlockKind::Sp_V, n, 0}; break;
        case GroupKind::SO: b = {BlockKind::SO_V, n, chi.group.m}; break;
    }
    std::vector<std::pair<Weight, long long>> out;
    try {
        for (auto& [bs, mult] : decompose_product(chi.weights, {b}))
            out.emplace_back(bs[0], mult);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("decompose: not a genuine character (") +
                                    e.what() + ")");
    }
    return out;
}

}  // namespace nilhom
