#include "nilhom/modrule.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "nilhom/weyl.hpp"

namespace nilhom {

ModificationResult sp_modification_border(const Partition& lambda, int n) {
    ModificationResult res;
    Partition cur = lambda;
    long long index = 0;
    while (cur.length() > n) {
        const int r = 2 * (cur.length() - n - 1);
        auto strip = remove_border_strip(cur, r);
        if (!strip) {
            res.index = ModIndex::infinity();
            return res;
        }
        index += strip->columns;
        cur = strip->remainder;
        res.strips.push_back(std::move(*strip));
    }
    res.index = ModIndex::of(index);
    res.reduced = std::move(cur);
    return res;
}

ModificationResult sp_modification_weyl(const Partition& lambda, int n) {
    ModificationResult res;
    const Partition lt = lambda.transpose();
    const int M = lambda.part(0) + lambda.length() + n + 2;

    // window of lambda^T + sigma, positions j = 1..M from the head of sigma
    std::vector<long long> b(M);
    for (int j = 1; j <= M; ++j) b[j - 1] = lt.part(j - 1) - (n + j);

    for (long long x : b)
        if (x == 0) {
            res.index = ModIndex::infinity();
            return res;
        }
    {
        std::set<long long> absvals;
        for (long long x : b) absvals.insert(std::llabs(x));
        if (static_cast<int>(absvals.size()) < M) {
            res.index = ModIndex::infinity();
            return res;
        }
    }

    std::vector<int> order(M);
    for (int p = 0; p < M; ++p) order[p] = p;
    std::sort(order.begin(), order.end(),
              [&](int a, int c) { return std::llabs(b[a]) < std::llabs(b[c]); });
    std::vector<long long> cvals(M);
    for (int j = 0; j < M; ++j) cvals[j] = -std::llabs(b[order[j]]);

    // the sorting element as a signed permutation: left-to-right slot i = 1..M
    // holds infinite position j = M+1-i, content moved from position order[j-1]+1
    std::vector<Rat> v;
    v.reserve(M);
    for (int i = 1; i <= M; ++i) {
        const int j = M + 1 - i;
        const int p = order[j - 1] + 1;
        const int eps = ((cvals[j - 1] > 0) == (b[p - 1] > 0)) ? 1 : -1;
        v.emplace_back(eps * p);
    }
    const long long ell = length(WeylKind::BC, v);

    if (order[M - 1] != M - 1)
        throw std::logic_error("sp_modification_weyl: sequence window touched");

    std::vector<int> mudag(M);
    for (int j = 1; j <= M; ++j) {
        const long long x = cvals[j - 1] + n + j;
        if (x < 0) throw std::logic_error("sp_modification_weyl: negative transpose entry");
        mudag[j - 1] = static_cast<int>(x);
    }
    Partition mu = Partition(std::move(mudag)).transpose();
    if (mu.length() > n) throw std::logic_error("sp_modification_weyl: reduced label too long");

    res.index = ModIndex::of(ell);
    res.reduced = std::move(mu);
    return res;
}

ModificationResult o_modification_border(const Partition& lambda, int m) {
    ModificationResult res;
    Partition cur = lambda;
    long long index = 0;
    while (true) {
        const Partition ct = cur.transpose();
        if (ct.part(0) + ct.part(1) <= m) break;
        const int r = 2 * cur.length() - m;
        auto strip = remove_border_strip(cur, r);
        if (!strip) {
            res.index = ModIndex::infinity();
            return res;
        }
        index += strip->columns - 1;
        cur = strip->remainder;
        res.strips.push_back(std::move(*strip));
    }
    res.index = ModIndex::of(index);
    res.reduced = std::move(cur);
    res.associated = !res.strips.empty();
    return res;
}

}  // namespace nilhom
