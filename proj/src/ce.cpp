#include "nilhom/ce.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace nilhom {

namespace {

using boost::multiprecision::cpp_int;
using Mono = std::vector<int>;

int worker_count() {
    if (const char* env = std::getenv("NILHOM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int workers = std::min<std::size_t>(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

long long bareiss_rank(std::vector<std::vector<cpp_int>> M) {
    if (M.empty() || M[0].empty()) return 0;
    const int R = static_cast<int>(M.size());
    const int C = static_cast<int>(M[0].size());
    cpp_int prev = 1;
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int piv = -1;
        for (int r = row; r < R; ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[row], M[piv]);
        for (int r = row + 1; r < R; ++r) {
            for (int c = col + 1; c < C; ++c) {
                cpp_int num = M[row][col] * M[r][c] - M[r][col] * M[row][c];
                if (num % prev != 0)
                    throw std::logic_error("bareiss_rank: inexact division");
                M[r][c] = num / prev;
            }
            M[r][col] = 0;
        }
        prev = M[row][col];
        ++row;
    }
    return row;
}

void setbr(LieStructure& g, int i, int j, long long coeff, int t) {
    if (coeff == 0) return;
    g.brackets[{i, j}].emplace_back(coeff, t);
    g.brackets[{j, i}].emplace_back(-coeff, t);
}

void validate_structure(const LieStructure& g) {
    const int D = static_cast<int>(g.basis.size());
    if (D > 14) throw std::invalid_argument("lie structure exceeds the dimension budget (14)");
    for (const auto& [key, terms] : g.brackets) {
        for (const auto& [coeff, t] : terms) {
            const auto& wi = g.basis[key.first].weight;
            const auto& wj = g.basis[key.second].weight;
            const auto& wt = g.basis[t].weight;
            for (std::size_t s = 0; s < wt.size(); ++s)
                if (wi[s] + wj[s] != wt[s])
                    throw std::logic_error("bracket is not weight-additive");
        }
    }
    // Jacobi: [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
    auto acc_double = [&](int a, int b, int c, std::map<int, long long>& acc) {
        auto it = g.brackets.find({a, b});
        if (it == g.brackets.end()) return;
        for (const auto& [co, t] : it->second) {
            auto it2 = g.brackets.find({t, c});
            if (it2 == g.brackets.end()) continue;
            for (const auto& [co2, u] : it2->second) acc[u] += co * co2;
        }
    };
    for (int i = 0; i < D; ++i)
        for (int j = i + 1; j < D; ++j)
            for (int kk = j + 1; kk < D; ++kk) {
                std::map<int, long long> acc;
                acc_double(i, j, kk, acc);
                acc_double(j, kk, i, acc);
                acc_double(kk, i, j, acc);
                for (const auto& [u, c] : acc)
                    if (c != 0) throw std::logic_error("Jacobi identity fails");
            }
}

std::vector<int> zero_weight(const LieStructure& g) {
    return std::vector<int>(g.basis.empty() ? 0 : g.basis[0].weight.size(), 0);
}

// per degree: weight -> sorted list of index monomials
std::vector<std::map<Weight, std::vector<Mono>>> weight_blocks(const LieStructure& g) {
    const int D = static_cast<int>(g.basis.size());
    std::vector<std::map<Weight, std::vector<Mono>>> blocks(D + 1);
    const std::size_t wlen = zero_weight(g).size();
    for (unsigned mask = 0; mask < (1u << D); ++mask) {
        Mono m;
        Weight w(wlen, 0);
        for (int i = 0; i < D; ++i)
            if (mask >> i & 1) {
                m.push_back(i);
                for (std::size_t s = 0; s < wlen; ++s) w[s] += g.basis[i].weight[s];
            }
        blocks[m.size()][std::move(w)].push_back(std::move(m));
    }
    return blocks;
}

std::vector<std::vector<cpp_int>> differential_block(
    const LieStructure& g, const std::vector<Mono>& rows, const std::vector<Mono>& cols) {
    std::map<Mono, int> ridx;
    for (std::size_t i = 0; i < rows.size(); ++i) ridx[rows[i]] = static_cast<int>(i);
    std::vector<std::vector<cpp_int>> M(rows.size(), std::vector<cpp_int>(cols.size(), 0));
    for (std::size_t cj = 0; cj < cols.size(); ++cj) {
        const Mono& m = cols[cj];
        const int p = static_cast<int>(m.size());
        for (int r = 0; r < p; ++r)
            for (int s = r + 1; s < p; ++s) {
                auto it = g.brackets.find({m[r], m[s]});
                if (it == g.brackets.end()) continue;
                Mono rest;
                rest.reserve(p - 2);
                for (int u = 0; u < p; ++u)
                    if (u != r && u != s) rest.push_back(m[u]);
                for (const auto& [coeff, t] : it->second) {
                    if (std::find(rest.begin(), rest.end(), t) != rest.end()) continue;
                    const int pos = static_cast<int>(
                        std::count_if(rest.begin(), rest.end(), [&](int u) { return u < t; }));
                    Mono nm = rest;
                    nm.insert(nm.begin() + pos, t);
                    const int sgn = (((r + s) % 2 == 0 ? 1 : -1) * (pos % 2 == 0 ? 1 : -1));
                    M[ridx.at(nm)][cj] += sgn * coeff;
                }
            }
    }
    return M;
}

struct BlockKey {
    int degree;
    Weight weight;
    bool operator<(const BlockKey& o) const {
        return std::tie(degree, weight) < std::tie(o.degree, o.weight);
    }
};

std::vector<BlockSpec> oracle_block_spec(const LieStructure& g) {
    switch (g.family) {
        case TableFamily::sp:
            return {{BlockKind::GL_E, g.k, 0}, {BlockKind::Sp_V, g.n, 0}};
        case TableFamily::o: {
            std::vector<BlockSpec> spec{{BlockKind::GL_E, g.k, 0}};
            if (g.n > 0) spec.push_back({BlockKind::SO_V, g.n, g.m});
            return spec;
        }
        case TableFamily::gl:
            return {{BlockKind::GL_E, g.k, 0},
                    {BlockKind::GL_V, g.n, 0},
                    {BlockKind::GL_F, g.l, 0}};
    }
    throw std::invalid_argument("unknown family");
}

Partition partition_from_weight(const Weight& w, const char* what) {
    std::vector<int> parts(w.begin(), w.end());
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw std::logic_error(std::string(what) + ": block is not a partition");
    }
}

}  // namespace

LieStructure build_lie_structure_sp(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("build_lie_structure_sp: need n, k >= 1");
    LieStructure g;
    g.family = TableFamily::sp;
    g.n = n;
    g.k = k;
    std::vector<int> S;
    for (int s = 1; s <= n; ++s) S.push_back(s);
    for (int s = 1; s <= n; ++s) S.push_back(-s);

    std::map<std::pair<int, int>, int> xidx;  // (a, s) -> basis index
    for (int a = 0; a < k; ++a)
        for (int s : S) {
            Weight w(k + n, 0);
            w[a] = 1;
            w[k + std::abs(s) - 1] = s > 0 ? 1 : -1;
            xidx[{a, s}] = static_cast<int>(g.basis.size());
            g.basis.push_back({"x[" + std::to_string(a) + "," + std::to_string(s) + "]", w, 1});
        }
    std::map<std::pair<int, int>, int> yidx;
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            Weight w(k + n, 0);
            w[a] += 1;
            w[b] += 1;
            yidx[{a, b}] = static_cast<int>(g.basis.size());
            g.basis.push_back({"y[" + std::to_string(a) + "," + std::to_string(b) + "]", w, 2});
        }
    for (const auto& [ps, i] : xidx)
        for (const auto& [pt, j] : xidx) {
            if (i >= j) continue;
            const int a = ps.first, s = ps.second;
            const int b = pt.first, t = pt.second;
            const long long om = (t == -s) ? (s > 0 ? 1 : -1) : 0;
            if (om) setbr(g, i, j, om, yidx.at({std::min(a, b), std::max(a, b)}));
        }
    validate_structure(g);
    return g;
}

LieStructure build_lie_structure_o(int m, int k) {
    if (m < 1 || k < 1) throw std::invalid_argument("build_lie_structure_o: need m, k >= 1");
    LieStructure g;
    g.family = TableFamily::o;
    g.m = m;
    g.n = m / 2;
    g.k = k;
    const int n = g.n;
    std::vector<int> S;
    for (int s = 1; s <= n; ++s) S.push_back(s);
    for (int s = 1; s <= n; ++s) S.push_back(-s);
    if (m % 2) S.push_back(0);

    std::map<std::pair<int, int>, int> xidx;
    for (int a = 0; a < k; ++a)
        for (int s : S) {
            Weight w(k + n, 0);
            w[a] = 1;
            if (s != 0) w[k + std::abs(s) - 1] = s > 0 ? 1 : -1;
            xidx[{a, s}] = static_cast<int>(g.basis.size());
            g.basis.push_back({"x[" + std::to_string(a) + "," + std::to_string(s) + "]", w, 1});
        }
    std::map<std::pair<int, int>, int> zidx;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            Weight w(k + n, 0);
            w[a] = 1;
            w[b] = 1;
            zidx[{a, b}] = static_cast<int>(g.basis.size());
            g.basis.push_back({"z[" + std::to_string(a) + "," + std::to_string(b) + "]", w, 2});
        }
    for (const auto& [ps, i] : xidx)
        for (const auto& [pt, j] : xidx) {
            if (i >= j) continue;
            const int a = ps.first, s = ps.second;
            const int b = pt.first, t = pt.second;
            const long long om = (s == 0 && t == 0) ? 1 : ((t == -s && s != 0) ? 1 : 0);
            if (om && a != b) {
                const long long sgn = a < b ? 1 : -1;
                setbr(g, i, j, om * sgn, zidx.at({std::min(a, b), std::max(a, b)}));
            }
        }
    validate_structure(g);
    return g;
}

LieStructure build_lie_structure_gl(int n, int k, int l) {
    if (n < 1 || k < 1 || l < 1)
        throw std::invalid_argument("build_lie_structure_gl: need n, k, l >= 1");
    LieStructure g;
    g.family = TableFamily::gl;
    g.n = n;
    g.k = k;
    g.l = l;
    std::map<std::pair<int, int>, int> pidx, qidx, ridx;
    for (int a = 0; a < k; ++a)
        for (int s = 0; s < n; ++s) {
            Weight w(k + n + l, 0);
            w[a] = 1;
            w[k + s] = 1;
            pidx[{a, s}] = static_cast<int>(g.basis.size());
            g.basis.push_back({"p[" + std::to_string(a) + "," + std::to_string(s) + "]", w, 1});
        }
    for (int s = 0; s < n; ++s)
        for (int c = 0; c < l; ++c) {
            Weight w(k + n + l, 0);
            w[k + s] = -1;
            w[k + n + c] = 1;
            qidx[{s, c}] = static_cast<int>(g.basis.size());
            g.basis.push_back({"q[" + std::to_string(s) + "," + std::to_string(c) + "]", w, 1});
        }
    for (int a = 0; a < k; ++a)
        for (int c = 0; c < l; ++c) {
            Weight w(k + n + l, 0);
            w[a] = 1;
            w[k + n + c] = 1;
            ridx[{a, c}] = static_cast<int>(g.basis.size());
            g.basis.push_back({"r[" + std::to_string(a) + "," + std::to_string(c) + "]", w, 2});
        }
    for (int a = 0; a < k; ++a)
        for (int s = 0; s < n; ++s)
            for (int c = 0; c < l; ++c)
                setbr(g, pidx.at({a, s}), qidx.at({s, c}), 1, ridx.at({a, c}));
    validate_structure(g);
    return g;
}

std::vector<WeightMap> ce_homology_weights(const LieStructure& g) {
    const int D = static_cast<int>(g.basis.size());
    const auto blocks = weight_blocks(g);

    // rank of d_p restricted to each weight block, p = 1..D
    std::vector<std::pair<int, Weight>> tasks;
    for (int p = 1; p <= D; ++p)
        for (const auto& [chi, cols] : blocks[p]) {
            auto rit = blocks[p - 1].find(chi);
            if (rit == blocks[p - 1].end()) continue;  // no rows: rank 0
            tasks.emplace_back(p, chi);
        }
    std::vector<long long> results(tasks.size(), 0);
    parallel_for(tasks.size(), [&](std::size_t i) {
        const auto& [p, chi] = tasks[i];
        results[i] = bareiss_rank(
            differential_block(g, blocks[p - 1].at(chi), blocks[p].at(chi)));
    });
    std::map<BlockKey, long long> rank;
    for (std::size_t i = 0; i < tasks.size(); ++i)
        rank[{tasks[i].first, tasks[i].second}] = results[i];
    auto rank_of = [&](int p, const Weight& chi) -> long long {
        auto it = rank.find({p, chi});
        return it == rank.end() ? 0 : it->second;
    };

    std::vector<WeightMap> H(D + 1);
    for (int p = 0; p <= D; ++p)
        for (const auto& [chi, monos] : blocks[p]) {
            const long long dim = static_cast<long long>(monos.size());
            const long long r_in = p + 1 <= D ? rank_of(p + 1, chi) : 0;
            const long long r_out = p >= 1 ? rank_of(p, chi) : 0;
            const long long h = dim - r_in - r_out;
            if (h < 0) throw std::logic_error("negative homology dimension");
            if (h > 0) H[p][chi] = h;
        }
    return H;
}

HomologyTable equivariant_table_from_oracle(const LieStructure& g) {
    const auto H = ce_homology_weights(g);
    const auto spec = oracle_block_spec(g);

    HomologyTable table;
    table.family = g.family;
    table.n = g.n;
    table.k = g.k;
    table.l = g.l;
    table.m = g.m;
    for (std::size_t p = 0; p < H.size(); ++p) {
        if (H[p].empty()) continue;
        for (const auto& [labels, mult] : decompose_product(H[p], spec)) {
            HomologySummand row;
            row.degree = static_cast<int>(p);
            row.e_label = partition_from_weight(labels[0], "oracle E label");
            if (g.family == TableFamily::sp) {
                for (int x : labels[1]) row.v_label.push_back(x);
                while (!row.v_label.empty() && row.v_label.back() == 0) row.v_label.pop_back();
            } else if (g.family == TableFamily::o) {
                if (g.n > 0)
                    for (int x : labels[1]) row.v_label.push_back(x);
            } else {
                for (int x : labels[1]) row.v_label.push_back(x);
                row.f_label = partition_from_weight(labels[2], "oracle F label");
            }
            for (long long i = 0; i < mult; ++i) table.rows.push_back(row);
        }
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const HomologySummand& a, const HomologySummand& b) {
                  return std::tie(a.degree, a.e_label, a.v_label, a.f_label) <
                         std::tie(b.degree, b.e_label, b.v_label, b.f_label);
              });
    return table;
}

TableDiff compare_tables(const HomologyTable& a, const HomologyTable& b) {
    if (a.family != b.family || a.n != b.n || a.k != b.k || a.l != b.l || a.m != b.m)
        throw std::invalid_argument("compare_tables: parameter mismatch");
    using Key = std::tuple<int, std::vector<int>, std::vector<long long>, bool, std::vector<int>>;
    auto key_of = [](const HomologySummand& r) -> Key {
        return {r.degree, r.e_label.parts(), r.v_label, r.f_label.has_value(),
                r.f_label ? r.f_label->parts() : std::vector<int>{}};
    };
    std::map<Key, long long> counts;
    for (const auto& r : a.rows) ++counts[key_of(r)];
    for (const auto& r : b.rows) --counts[key_of(r)];
    TableDiff diff;
    auto pick = [&](const HomologyTable& t, long long sign) {
        std::map<Key, long long> remaining = counts;
        for (const auto& r : t.rows) {
            auto& c = remaining[key_of(r)];
            if (sign * c > 0) {
                (sign > 0 ? diff.only_in_a : diff.only_in_b).push_back(r);
                c -= sign;
            }
        }
    };
    pick(a, 1);
    pick(b, -1);
    return diff;
}

bool euler_characteristic_holds(const LieStructure& g, const std::vector<WeightMap>& homology) {
    WeightMap lhs{{zero_weight(g), 1}};
    for (const auto& el : g.basis) {
        WeightMap next = lhs;
        for (const auto& [w, c] : lhs) {
            Weight shifted = w;
            for (std::size_t s = 0; s < shifted.size(); ++s) shifted[s] += el.weight[s];
            next[shifted] -= c;
        }
        lhs = std::move(next);
    }
    WeightMap rhs;
    for (std::size_t p = 0; p < homology.size(); ++p) {
        const long long sign = p % 2 == 0 ? 1 : -1;
        for (const auto& [w, c] : homology[p]) rhs[w] += sign * c;
    }
    auto strip = [](WeightMap& m) {
        for (auto it = m.begin(); it != m.end();)
            it = it->second == 0 ? m.erase(it) : std::next(it);
    };
    strip(lhs);
    strip(rhs);
    return lhs == rhs;
}

std::string dump_structure_json(const LieStructure& g) {
    nlohmann::json params;
    switch (g.family) {
        case TableFamily::sp: params = {{"n", g.n}, {"k", g.k}}; break;
        case TableFamily::o: params = {{"m", g.m}, {"k", g.k}}; break;
        case TableFamily::gl: params = {{"n", g.n}, {"k", g.k}, {"l", g.l}}; break;
    }
    nlohmann::json basis = nlohmann::json::array();
    for (std::size_t i = 0; i < g.basis.size(); ++i)
        basis.push_back({{"index", i},
                         {"name", g.basis[i].name},
                         {"weight", g.basis[i].weight},
                         {"step", g.basis[i].step}});
    nlohmann::json brackets = nlohmann::json::array();
    for (const auto& [key, terms] : g.brackets) {
        if (key.first >= key.second) continue;
        nlohmann::json jt = nlohmann::json::array();
        for (const auto& [coeff, t] : terms) jt.push_back({{"coeff", coeff}, {"t", t}});
        brackets.push_back({{"i", key.first}, {"j", key.second}, {"terms", std::move(jt)}});
    }
    nlohmann::json jblocks = nlohmann::json::array();
    const auto blocks = weight_blocks(g);
    for (std::size_t p = 0; p < blocks.size(); ++p) {
        for (const auto& [chi, monos] : blocks[p]) {
            nlohmann::json jb{{"degree", p}, {"weight", chi}, {"monomials", monos}};
            if (p >= 1) {
                auto rit = blocks[p - 1].find(chi);
                const std::vector<Mono> rows =
                    rit == blocks[p - 1].end() ? std::vector<Mono>{} : rit->second;
                const auto M = differential_block(g, rows, monos);
                nlohmann::json jm = nlohmann::json::array();
                for (const auto& r : M) {
                    nlohmann::json jr = nlohmann::json::array();
                    for (const auto& x : r) jr.push_back(static_cast<long long>(x));
                    jm.push_back(std::move(jr));
                }
                jb["d_matrix"] = {{"rows", M.size()},
                                  {"cols", monos.size()},
                                  {"entries", std::move(jm)}};
            }
            jblocks.push_back(std::move(jb));
        }
    }
    nlohmann::json out{{"family", g.family == TableFamily::sp   ? "sp"
                                  : g.family == TableFamily::o  ? "o"
                                                                : "gl"},
                       {"params", std::move(params)},
                       {"basis", std::move(basis)},
                       {"brackets", std::move(brackets)},
                       {"blocks", std::move(jblocks)}};
    return out.dump(2) + "\n";
}

}  // namespace nilhom
