#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "nilhom/ce.hpp"
#include "nilhom/charlib.hpp"
#include "nilhom/kostant.hpp"
#include "nilhom/modrule.hpp"
#include "nilhom/partition.hpp"
#include "nilhom/weyl.hpp"

using nilhom::GroupKind;
using nilhom::HomologyTable;
using nilhom::LieStructure;
using nilhom::Partition;
using nilhom::TableFamily;
using nilhom::WeightMap;

namespace {

// Budgets in seconds; 0 means untimed. Values are part of the contract.
constexpr double kBudgetGolden = 1.0;
constexpr double kBudgetCounts = 5.0;
constexpr double kBudgetDefsAgree = 30.0;
constexpr double kBudgetRuleMatch = 60.0;
constexpr double kBudgetOracle = 600.0;
constexpr double kBudgetHeisenberg = 5.0;
constexpr double kBudgetFreeTwoStep = 60.0;
constexpr double kBudgetLengths = 60.0;

int failures = 0;

void criterion(int id, const char* name, double budget,
               const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && budget > 0 && secs > budget) {
        ok = false;
        note = "budget exceeded";
    }
    std::string timing = budget > 0 ? " (budget " + std::to_string(static_cast<int>(budget)) + "s)"
                                    : " (untimed)";
    std::printf("%s  criterion %2d  %-38s %7.2fs%s%s%s\n", ok ? "PASS" : "FAIL", id, name, secs,
                timing.c_str(), note.empty() ? "" : "  -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (long long i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

std::string run_cli(const std::string& args, int& code) {
    std::string cmd = std::string("'") + NILHOM_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return out;
}

struct OracleInstance {
    TableFamily family;
    int n = 0, k = 0, l = 0, m = 0;
    bool betti_only = false;
    std::string name;
};

std::vector<OracleInstance> oracle_instances() {
    std::vector<OracleInstance> out;
    for (auto [n, k] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}})
        out.push_back({TableFamily::sp, n, k, 0, 0, false,
                       "sp n=" + std::to_string(n) + " k=" + std::to_string(k)});
    for (auto [m, k] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{3, 1}, std::pair{3, 2}})
        out.push_back({TableFamily::o, m / 2, k, 0, m, false,
                       "o m=" + std::to_string(m) + " k=" + std::to_string(k)});
    for (auto [m, k] : {std::pair{2, 1}, std::pair{2, 2}})
        out.push_back({TableFamily::o, m / 2, k, 0, m, true,
                       "o m=" + std::to_string(m) + " k=" + std::to_string(k)});
    for (auto [n, k, l] : {std::tuple{1, 1, 1}, std::tuple{2, 1, 1}, std::tuple{1, 2, 1},
                           std::tuple{2, 2, 1}})
        out.push_back({TableFamily::gl, n, k, l, 0, false,
                       "gl n=" + std::to_string(n) + " k=" + std::to_string(k) +
                           " l=" + std::to_string(l)});
    return out;
}

LieStructure build(const OracleInstance& inst) {
    switch (inst.family) {
        case TableFamily::sp:
            return nilhom::build_lie_structure_sp(inst.n, inst.k);
        case TableFamily::o:
            return nilhom::build_lie_structure_o(inst.m, inst.k);
        case TableFamily::gl:
            return nilhom::build_lie_structure_gl(inst.n, inst.k, inst.l);
    }
    throw std::logic_error("unreachable");
}

HomologyTable predicted(const OracleInstance& inst) {
    switch (inst.family) {
        case TableFamily::sp:
            return nilhom::homology_table_sp(inst.n, inst.k);
        case TableFamily::o:
            return nilhom::homology_table_o(inst.m, inst.k);
        case TableFamily::gl:
            return nilhom::homology_table_gl(inst.n, inst.k, inst.l);
    }
    throw std::logic_error("unreachable");
}

long long predicted_dimension(const HomologyTable& table, int degree) {
    long long total = 0;
    for (const auto& row : table.rows) {
        if (row.degree != degree) continue;
        long long d = nilhom::irrep_dimension({GroupKind::GL, table.k}, row.e_label.parts());
        if (table.family == TableFamily::o && table.n > 0) {
            std::vector<int> v(row.v_label.begin(), row.v_label.end());
            d *= nilhom::irrep_dimension({GroupKind::SO, table.n, table.m}, v);
        }
        total += d;
    }
    return total;
}

// filled by criterion 5, reused by criterion 10
std::vector<std::pair<OracleInstance, std::pair<LieStructure, std::vector<WeightMap>>>> computed;

void ensure_computed() {
    if (!computed.empty()) return;
    for (const OracleInstance& inst : oracle_instances()) {
        LieStructure g = build(inst);
        auto H = nilhom::ce_homology_weights(g);
        computed.push_back({inst, {std::move(g), std::move(H)}});
    }
}

Partition random_partition(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(0, 9);
    std::uniform_int_distribution<int> value(1, 9);
    std::vector<int> parts(static_cast<size_t>(count(rng)));
    for (auto& p : parts) p = value(rng);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

bool strictly_decreasing_columns(const nilhom::ModificationResult& res) {
    for (size_t t = 0; t + 1 < res.strips.size(); ++t)
        if (res.strips[t].columns <= res.strips[t + 1].columns) return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "golden table through the CLI", kBudgetGolden, [](std::string& note) {
        std::ifstream in(std::string(NILHOM_FIXTURES_DIR) + "/sp_2_2_table.txt", std::ios::binary);
        if (!in.good()) {
            note = "fixture missing";
            return false;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        int code = -1;
        std::string out = run_cli("homology sp --n 2 --k 2 --format paper", code);
        if (code != 0) {
            note = "exit code " + std::to_string(code);
            return false;
        }
        if (out != buf.str()) {
            note = "output differs from fixture";
            return false;
        }
        return true;
    });

    criterion(2, "row counts are 2^k C(n+k,k)", kBudgetCounts, [](std::string& note) {
        for (int n = 1; n <= 4; ++n)
            for (int k = 1; k <= 4; ++k) {
                auto table = nilhom::homology_table_sp(n, k);
                long long expected = (1LL << k) * binom(n + k, k);
                if (static_cast<long long>(table.rows.size()) != expected) {
                    note = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": got " +
                           std::to_string(table.rows.size()) + " rows, expected " +
                           std::to_string(expected);
                    return false;
                }
            }
        return true;
    });

    criterion(3, "modification definitions agree", kBudgetDefsAgree, [](std::string& note) {
        for (int n = 1; n <= 3; ++n)
            for (int k = 1; k <= 3; ++k)
                for (const Partition& lam : nilhom::partitions_in_box(k + 2 * n + 1, k)) {
                    auto border = nilhom::sp_modification_border(lam, n);
                    auto weyl = nilhom::sp_modification_weyl(lam, n);
                    if (border.index != weyl.index || border.reduced != weyl.reduced) {
                        note = "mismatch at lambda=" + lam.to_string() +
                               " n=" + std::to_string(n);
                        return false;
                    }
                }
        return true;
    });

    criterion(4, "enumeration matches the modification rule", kBudgetRuleMatch,
              [](std::string& note) {
                  for (int n = 1; n <= 3; ++n)
                      for (int k = 1; k <= 3; ++k) {
                          std::vector<nilhom::ModRuleRow> got;
                          for (const auto& row : nilhom::homology_table_sp(n, k).rows)
                              got.push_back({row.degree, row.e_label, row.v_label});
                          auto want = nilhom::table_from_modification_rule_sp(n, k);
                          std::sort(got.begin(), got.end());
                          std::sort(want.begin(), want.end());
                          if (got != want) {
                              note = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                              return false;
                          }
                      }
                  return true;
              });

    criterion(5, "brute-force homology matches the tables", kBudgetOracle, [](std::string& note) {
        ensure_computed();
        for (const auto& [inst, data] : computed) {
            const auto& [g, H] = data;
            if (inst.betti_only) {
                HomologyTable table = predicted(inst);
                for (size_t p = 0; p < H.size(); ++p) {
                    if (nilhom::dimension(H[p]) !=
                        predicted_dimension(table, static_cast<int>(p))) {
                        note = inst.name + ": dimension mismatch in degree " + std::to_string(p);
                        return false;
                    }
                }
            } else {
                auto diff = nilhom::compare_tables(nilhom::equivariant_table_from_oracle(g),
                                                   predicted(inst));
                if (!diff.empty()) {
                    note = inst.name + ": " + std::to_string(diff.only_in_a.size()) + "+" +
                           std::to_string(diff.only_in_b.size()) + " unmatched rows";
                    return false;
                }
            }
        }
        return true;
    });

    criterion(6, "Heisenberg dimension sequence", kBudgetHeisenberg, [](std::string& note) {
        for (int n = 1; n <= 5; ++n) {
            HomologyTable table = nilhom::homology_table_sp(n, 1);
            for (int i = 0; i <= 2 * n + 1; ++i) {
                long long got = 0;
                for (const auto& row : table.rows) {
                    if (row.degree != i) continue;
                    std::vector<int> v(row.v_label.begin(), row.v_label.end());
                    got += nilhom::irrep_dimension({GroupKind::GL, 1}, row.e_label.parts()) *
                           nilhom::irrep_dimension({GroupKind::Sp, n}, v);
                }
                int j = std::min(i, 2 * n + 1 - i);
                long long want = binom(2 * n, j) - binom(2 * n, j - 2);
                if (got != want) {
                    note = "n=" + std::to_string(n) + " degree " + std::to_string(i) + ": got " +
                           std::to_string(got) + ", expected " + std::to_string(want);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(7, "free two-step algebras carry self-dual labels", kBudgetFreeTwoStep,
              [](std::string& note) {
                  for (int k = 1; k <= 3; ++k) {
                      int dim = k + k * (k - 1) / 2;
                      std::map<int, std::multiset<Partition>> expected;
                      for (const Partition& lam : nilhom::all_partitions_up_to(2 * dim))
                          if (lam.self_dual() && lam.length() <= k)
                              expected[(lam.size() + lam.rank()) / 2].insert(lam);
                      std::map<int, std::multiset<Partition>> got;
                      for (const auto& row : nilhom::homology_table_o(1, k).rows)
                          got[row.degree].insert(row.e_label);
                      if (got != expected) {
                          note = "k=" + std::to_string(k);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(8, "length formula matches graph distance", kBudgetLengths, [](std::string& note) {
        using nilhom::WeylKind;
        for (WeylKind kind : {WeylKind::BC, WeylKind::D, WeylKind::A}) {
            for (int rank = (kind == WeylKind::D ? 2 : 1); rank <= 3; ++rank) {
                std::vector<nilhom::Rat> rho;
                for (int i = rank; i >= 1; --i) rho.emplace_back(i);
                for (const auto& [image, dist] : nilhom::bfs_length_map(kind, rho)) {
                    if (nilhom::length(kind, image) != dist) {
                        note = "kind " + std::to_string(static_cast<int>(kind)) + " rank " +
                               std::to_string(rank);
                        return false;
                    }
                }
            }
        }
        return true;
    });

    criterion(9, "strip trails have decreasing column counts", 0, [](std::string& note) {
        for (const Partition& lam : nilhom::partitions_in_box(9, 3))
            if (!strictly_decreasing_columns(nilhom::sp_modification_border(lam, 1))) {
                note = "lambda=" + lam.to_string();
                return false;
            }
        std::mt19937 rng(7u);
        std::uniform_int_distribution<int> nn(0, 3);
        for (int trial = 0; trial < 500; ++trial) {
            Partition lam = random_partition(rng);
            int n = nn(rng);
            if (!strictly_decreasing_columns(nilhom::sp_modification_border(lam, n))) {
                note = "lambda=" + lam.to_string() + " n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(10, "Euler characteristic factorizes", 0, [](std::string& note) {
        ensure_computed();
        for (const auto& [inst, data] : computed) {
            if (!nilhom::euler_characteristic_holds(data.first, data.second)) {
                note = inst.name;
                return false;
            }
        }
        return true;
    });

    criterion(11, "low degrees are stable", 0, [](std::string& note) {
        for (int n = 1; n <= 4; ++n) {
            for (int k = 1; k <= 3; ++k) {
                HomologyTable table = nilhom::homology_table_sp(n, k);
                for (int i = 0; i <= n; ++i) {
                    std::multiset<std::pair<Partition, std::vector<long long>>> got, want;
                    for (const auto& row : table.rows)
                        if (row.degree == i) got.insert({row.e_label, row.v_label});
                    for (const Partition& lam : nilhom::all_partitions_up_to(n)) {
                        if (lam.size() != i || lam.part(0) > k) continue;
                        want.insert({lam.transpose(),
                                     std::vector<long long>(lam.parts().begin(),
                                                            lam.parts().end())});
                    }
                    if (got != want) {
                        note = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               " degree " + std::to_string(i);
                        return false;
                    }
                }
            }
        }
        return true;
    });

    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
