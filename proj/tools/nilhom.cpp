#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilhom/ce.hpp"
#include "nilhom/charlib.hpp"
#include "nilhom/kostant.hpp"
#include "nilhom/modrule.hpp"
#include "nilhom/partition.hpp"
#include "nilhom/weyl.hpp"

namespace {

using json = nlohmann::json;
using namespace nilhom;

std::string rat_str(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string tuple_str(const std::vector<Rat>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

long long binom(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

std::vector<int> to_int(const std::vector<long long>& v) {
    return std::vector<int>(v.begin(), v.end());
}

json mod_json(const ModificationResult& r, bool with_strips, bool with_assoc) {
    json j;
    if (r.index.is_infinite())
        j["index"] = "inf";
    else
        j["index"] = r.index.value();
    j["reduced"] = r.reduced ? json(r.reduced->parts()) : json(nullptr);
    if (with_strips) {
        json strips = json::array();
        for (const auto& s : r.strips)
            strips.push_back({{"remainder", s.remainder.parts()},
                              {"columns", s.columns},
                              {"rows", s.rows}});
        j["strips"] = std::move(strips);
    }
    if (with_assoc) j["associated"] = r.associated;
    return j;
}

json row_json(const HomologySummand& r) {
    json j{{"degree", r.degree}, {"e_label", r.e_label.parts()}, {"v_label", r.v_label}};
    if (r.f_label) j["f_label"] = r.f_label->parts();
    return j;
}

json rows_json(const std::vector<HomologySummand>& rows, std::size_t limit) {
    json a = json::array();
    for (std::size_t i = 0; i < rows.size() && i < limit; ++i) a.push_back(row_json(rows[i]));
    return a;
}

long long row_dimension(const HomologyTable& t, const HomologySummand& r) {
    long long d = irrep_dimension({GroupKind::GL, t.k, 0}, r.e_label.parts());
    switch (t.family) {
        case TableFamily::sp:
            return d * irrep_dimension({GroupKind::Sp, t.n, 0}, to_int(r.v_label));
        case TableFamily::o:
            if (t.n == 0) return d;
            return d * irrep_dimension({GroupKind::SO, t.n, t.m}, to_int(r.v_label));
        case TableFamily::gl:
            d *= irrep_dimension({GroupKind::GL, t.n, 0}, to_int(r.v_label));
            return d * irrep_dimension({GroupKind::GL, t.l, 0},
                                       r.f_label ? r.f_label->parts() : std::vector<int>{});
    }
    return d;
}

std::vector<long long> trim(std::vector<long long> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::vector<long long> table_betti(const HomologyTable& t) {
    std::vector<long long> b;
    for (const auto& r : t.rows) {
        if (static_cast<int>(b.size()) <= r.degree) b.resize(r.degree + 1, 0);
        b[r.degree] += row_dimension(t, r);
    }
    return trim(std::move(b));
}

std::vector<long long> weights_betti(const std::vector<WeightMap>& H) {
    std::vector<long long> b(H.size(), 0);
    for (std::size_t p = 0; p < H.size(); ++p)
        for (const auto& [w, c] : H[p]) b[p] += c;
    return trim(std::move(b));
}

struct SuiteReport {
    json checks = json::array();
    bool ok = true;

    void add(const std::string& name, bool pass, json detail = json()) {
        json c{{"name", name}, {"ok", pass}};
        if (!detail.is_null()) c["detail"] = std::move(detail);
        checks.push_back(std::move(c));
        ok = ok && pass;
    }

    std::string render(const std::string& suite, json params) const {
        json j{{"suite", suite}, {"params", std::move(params)}, {"checks", checks}, {"ok", ok}};
        return j.dump(2) + "\n";
    }
};

SuiteReport suite_counts(int max_n, int max_k) {
    SuiteReport rep;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= max_k; ++k) {
            const long long expected = (1LL << k) * binom(n + k, k);
            const auto table = homology_table_sp(n, k);
            const long long actual = static_cast<long long>(table.rows.size());
            rep.add("sp n=" + std::to_string(n) + " k=" + std::to_string(k),
                    expected == actual, json{{"expected", expected}, {"actual", actual}});
        }
    return rep;
}

SuiteReport suite_defs_agree(int n, int k) {
    SuiteReport rep;
    long long cases = 0;
    json mismatches = json::array();
    bool all_same = true;
    for (const auto& lam : partitions_in_box(k + 2 * n + 1, k)) {
        ++cases;
        const auto a = sp_modification_border(lam, n);
        const auto b = sp_modification_weyl(lam, n);
        const bool same = a.index == b.index && a.reduced == b.reduced;
        if (!same) {
            all_same = false;
            if (mismatches.size() < 10)
                mismatches.push_back(json{{"lambda", lam.parts()},
                                          {"border", mod_json(a, false, false)},
                                          {"weyl", mod_json(b, false, false)}});
        }
    }
    rep.add("defs-agree n=" + std::to_string(n) + " k=" + std::to_string(k), all_same,
            json{{"cases", cases}, {"mismatches", mismatches}});
    return rep;
}

struct OracleArgs {
    std::string family;
    int n = 0, k = 0, l = 0, m = 0;
};

LieStructure build_structure(const OracleArgs& a) {
    if (a.family == "sp") return build_lie_structure_sp(a.n, a.k);
    if (a.family == "o") return build_lie_structure_o(a.m, a.k);
    return build_lie_structure_gl(a.n, a.k, a.l);
}

HomologyTable predicted_table(const OracleArgs& a) {
    if (a.family == "sp") return homology_table_sp(a.n, a.k);
    if (a.family == "o") return homology_table_o(a.m, a.k);
    return homology_table_gl(a.n, a.k, a.l);
}

std::string instance_name(const OracleArgs& a) {
    if (a.family == "sp") return "sp n=" + std::to_string(a.n) + " k=" + std::to_string(a.k);
    if (a.family == "o") return "o m=" + std::to_string(a.m) + " k=" + std::to_string(a.k);
    return "gl n=" + std::to_string(a.n) + " k=" + std::to_string(a.k) +
           " l=" + std::to_string(a.l);
}

json oracle_params(const OracleArgs& a) {
    if (a.family == "sp") return {{"family", "sp"}, {"n", a.n}, {"k", a.k}};
    if (a.family == "o") return {{"family", "o"}, {"m", a.m}, {"k", a.k}};
    return {{"family", "gl"}, {"n", a.n}, {"k", a.k}, {"l", a.l}};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    f << text;
}

SuiteReport suite_oracle(const OracleArgs& a, const std::string& dump_path) {
    SuiteReport rep;
    const LieStructure g = build_structure(a);
    if (!dump_path.empty()) write_file(dump_path, dump_structure_json(g));
    const HomologyTable pred = predicted_table(a);
    if (a.family == "o" && a.m % 2 == 0) {
        const auto actual = weights_betti(ce_homology_weights(g));
        const auto expected = table_betti(pred);
        rep.add(instance_name(a) + " betti", actual == expected,
                json{{"level", "betti"}, {"expected", expected}, {"actual", actual}});
    } else {
        const HomologyTable oracle = equivariant_table_from_oracle(g);
        const TableDiff diff = compare_tables(pred, oracle);
        rep.add(instance_name(a) + " table", diff.empty(),
                json{{"level", "equivariant"},
                     {"rows", pred.rows.size()},
                     {"only_in_predicted", rows_json(diff.only_in_a, 10)},
                     {"only_in_oracle", rows_json(diff.only_in_b, 10)}});
    }
    return rep;
}

SuiteReport suite_heisenberg(int max_n) {
    SuiteReport rep;
    for (int n = 1; n <= max_n; ++n) {
        const auto actual = table_betti(homology_table_sp(n, 1));
        std::vector<long long> expected;
        for (int i = 0; i <= 2 * n + 1; ++i) {
            const int j = std::min(i, 2 * n + 1 - i);
            expected.push_back(binom(2 * n, j) - binom(2 * n, j - 2));
        }
        expected = trim(std::move(expected));
        rep.add("heisenberg n=" + std::to_string(n), actual == expected,
                json{{"expected", expected}, {"actual", actual}});
    }
    return rep;
}

SuiteReport suite_free2step(int max_k) {
    SuiteReport rep;
    for (int k = 1; k <= max_k; ++k) {
        const LieStructure g = build_lie_structure_o(1, k);
        const HomologyTable table = equivariant_table_from_oracle(g);
        std::map<int, std::vector<std::vector<int>>> actual;
        for (const auto& r : table.rows) actual[r.degree].push_back(r.e_label.parts());

        const int dim = k + k * (k - 1) / 2;
        std::map<int, std::vector<std::vector<int>>> expected;
        for (const auto& lam : all_partitions_up_to(2 * dim)) {
            if (!lam.self_dual() || lam.length() > k) continue;
            expected[(lam.size() + lam.rank()) / 2].push_back(lam.parts());
        }
        for (auto* side : {&actual, &expected})
            for (auto& [deg, labels] : *side) std::sort(labels.begin(), labels.end());

        json detail;
        detail["degrees"] = json::array();
        for (const auto& [deg, labels] : expected)
            detail["degrees"].push_back(json{{"degree", deg}, {"labels", labels}});
        rep.add("free2step k=" + std::to_string(k), actual == expected, std::move(detail));
    }
    return rep;
}

SuiteReport suite_euler(const OracleArgs& a, const std::string& dump_path) {
    SuiteReport rep;
    const LieStructure g = build_structure(a);
    if (!dump_path.empty()) write_file(dump_path, dump_structure_json(g));
    const auto H = ce_homology_weights(g);
    rep.add(instance_name(a) + " euler", euler_characteristic_holds(g, H),
            json{{"betti", weights_betti(H)}});
    return rep;
}

SuiteReport suite_lengths(int max_rank) {
    SuiteReport rep;
    const std::pair<WeylKind, const char*> kinds[] = {
        {WeylKind::BC, "BC"}, {WeylKind::D, "D"}, {WeylKind::A, "A"}};
    for (int N = 1; N <= max_rank; ++N)
        for (const auto& [kind, name] : kinds) {
            std::vector<Rat> rho;
            for (int i = 0; i < N; ++i) rho.emplace_back(N - i);
            const auto dist = bfs_length_map(kind, rho);
            long long mismatches = 0;
            for (const auto& [image, d] : dist)
                if (length(kind, image) != d) ++mismatches;
            rep.add(std::string(name) + "(" + std::to_string(N) + ")", mismatches == 0,
                    json{{"elements", dist.size()}, {"mismatches", mismatches}});
        }
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    std::ostringstream out;
    std::string out_path;
    int exit_code = 0;

    CLI::App app{"Equivariant homology tables of 2-step nilpotent Lie algebras"};
    app.require_subcommand(1);

    // homology <family> --n --k [--l | --m] [--format ...] [-o FILE]
    auto* hom = app.add_subcommand("homology", "Compute a homology table");
    std::string hom_family, hom_format = "json";
    int hom_n = 0, hom_k = 0, hom_l = 0, hom_m = 0;
    hom->add_option("family", hom_family, "sp, o, or gl")
        ->required()
        ->check(CLI::IsMember({"sp", "o", "gl"}));
    auto* hom_n_opt = hom->add_option("--n", hom_n, "dim of the V block (sp: V = C^{2n})");
    auto* hom_k_opt = hom->add_option("--k", hom_k, "dim E");
    auto* hom_l_opt = hom->add_option("--l", hom_l, "dim F (gl only)");
    auto* hom_m_opt = hom->add_option("--m", hom_m, "dim V (o only)");
    hom->add_option("--format", hom_format, "json, tsv, or paper")
        ->check(CLI::IsMember({"json", "tsv", "paper"}));
    hom->add_option("-o,--out", out_path, "write to file instead of stdout");
    hom->callback([&] {
        HomologyTable table;
        if (hom_family == "sp") {
            if (!hom_n_opt->count() || !hom_k_opt->count())
                throw std::invalid_argument("homology sp requires --n and --k");
            if (hom_l_opt->count() || hom_m_opt->count())
                throw std::invalid_argument("--l/--m do not apply to the sp family");
            if (hom_n < 1 || hom_k < 1 || hom_n + hom_k > 12)
                throw std::invalid_argument("homology sp: need n, k >= 1 and n + k <= 12");
            table = homology_table_sp(hom_n, hom_k);
        } else if (hom_family == "o") {
            if (!hom_m_opt->count() || !hom_k_opt->count())
                throw std::invalid_argument("homology o requires --m and --k");
            if (hom_n_opt->count() || hom_l_opt->count())
                throw std::invalid_argument("--n/--l do not apply to the o family");
            if (hom_m < 1 || hom_k < 1 || hom_m / 2 + hom_k > 12)
                throw std::invalid_argument("homology o: need m, k >= 1 and m/2 + k <= 12");
            table = homology_table_o(hom_m, hom_k);
        } else {
            if (!hom_n_opt->count() || !hom_k_opt->count() || !hom_l_opt->count())
                throw std::invalid_argument("homology gl requires --n, --k and --l");
            if (hom_m_opt->count())
                throw std::invalid_argument("--m does not apply to the gl family");
            if (hom_n < 1 || hom_k < 1 || hom_l < 1 || hom_n + hom_k + hom_l > 12)
                throw std::invalid_argument("homology gl: need n, k, l >= 1 and n + k + l <= 12");
            table = homology_table_gl(hom_n, hom_k, hom_l);
        }
        if (hom_format == "json")
            out << render_json(table);
        else if (hom_format == "tsv")
            out << render_tsv(table);
        else
            out << render_paper(table);
    });

    // modrule <family> --lambda "[...]" (--n | --m) [-o FILE]
    auto* mod = app.add_subcommand("modrule", "Run a modification rule on one partition");
    std::string mod_family, mod_lambda;
    int mod_n = 0, mod_m = 0;
    mod->add_option("family", mod_family, "sp or o")
        ->required()
        ->check(CLI::IsMember({"sp", "o"}));
    mod->add_option("--lambda", mod_lambda, "partition as a JSON array, e.g. [3,1,1]")
        ->required();
    auto* mod_n_opt = mod->add_option("--n", mod_n, "sp: V = C^{2n}");
    auto* mod_m_opt = mod->add_option("--m", mod_m, "o: dim V");
    mod->add_option("-o,--out", out_path, "write to file instead of stdout");
    mod->callback([&] {
        const Partition lam = Partition::parse(mod_lambda);
        json j;
        if (mod_family == "sp") {
            if (!mod_n_opt->count() || mod_m_opt->count())
                throw std::invalid_argument("modrule sp takes --n (and not --m)");
            if (mod_n < 0) throw std::invalid_argument("modrule sp: need n >= 0");
            const auto border = sp_modification_border(lam, mod_n);
            const auto weyl = sp_modification_weyl(lam, mod_n);
            j = json{{"family", "sp"},
                     {"lambda", lam.parts()},
                     {"n", mod_n},
                     {"border", mod_json(border, true, false)},
                     {"weyl", mod_json(weyl, false, false)},
                     {"agree", border.index == weyl.index && border.reduced == weyl.reduced}};
        } else {
            if (!mod_m_opt->count() || mod_n_opt->count())
                throw std::invalid_argument("modrule o takes --m (and not --n)");
            if (mod_m < 1) throw std::invalid_argument("modrule o: need m >= 1");
            const auto res = o_modification_border(lam, mod_m);
            j = mod_json(res, true, true);
            j["family"] = "o";
            j["lambda"] = lam.parts();
            j["m"] = mod_m;
        }
        out << j.dump(2) << "\n";
    });

    // verify <suite> [...]
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->require_subcommand(1);
    SuiteReport report;
    std::string suite_name;
    json suite_params;

    auto* v_counts = ver->add_subcommand("counts", "sp table row counts vs 2^k C(n+k,k)");
    int vc_max_n = 4, vc_max_k = 4;
    v_counts->add_option("--max-n", vc_max_n)->check(CLI::Range(1, 6));
    v_counts->add_option("--max-k", vc_max_k)->check(CLI::Range(1, 6));
    v_counts->add_option("-o,--out", out_path, "write report to file");
    v_counts->callback([&] {
        suite_name = "counts";
        suite_params = {{"max_n", vc_max_n}, {"max_k", vc_max_k}};
        report = suite_counts(vc_max_n, vc_max_k);
    });

    auto* v_defs = ver->add_subcommand("defs-agree",
                                       "border-strip vs signed-sort modification rule");
    int vd_n = 0, vd_k = 0;
    v_defs->add_option("--n", vd_n)->required()->check(CLI::Range(0, 8));
    v_defs->add_option("--k", vd_k)->required()->check(CLI::Range(1, 6));
    v_defs->add_option("-o,--out", out_path, "write report to file");
    v_defs->callback([&] {
        suite_name = "defs-agree";
        suite_params = {{"n", vd_n}, {"k", vd_k}};
        report = suite_defs_agree(vd_n, vd_k);
    });

    OracleArgs oa;
    std::string dump_path;
    auto* v_oracle = ver->add_subcommand("oracle", "brute-force homology vs enumerated table");
    v_oracle->add_option("--family", oa.family)
        ->required()
        ->check(CLI::IsMember({"sp", "o", "gl"}));
    auto* vo_n = v_oracle->add_option("--n", oa.n);
    auto* vo_k = v_oracle->add_option("--k", oa.k);
    auto* vo_l = v_oracle->add_option("--l", oa.l);
    auto* vo_m = v_oracle->add_option("--m", oa.m);
    v_oracle->add_option("--dump-structure", dump_path,
                         "also write structure constants and matrices to FILE");
    v_oracle->add_option("-o,--out", out_path, "write report to file");
    auto check_oracle_args = [](const OracleArgs& a, const CLI::Option* n, const CLI::Option* k,
                                const CLI::Option* l, const CLI::Option* m) {
        if (a.family == "sp" && (!n->count() || !k->count() || l->count() || m->count()))
            throw std::invalid_argument("family sp takes --n and --k");
        if (a.family == "o" && (!m->count() || !k->count() || n->count() || l->count()))
            throw std::invalid_argument("family o takes --m and --k");
        if (a.family == "gl" && (!n->count() || !k->count() || !l->count() || m->count()))
            throw std::invalid_argument("family gl takes --n, --k and --l");
    };
    v_oracle->callback([&, check_oracle_args] {
        check_oracle_args(oa, vo_n, vo_k, vo_l, vo_m);
        suite_name = "oracle";
        suite_params = oracle_params(oa);
        report = suite_oracle(oa, dump_path);
    });

    auto* v_heis = ver->add_subcommand("heisenberg", "k=1 Betti numbers vs binomial formula");
    int vh_max_n = 5;
    v_heis->add_option("--max-n", vh_max_n)->check(CLI::Range(1, 10));
    v_heis->add_option("-o,--out", out_path, "write report to file");
    v_heis->callback([&] {
        suite_name = "heisenberg";
        suite_params = {{"max_n", vh_max_n}};
        report = suite_heisenberg(vh_max_n);
    });

    auto* v_free = ver->add_subcommand("free2step",
                                       "free 2-step homology vs self-dual partitions");
    int vf_max_k = 3;
    v_free->add_option("--max-k", vf_max_k)->check(CLI::Range(1, 4));
    v_free->add_option("-o,--out", out_path, "write report to file");
    v_free->callback([&] {
        suite_name = "free2step";
        suite_params = {{"max_k", vf_max_k}};
        report = suite_free2step(vf_max_k);
    });

    auto* v_euler = ver->add_subcommand("euler", "Euler characteristic identity on the oracle");
    OracleArgs ea;
    std::string euler_dump_path;
    v_euler->add_option("--family", ea.family)
        ->required()
        ->check(CLI::IsMember({"sp", "o", "gl"}));
    auto* ve_n = v_euler->add_option("--n", ea.n);
    auto* ve_k = v_euler->add_option("--k", ea.k);
    auto* ve_l = v_euler->add_option("--l", ea.l);
    auto* ve_m = v_euler->add_option("--m", ea.m);
    v_euler->add_option("--dump-structure", euler_dump_path,
                        "also write structure constants and matrices to FILE");
    v_euler->add_option("-o,--out", out_path, "write report to file");
    v_euler->callback([&, check_oracle_args] {
        check_oracle_args(ea, ve_n, ve_k, ve_l, ve_m);
        suite_name = "euler";
        suite_params = oracle_params(ea);
        report = suite_euler(ea, euler_dump_path);
    });

    auto* v_len = ver->add_subcommand("lengths", "statistics length vs Cayley-graph distance");
    int vl_max_rank = 3;
    v_len->add_option("--max-rank", vl_max_rank)->check(CLI::Range(1, 5));
    v_len->add_option("-o,--out", out_path, "write report to file");
    v_len->callback([&] {
        suite_name = "lengths";
        suite_params = {{"max_rank", vl_max_rank}};
        report = suite_lengths(vl_max_rank);
    });

    // wp <family> --n --k [--l | --m] [--brute]
    auto* wp = app.add_subcommand("wp", "List minimal coset representatives: w(rho) and length");
    std::string wp_family;
    int wp_n = 0, wp_k = 0, wp_l = 0, wp_m = 0;
    bool wp_brute = false;
    wp->add_option("family", wp_family, "sp, o, or gl")
        ->required()
        ->check(CLI::IsMember({"sp", "o", "gl"}));
    auto* wp_n_opt = wp->add_option("--n", wp_n);
    auto* wp_k_opt = wp->add_option("--k", wp_k);
    auto* wp_l_opt = wp->add_option("--l", wp_l);
    auto* wp_m_opt = wp->add_option("--m", wp_m);
    wp->add_flag("--brute", wp_brute, "filter the whole group instead (rank <= 8)");
    wp->add_option("-o,--out", out_path, "write to file instead of stdout");
    wp->callback([&] {
        Family fam;
        int n = 0, k = wp_k, l = 0;
        if (wp_family == "sp") {
            if (!wp_n_opt->count() || !wp_k_opt->count() || wp_l_opt->count() ||
                wp_m_opt->count())
                throw std::invalid_argument("wp sp takes --n and --k");
            fam = Family::sp;
            n = wp_n;
        } else if (wp_family == "o") {
            if (!wp_m_opt->count() || !wp_k_opt->count() || wp_n_opt->count() ||
                wp_l_opt->count())
                throw std::invalid_argument("wp o takes --m and --k");
            fam = wp_m % 2 ? Family::o_odd : Family::o_even;
            n = wp_m / 2;
        } else {
            if (!wp_n_opt->count() || !wp_k_opt->count() || !wp_l_opt->count() ||
                wp_m_opt->count())
                throw std::invalid_argument("wp gl takes --n, --k and --l");
            fam = Family::gl;
            n = wp_n;
            l = wp_l;
        }
        const auto elements =
            wp_brute ? enumerate_WP_brute(fam, n, k, l) : enumerate_WP(fam, n, k, l);
        for (const auto& w : elements)
            out << tuple_str(w.image) << "  " << length(w) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }

    if (!suite_name.empty()) {
        out << report.render(suite_name, suite_params);
        exit_code = report.ok ? 0 : 1;
    }
    if (out_path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 2;
        }
        f << out.str();
    }
    return exit_code;
}
