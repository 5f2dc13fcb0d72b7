#include "nilhom/kostant.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace nilhom {

namespace {

std::vector<long long> weight_of(const SignedPermutation& w, const std::vector<Rat>& rho) {
    std::vector<long long> w0(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const Rat d = w.image[i] - rho[i];
        if (d.denominator() != 1)
            throw std::logic_error("levi weight must be integral");
        w0[i] = d.numerator();
    }
    return w0;
}

Partition partition_from_block(std::vector<long long> xs, const char* what) {
    std::vector<int> parts;
    parts.reserve(xs.size());
    for (long long x : xs) {
        if (x < 0) throw std::logic_error(std::string(what) + ": negative entry");
        parts.push_back(static_cast<int>(x));
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw std::logic_error(std::string(what) + ": non-monotone block");
    }
}

void canonical_sort(HomologyTable& table) {
    std::sort(table.rows.begin(), table.rows.end(),
              [](const HomologySummand& a, const HomologySummand& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  return a.levi_weight < b.levi_weight;
              });
}

nlohmann::json to_json_array(const Partition& p) {
    return nlohmann::json(p.parts());
}

nlohmann::json v_label_json(TableFamily family, const HomologySummand& row) {
    if (family == TableFamily::gl) {
        auto [alpha, beta] = mixed_pair(row.v_label);
        return nlohmann::json{{"alpha", alpha.parts()}, {"beta", beta.parts()}};
    }
    return nlohmann::json(row.v_label);
}

std::string family_name(TableFamily family) {
    switch (family) {
        case TableFamily::sp: return "sp";
        case TableFamily::o: return "o";
        case TableFamily::gl: return "gl";
    }
    throw std::invalid_argument("unknown table family");
}

std::string json_ints(const std::vector<long long>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

}  // namespace

std::pair<Partition, Partition> mixed_pair(const std::vector<long long>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) throw std::logic_error("mixed_pair: non-monotone block");
    std::vector<int> alpha, beta;
    for (long long x : v)
        if (x > 0) alpha.push_back(static_cast<int>(x));
    for (auto it = v.rbegin(); it != v.rend(); ++it)
        if (*it < 0) beta.push_back(static_cast<int>(-*it));
    return {Partition(std::move(alpha)), Partition(std::move(beta))};
}

bool negative_tag(const std::vector<long long>& v) {
    return !v.empty() && v.back() < 0;
}

Partition abs_partition(const std::vector<long long>& v) {
    auto xs = v;
    if (!xs.empty() && xs.back() < 0) xs.back() = -xs.back();
    std::sort(xs.begin(), xs.end(), std::greater<long long>());
    return partition_from_block(std::move(xs), "abs_partition");
}

SignedPermutation w_from_partition(const Partition& lambda, int n, int k) {
    if (lambda.length() > n || lambda.part(0) > k)
        throw std::invalid_argument("w_from_partition: partition outside rectangle");
    const LatticePath path = to_lattice_path(lambda, n, k);
    SignedPermutation w{WeylType{WeylKind::BC, n + k}, {}};
    w.image.reserve(n + k);
    for (auto it = path.rights.rbegin(); it != path.rights.rend(); ++it)
        w.image.emplace_back(*it);
    for (auto it = path.ups.rbegin(); it != path.ups.rend(); ++it)
        w.image.emplace_back(*it);

    const auto rho = rho_vector(Family::sp, n, k);
    if (!in_WP(Family::sp, w.image, n, k))
        throw std::logic_error("w_from_partition: image not a minimal representative");
    if (length(w) != lambda.size())
        throw std::logic_error("w_from_partition: length differs from |lambda|");
    const auto w0 = dot_action(w, std::vector<Rat>(n + k, Rat(0)), rho);
    const Partition lt = lambda.transpose();
    for (int i = 0; i < k; ++i)
        if (w0[i] != Rat(-lt.part(k - 1 - i)))
            throw std::logic_error("w_from_partition: E-block of the dot action is off");
    for (int i = 0; i < n; ++i)
        if (w0[k + i] != Rat(lambda.part(i)))
            throw std::logic_error("w_from_partition: V-block of the dot action is off");
    return w;
}

SignedPermutation strip_lift(const SignedPermutation& w, int c, int k) {
    if (c < 1 || c > k) throw std::invalid_argument("strip_lift: c out of range");
    SignedPermutation out = w;
    const int pos = k - c;
    const Rat val = out.image[pos];
    out.image.erase(out.image.begin() + pos);
    out.image.insert(out.image.begin() + (k - 1), -val);
    return out;
}

std::vector<ProvenancedElement> enumerate_WP_structured_sp(int n, int k) {
    if (n + k > 12) throw std::invalid_argument("enumerate_WP_structured_sp: rank exceeds budget");
    std::vector<ProvenancedElement> out;
    for (const Partition& lam : partitions_in_box(n, k)) {
        const SignedPermutation base = w_from_partition(lam, n, k);
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            ProvenancedElement el{lam, {}, base};
            for (int c = 1; c <= k; ++c) {
                if (!(mask >> (c - 1) & 1)) continue;
                el.subset.push_back(c);
                el.w = strip_lift(el.w, c, k);
            }
            out.push_back(std::move(el));
        }
    }
    return out;
}

ParsedLabels parse_levi_weight(const std::vector<long long>& w0, TableFamily family,
                               int n, int k, int l) {
    ParsedLabels out;
    std::vector<long long> e(k);
    for (int i = 0; i < k; ++i) e[i] = -w0[k - 1 - i];
    out.e_label = partition_from_block(std::move(e), "parse_levi_weight E block");

    if (family == TableFamily::gl) {
        out.v_label.assign(w0.begin() + k, w0.begin() + k + n);
        for (int i = 0; i + 1 < n; ++i)
            if (out.v_label[i] < out.v_label[i + 1])
                throw std::logic_error("parse_levi_weight: non-monotone V block");
        out.f_label = partition_from_block(
            std::vector<long long>(w0.begin() + k + n, w0.begin() + k + n + l),
            "parse_levi_weight F block");
    } else {
        out.v_label.assign(w0.begin() + k, w0.end());
        for (int i = 0; i + 1 < n; ++i)
            if (out.v_label[i] < out.v_label[i + 1])
                throw std::logic_error("parse_levi_weight: non-monotone V block");
    }
    return out;
}

HomologyTable homology_table_sp(int n, int k) {
    HomologyTable table;
    table.family = TableFamily::sp;
    table.n = n;
    table.k = k;
    const auto rho = rho_vector(Family::sp, n, k);
    for (const ProvenancedElement& el : enumerate_WP_structured_sp(n, k)) {
        HomologySummand row;
        row.degree = static_cast<int>(length(el.w));
        row.levi_weight = weight_of(el.w, rho);
        ParsedLabels labels = parse_levi_weight(row.levi_weight, TableFamily::sp, n, k);
        row.e_label = std::move(labels.e_label);
        row.v_label = std::move(labels.v_label);
        while (!row.v_label.empty() && row.v_label.back() == 0) row.v_label.pop_back();
        table.rows.push_back(std::move(row));
    }
    canonical_sort(table);
    return table;
}

HomologyTable homology_table_o(int m, int k) {
    HomologyTable table;
    table.family = TableFamily::o;
    table.m = m;
    table.n = m / 2;
    table.k = k;
    const Family fam = m % 2 ? Family::o_odd : Family::o_even;
    const auto rho = rho_vector(fam, table.n, k);
    for (const SignedPermutation& w : enumerate_WP(fam, table.n, k)) {
        HomologySummand row;
        row.degree = static_cast<int>(length(w));
        row.levi_weight = weight_of(w, rho);
        ParsedLabels labels = parse_levi_weight(row.levi_weight, TableFamily::o, table.n, k);
        row.e_label = std::move(labels.e_label);
        row.v_label = std::move(labels.v_label);
        table.rows.push_back(std::move(row));
    }
    canonical_sort(table);
    return table;
}

HomologyTable homology_table_gl(int n, int k, int l) {
    HomologyTable table;
    table.family = TableFamily::gl;
    table.n = n;
    table.k = k;
    table.l = l;
    const auto rho = rho_vector(Family::gl, n, k, l);
    for (const SignedPermutation& w : enumerate_WP(Family::gl, n, k, l)) {
        HomologySummand row;
        row.degree = static_cast<int>(length(w));
        row.levi_weight = weight_of(w, rho);
        ParsedLabels labels = parse_levi_weight(row.levi_weight, TableFamily::gl, n, k, l);
        row.e_label = std::move(labels.e_label);
        row.v_label = std::move(labels.v_label);
        row.f_label = std::move(labels.f_label);
        table.rows.push_back(std::move(row));
    }
    canonical_sort(table);
    return table;
}

std::vector<ModRuleRow> table_from_modification_rule_sp(int n, int k) {
    std::vector<ModRuleRow> rows;
    for (const Partition& lam : partitions_in_box(k + 2 * n + 1, k)) {
        const ModificationResult res = sp_modification_border(lam, n);
        if (res.index.is_infinite()) continue;
        ModRuleRow row;
        row.degree = lam.size() - static_cast<int>(res.index.value());
        row.e_label = lam.transpose();
        for (int x : res.reduced->parts()) row.v_label.push_back(x);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

Partition so_collapse(const Partition& tau, int m) {
    const int n = m / 2;
    Partition td = tau.transpose();
    if (td.part(0) > n) {
        std::vector<int> td2;
        td2.push_back(m - td.part(0));
        for (int i = 1; i < td.length(); ++i) td2.push_back(td.part(i));
        std::sort(td2.begin(), td2.end(), std::greater<int>());
        while (!td2.empty() && td2.back() == 0) td2.pop_back();
        td = Partition(std::move(td2));
        Partition out = td.transpose();
        if (out.length() > n && n > 0)
            throw std::logic_error("so_collapse: label still too long");
        return out;
    }
    return tau;
}

std::vector<ModRuleRow> table_from_modification_rule_o(int m, int k) {
    const int n = m / 2;
    std::vector<ModRuleRow> rows;
    for (const Partition& lam : partitions_in_box(k + m + 4, k)) {
        const ModificationResult res = o_modification_border(lam, m);
        if (res.index.is_infinite()) continue;
        const int deg = lam.size() - static_cast<int>(res.index.value());
        const Partition e = lam.transpose();
        const Partition so = so_collapse(*res.reduced, m);
        if (m % 2 == 0 && so.length() == n && n > 0 && so.part(n - 1) > 0) {
            ModRuleRow plus{deg, e, {}};
            ModRuleRow minus{deg, e, {}};
            for (int i = 0; i < n; ++i) {
                plus.v_label.push_back(so.part(i));
                minus.v_label.push_back(i == n - 1 ? -so.part(i) : so.part(i));
            }
            rows.push_back(std::move(plus));
            rows.push_back(std::move(minus));
        } else {
            ModRuleRow row{deg, e, {}};
            for (int i = 0; i < n; ++i) row.v_label.push_back(so.part(i));
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

std::string render_json(const HomologyTable& table) {
    nlohmann::json params;
    switch (table.family) {
        case TableFamily::sp:
            params = {{"n", table.n}, {"k", table.k}};
            break;
        case TableFamily::o:
            params = {{"m", table.m}, {"k", table.k}};
            break;
        case TableFamily::gl:
            params = {{"n", table.n}, {"k", table.k}, {"l", table.l}};
            break;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json jr{{"degree", row.degree},
                          {"e_label", to_json_array(row.e_label)},
                          {"v_label", v_label_json(table.family, row)},
                          {"levi_weight", row.levi_weight}};
        if (row.f_label) jr["f_label"] = to_json_array(*row.f_label);
        rows.push_back(std::move(jr));
    }
    nlohmann::json out{{"family", family_name(table.family)},
                       {"params", std::move(params)},
                       {"rows", std::move(rows)}};
    return out.dump(2) + "\n";
}

std::string render_tsv(const HomologyTable& table) {
    std::string out;
    for (const auto& row : table.rows) {
        out += std::to_string(row.degree);
        out += '\t';
        out += row.e_label.to_string();
        out += '\t';
        out += json_ints(row.v_label);
        if (table.family == TableFamily::gl) {
            out += '\t';
            out += row.f_label->to_string();
        }
        out += '\t';
        out += json_ints(row.levi_weight);
        out += '\n';
    }
    return out;
}

std::string render_paper(const HomologyTable& table) {
    std::string out;
    for (const auto& row : table.rows) {
        out += std::to_string(row.degree);
        out += "  (";
        for (std::size_t i = 0; i < row.levi_weight.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(row.levi_weight[i]);
        }
        out += ")\n";
    }
    return out;
}

}  // namespace nilhom
