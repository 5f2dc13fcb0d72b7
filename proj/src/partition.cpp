#include "nilhom/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace nilhom {

namespace {

std::vector<int> normalize(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i > 0 && parts[i - 1] < parts[i]))
            throw std::invalid_argument("partition parts must be weakly decreasing and nonnegative");
    }
    return parts;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : parts_(normalize(std::vector<int>(parts))) {}

Partition::Partition(std::vector<int> parts) : parts_(normalize(std::move(parts))) {}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::rank() const {
    int d = 0;
    while (d < length() && parts_[d] >= d + 1) ++d;
    return d;
}

bool Partition::self_dual() const {
    return *this == transpose();
}

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> t(parts_[0]);
    for (int j = 1; j <= parts_[0]; ++j)
        t[j - 1] = static_cast<int>(std::count_if(
            parts_.begin(), parts_.end(), [j](int x) { return x >= j; }));
    return Partition(std::move(t));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

Partition Partition::parse(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw std::invalid_argument("partition must be a JSON array, e.g. [5,3,2]");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument("partition entries must be integers");
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

std::optional<BorderStripRemoval> remove_border_strip(const Partition& lambda, int r) {
    const auto& p = lambda.parts();
    const int ell = lambda.length();
    if (r <= 0 || ell == 0) return std::nullopt;

    // Walk the rim from the first box of the final row; the strip through a
    // fixed starting box is unique, so failure anywhere means "absent".
    int i = ell - 1, j = 0;
    for (int taken = 1; taken < r; ++taken) {
        if (j + 1 < p[i]) ++j;
        else if (i > 0) --i;
        else return std::nullopt;
    }
    if (j != p[i] - 1) return std::nullopt;  // mid-row stop leaves a gap

    std::vector<int> rem(p.begin(), p.end());
    for (int row = i; row < ell; ++row)
        rem[row] = (row == ell - 1) ? 0 : p[row + 1] - 1;

    BorderStripRemoval out;
    out.remainder = Partition(std::move(rem));
    out.columns = p[i];
    out.rows = ell - i;
    return out;
}

LatticePath to_lattice_path(const Partition& lambda, int n, int k) {
    if (lambda.length() > n || lambda.part(0) > k)
        throw std::invalid_argument("partition does not fit in the rectangle");
    LatticePath path;
    std::vector<bool> is_up(n + k + 1, false);
    for (int i = 1; i <= n; ++i) {
        int a = lambda.part(n - i) + i;  // alpha_i - i = lambda_{n+1-i}
        path.ups.push_back(a);
        is_up[a] = true;
    }
    for (int s = 1; s <= n + k; ++s)
        if (!is_up[s]) path.rights.push_back(s);
    return path;
}

Partition from_lattice_path(const LatticePath& path) {
    const int n = static_cast<int>(path.ups.size());
    std::vector<int> parts(n);
    for (int i = 1; i <= n; ++i) parts[n - i] = path.ups[i - 1] - i;
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_in_box(int n, int k) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int maxpart) -> void {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == n) return;
        for (int p = 1; p <= maxpart; ++p) {
            cur.push_back(p);
            self(self, p);
            cur.pop_back();
        }
    };
    rec(rec, k);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> all_partitions_up_to(int max_size) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        out.emplace_back(cur);
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, max_size, max_size);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace nilhom
