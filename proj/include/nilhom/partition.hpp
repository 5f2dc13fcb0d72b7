#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nilhom {

// Weakly decreasing sequence of positive integers; trailing zeros are
// normalized away, so Partition{2,1,0} == Partition{2,1}.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;

    // parts with indices past the end read as 0
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    // rank: size of the main diagonal, max{d : lambda_d >= d}
    int rank() const;
    bool self_dual() const;

    Partition transpose() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;            // "[5,3,2]"
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

struct BorderStripRemoval {
    Partition remainder;
    int columns = 0;
    int rows = 0;
};

// Removes the unique border strip of length r that starts at the first box of
// the final row, walking the rim. Absent when no such strip exists (r = 0,
// r too long, or the complement is not a partition).
std::optional<BorderStripRemoval> remove_border_strip(const Partition& lambda, int r);

// Encoding of a partition in an n x k rectangle as a monotone lattice path:
// ups alpha_1 < ... < alpha_n and rights beta_1 < ... < beta_k partition {1..n+k}.
struct LatticePath {
    std::vector<int> ups;
    std::vector<int> rights;
};

LatticePath to_lattice_path(const Partition& lambda, int n, int k);
Partition from_lattice_path(const LatticePath& path);

// All partitions fitting in an n x k rectangle, in lexicographic order.
std::vector<Partition> partitions_in_box(int n, int k);

// All partitions of size <= max_size, grouped by nothing in particular.
std::vector<Partition> all_partitions_up_to(int max_size);

}  // namespace nilhom
