#pragma once

#include <optional>
#include <vector>

#include "nilhom/partition.hpp"

namespace nilhom {

// Nonnegative integer or infinity; infinity is a first-class value, never a
// sentinel integer.
class ModIndex {
public:
    static ModIndex infinity() { return ModIndex{}; }
    static ModIndex of(long long v) {
        ModIndex m;
        m.v_ = v;
        return m;
    }

    bool is_infinite() const { return !v_.has_value(); }
    long long value() const { return v_.value(); }

    bool operator==(const ModIndex&) const = default;

private:
    std::optional<long long> v_;
};

struct ModificationResult {
    ModIndex index;
    std::optional<Partition> reduced;        // absent iff index infinite
    std::vector<BorderStripRemoval> strips;  // audit trail (border-strip routes)
    // Orthogonal family only: true iff at least one strip was removed, i.e. the
    // reduced label may carry the determinant twist. The twist parity itself is
    // not decided here; comparisons happen at the SO level.
    bool associated = false;
};

// Repeatedly removes the border strip of length 2(l(lambda)-n-1) while
// l(lambda) > n, accumulating c(R); infinite when a required strip is absent.
ModificationResult sp_modification_border(const Partition& lambda, int n);

// Same pair (index, reduced), computed by signed-sorting lambda^T + sigma with
// sigma = (..., -(n+2), -(n+1)) inside a finite window: a zero entry or a
// repeated absolute value means a nontrivial stabilizer, hence infinity;
// otherwise the sorting element's length is the index.
ModificationResult sp_modification_weyl(const Partition& lambda, int n);

// Orthogonal rule: base case lambda^T_1 + lambda^T_2 <= m, strip length
// 2*l(lambda) - m, increment c(R) - 1.
ModificationResult o_modification_border(const Partition& lambda, int m);

}  // namespace nilhom
