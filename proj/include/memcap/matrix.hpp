#pragma once

#include <cstdint>
#include <vector>

#include "memcap/pattern.hpp"

namespace memcap {

// Permitted off-diagonal entry set induced by a weight: the 2w nonzero
// integers in [-w, w], or all 2w+1 of them when zero is allowed.
class QuantizationSpec {
public:
    explicit QuantizationSpec(int weight, bool allow_zero = false);

    int weight() const { return weight_; }
    bool allow_zero() const { return allow_zero_; }

    int level_count() const { return allow_zero_ ? 2 * weight_ + 1 : 2 * weight_; }
    // Values in ascending order; the sampler draws by level index.
    int level_value(int level) const;
    bool contains(int value) const;

    bool operator==(const QuantizationSpec&) const = default;

private:
    int weight_;
    bool allow_zero_;
};

// Symmetric integer matrix with zero diagonal and off-diagonal entries
// constrained to a quantization spec. Immutable after construction.
class SynapticMatrix {
public:
    SynapticMatrix(int n, QuantizationSpec spec, std::vector<int> row_major);

    static SynapticMatrix zero(int n);

    int n() const { return n_; }
    const QuantizationSpec& spec() const { return spec_; }
    int at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                        static_cast<std::size_t>(j)];
    }
    const int* row(int i) const {
        return entries_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_);
    }
    const std::vector<int>& entries() const { return entries_; }

    // Identity is the synaptic content; the quantization spec is a declared
    // constraint, not state.
    bool operator==(const SynapticMatrix& other) const {
        return n_ == other.n_ && entries_ == other.entries_;
    }

private:
    int n_;
    QuantizationSpec spec_;
    std::vector<int> entries_;
};

struct LocalField {
    std::vector<std::int64_t> values;
    bool operator==(const LocalField&) const = default;
};

LocalField local_field(const SynapticMatrix& t, const BipolarPattern& x);
BipolarPattern update(const SynapticMatrix& t, const BipolarPattern& x);
bool is_memory(const SynapticMatrix& t, const BipolarPattern& x);

}  // namespace memcap
