#include "memcap/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "memcap/errors.hpp"

namespace memcap {

QuantizationSpec::QuantizationSpec(int weight, bool allow_zero)
    : weight_(weight), allow_zero_(allow_zero) {
    if (weight < 1) throw std::invalid_argument("weight must be >= 1");
}

int QuantizationSpec::level_value(int level) const {
    if (level < 0 || level >= level_count()) {
        throw std::invalid_argument("quantization level out of range");
    }
    if (allow_zero_) return level - weight_;
    return level < weight_ ? level - weight_ : level - weight_ + 1;
}

bool QuantizationSpec::contains(int value) const {
    if (value == 0) return allow_zero_;
    return value >= -weight_ && value <= weight_;
}

SynapticMatrix::SynapticMatrix(int n, QuantizationSpec spec, std::vector<int> row_major)
    : n_(n), spec_(spec), entries_(std::move(row_major)) {
    if (n < 2) throw std::invalid_argument("matrix dimension must be >= 2");
    if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw DimensionError("matrix storage does not match its dimension");
    }
    for (int i = 0; i < n; ++i) {
        if (at(i, i) != 0) {
            throw std::invalid_argument("diagonal entry (" + std::to_string(i) + "," +
                                        std::to_string(i) + ") must be 0");
        }
        for (int j = i + 1; j < n; ++j) {
            if (at(i, j) != at(j, i)) {
                throw std::invalid_argument("asymmetric entries at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            }
            if (!spec_.contains(at(i, j))) {
                throw std::invalid_argument("entry (" + std::to_string(i) + "," +
                                            std::to_string(j) +
                                            ") outside the permitted value set");
            }
        }
    }
}

SynapticMatrix SynapticMatrix::zero(int n) {
    return SynapticMatrix(n, QuantizationSpec(1, /*allow_zero=*/true),
                          std::vector<int>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0));
}

LocalField local_field(const SynapticMatrix& t, const BipolarPattern& x) {
    if (t.n() != x.size()) throw DimensionError("matrix and pattern dimensions differ");
    const int n = t.n();
    LocalField field;
    field.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int* row = t.row(i);
        std::int64_t sum = 0;
        for (int j = 0; j < n; ++j) sum += static_cast<std::int64_t>(row[j]) * x.sign(j);
        field.values[static_cast<std::size_t>(i)] = sum;
    }
    return field;
}

BipolarPattern update(const SynapticMatrix& t, const BipolarPattern& x) {
    const LocalField field = local_field(t, x);
    std::vector<std::int8_t> signs(field.values.size());
    for (std::size_t i = 0; i < field.values.size(); ++i) {
        signs[i] = static_cast<std::int8_t>(sgn(field.values[i]));
    }
    return BipolarPattern(std::move(signs));
}

bool is_memory(const SynapticMatrix& t, const BipolarPattern& x) { return update(t, x) == x; }

}  // namespace memcap
