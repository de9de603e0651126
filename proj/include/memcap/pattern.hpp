#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace memcap {

// sgn(0) = +1; the whole update rule hangs on this convention.
inline int sgn(std::int64_t v) { return v >= 0 ? 1 : -1; }

// State vector over {+1, -1}.
//
// Index codec: bit j of the pattern index holds component j, a clear bit
// meaning +1, so index 0 is the all-+1 pattern. The codec covers n <= 63.
class BipolarPattern {
public:
    explicit BipolarPattern(std::vector<std::int8_t> signs);

    static BipolarPattern from_index(int n, std::uint64_t index);
    // '+'/'-' string, leftmost character = component 0.
    static BipolarPattern from_string(const std::string& text);

    int size() const { return static_cast<int>(signs_.size()); }
    int sign(int i) const { return signs_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int8_t>& signs() const { return signs_; }

    std::uint64_t index() const;
    BipolarPattern negated() const;
    // Representative of the {x, -x} pair: the member whose first component is +1.
    BipolarPattern canonical() const;
    std::string to_string() const;

    bool operator==(const BipolarPattern&) const = default;

private:
    std::vector<std::int8_t> signs_;
};

}  // namespace memcap
