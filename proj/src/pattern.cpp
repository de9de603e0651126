#include "memcap/pattern.hpp"

#include <stdexcept>
#include <utility>

#include "memcap/errors.hpp"

namespace memcap {

BipolarPattern::BipolarPattern(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
    if (signs_.size() < 2) {
        throw std::invalid_argument("pattern needs at least 2 components");
    }
    for (std::int8_t s : signs_) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("pattern components must be +1 or -1");
        }
    }
}

BipolarPattern BipolarPattern::from_index(int n, std::uint64_t index) {
    if (n < 2 || n > 63) {
        throw std::invalid_argument("pattern index codec covers 2..63 components");
    }
    if (index >> n) {
        throw std::invalid_argument("pattern index out of range for " + std::to_string(n) +
                                    " components");
    }
    std::vector<std::int8_t> signs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        signs[static_cast<std::size_t>(j)] = (index >> j) & 1 ? -1 : 1;
    }
    return BipolarPattern(std::move(signs));
}

BipolarPattern BipolarPattern::from_string(const std::string& text) {
    std::vector<std::int8_t> signs;
    signs.reserve(text.size());
    for (char c : text) {
        if (c == '+') {
            signs.push_back(1);
        } else if (c == '-') {
            signs.push_back(-1);
        } else {
            throw ParseError(std::string("pattern characters must be '+' or '-', got '") + c +
                             "'");
        }
    }
    if (signs.size() < 2) throw ParseError("pattern needs at least 2 components");
    return BipolarPattern(std::move(signs));
}

std::uint64_t BipolarPattern::index() const {
    if (size() > 63) throw std::invalid_argument("pattern index codec covers at most 63 components");
    std::uint64_t k = 0;
    for (int j = 0; j < size(); ++j) {
        if (signs_[static_cast<std::size_t>(j)] < 0) k |= std::uint64_t{1} << j;
    }
    return k;
}

BipolarPattern BipolarPattern::negated() const {
    std::vector<std::int8_t> flipped(signs_.size());
    for (std::size_t j = 0; j < signs_.size(); ++j) {
        flipped[j] = static_cast<std::int8_t>(-signs_[j]);
    }
    return BipolarPattern(std::move(flipped));
}

BipolarPattern BipolarPattern::canonical() const { return signs_[0] > 0 ? *this : negated(); }

std::string BipolarPattern::to_string() const {
    std::string s(signs_.size(), '+');
    for (std::size_t j = 0; j < signs_.size(); ++j) {
        if (signs_[j] < 0) s[j] = '-';
    }
    return s;
}

}  // namespace memcap
