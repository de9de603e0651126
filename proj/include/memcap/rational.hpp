#pragma once

#include <cstdint>
#include <string>

namespace memcap {

// Exact rational, always normalized (gcd 1, positive denominator). Sums and
// comparisons use 128-bit intermediates; results that do not fit 64 bits
// throw instead of wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& other) const;
    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& other) const;
    bool operator<=(const Rational& other) const;

    double to_double() const;
    std::string to_string() const;  // "p" or "p/q"

    // Accepts "p", "p/q", and decimal text like "0.75" (converted exactly).
    static Rational parse(const std::string& text);

private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace memcap
