#include "memcap/rational.hpp"

#include <limits>
#include <stdexcept>
#include <string_view>

#include "memcap/errors.hpp"

namespace memcap {
namespace {

std::int64_t checked_narrow(__int128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error(what);
    }
    return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

std::int64_t parse_digits(std::string_view s) {
    std::int64_t value = 0;
    for (char c : s) {
        if (value > (std::numeric_limits<std::int64_t>::max() - (c - '0')) / 10) {
            throw ParseError("rational component out of range");
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (num_ == std::numeric_limits<std::int64_t>::min() ||
        den_ == std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational component out of range");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g =
        static_cast<std::int64_t>(gcd128(static_cast<__int128>(num_), static_cast<__int128>(den_)));
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator+(const Rational& other) const {
    __int128 num = static_cast<__int128>(num_) * other.den_ +
                   static_cast<__int128>(other.num_) * den_;
    __int128 den = static_cast<__int128>(den_) * other.den_;
    const __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(checked_narrow(num, "rational sum overflow"),
                    checked_narrow(den, "rational sum overflow"));
}

bool Rational::operator<(const Rational& other) const {
    return static_cast<__int128>(num_) * other.den_ < static_cast<__int128>(other.num_) * den_;
}

bool Rational::operator<=(const Rational& other) const {
    return static_cast<__int128>(num_) * other.den_ <= static_cast<__int128>(other.num_) * den_;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    std::string_view s(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto fail = [&text]() -> Rational {
        throw ParseError("malformed rational '" + text + "'");
    };

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const std::string_view p = s.substr(0, slash);
        const std::string_view q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) return fail();
        const std::int64_t den = parse_digits(q);
        if (den == 0) return fail();
        const std::int64_t num = parse_digits(p);
        return Rational(negative ? -num : num, den);
    }
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const std::string_view ip = s.substr(0, dot);
        const std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) return fail();
        if (!ip.empty() && !all_digits(ip)) return fail();
        if (!fp.empty() && !all_digits(fp)) return fail();
        if (fp.size() > 18) return fail();
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        const std::int64_t whole = ip.empty() ? 0 : parse_digits(ip);
        const std::int64_t frac = fp.empty() ? 0 : parse_digits(fp);
        const __int128 num = static_cast<__int128>(whole) * scale + frac;
        return Rational(checked_narrow(negative ? -num : num, "rational out of range"), scale);
    }
    if (!all_digits(s)) return fail();
    const std::int64_t v = parse_digits(s);
    return Rational(negative ? -v : v, 1);
}

}  // namespace memcap
