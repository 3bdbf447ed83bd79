#ifndef PSC_RATIONAL_HPP
#define PSC_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "psc/errors.hpp"

namespace psc {

// Exact rational arithmetic on int64 numerator/denominator, always reduced,
// denominator always positive. Comparisons cross-multiply in 128-bit so the
// boundary cases (|N'| = l*q) are decided exactly. All quota arithmetic in
// this project goes through this type; floating point is never used.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw Error(Errc::malformed_quota_spec, "zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    static Rational from_int(std::int64_t v) { return Rational(v, 1); }

    // Accepts "p/r" or a bare integer "p".
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        // Values stay tiny (quota-sized); 128-bit intermediates avoid overflow anyway.
        const __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                           static_cast<__int128>(b.num_) * a.den_;
        const __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return reduce128(n, d);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return reduce128(static_cast<__int128>(a.num_) * b.num_,
                         static_cast<__int128>(a.den_) * b.den_);
    }

    // floor(value / this) for a nonnegative integer value; requires a positive
    // rational. Pure integer arithmetic: floor(value * den / num).
    std::int64_t floor_quotient(std::int64_t value) const {
        if (num_ <= 0) throw Error(Errc::malformed_quota_spec, "floor_quotient requires a positive rational");
        if (value < 0) throw Error(Errc::index_out_of_range, "floor_quotient requires a nonnegative value");
        const __int128 prod = static_cast<__int128>(value) * den_;
        return static_cast<std::int64_t>(prod / num_);
    }

private:
    static Rational reduce128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b != 0) { const __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational Rational::parse(std::string_view text) {
    const auto bad = [&] { return Error(Errc::malformed_quota_spec, "expected p/r or integer, got \"" + std::string(text) + "\""); };
    const auto parse_int = [&](std::string_view part) -> std::int64_t {
        if (part.empty()) throw bad();
        std::size_t i = part[0] == '-' ? 1 : 0;
        if (i == part.size()) throw bad();
        std::int64_t v = 0;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') throw bad();
            if (v > (INT64_MAX - (part[i] - '0')) / 10) throw bad();
            v = v * 10 + (part[i] - '0');
        }
        return part[0] == '-' ? -v : v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

} // namespace psc

#endif
