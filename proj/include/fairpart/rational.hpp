#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fairpart {

/// Exact rational in lowest terms with positive denominator.
///
/// Every verdict in the library (allowability bounds, deviation thresholds,
/// balancedness accounting) is decided through this type; floating point is
/// never consulted where the answer depends on the value.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long value) : num_(value) {}
    Rational(long long num, long long den) { assign(num, den); }

    /// Parses "p/q", a plain integer, or a finite decimal such as "0.25",
    /// all converted exactly. Throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text);

    constexpr long long num() const noexcept { return num_; }
    constexpr long long den() const noexcept { return den_; }

    Rational operator+(const Rational& o) const {
        return from_raw(wide(num_) * o.den_ + wide(o.num_) * den_, wide(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return from_raw(wide(num_) * o.den_ - wide(o.num_) * den_, wide(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return from_raw(wide(num_) * o.num_, wide(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
        return from_raw(wide(num_) * o.den_, wide(den_) * o.num_);
    }
    Rational operator-() const { return from_raw(-wide(num_), wide(den_)); }

    // Comparisons cross-multiply in 128-bit; denominators are positive.
    bool operator==(const Rational& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const noexcept { return !(*this == o); }
    bool operator<(const Rational& o) const noexcept { return wide(num_) * o.den_ < wide(o.num_) * den_; }
    bool operator>(const Rational& o) const noexcept { return o < *this; }
    bool operator<=(const Rational& o) const noexcept { return !(o < *this); }
    bool operator>=(const Rational& o) const noexcept { return !(*this < o); }

    /// Largest integer <= value.
    long long floor() const noexcept {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    /// Smallest integer >= value.
    long long ceil() const noexcept {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    /// Canonical "p/q" rendering (denominator always printed).
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    using wide = __int128;

    void assign(long long num, long long den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        num_ = g ? num / g : num;
        den_ = g ? den / g : den;
    }

    static Rational from_raw(wide num, wide den) {
        if (den < 0) { num = -num; den = -den; }
        const wide g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        constexpr wide lim = 0x7fffffffffffffffLL;
        if (num > lim || num < -lim || den > lim)
            throw std::overflow_error("rational out of 64-bit range");
        Rational r;
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }

    static wide gcd128(wide a, wide b) noexcept {
        while (b != 0) { wide t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    // trim surrounding whitespace
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r' || text.back() == '\n'))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational literal");

    const auto parse_int = [](std::string_view s) -> long long {
        if (s.empty()) throw std::invalid_argument("malformed rational literal");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; i = 1; }
        if (i == s.size()) throw std::invalid_argument("malformed rational literal");
        long long v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational literal");
            if (v > (0x7fffffffffffffffLL - 9) / 10) throw std::overflow_error("rational literal too large");
            v = v * 10 + (s[i] - '0');
        }
        return neg ? -v : v;
    };

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        if (text.find('/', slash + 1) != std::string_view::npos)
            throw std::invalid_argument("malformed rational literal");
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        if (text.find('.', dot + 1) != std::string_view::npos)
            throw std::invalid_argument("malformed rational literal");
        const std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18) throw std::invalid_argument("unsupported decimal literal");
        std::string_view head = text.substr(0, dot);
        bool neg = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            neg = head[0] == '-';
            head.remove_prefix(1);
        }
        const long long whole = head.empty() ? 0 : parse_int(head);
        const long long frac_val = parse_int(frac);
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Rational r = Rational(whole) + Rational(frac_val, den);
        return neg ? -r : r;
    }
    return Rational(parse_int(text));
}

} // namespace fairpart
