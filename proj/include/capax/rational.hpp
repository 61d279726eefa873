#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace capax {

/// Exact rational scalar with checked 64-bit components.
///
/// Values are kept normalized (positive denominator, coprime components).
/// Intermediate products are evaluated in 128-bit arithmetic and reduced;
/// a result whose reduced numerator or denominator does not fit into
/// int64 throws std::overflow_error instead of wrapping.
class rational {
public:
    constexpr rational() : num_(0), den_(1) {}
    constexpr rational(std::int64_t value) : num_(value), den_(1) {}

    rational(std::int64_t num, std::int64_t den) {
        if (den == 0)
            throw std::domain_error("rational: zero denominator");
        assign(static_cast<i128>(num), static_cast<i128>(den));
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    /// Parses "p" or "p/q" with an optional leading minus sign.
    static rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return rational(parse_int(text, text), 1);
        return rational(parse_int(text.substr(0, slash), text),
                        parse_int(text.substr(slash + 1), text));
    }

    /// "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend rational operator+(const rational& a, const rational& b) {
        return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                    static_cast<i128>(a.den_) * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return make(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                    static_cast<i128>(a.den_) * b.den_);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return make(static_cast<i128>(a.num_) * b.num_,
                    static_cast<i128>(a.den_) * b.den_);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_ == 0)
            throw std::domain_error("rational: division by zero");
        return make(static_cast<i128>(a.num_) * b.den_,
                    static_cast<i128>(a.den_) * b.num_);
    }
    rational operator-() const {
        rational r;
        r.num_ = -num_;  // |num_| <= INT64_MAX by construction, negation is safe
        r.den_ = den_;
        return r;
    }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    friend rational abs(const rational& r) { return r.num_ < 0 ? -r : r; }

    friend std::ostream& operator<<(std::ostream& os, const rational& r) {
        return os << r.str();
    }

private:
    using i128 = __int128;
    using u128 = unsigned __int128;

    static u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

    static u128 gcd128(u128 a, u128 b) {
        while (b != 0) {
            u128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static rational make(i128 num, i128 den) {
        rational r;
        r.assign(num, den);
        return r;
    }

    void assign(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        const u128 g = gcd128(uabs(num), static_cast<u128>(den));
        const u128 un = uabs(num) / g;
        const u128 ud = static_cast<u128>(den) / g;
        constexpr u128 limit = static_cast<u128>(std::numeric_limits<std::int64_t>::max());
        if (un > limit || ud > limit)
            throw std::overflow_error("rational: value exceeds 64-bit components");
        num_ = num < 0 ? -static_cast<std::int64_t>(un) : static_cast<std::int64_t>(un);
        den_ = static_cast<std::int64_t>(ud);
    }

    static std::int64_t parse_int(std::string_view part, std::string_view whole) {
        const auto fail = [&] {
            throw std::invalid_argument("rational: cannot parse '" + std::string(whole) + "'");
        };
        if (part.empty())
            fail();
        bool neg = false;
        std::size_t pos = 0;
        if (part[0] == '-' || part[0] == '+') {
            neg = part[0] == '-';
            pos = 1;
            if (part.size() == 1)
                fail();
        }
        u128 acc = 0;
        for (; pos < part.size(); ++pos) {
            const char c = part[pos];
            if (c < '0' || c > '9')
                fail();
            acc = acc * 10 + static_cast<u128>(c - '0');
            if (acc > static_cast<u128>(std::numeric_limits<std::int64_t>::max()))
                throw std::overflow_error("rational: literal exceeds 64-bit range");
        }
        const auto v = static_cast<std::int64_t>(acc);
        return neg ? -v : v;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace capax
