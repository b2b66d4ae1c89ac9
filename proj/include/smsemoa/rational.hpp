#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace smsemoa {

using int128 = __int128;

namespace detail {

template <class Int>
constexpr Int abs_value(Int v) {
    return v < 0 ? -v : v;
}

template <class Int>
constexpr Int gcd(Int a, Int b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

template <class Int>
Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("rational multiplication overflow");
    }
    return r;
}

template <class Int>
Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("rational addition overflow");
    }
    return r;
}

template <class Int>
constexpr Int floor_div(Int a, Int b) {
    // b > 0
    Int q = a / b;
    if ((a % b != 0) && (a < 0)) {
        --q;
    }
    return q;
}

std::string int128_to_string(int128 v);

} // namespace detail

// Exact rational number num/den with den > 0, always stored in lowest terms.
//
// Instantiated with `std::int64_t` for objective values and with `__int128`
// for areas, where products of two objective differences must not overflow.
template <class Int>
class basic_rational {
public:
    using int_type = Int;

    constexpr basic_rational() = default;
    constexpr basic_rational(Int value) : num_(value) {} // NOLINT(implicit)

    basic_rational(Int num, Int den) {
        if (den == 0) {
            throw std::invalid_argument("rational with zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (den != 1) {
            Int g = detail::gcd(num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
        }
        num_ = num;
        den_ = den;
    }

    // Widening conversion, e.g. from the 64-bit to the 128-bit representation.
    template <class Other>
        requires(sizeof(Other) < sizeof(Int))
    explicit basic_rational(const basic_rational<Other>& other)
        : num_(static_cast<Int>(other.num())), den_(static_cast<Int>(other.den())) {}

    [[nodiscard]] constexpr Int num() const { return num_; }
    [[nodiscard]] constexpr Int den() const { return den_; }
    [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }

    [[nodiscard]] double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend constexpr bool operator==(const basic_rational&, const basic_rational&) = default;

    friend std::strong_ordering operator<=>(const basic_rational& a, const basic_rational& b) {
        if (a.den_ == b.den_) {
            return a.num_ <=> b.num_;
        }
        if constexpr (sizeof(Int) <= 8) {
            return static_cast<int128>(a.num_) * b.den_ <=> static_cast<int128>(b.num_) * a.den_;
        } else {
            Int lhs;
            Int rhs;
            if (!__builtin_mul_overflow(a.num_, b.den_, &lhs) && !__builtin_mul_overflow(b.num_, a.den_, &rhs)) {
                return lhs <=> rhs;
            }
            return compare_by_continued_fraction(a.num_, a.den_, b.num_, b.den_);
        }
    }

    friend basic_rational operator-(const basic_rational& a) { return basic_rational(-a.num_, a.den_, raw_tag{}); }

    friend basic_rational operator+(const basic_rational& a, const basic_rational& b) {
        if (a.den_ == 1 && b.den_ == 1) {
            return basic_rational(detail::checked_add(a.num_, b.num_), Int{1}, raw_tag{});
        }
        if (a.den_ == b.den_) {
            return basic_rational(detail::checked_add(a.num_, b.num_), a.den_);
        }
        Int g = detail::gcd(a.den_, b.den_);
        Int lcm = detail::checked_mul(a.den_ / g, b.den_);
        Int lhs = detail::checked_mul(a.num_, lcm / a.den_);
        Int rhs = detail::checked_mul(b.num_, lcm / b.den_);
        return basic_rational(detail::checked_add(lhs, rhs), lcm);
    }

    friend basic_rational operator-(const basic_rational& a, const basic_rational& b) { return a + (-b); }

    friend basic_rational operator*(const basic_rational& a, const basic_rational& b) {
        if (a.den_ == 1 && b.den_ == 1) {
            return basic_rational(detail::checked_mul(a.num_, b.num_), Int{1}, raw_tag{});
        }
        // cross-reduce first to keep intermediates small
        Int g1 = detail::gcd(a.num_, b.den_);
        Int g2 = detail::gcd(b.num_, a.den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        Int num = detail::checked_mul(a.num_ / g1, b.num_ / g2);
        Int den = detail::checked_mul(a.den_ / g2, b.den_ / g1);
        return basic_rational(num, den);
    }

    basic_rational& operator+=(const basic_rational& o) { return *this = *this + o; }
    basic_rational& operator-=(const basic_rational& o) { return *this = *this - o; }
    basic_rational& operator*=(const basic_rational& o) { return *this = *this * o; }

    // "p" or "p/q" in lowest terms.
    [[nodiscard]] std::string to_string() const {
        auto str = [](Int v) {
            if constexpr (sizeof(Int) <= 8) {
                return std::to_string(v);
            } else {
                return detail::int128_to_string(v);
            }
        };
        return den_ == 1 ? str(num_) : str(num_) + "/" + str(den_);
    }

private:
    struct raw_tag {};
    constexpr basic_rational(Int num, Int den, raw_tag) : num_(num), den_(den) {}

    static std::strong_ordering compare_by_continued_fraction(Int a, Int b, Int c, Int d) {
        // a/b vs c/d, b, d > 0, without forming products
        for (;;) {
            Int qa = detail::floor_div(a, b);
            Int qc = detail::floor_div(c, d);
            if (qa != qc) {
                return qa <=> qc;
            }
            Int ra = a - qa * b; // in [0, b)
            Int rc = c - qc * d;
            if (ra == 0 || rc == 0) {
                return ra <=> rc; // zero remainder is the smaller one
            }
            // ra/b vs rc/d has the sign of d/rc vs b/ra
            Int old_b = b;
            a = d;
            b = rc;
            c = old_b;
            d = ra;
        }
    }

    Int num_{0};
    Int den_{1};
};

using Rational = basic_rational<std::int64_t>;
using WideRational = basic_rational<int128>;

// Parses "p", "p/q" or a plain decimal such as "-12.25" into an exact rational.
Rational parse_rational(std::string_view text);

} // namespace smsemoa
