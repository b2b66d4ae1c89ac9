#include "smsemoa/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace smsemoa {

namespace detail {

std::string int128_to_string(int128 v) {
    if (v == 0) {
        return "0";
    }
    bool negative = v < 0;
    // work in the negative range so the minimum value does not overflow
    std::string digits;
    int128 x = negative ? v : -v;
    while (x != 0) {
        int digit = -static_cast<int>(x % 10);
        digits.push_back(static_cast<char>('0' + digit));
        x /= 10;
    }
    if (negative) {
        digits.push_back('-');
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace detail

Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::int64_t value = 0;
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
            throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
        }
        return value;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (frac.size() > 17 || frac.find_first_not_of("0123456789") != std::string_view::npos) {
            throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
        }
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
        std::int64_t f = frac.empty() ? 0 : parse_int(frac);
        Rational magnitude = Rational(detail::abs_value(w)) + Rational(f, scale);
        return negative ? -magnitude : magnitude;
    }
    return Rational(parse_int(text));
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: bound must be positive");
    }
    std::uint64_t x = next();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            x = next();
            m = static_cast<unsigned __int128>(x) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("BitString elements must be 0 or 1");
        }
    }
}

BitString BitString::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString::from_string: unexpected character");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
}

std::size_t BitString::count_ones() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitString BitString::complement() const {
    BitString out = *this;
    for (auto& b : out.bits_) b ^= 1;
    return out;
}

std::string BitString::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) s[i] = '1';
    }
    return s;
}

bool Permutation::is_bijection(std::span<const std::uint32_t> order) {
    std::vector<bool> seen(order.size(), false);
    for (auto v : order) {
        if (v >= order.size() || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

Permutation::Permutation(std::vector<std::uint32_t> order) : order_(std::move(order)) {
    if (!is_bijection(order_)) {
        throw std::invalid_argument("Permutation: not a bijection on [0, n)");
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0U);
    return Permutation(std::move(order), unchecked_tag{});
}

Permutation Permutation::from_string(std::string_view text) {
    std::vector<std::uint32_t> order;
    const char* p = text.data();
    const char* end = text.data() + text.size();
    while (p < end) {
        while (p < end && (*p == ' ' || *p == ',')) ++p;
        if (p == end) break;
        std::uint32_t v = 0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc{}) {
            throw std::invalid_argument("Permutation::from_string: unexpected token");
        }
        order.push_back(v);
        p = next;
    }
    return Permutation(std::move(order));
}

std::string Permutation::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (i) s.push_back(' ');
        s += std::to_string(order_[i]);
    }
    return s;
}

BitString random_bitstring(std::size_t n, Rng& rng) {
    if (n == 0) {
        throw std::invalid_argument("random_bitstring: n must be positive");
    }
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        bits[i] = static_cast<std::uint8_t>(rng.next() >> 63);
    }
    return BitString(std::move(bits));
}

Permutation random_permutation(std::size_t n, Rng& rng) {
    if (n == 0) {
        throw std::invalid_argument("random_permutation: n must be positive");
    }
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0U);
    // Fisher-Yates
    for (std::size_t i = n - 1; i > 0; --i) {
        std::size_t j = rng.index(i + 1);
        std::swap(order[i], order[j]);
    }
    return PermutationBuilder::adopt(std::move(order));
}

std::string ObjectiveVector::to_string() const {
    return "(" + values[0].to_string() + ", " + values[1].to_string() + ")";
}

} // namespace smsemoa
