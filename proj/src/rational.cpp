#include "shtukacrit/rational.hpp"

#include <charconv>
#include <numeric>

namespace shtk {

namespace {

using int128 = __int128;

long long narrow(int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw internal_error("rational overflow");
    return static_cast<long long>(v);
}

Rational make(int128 num, int128 den) {
    if (den == 0)
        throw invalid_input("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int128 a = num < 0 ? -num : num;
    int128 b = den;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0)
        a = 1;
    return Rational(narrow(num / a), narrow(den / a));
}

} // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0)
        throw invalid_input("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return make(int128(num_) * o.den_ + int128(o.num_) * den_, int128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make(int128(num_) * o.den_ - int128(o.num_) * den_, int128(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make(int128(num_) * o.num_, int128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0)
        throw invalid_input("division by zero");
    return make(int128(num_) * o.den_, int128(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    int128 lhs = int128(num_) * o.den_;
    int128 rhs = int128(o.num_) * den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

long long Rational::floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0)
        --q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
    auto parse_int = [&](std::string_view sv) -> long long {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
        if (ec != std::errc() || ptr != sv.data() + sv.size())
            throw invalid_input("bad rational literal: \"" + s + "\"");
        return v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(s));
    long long num = parse_int(std::string_view(s).substr(0, slash));
    long long den = parse_int(std::string_view(s).substr(slash + 1));
    if (den == 0)
        throw invalid_input("bad rational literal: \"" + s + "\" (zero denominator)");
    return Rational(num, den);
}

Rational bracket_q(const Rational& x) {
    return x - Rational(x.floor());
}

long long lcm_denominators(const std::vector<Rational>& xs) {
    if (xs.empty())
        throw invalid_input("empty denominator set");
    long long acc = 1;
    for (const auto& x : xs)
        acc = std::lcm(acc, x.den());
    return acc;
}

} // namespace shtk
