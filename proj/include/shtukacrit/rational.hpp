#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "shtukacrit/errors.hpp"

namespace shtk {

// Exact rational number, always kept in reduced form with positive
// denominator.  All slope and invariant computations in this library go
// through this type; there is no floating point anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    // Largest integer n with n <= *this.
    long long floor() const;

    // Serialises as "p/q", or just "p" for integers.
    std::string str() const;

    // Parses "p/q" or "p".  Rejects q = 0; non-reduced input is normalised.
    static Rational parse(const std::string& s);

private:
    long long num_;
    long long den_; // > 0
};

// The section Q/Z -> Q n [0,1): representative of x mod Z in [0,1).
Rational bracket_q(const Rational& x);

// Smallest n >= 1 with n*x integral for every x in xs.
// Throws invalid_input on an empty list.
long long lcm_denominators(const std::vector<Rational>& xs);

// Class in Q/Z, stored by its canonical representative in [0,1).
class QModZ {
public:
    QModZ() = default;
    explicit QModZ(const Rational& x) : rep_(bracket_q(x)) {}

    const Rational& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    QModZ operator+(const QModZ& o) const { return QModZ(rep_ + o.rep_); }
    QModZ operator-() const { return QModZ(-rep_); }
    bool operator==(const QModZ& o) const = default;

    // Smallest e >= 1 with e * (*this) = 0 in Q/Z; this is the denominator
    // of the reduced representative.
    long long torsion_order() const { return rep_.den(); }

    // n * (*this) in Q/Z.
    QModZ times(long long n) const { return QModZ(rep_ * Rational(n)); }

private:
    Rational rep_; // in [0,1)
};

} // namespace shtk
