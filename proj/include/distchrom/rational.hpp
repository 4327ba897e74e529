#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "distchrom/errors.hpp"

namespace distchrom {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction over arbitrary-precision integers.
// Invariants: den >= 1, gcd(|num|, den) == 1, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;
    Rational abs() const;
    Rational reciprocal() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Representation is canonical, so field equality is value equality.
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    BigInt floor() const;
    BigInt ceil() const;

    std::string to_string() const; // "n" or "n/d"
    double to_double() const;

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

} // namespace distchrom
