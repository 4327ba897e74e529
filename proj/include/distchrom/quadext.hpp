#pragma once

#include <compare>
#include <string>

#include "distchrom/rational.hpp"

namespace distchrom {

// Element p + q*sqrt(m) of the real quadratic field Q(sqrt(m)), m a fixed
// positive square-free radicand (default 2). Since sqrt(m) is irrational the
// (p, q) representation is injective and all comparisons are exact: the sign
// of p + q*sqrt(m) with p, q of opposite signs reduces to comparing p^2
// against q^2*m in integer arithmetic. No decision here consults a float.
//
// Values with q == 0 are radicand-agnostic; binary operations on two values
// with q != 0 require matching radicands.
class QuadExt {
public:
    QuadExt() : p_(0), q_(0), radicand_(2) {}
    QuadExt(Rational p) : p_(std::move(p)), q_(0), radicand_(2) {}
    QuadExt(long long p) : p_(p), q_(0), radicand_(2) {}
    QuadExt(Rational p, Rational q, int radicand = 2);

    const Rational& rat_part() const noexcept { return p_; }
    const Rational& quad_part() const noexcept { return q_; }
    int radicand() const noexcept { return radicand_; }

    bool is_rational() const noexcept { return q_.is_zero(); }
    bool is_zero() const noexcept { return p_.is_zero() && q_.is_zero(); }
    int sign() const;

    QuadExt operator-() const;
    QuadExt abs() const;

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b); // conjugate rationalization

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& a, const QuadExt& b);
    friend std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b);

    // Canonical text in the distance-set grammar: "2", "3/2", "s", "2s",
    // "1+s", "2-3/2s". Round-trips through the expression parser.
    std::string to_string() const;

    // Fixed-shape record "p/q+r/s*s" used by the CSV point dump.
    std::string to_record() const;

    // Display only; never used in a decision.
    double to_double() const;

private:
    Rational p_;
    Rational q_;
    int radicand_;

    friend int merged_radicand(const QuadExt& a, const QuadExt& b);
};

int compare(const QuadExt& a, const QuadExt& b);

// floor(num/den) for den > 0, any num. Seeds from a float hint but decides
// only by exact comparison (exponential bracketing + binary search).
BigInt quad_floor_div(const QuadExt& num, const QuadExt& den);

// Smallest integer n with n >= num/den. Requires num > 0, den > 0.
BigInt quad_ceil_div(const QuadExt& num, const QuadExt& den);

// m >= 2 and square-free, so that sqrt(m) is irrational and the
// representation stays injective.
void validate_radicand(int m);

} // namespace distchrom
