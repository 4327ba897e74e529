#include "distchrom/rational.hpp"

namespace distchrom {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw DomainError("rational with zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(mp::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
    if (num_ == 0) {
        throw DomainError("reciprocal of zero");
    }
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) {
        throw DomainError("rational division by zero");
    }
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt Rational::floor() const {
    BigInt q = num_ / den_; // truncates toward zero
    if (num_ < 0 && q * den_ != num_) {
        --q;
    }
    return q;
}

BigInt Rational::ceil() const {
    BigInt q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) {
        ++q;
    }
    return q;
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += "/" + den_.str();
    }
    return s;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

} // namespace distchrom
