#include "distchrom/quadext.hpp"

#include <cmath>

namespace distchrom {

QuadExt::QuadExt(Rational p, Rational q, int radicand)
    : p_(std::move(p)), q_(std::move(q)), radicand_(radicand) {
    if (radicand_ < 2) {
        throw DomainError("radicand must be at least 2");
    }
}

// Radicand of the result of a binary op; values with q == 0 are inert.
int merged_radicand(const QuadExt& a, const QuadExt& b) {
    if (a.q_.is_zero()) return b.radicand_;
    if (b.q_.is_zero()) return a.radicand_;
    if (a.radicand_ != b.radicand_) {
        throw DomainError("mixed radicands: sqrt(" + std::to_string(a.radicand_) +
                          ") vs sqrt(" + std::to_string(b.radicand_) + ")");
    }
    return a.radicand_;
}

int QuadExt::sign() const {
    const int sp = p_.sign();
    const int sq = q_.sign();
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: p + q*sqrt(m) has the sign of the dominant part,
    // decided by p^2 vs q^2*m.
    const Rational lhs = p_ * p_;
    const Rational rhs = q_ * q_ * Rational(radicand_);
    if (lhs == rhs) {
        // Would mean sqrt(m) = |p/q| rational; impossible for square-free m.
        throw DomainError("radicand admits a rational square root");
    }
    return lhs > rhs ? sp : sq;
}

QuadExt QuadExt::operator-() const { return QuadExt(-p_, -q_, radicand_); }

QuadExt QuadExt::abs() const { return sign() < 0 ? -*this : *this; }

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    return QuadExt(a.p_ + b.p_, a.q_ + b.q_, merged_radicand(a, b));
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    return QuadExt(a.p_ - b.p_, a.q_ - b.q_, merged_radicand(a, b));
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    const int m = merged_radicand(a, b);
    return QuadExt(a.p_ * b.p_ + a.q_ * b.q_ * Rational(m),
                   a.p_ * b.q_ + a.q_ * b.p_, m);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    if (b.is_zero()) {
        throw DomainError("division by zero");
    }
    const int m = merged_radicand(a, b);
    // (p + q*sqrt(m)) * (p - q*sqrt(m)) = p^2 - q^2*m, nonzero for b != 0.
    const Rational norm = b.p_ * b.p_ - b.q_ * b.q_ * Rational(m);
    if (norm.is_zero()) {
        throw DomainError("radicand admits a rational square root");
    }
    const QuadExt conj(b.p_, -b.q_, m);
    QuadExt num = a * conj;
    return QuadExt(num.rat_part() / norm, num.quad_part() / norm, m);
}

bool operator==(const QuadExt& a, const QuadExt& b) {
    if (a.p_ != b.p_ || a.q_ != b.q_) return false;
    // Representations match; radicands only matter when q != 0.
    return a.q_.is_zero() || a.radicand_ == b.radicand_;
}

std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b) {
    const int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

int compare(const QuadExt& a, const QuadExt& b) { return (a - b).sign(); }

std::string QuadExt::to_string() const {
    if (q_.is_zero()) {
        return p_.to_string();
    }
    std::string radical;
    const Rational qa = q_.abs();
    if (qa == Rational(1)) {
        radical = "s";
    } else {
        radical = qa.to_string() + "s";
    }
    if (p_.is_zero()) {
        // A leading bare "-s" is not in the grammar; emit "-1s".
        if (q_.sign() < 0) {
            return qa == Rational(1) ? "-1s" : "-" + radical;
        }
        return radical;
    }
    return p_.to_string() + (q_.sign() < 0 ? "-" : "+") + radical;
}

std::string QuadExt::to_record() const {
    return p_.num().str() + "/" + p_.den().str() + "+" + q_.num().str() + "/" +
           q_.den().str() + "*s";
}

double QuadExt::to_double() const {
    return p_.to_double() + q_.to_double() * std::sqrt(static_cast<double>(radicand_));
}

BigInt quad_floor_div(const QuadExt& num, const QuadExt& den) {
    if (den.sign() <= 0) {
        throw DomainError("quad_floor_div requires a positive denominator");
    }
    const QuadExt x = num / den;
    if (x.is_rational()) {
        return x.rat_part().floor();
    }

    // Float hint; only the exact comparisons below decide.
    BigInt n = 0;
    const double hint = x.to_double();
    if (std::isfinite(hint) && std::abs(hint) < 9.0e18) {
        n = BigInt(static_cast<long long>(std::floor(hint)));
    }

    const auto le_x = [&](const BigInt& k) { return QuadExt(Rational(k)) <= x; };

    // Bracket [lo, hi] with lo <= x < hi, widening exponentially if the
    // hint was off.
    BigInt lo = n, hi = n;
    BigInt step = 1;
    while (!le_x(lo)) {
        lo -= step;
        step *= 2;
    }
    step = 1;
    while (le_x(hi)) {
        hi += step;
        step *= 2;
    }
    while (hi - lo > 1) {
        BigInt mid = lo + (hi - lo) / 2;
        if (le_x(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

BigInt quad_ceil_div(const QuadExt& num, const QuadExt& den) {
    if (num.sign() <= 0 || den.sign() <= 0) {
        throw DomainError("quad_ceil_div requires positive inputs");
    }
    const BigInt f = quad_floor_div(num, den);
    if (QuadExt(Rational(f)) * den == num) {
        return f;
    }
    return f + 1;
}

void validate_radicand(int m) {
    if (m < 2) {
        throw DomainError("radicand must be an integer >= 2");
    }
    for (long long d = 2; d * d <= m; ++d) {
        if (m % (d * d) == 0) {
            throw DomainError("radicand must be square-free, got " + std::to_string(m));
        }
    }
}

} // namespace distchrom
