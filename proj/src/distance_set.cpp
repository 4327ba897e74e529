#include "distchrom/distance_set.hpp"

#include <algorithm>
#include <cctype>

namespace distchrom {

namespace {

namespace mp = boost::multiprecision;

class ExprParser {
public:
    ExprParser(std::string_view text, int radicand) : text_(text), radicand_(radicand) {}

    std::vector<std::pair<QuadExt, std::size_t>> parse_set() {
        std::vector<std::pair<QuadExt, std::size_t>> out;
        out.push_back(parse_distance());
        skip_ws();
        while (!at_end() && peek() == ',') {
            ++pos_;
            out.push_back(parse_distance());
            skip_ws();
        }
        if (!at_end()) {
            throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos_);
        }
        return out;
    }

    QuadExt parse_expr() {
        auto [v, start] = parse_distance();
        (void)start;
        skip_ws();
        if (!at_end()) {
            throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos_);
        }
        return v;
    }

private:
    std::string_view text_;
    int radicand_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::pair<QuadExt, std::size_t> parse_distance() {
        skip_ws();
        const std::size_t start = pos_;
        QuadExt v = parse_term();
        skip_ws();
        while (!at_end() && (peek() == '+' || peek() == '-')) {
            const char op = peek();
            ++pos_;
            QuadExt t = parse_term();
            v = (op == '+') ? v + t : v - t;
            skip_ws();
        }
        return {v, start};
    }

    QuadExt parse_term() {
        skip_ws();
        if (at_end()) {
            throw ParseError("expected a term", pos_);
        }
        if (peek() == 's') {
            ++pos_;
            return QuadExt(Rational(0), Rational(1), radicand_);
        }
        Rational r = parse_rational();
        skip_ws();
        if (!at_end() && peek() == 's') {
            ++pos_;
            return QuadExt(Rational(0), r, radicand_);
        }
        return QuadExt(r, Rational(0), radicand_);
    }

    Rational parse_rational() {
        skip_ws();
        bool neg = false;
        if (!at_end() && peek() == '-') {
            neg = true;
            ++pos_;
            skip_ws();
        }
        BigInt num = parse_digits();
        BigInt den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t den_pos = pos_;
            den = parse_digits();
            if (den == 0) {
                throw ParseError("zero denominator", den_pos);
            }
        }
        if (neg) num = -num;
        return Rational(num, den);
    }

    BigInt parse_digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) {
            throw ParseError("expected digits", pos_);
        }
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }
};

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / mp::gcd(a, b) * b; }

} // namespace

QuadExt DistanceSet::value_of(const LatticeVector& p) const {
    if (rank == 1) {
        if (p.b != 0) {
            throw DomainError("rank-1 lattice points have b == 0");
        }
        return QuadExt(Rational(p.a)) * basis[0];
    }
    return QuadExt(Rational(p.a)) * basis[0] + QuadExt(Rational(p.b)) * basis[1];
}

std::string DistanceSet::canonical_text() const {
    std::string out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i) out += ", ";
        out += elements[i].to_string();
    }
    return out;
}

QuadExt parse_quad_expr(std::string_view text, int radicand) {
    validate_radicand(radicand);
    return ExprParser(text, radicand).parse_expr();
}

DistanceSet parse_distance_set(std::string_view text, int radicand) {
    validate_radicand(radicand);
    auto parsed = ExprParser(text, radicand).parse_set();
    std::vector<QuadExt> elements;
    elements.reserve(parsed.size());
    for (const auto& [value, pos] : parsed) {
        if (value.sign() <= 0) {
            throw ParseError(value.is_zero() ? "distance evaluates to zero"
                                             : "distance must be positive",
                             pos);
        }
        elements.push_back(value);
    }
    return analyze_distance_set(std::move(elements), radicand);
}

DistanceSet analyze_distance_set(std::vector<QuadExt> elements, int radicand) {
    validate_radicand(radicand);
    if (elements.empty()) {
        throw DomainError("distance set must be nonempty");
    }
    for (const QuadExt& e : elements) {
        if (e.sign() <= 0) {
            throw DomainError("distance set elements must be positive");
        }
        if (!e.is_rational() && e.radicand() != radicand) {
            throw DomainError("element radicand does not match the set radicand");
        }
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    DistanceSet ds;
    ds.elements = std::move(elements);
    ds.radicand = radicand;

    // Clear denominators: with L0 = lcm of all denominators, each element is
    // (a + b*sqrt(m))/L0 with integer a, b. Scaling by L0 does not change
    // the lattice picture, only the embedding of the basis.
    BigInt L0 = 1;
    for (const QuadExt& e : ds.elements) {
        L0 = lcm_big(L0, e.rat_part().den());
        L0 = lcm_big(L0, e.quad_part().den());
    }
    std::vector<BigVector> vecs;
    vecs.reserve(ds.elements.size());
    for (const QuadExt& e : ds.elements) {
        vecs.push_back(BigVector{e.rat_part().num() * (L0 / e.rat_part().den()),
                                 e.quad_part().num() * (L0 / e.quad_part().den())});
    }

    HnfResultBig h = lattice_hnf_big(vecs);
    ds.rank = h.rank;

    std::vector<QuadExt> basis;
    for (const BigVector& b : h.basis) {
        basis.push_back(QuadExt(Rational(b.a, L0), Rational(b.b, L0), radicand));
    }

    if (ds.rank == 1) {
        // Elements are positive, so after flipping the generator positive all
        // coordinates are positive as well.
        bool flip = basis[0].sign() < 0;
        if (flip) basis[0] = -basis[0];
        std::vector<long long> iform;
        for (BigVector& c : h.coords) {
            if (flip) c.a = -c.a;
            iform.push_back(checked_narrow(c.a));
            ds.lattice_coords.push_back(LatticeVector{iform.back(), 0});
        }
        ds.alpha = QuadExt(Rational(1)) / basis[0];
        ds.integer_form = std::move(iform);
    } else {
        for (const BigVector& c : h.coords) {
            ds.lattice_coords.push_back(LatticeVector{checked_narrow(c.a), checked_narrow(c.b)});
        }
    }
    ds.basis = std::move(basis);
    return ds;
}

DistanceSet theorem_family(int t, int radicand) {
    if (t < 2) {
        throw DomainError("theorem family requires t >= 2");
    }
    std::vector<QuadExt> elements;
    for (int a = 0; a <= t - 1; ++a) {
        for (int b = 0; a + b <= t - 1; ++b) {
            if (a + b >= 1) {
                elements.push_back(QuadExt(Rational(a), Rational(b), radicand));
            }
        }
    }
    return analyze_distance_set(std::move(elements), radicand);
}

} // namespace distchrom
