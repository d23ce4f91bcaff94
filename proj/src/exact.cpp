#include "qblock/exact.hpp"

#include <algorithm>

namespace qblock {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rat Rat::make(__int128 num, __int128 den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (num < lo || num > hi || den > hi) throw Error("rational overflow");
    Rat r;
    r.n_ = static_cast<long long>(num);
    r.d_ = static_cast<long long>(den);
    return r;
}

Rat::Rat(long long num, long long den) { *this = make(num, den); }

Rat Rat::operator+(const Rat& o) const {
    return make(static_cast<__int128>(n_) * o.d_ + static_cast<__int128>(o.n_) * d_,
                static_cast<__int128>(d_) * o.d_);
}

Rat Rat::operator-(const Rat& o) const {
    return make(static_cast<__int128>(n_) * o.d_ - static_cast<__int128>(o.n_) * d_,
                static_cast<__int128>(d_) * o.d_);
}

Rat Rat::operator*(const Rat& o) const {
    return make(static_cast<__int128>(n_) * o.n_, static_cast<__int128>(d_) * o.d_);
}

Rat Rat::operator/(const Rat& o) const {
    if (o.n_ == 0) throw DivisionByZero("rational division by zero");
    return make(static_cast<__int128>(n_) * o.d_, static_cast<__int128>(d_) * o.n_);
}

Rat Rat::operator-() const { return make(-static_cast<__int128>(n_), d_); }

bool Rat::operator<(const Rat& o) const {
    return static_cast<__int128>(n_) * o.d_ < static_cast<__int128>(o.n_) * d_;
}

Val2 val2(const Rat& x) {
    if (x == 0) return Val2::inf();
    auto twos = [](long long n) {
        int k = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++k;
        }
        return k;
    };
    long long num = x.numerator() < 0 ? -x.numerator() : x.numerator();
    return Val2::of(twos(num) - twos(x.denominator()));
}

Quad Quad::operator*(const Quad& o) const {
    // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2.
    return {a * o.a + Rat(2) * b * o.b + Rat(3) * c * o.c + Rat(6) * d * o.d,
            a * o.b + b * o.a + Rat(3) * (c * o.d + d * o.c),
            a * o.c + c * o.a + Rat(2) * (b * o.d + d * o.b),
            a * o.d + d * o.a + b * o.c + c * o.b};
}

Quad Quad::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of 0 in Q(sqrt2,sqrt3)");
    // Multiply through the three nontrivial Galois conjugates; the norm is
    // the rational product of all four.
    Quad t = conj2() * conj3() * conj2().conj3();
    Quad n = *this * t;
    if (!n.is_rational() || n.a == 0) throw Error("field norm failure");
    Rat inv_n = Rat(1) / n.a;
    return {t.a * inv_n, t.b * inv_n, t.c * inv_n, t.d * inv_n};
}

Quad Quad::operator/(const Quad& o) const { return *this * o.inverse(); }

bool is_algebraic_integer(const Quad& x) {
    auto is_int = [](const Rat& r) { return r.denominator() == 1; };
    return is_int(x.a) && is_int(x.c) && is_int(Rat(2) * x.b) && is_int(Rat(2) * x.d) &&
           is_int(x.b - x.d);
}

Gf reduce_mod2(const Quad& x) {
    if (!is_algebraic_integer(x))
        throw NotIntegral("not an algebraic integer: " + x.str());
    // With h = (sqrt2+sqrt6)/2 the integral coordinates of x are
    // (a, b-d, c, 2d) on the basis {1, sqrt2, sqrt3, h}; the residues of the
    // basis are (1, 0, 1, 1).
    long long q = (Rat(2) * x.d).numerator();
    long long acc = x.a.numerator() + x.c.numerator() + q;
    return Gf(1, static_cast<unsigned>(((acc % 2) + 2) % 2));
}

std::string rat_str(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

std::string Quad::str() const {
    if (is_zero()) return "0";
    std::string s;
    auto term = [&](const Rat& k, const char* surd) {
        if (k == 0) return;
        std::string t;
        if (k == 1 && *surd)
            t = surd;
        else if (k == -1 && *surd)
            t = std::string("-") + surd;
        else {
            t = rat_str(k);
            if (*surd) t += std::string("*") + surd;
        }
        if (!s.empty() && t[0] != '-') s += "+";
        s += t;
    };
    term(a, "");
    term(b, "s2");
    term(c, "s3");
    term(d, "s6");
    return s;
}

RatPoly RatPoly::from(std::vector<Rat> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return RatPoly{std::move(c)};
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> c(std::max(coeff.size(), o.coeff.size()), Rat(0));
    for (size_t i = 0; i < coeff.size(); ++i) c[i] += coeff[i];
    for (size_t i = 0; i < o.coeff.size(); ++i) c[i] += o.coeff[i];
    return from(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Rat> c(coeff.size() + o.coeff.size() - 1, Rat(0));
    for (size_t i = 0; i < coeff.size(); ++i)
        for (size_t j = 0; j < o.coeff.size(); ++j) c[i + j] += coeff[i] * o.coeff[j];
    return from(std::move(c));
}

RatPoly RatPoly::scaled(const Rat& s) const {
    std::vector<Rat> c = coeff;
    for (auto& x : c) x *= s;
    return from(std::move(c));
}

RatPoly RatPoly::substitute_scaled_var(const Rat& s) const {
    std::vector<Rat> c = coeff;
    Rat p(1);
    for (auto& x : c) {
        x *= p;
        p *= s;
    }
    return from(std::move(c));
}

Quad RatPoly::eval(const Quad& x) const {
    Quad acc(Rat(0));
    for (size_t i = coeff.size(); i-- > 0;) acc = acc * x + Quad(coeff[i]);
    return acc;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = coeff.size(); i-- > 0;) {
        const Rat& k = coeff[i];
        if (k == 0) continue;
        std::string t;
        Rat ak = k < 0 ? -k : k;
        if (i == 0)
            t = rat_str(ak);
        else {
            if (ak != 1) t = rat_str(ak) + "*";
            t += var;
            if (i > 1) t += "^" + std::to_string(i);
        }
        if (s.empty())
            s = (k < 0 ? "-" : "") + t;
        else
            s += (k < 0 ? " - " : " + ") + t;
    }
    return s;
}

RatPoly minimal_polynomial(const Quad& x) { return minpoly_of_tuple({x}); }

namespace {

// Multiply out prod (t - r) over the given roots inside Quad[t], then check
// the coefficients are rational.
RatPoly poly_from_roots(const std::vector<Quad>& roots) {
    std::vector<Quad> c = {Quad(Rat(1))};
    for (const Quad& r : roots) {
        std::vector<Quad> nc(c.size() + 1, Quad(Rat(0)));
        for (size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] = nc[i + 1] + c[i];
            nc[i] = nc[i] - c[i] * r;
        }
        c = std::move(nc);
    }
    std::vector<Rat> out;
    out.reserve(c.size());
    for (const Quad& q : c) {
        if (!q.is_rational()) throw Error("root set not Galois stable");
        out.push_back(q.a);
    }
    return RatPoly::from(std::move(out));
}

}  // namespace

RatPoly minpoly_of_tuple(const std::vector<Quad>& values) {
    std::vector<Quad> roots;
    auto add = [&](const Quad& r) {
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    };
    for (const Quad& x : values) {
        add(x);
        add(x.conj2());
        add(x.conj3());
        add(x.conj2().conj3());
    }
    return poly_from_roots(roots);
}

}  // namespace qblock
