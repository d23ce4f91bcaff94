#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qblock/gf.hpp"

namespace qblock {

// Exact rational on 64-bit numerator/denominator; intermediates go through
// 128-bit and narrowing overflow is a hard error.  All quantities in this
// project are tiny (character values, class sums, small polynomials).
class Rat {
  public:
    Rat() : n_(0), d_(1) {}
    Rat(long long v) : n_(v), d_(1) {}  // NOLINT: implicit by design
    Rat(long long num, long long den);

    long long numerator() const { return n_; }
    long long denominator() const { return d_; }

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat operator-() const;
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return n_ == o.n_ && d_ == o.d_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const;
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }

  private:
    static Rat make(__int128 num, __int128 den);
    long long n_, d_;
};

inline Rat operator*(long long k, const Rat& r) { return Rat(k) * r; }

struct NotIntegral : Error { using Error::Error; };

// 2-adic valuation; infinite exactly for 0.
struct Val2 {
    bool infinite = false;
    int v = 0;

    static Val2 inf() { return Val2{true, 0}; }
    static Val2 of(int k) { return Val2{false, k}; }
    bool operator==(const Val2&) const = default;
    std::string str() const { return infinite ? "+inf" : std::to_string(v); }
};

Val2 val2(const Rat& x);

// Element a + b*sqrt2 + c*sqrt3 + d*sqrt6 of Q(sqrt2, sqrt3), exact.
struct Quad {
    Rat a, b, c, d;

    Quad() = default;
    Quad(Rat a_, Rat b_ = 0, Rat c_ = 0, Rat d_ = 0) : a(a_), b(b_), c(c_), d(d_) {}
    static Quad integer(long long n) { return Quad(Rat(n)); }
    static Quad sqrt2(Rat k = 1) { return Quad(0, k); }
    static Quad sqrt3(Rat k = 1) { return Quad(0, 0, k); }
    static Quad sqrt6(Rat k = 1) { return Quad(0, 0, 0, k); }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }

    Quad operator+(const Quad& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Quad operator-(const Quad& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Quad operator*(const Quad& o) const;
    Quad operator/(const Quad& o) const;
    Quad inverse() const;

    // Galois maps: sigma2 flips the sign of sqrt2, sigma3 of sqrt3.
    Quad conj2() const { return {a, -b, c, -d}; }
    Quad conj3() const { return {a, b, -c, -d}; }

    bool operator==(const Quad&) const = default;
    std::string str() const;
};

// Reduction of an algebraic integer onto the residue field GF(2) of the
// prime over 2: sqrt2 -> 0, sqrt3 -> 1, sqrt6 -> 0.  The ring of integers
// is Z[sqrt2, sqrt3, (sqrt2+sqrt6)/2]; inputs outside it are rejected.
Gf reduce_mod2(const Quad& x);

bool is_algebraic_integer(const Quad& x);

// Dense polynomial over Q, little-endian coefficients, no trailing zeros.
struct RatPoly {
    std::vector<Rat> coeff;

    static RatPoly zero() { return {}; }
    static RatPoly from(std::vector<Rat> c);
    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    bool is_zero() const { return coeff.empty(); }
    Rat at(int i) const { return i < static_cast<int>(coeff.size()) ? coeff[static_cast<size_t>(i)] : Rat(0); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scaled(const Rat& s) const;
    // p(s*t) as a polynomial in t.
    RatPoly substitute_scaled_var(const Rat& s) const;
    Quad eval(const Quad& x) const;

    bool operator==(const RatPoly&) const = default;
    std::string str(const std::string& var = "x") const;
};

// Monic minimal polynomial of x over Q (product of t - y over the distinct
// Galois conjugates y of x).
RatPoly minimal_polynomial(const Quad& x);

// Minimal polynomial of a tuple acting diagonally: lcm of the entry
// minimal polynomials.
RatPoly minpoly_of_tuple(const std::vector<Quad>& values);

std::string rat_str(const Rat& r);

}  // namespace qblock
