#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qblock {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};
struct MixedFields : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// Element of GF(2^e), 1 <= e <= 8.  Residues are taken modulo the Conway
// polynomial for the exponent, so the class of x is a multiplicative
// generator and subfield embeddings are norm-compatible across exponents.
class Gf {
  public:
    Gf() : e_(1), v_(0) {}
    Gf(int e, unsigned v);

    static Gf zero(int e) { return Gf(e, 0); }
    static Gf one(int e) { return Gf(e, 1); }
    // The class of x, a generator of the multiplicative group.
    static Gf gen(int e);

    int exponent() const { return e_; }
    unsigned value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Gf operator+(Gf o) const;
    Gf operator-(Gf o) const { return *this + o; }  // char 2
    Gf operator*(Gf o) const;
    Gf inverse() const;
    Gf operator/(Gf o) const { return *this * o.inverse(); }
    Gf pow(long long k) const;
    Gf frobenius() const { return *this * *this; }

    bool operator==(const Gf& o) const = default;

    // Field size q = 2^e.
    unsigned field_size() const { return 1u << e_; }

    // Embedding into GF(2^eto); requires exponent() | eto.  Determined by
    // gen(e) -> gen(eto)^((2^eto-1)/(2^e-1)); a ring homomorphism because
    // the moduli are Conway polynomials.
    Gf embed(int eto) const;

    std::string str() const;

  private:
    std::uint8_t e_;
    std::uint8_t v_;
};

// Bitmask of the degree-e Conway polynomial over GF(2) (bit i = coeff of x^i).
unsigned conway_poly(int e);

inline void require_same_field(Gf a, Gf b) {
    if (a.exponent() != b.exponent())
        throw MixedFields("GF(2^" + std::to_string(a.exponent()) + ") vs GF(2^" +
                          std::to_string(b.exponent()) + ")");
}

}  // namespace qblock
