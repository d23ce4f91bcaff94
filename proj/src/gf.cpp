#include "qblock/gf.hpp"

#include <array>

namespace qblock {

namespace {

// Conway polynomials for GF(2^e), e = 1..8.
constexpr std::array<unsigned, 9> kConway = {
    0,
    0b11,         // x + 1
    0b111,        // x^2 + x + 1
    0b1011,       // x^3 + x + 1
    0b10011,      // x^4 + x + 1
    0b100101,     // x^5 + x^2 + 1
    0b1011011,    // x^6 + x^4 + x^3 + x + 1
    0b10000011,   // x^7 + x + 1
    0b100011101,  // x^8 + x^4 + x^3 + x^2 + 1
};

struct FieldTables {
    // exp_[k] = x^k for k in [0, 2q-2), so products need no modular reduce.
    std::array<std::uint8_t, 512> exp_;
    std::array<std::uint16_t, 256> log_;  // log_[v] for v != 0
};

unsigned carryless_reduce(unsigned acc, int e) {
    const unsigned poly = kConway[static_cast<unsigned>(e)];
    for (int bit = 14; bit >= e; --bit)
        if (acc & (1u << bit)) acc ^= poly << (bit - e);
    return acc;
}

unsigned raw_mul(unsigned a, unsigned b, int e) {
    unsigned acc = 0;
    for (int i = 0; i < 8; ++i)
        if (b & (1u << i)) acc ^= a << i;
    return carryless_reduce(acc, e);
}

const FieldTables& tables(int e) {
    static std::array<FieldTables, 9> cache = [] {
        std::array<FieldTables, 9> t{};
        for (int e2 = 1; e2 <= 8; ++e2) {
            auto& ft = t[static_cast<unsigned>(e2)];
            const unsigned q1 = (1u << e2) - 1;
            unsigned v = 1;
            for (unsigned k = 0; k < 2 * q1; ++k) {
                ft.exp_[k] = static_cast<std::uint8_t>(v);
                if (k < q1) ft.log_[v] = static_cast<std::uint16_t>(k);
                v = raw_mul(v, 2, e2);  // multiply by the class of x
            }
        }
        return t;
    }();
    return cache[static_cast<unsigned>(e)];
}

}  // namespace

unsigned conway_poly(int e) {
    if (e < 1 || e > 8) throw Error("exponent out of range: " + std::to_string(e));
    return kConway[static_cast<unsigned>(e)];
}

Gf::Gf(int e, unsigned v) : e_(static_cast<std::uint8_t>(e)), v_(static_cast<std::uint8_t>(v)) {
    if (e < 1 || e > 8) throw Error("exponent out of range: " + std::to_string(e));
    if (v >= (1u << e)) throw Error("residue out of range");
}

Gf Gf::gen(int e) {
    if (e == 1) return Gf(1, 1);
    return Gf(e, 2);
}

Gf Gf::operator+(Gf o) const {
    require_same_field(*this, o);
    Gf r;
    r.e_ = e_;
    r.v_ = v_ ^ o.v_;
    return r;
}

Gf Gf::operator*(Gf o) const {
    require_same_field(*this, o);
    Gf r;
    r.e_ = e_;
    if (v_ == 0 || o.v_ == 0) {
        r.v_ = 0;
        return r;
    }
    const auto& ft = tables(e_);
    r.v_ = ft.exp_[ft.log_[v_] + ft.log_[o.v_]];
    return r;
}

Gf Gf::inverse() const {
    if (v_ == 0) throw DivisionByZero("inverse of 0 in GF(2^" + std::to_string(e_) + ")");
    const auto& ft = tables(e_);
    const unsigned q1 = field_size() - 1;
    Gf r;
    r.e_ = e_;
    r.v_ = ft.exp_[(q1 - ft.log_[v_]) % q1];
    return r;
}

Gf Gf::pow(long long k) const {
    if (v_ == 0) {
        if (k < 0) throw DivisionByZero("0^negative");
        return k == 0 ? one(e_) : *this;
    }
    const unsigned q1 = field_size() - 1;
    long long k2 = k % q1;
    if (k2 < 0) k2 += q1;
    const auto& ft = tables(e_);
    Gf r;
    r.e_ = e_;
    r.v_ = ft.exp_[(ft.log_[v_] * static_cast<unsigned>(k2)) % q1];
    return r;
}

Gf Gf::embed(int eto) const {
    if (eto == e_) return *this;
    if (eto < e_ || eto % e_ != 0 || eto > 8)
        throw MixedFields("no embedding GF(2^" + std::to_string(e_) + ") -> GF(2^" +
                          std::to_string(eto) + ")");
    if (v_ == 0) return zero(eto);
    const unsigned n = ((1u << eto) - 1) / ((1u << e_) - 1);
    const auto& ft = tables(e_);
    return gen(eto).pow(static_cast<long long>(n) * ft.log_[v_]);
}

std::string Gf::str() const {
    if (e_ == 1) return v_ ? "1" : "0";
    // polynomial in the generator, lowest degree first omitted terms dropped
    if (v_ == 0) return "0";
    std::string s;
    for (int i = e_ - 1; i >= 0; --i) {
        if (!(v_ & (1u << i))) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "w";
        else
            s += "w^" + std::to_string(i);
    }
    return s;
}

}  // namespace qblock
