#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qblock/exact.hpp"
#include "qblock/gf.hpp"

using namespace qblock;

TEST_CASE("gf2 and gf4 basics") {
    Gf one = Gf::one(1);
    CHECK((one + one).is_zero());

    Gf w = Gf::gen(2);  // w^2 + w + 1 = 0
    CHECK(w * w == w + Gf::one(2));
    CHECK(w.inverse() == w + Gf::one(2));
}

TEST_CASE("gf4 inverse by brute force over the nonzero elements") {
    Gf w = Gf::gen(2);
    Gf found = Gf::zero(2);
    int count = 0;
    for (unsigned v = 1; v < 4; ++v) {
        Gf x(2, v);
        if ((w * x).is_one()) {
            found = x;
            ++count;
        }
    }
    CHECK(count == 1);
    CHECK(found == w.inverse());
}

TEST_CASE("field axioms exhaustive for e <= 4") {
    for (int e = 1; e <= 4; ++e) {
        const unsigned q = 1u << e;
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                Gf x(e, a), y(e, b);
                CHECK(x + y == y + x);
                CHECK(x * y == y * x);
                for (unsigned c = 0; c < q; ++c) {
                    Gf z(e, c);
                    CHECK((x + y) + z == x + (y + z));
                    CHECK((x * y) * z == x * (y * z));
                    CHECK(x * (y + z) == x * y + x * z);
                }
                if (b != 0) CHECK((y * y.inverse()).is_one());
            }
    }
}

TEST_CASE("frobenius iterated e times is the identity") {
    for (int e = 1; e <= 4; ++e) {
        const unsigned q = 1u << e;
        for (unsigned a = 0; a < q; ++a) {
            Gf x(e, a);
            Gf y = x;
            for (int i = 0; i < e; ++i) y = y.frobenius();
            CHECK(y == x);
        }
    }
}

TEST_CASE("subfield embeddings are ring homomorphisms") {
    const std::pair<int, int> pairs[] = {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {1, 8},
                                         {2, 8}, {4, 8}, {2, 6}, {3, 6}};
    for (auto [e, et] : pairs) {
        const unsigned q = 1u << e;
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                Gf x(e, a), y(e, b);
                CHECK((x + y).embed(et) == x.embed(et) + y.embed(et));
                CHECK((x * y).embed(et) == x.embed(et) * y.embed(et));
            }
        CHECK(Gf::one(e).embed(et).is_one());
    }
}

TEST_CASE("mixed-field arithmetic is rejected") {
    CHECK_THROWS_AS((void)(Gf::one(1) + Gf::one(2)), MixedFields);
    CHECK_THROWS_AS((void)Gf::zero(2).inverse(), DivisionByZero);
}

TEST_CASE("quad arithmetic on surds") {
    Quad s2 = Quad::sqrt2();
    Quad s3 = Quad::sqrt3();
    CHECK(s2 * s2 == Quad::integer(2));
    CHECK(s2 * s3 == Quad::sqrt6());
    CHECK(Quad::sqrt2(5).conj2() == Quad::sqrt2(-5));
    CHECK((s2 + s3) * (s2 - s3) == Quad::integer(-1));
    Quad x(Rat(1), Rat(2), Rat(3), Rat(4));
    CHECK((x * x.inverse()) == Quad::integer(1));
}

TEST_CASE("galois maps commute and have order 2") {
    std::mt19937_64 rng(7);
    auto rnd = [&] {
        auto r = [&] { return Rat(static_cast<long long>(rng() % 19) - 9, 1 + static_cast<long long>(rng() % 4)); };
        return Quad(r(), r(), r(), r());
    };
    for (int i = 0; i < 200; ++i) {
        Quad x = rnd(), y = rnd();
        CHECK(x.conj2().conj2() == x);
        CHECK(x.conj3().conj3() == x);
        CHECK(x.conj2().conj3() == x.conj3().conj2());
        CHECK((x * y).conj2() == x.conj2() * y.conj2());
        CHECK((x + y).conj3() == x.conj3() + y.conj3());
    }
}

TEST_CASE("reduce_mod2 on the declared generators") {
    CHECK(reduce_mod2(Quad::sqrt2(5)).is_zero());
    CHECK(reduce_mod2(Quad::sqrt3()).is_one());
    CHECK(reduce_mod2(Quad::integer(1)).is_one());
    CHECK(reduce_mod2(Quad::sqrt6()).is_zero());
    // (sqrt2 + sqrt6)/2 is integral and reduces to 1: its square is 2 + sqrt3.
    Quad h(Rat(0), Rat(1, 2), Rat(0), Rat(1, 2));
    CHECK(is_algebraic_integer(h));
    CHECK(reduce_mod2(h).is_one());
    CHECK(reduce_mod2(h * h) == reduce_mod2(h) * reduce_mod2(h));
    CHECK_THROWS_AS(reduce_mod2(Quad(Rat(1, 2))), NotIntegral);
    CHECK_THROWS_AS(reduce_mod2(Quad::sqrt2(Rat(1, 2))), NotIntegral);
}

TEST_CASE("reduce_mod2 is a ring homomorphism on random integral elements") {
    std::mt19937_64 rng(11);
    auto rnd = [&] {
        // integer span of {1, sqrt2, sqrt3, (sqrt2+sqrt6)/2}
        long long a = static_cast<long long>(rng() % 21) - 10;
        long long p = static_cast<long long>(rng() % 21) - 10;
        long long c = static_cast<long long>(rng() % 21) - 10;
        long long q = static_cast<long long>(rng() % 21) - 10;
        return Quad(Rat(a), Rat(p) + Rat(q, 2), Rat(c), Rat(q, 2));
    };
    for (int i = 0; i < 1000; ++i) {
        Quad x = rnd(), y = rnd();
        REQUIRE(is_algebraic_integer(x));
        CHECK(reduce_mod2(x + y) == reduce_mod2(x) + reduce_mod2(y));
        CHECK(reduce_mod2(x * y) == reduce_mod2(x) * reduce_mod2(y));
    }
}

TEST_CASE("val2 examples") {
    CHECK(val2(Rat(50)) == Val2::of(1));
    CHECK(val2(Rat(1, 2)) == Val2::of(-1));
    CHECK(val2(Rat(0)) == Val2::inf());
    CHECK(val2(Rat(-12)) == Val2::of(2));
    CHECK(val2(Rat(3, 8)) == Val2::of(-3));
}

TEST_CASE("val2 is a valuation on random rationals") {
    std::mt19937_64 rng(3);
    auto rnd = [&] {
        long long n = static_cast<long long>(rng() % 199) - 99;
        long long d = 1 + static_cast<long long>(rng() % 40);
        return Rat(n, d);
    };
    for (int i = 0; i < 500; ++i) {
        Rat x = rnd(), y = rnd();
        if (x != 0 && y != 0) {
            CHECK(val2(x * y).v == val2(x).v + val2(y).v);
            if (x + y != 0) CHECK(val2(x + y).v >= std::min(val2(x).v, val2(y).v));
        }
    }
}

TEST_CASE("minimal polynomials in Q(sqrt2,sqrt3)") {
    RatPoly p = minimal_polynomial(Quad::sqrt2(5));
    CHECK(p == RatPoly::from({Rat(-50), Rat(0), Rat(1)}));  // x^2 - 50
    CHECK(minimal_polynomial(Quad::integer(0)) == RatPoly::from({Rat(0), Rat(1)}));

    RatPoly t = minpoly_of_tuple({Quad::integer(0), Quad::sqrt2(5)});
    CHECK(t == RatPoly::from({Rat(0), Rat(-50), Rat(0), Rat(1)}));  // x^3 - 50x
    CHECK(t.eval(Quad::sqrt2(5)).is_zero());

    RatPoly sub = t.substitute_scaled_var(Rat(5));  // 125 t^3 - 250 t
    CHECK(sub == RatPoly::from({Rat(0), Rat(-250), Rat(0), Rat(125)}));
    CHECK(sub == RatPoly::from({Rat(0), Rat(-2), Rat(0), Rat(1)}).scaled(Rat(125)));
}
