#include <doctest.h>

#include <chenruan/cyclotomic.hpp>
#include <chenruan/interval.hpp>

#include <random>

using namespace chenruan;

namespace {
Cyclotomic z5(long k) { return Cyclotomic::root_power(5, k); }
}

TEST_CASE("root-of-unity inverses multiply to one") {
    Cyclotomic one(5, Rational(1));
    CHECK(cyclotomic_mul(z5(1), z5(4)) == one);
    CHECK(cyclotomic_mul(z5(2), z5(3)) == one);
}

TEST_CASE("minimal polynomial reduces to zero") {
    Cyclotomic sum = z5(4) + z5(3) + z5(2) + z5(1) + Cyclotomic(5, Rational(1));
    CHECK(sum.is_zero());
}

TEST_CASE("product (1+z)(1+z^4) is canonical and matches the embedding") {
    Cyclotomic one(5, Rational(1));
    Cyclotomic prod = (one + z5(1)) * (one + z5(4));
    // 1 + z + z^4 + 1 reduced to the power basis
    Cyclotomic expect = one + one + z5(1) + z5(4);
    CHECK(prod == expect);
    auto lhs = prod.embed();
    auto rhs = (std::complex<double>(1, 0) + z5(1).embed()) * (std::complex<double>(1, 0) + z5(4).embed());
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("order mismatch is rejected") {
    CHECK_THROWS_AS(z5(1) * Cyclotomic::root_power(7, 1), std::invalid_argument);
}

TEST_CASE("embedding is a ring homomorphism on random elements") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> ca, cb;
        for (int i = 0; i < 4; ++i) {
            ca.push_back(rat(coeff(rng), 1 + (trial % 3)));
            cb.push_back(rat(coeff(rng), 1 + ((trial + 1) % 3)));
        }
        Cyclotomic a(5, ca), b(5, cb);
        CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-12);
        CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-12);
    }
}

TEST_CASE("inverse and conjugation") {
    Cyclotomic a = z5(1) + Cyclotomic(5, rat(2));
    CHECK((a * a.inverse()) == Cyclotomic(5, Rational(1)));
    CHECK(std::abs(a.conj().embed() - std::conj(a.embed())) < 1e-12);
    CHECK_THROWS_AS(Cyclotomic(5).inverse(), std::domain_error);
}

TEST_CASE("promotion to a larger field preserves the embedding") {
    Cyclotomic a = z5(2) + Cyclotomic(5, rat(1, 3));
    Cyclotomic b = a.promote(20);
    CHECK(b.order() == 20);
    CHECK(std::abs(a.embed() - b.embed()) < 1e-12);
    CHECK_THROWS_AS(a.promote(7), std::invalid_argument);
}

TEST_CASE("order one field is the rationals") {
    Cyclotomic r(1, rat(5, 3));
    CHECK(r.is_rational());
    CHECK(r.rational_part() == rat(5, 3));
    CHECK((r * r).rational_part() == rat(25, 9));
}

TEST_CASE("interval embedding gives decisive signs away from zero") {
    ComplexInterval e = embed_interval(z5(1));
    CHECK(e.sign_re_positive());
    ComplexInterval n = embed_interval(z5(2) + z5(3)); // 2 cos(4 pi / 5) < 0
    CHECK_FALSE(n.sign_re_positive());
    // sum to zero: the interval must refuse to decide
    Cyclotomic zero = z5(1) * z5(4) - Cyclotomic(5, Rational(1));
    CHECK(zero.is_zero());
}
