#include "doctest.h"
#include "superharm/permutation.hpp"
#include "superharm/rational.hpp"

#include <limits>
#include <random>

using superharm::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(10, 5).is_integer());
    CHECK(Rational::parse("-12/8") == Rational(-3, 2));
    CHECK(Rational::parse("7").to_string() == "7");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS(Rational::parse("a"));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational spills to big integers and back") {
    const long long big = std::numeric_limits<long long>::max();
    Rational a(big);
    Rational b = a + Rational(1);
    CHECK_FALSE(b.is_small());
    CHECK(b.to_string() == "9223372036854775808");
    Rational c = b - Rational(1);
    CHECK(c.is_small());
    CHECK(c == a);
    Rational sq = a * a;
    CHECK(sq / a == a);
    Rational m(std::numeric_limits<long long>::min());
    CHECK_FALSE(m.is_small());
    CHECK(-(-m) == m);
    CHECK((m + Rational(1)).is_small());
}

TEST_CASE("rational field laws on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-1'000'000'000'000LL, 1'000'000'000'000LL);
    for (int it = 0; it < 500; ++it) {
        Rational a(dist(rng), dist(rng) | 1), b(dist(rng), dist(rng) | 1), c(dist(rng), dist(rng) | 1);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        Rational acc = a;
        acc.add_product(b, c);
        CHECK(acc == a + b * c);
        CHECK(((a < b) == (a.to_mpq() < b.to_mpq())));
    }
}

TEST_CASE("binomials") {
    CHECK(superharm::binomial(5, 2) == Rational(10));
    CHECK(superharm::binomial(3, 4) == Rational(0));
    CHECK(superharm::binomial(60, 30).to_string() == "118264581564861424");
    CHECK(superharm::falling_factorial(5, 3) == Rational(60));
}

TEST_CASE("permutations") {
    using superharm::Permutation;
    auto p = Permutation::parse("312");
    CHECK(p(1) == 3);
    CHECK(p.inverse() == Permutation::parse("231"));
    CHECK(p.inversions() == 2);
    CHECK(p.sign() == 1);
    CHECK(p * p.inverse() == Permutation::identity(3));
    CHECK(superharm::all_permutations(4).size() == 24);
    CHECK(superharm::vandermonde_sign({1, 3, 2}) == -1);
    CHECK(superharm::vandermonde_sign({1, 3, 1}) == 0);
    CHECK_THROWS(Permutation::parse("113"));
}
