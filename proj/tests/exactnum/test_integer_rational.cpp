#include "catch_amalgamated.hpp"

#include "twisthom/errors.hpp"
#include "twisthom/exactnum/rational.hpp"
#include "twisthom/util/rng.hpp"

#include <string>

using namespace twisthom;

namespace {

std::string i128_str(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

} // namespace

TEST_CASE("integer arithmetic matches 128-bit reference across the overflow boundary") {
    Rng rng(11);
    for (int iter = 0; iter < 2000; ++iter) {
        int64_t a = static_cast<int64_t>(rng.next());
        int64_t b = static_cast<int64_t>(rng.next()) >> rng.below(63);
        if (iter % 3 == 0) a >>= rng.below(63);
        Integer A(static_cast<long long>(a)), B(static_cast<long long>(b));
        CHECK((A + B).str() == i128_str(static_cast<__int128>(a) + b));
        CHECK((A - B).str() == i128_str(static_cast<__int128>(a) - b));
        CHECK((A * B).str() == i128_str(static_cast<__int128>(a) * b));
        if (b != 0) {
            Integer q, r;
            tdiv_qr(A * B + Integer(1), B, q, r);
            CHECK(q * B + r == A * B + Integer(1));
            CHECK(abs(r) < abs(B));
        }
    }
}

TEST_CASE("big integers demote back to the small form") {
    Integer big("123456789012345678901234567890");
    Integer back = big - Integer("123456789012345678901234567889");
    CHECK(back.is_one());
    CHECK(back.fits_int64());
    CHECK(big.str() == "123456789012345678901234567890");
    CHECK_THROWS_AS(big.to_int64(), InputError);
    CHECK(gcd(Integer("1000000000000000000000"), Integer(35)) == Integer(5));
    CHECK(lcm(Integer(4), Integer(6)) == Integer(12));
    CHECK(mod_floor(Integer(-7), Integer(3)) == Integer(2));
    Integer mn(INT64_MIN);
    CHECK((-mn).str() == "9223372036854775808");
    CHECK(abs(mn).str() == "9223372036854775808");
}

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
    Rational x(Integer(6), Integer(-4));
    CHECK(x.numerator() == Integer(-3));
    CHECK(x.denominator() == Integer(2));
    CHECK(x.str() == "-3/2");
    CHECK(Rational(Integer(0), Integer(-5)).denominator().is_one());
    CHECK(Rational::parse("10/4") == Rational(Integer(5), Integer(2)));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("abc"), InputError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
    CHECK(Rational(Integer(1), Integer(3)) + Rational(Integer(1), Integer(6)) == Rational(Integer(1), Integer(2)));
    CHECK(Rational(Integer(1), Integer(3)) < Rational(Integer(1), Integer(2)));
}

TEST_CASE("rational field axioms on random values") {
    Rng rng(5);
    auto draw = [&] { return Rational(Integer(rng.range(-30, 30)), Integer(rng.range(1, 30))); };
    for (int iter = 0; iter < 500; ++iter) {
        Rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == Rational(0));
        if (!a.is_zero()) CHECK(a * a.reciprocal() == Rational(1));
        CHECK(gcd(abs((a * b).numerator()), (a * b).denominator()).is_one());
    }
}
