#include "catch_amalgamated.hpp"

#include "twisthom/errors.hpp"
#include "twisthom/exactnum/cyclotomic.hpp"
#include "twisthom/exactnum/laurent_poly.hpp"
#include "twisthom/util/rng.hpp"

using namespace twisthom;

namespace {

LaurentPoly poly(long low, std::initializer_list<int> c) {
    std::vector<Rational> v;
    for (int x : c) v.emplace_back(x);
    return LaurentPoly::from_coeffs(low, v);
}

LaurentPoly random_poly(Rng& rng, int max_width) {
    long low = rng.range(-3, 3);
    std::vector<Rational> c;
    int w = static_cast<int>(rng.range(0, max_width));
    for (int i = 0; i <= w; ++i) c.emplace_back(rng.range(-4, 4));
    return LaurentPoly::from_coeffs(low, c);
}

} // namespace

TEST_CASE("cyclotomic polynomials for small orders") {
    LaurentPoly t = LaurentPoly::t();
    CHECK(cyclotomic_polynomial(1) == t - LaurentPoly(1));
    CHECK(cyclotomic_polynomial(2) == t + LaurentPoly(1));
    CHECK(cyclotomic_polynomial(6) == t * t - t + LaurentPoly(1));
    CHECK(cyclotomic_polynomial(12) == poly(0, {1, 0, -1, 0, 1}));
    // Product over divisors recovers t^n - 1.
    for (long n = 1; n <= 30; ++n) {
        LaurentPoly prod(1);
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic_polynomial(d);
        CHECK(prod == LaurentPoly::monomial(Rational(1), n) - LaurentPoly(1));
        CHECK(cyclotomic_polynomial(n).width() == euler_phi(n));
    }
    CHECK_THROWS_AS(cyclotomic_polynomial(0), InputError);
}

TEST_CASE("terms are stored without zeros and normalize to monic valuation-free form") {
    LaurentPoly p = LaurentPoly::from_terms({{-2, Rational(0)}, {-1, Rational(4)}, {1, Rational(2)}});
    CHECK(p.low_degree() == -1);
    CHECK(p.terms().size() == 2);
    CHECK(p.normalized() == poly(0, {2, 0, 1}));
    CHECK(p.normalizing_unit() * p == p.normalized());
    CHECK(LaurentPoly::monomial(Rational(2), 1).normalized().is_one());
    CHECK(LaurentPoly().terms().empty());
    CHECK((p - p).is_zero());
    CHECK(poly(0, {-1, 1}).str() == "t - 1");
    CHECK(p.inverted_variable() == LaurentPoly::from_terms({{1, Rational(4)}, {-1, Rational(2)}}));
}

TEST_CASE("euclidean division by width") {
    Rng rng(3);
    for (int iter = 0; iter < 300; ++iter) {
        LaurentPoly a = random_poly(rng, 6);
        LaurentPoly b = random_poly(rng, 3);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.width() < b.width()));
        CHECK(exact_div(a * b, b) == a);
        LaurentPoly g = gcd(a * b, b);
        CHECK(g == b.normalized());
    }
    CHECK_THROWS_AS(exact_div(poly(0, {1, 1}), poly(0, {-1, 1})), InputError);
    CHECK(divides(poly(0, {1, 1}), poly(0, {-1, 0, 1})));
    CHECK_FALSE(divides(cyclotomic_polynomial(2), poly(0, {1, -1, 1})));
}
