#include "catch_amalgamated.hpp"

#include "twisthom/errors.hpp"
#include "twisthom/exactnum/cyclotomic.hpp"
#include "twisthom/util/rng.hpp"

#include <cmath>

using namespace twisthom;

namespace {

CycloNumber random_cyclo(Rng& rng, long n) {
    std::vector<Rational> c;
    for (long i = 0; i < euler_phi(n); ++i)
        c.emplace_back(Integer(rng.range(-3, 3)), Integer(rng.range(1, 3)));
    return CycloNumber(n, c);
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

} // namespace

TEST_CASE("embedding into a larger cyclotomic field") {
    CycloNumber three(3);
    CycloNumber e = three.embed(4);
    CHECK(e.conductor() == 4);
    CHECK(e.coeffs() == std::vector<Rational>{Rational(3), Rational(0)});

    CycloNumber minus = CycloNumber::root_of_unity(2, 1).embed(4);
    CHECK(minus.coeffs() == std::vector<Rational>{Rational(-1), Rational(0)});
    CHECK(minus == CycloNumber(-1));

    CycloNumber z3 = CycloNumber::root_of_unity(3, 1).embed(6);
    CHECK(z3.conductor() == 6);
    CHECK(z3.coeffs().size() == 2);
    CHECK(z3 * z3 * z3 == CycloNumber(1));
    CHECK_FALSE(z3 == CycloNumber(1));
    CHECK_THROWS_AS(CycloNumber::root_of_unity(4, 1).embed(6), InputError);
}

TEST_CASE("complex conjugation") {
    CHECK(CycloNumber(5).conj() == CycloNumber(5));
    CycloNumber i = CycloNumber::root_of_unity(4, 1);
    CHECK(i.conj() == -i);
    CycloNumber x = CycloNumber::root_of_unity(5, 1) + CycloNumber::root_of_unity(5, 2);
    CHECK(x.conj() == CycloNumber::root_of_unity(5, 4) + CycloNumber::root_of_unity(5, 3));
    CHECK(x.conj().conj() == x);
    CycloNumber re = x + x.conj();
    CHECK(re.conj() == re);
    CHECK(std::abs(re.to_complex().imag()) < 1e-12);
}

TEST_CASE("field operations agree with the complex embedding and obey the axioms") {
    Rng rng(17);
    for (int iter = 0; iter < 400; ++iter) {
        long n1 = rng.range(1, 12), n2 = rng.range(1, 12);
        CycloNumber a = random_cyclo(rng, n1), b = random_cyclo(rng, n2), c = random_cyclo(rng, n1);
        CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
        CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
        CHECK((a + b).conductor() == std::lcm(n1, n2));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
        CHECK(close(a.conj().to_complex(), std::conj(a.to_complex())));
        if (!a.is_zero()) CHECK(a * a.inverse() == CycloNumber(1));
    }
    CHECK_THROWS_AS(CycloNumber(0).inverse(), InputError);
}

TEST_CASE("roots of unity") {
    for (long n = 1; n <= 15; ++n) {
        CycloNumber z = CycloNumber::root_of_unity(n, 1);
        CycloNumber p(1);
        for (long k = 0; k < n; ++k) {
            CHECK(p == CycloNumber::root_of_unity(n, k));
            CHECK(close(p.to_complex(), std::polar(1.0, 2 * M_PI * static_cast<double>(k) / static_cast<double>(n))));
            p *= z;
        }
        CHECK(p.is_one());
        CHECK(CycloNumber::root_of_unity(n, -1) == z.conj());
    }
}
