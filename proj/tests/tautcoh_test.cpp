#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secant/errors.hpp"
#include "secant/taut_cohomology.hpp"

using namespace secant;

namespace {

// Independent oracle: count a basis of the symmetric-group invariants of the
// Kuenneth decomposition of H^*(X x X, O), with the sign rule for swapping
// odd-degree classes. Pure counting loops, no closed-form binomials.
std::vector<mpz_class> hodgeSquareOracle(const std::vector<long>& h) {
    const long n = static_cast<long>(h.size()) - 1;
    std::vector<mpz_class> out(static_cast<size_t>(2 * n) + 1, mpz_class(0));
    for (long i = 0; i <= 2 * n; ++i) {
        mpz_class count = 0;
        for (long p = 0; p <= i; ++p) {
            const long q = i - p;
            if (p > n || q > n) continue;
            if (p < q) {
                // basis e_a (x) f_b glued with f_b (x) e_a: one invariant each
                for (long x = 0; x < h[static_cast<size_t>(p)]; ++x)
                    for (long y = 0; y < h[static_cast<size_t>(q)]; ++y) count += 1;
            } else if (p == q) {
                const long dim = h[static_cast<size_t>(p)];
                const bool swapIsPlus = p % 2 == 0;  // Koszul sign (-1)^{p*p}
                for (long x = 0; x < dim; ++x)
                    for (long y = 0; y < dim; ++y) {
                        if (x < y) count += 1;  // e_x e_y (+/-) e_y e_x survives either way
                        if (x == y && swapIsPlus) count += 1;
                    }
            }
        }
        out[static_cast<size_t>(i)] = count;
    }
    return out;
}

}  // namespace

TEST_CASE("Hodge numbers of the Hilbert square") {
    CHECK(hodgeHilb2(HodgeVector({1, 0})) == std::vector<mpz_class>{1, 0, 0});
    CHECK(hodgeHilb2(HodgeVector({1, 3})) == std::vector<mpz_class>{1, 3, 3});
    CHECK(hodgeHilb2(HodgeVector({1, 0, 0})) == std::vector<mpz_class>{1, 0, 0, 0, 0});
}

TEST_CASE("Hilbert-square Hodge numbers match the symmetrization oracle") {
    // all Hodge vectors with h^0 = 1, entries <= 4, dimension <= 3
    for (long n = 1; n <= 3; ++n) {
        std::vector<long> h(static_cast<size_t>(n) + 1, 0);
        h[0] = 1;
        auto sweep = [&](auto&& self, size_t i) -> void {
            if (i == h.size()) {
                CHECK(hodgeHilb2(HodgeVector(h)) == hodgeSquareOracle(h));
                return;
            }
            for (long v = 0; v <= 4; ++v) {
                h[i] = v;
                self(self, i + 1);
            }
        };
        sweep(sweep, 1);
    }
}

TEST_CASE("two-point table columns") {
    SecantCalculator quartic(VarietySpec::curve(0, 4));
    CHECK(tautTableColumn(quartic, 2, 3) == std::vector<mpz_class>{34, 0});

    SecantCalculator c29(VarietySpec::curve(2, 9));
    for (long ell = 1; ell <= 4; ++ell) {
        const long hL = ell * 9 - 1;  // l(ell) = 9 ell + 1 - 2
        CHECK(tautTableEntry(c29, 2, 1, ell) == mpz_class(2 * hL));
    }

    SecantCalculator p2(VarietySpec::productProj({2}, {8}));
    for (long ell = 1; ell <= 3; ++ell) {
        CHECK(tautTableEntry(p2, 2, 1, ell) == 0);
        CHECK(tautTableEntry(p2, 2, 2, ell) == 0);
    }
}

TEST_CASE("three-point table columns") {
    SecantCalculator c29(VarietySpec::curve(2, 9));
    for (long ell = 1; ell <= 4; ++ell) {
        const mpz_class hL(ell * 9 - 1);
        CHECK(tautTableEntry(c29, 3, 2, ell) == binomial(2, 2) * hL);
    }

    SecantCalculator sextic(VarietySpec::curve(0, 6));
    CHECK(tautTableColumn(sextic, 3, 1) == std::vector<mpz_class>{7, 0, 0});

    SecantCalculator p1p1(VarietySpec::productProj({1, 1}, {4, 4}));
    for (long ell = 1; ell <= 3; ++ell) {
        const auto column = tautTableColumn(p1p1, 3, ell);
        for (size_t i = 1; i < column.size(); ++i) CHECK(column[i] == 0);
        CHECK(column[0] > 0);
    }
}

TEST_CASE("entries vanish above (k-1) n") {
    for (const auto& v : {VarietySpec::curve(1, 8), VarietySpec::productProj({2}, {8})}) {
        SecantCalculator calc(v);
        const long n = v.dimension();
        for (long ell = 1; ell <= 3; ++ell) {
            for (long i = n + 1; i <= 2 * n + 2; ++i) CHECK(tautTableEntry(calc, 2, i, ell) == 0);
            for (long i = 2 * n + 1; i <= 3 * n + 2; ++i)
                CHECK(tautTableEntry(calc, 3, i, ell) == 0);
        }
    }
}

TEST_CASE("table argument validation") {
    SecantCalculator calc(VarietySpec::curve(0, 4));
    CHECK_THROWS_AS(tautTableEntry(calc, 2, 0, 0), InputError);
    CHECK_THROWS_AS(tautTableEntry(calc, 2, 0, -3), InputError);
    CHECK_THROWS_AS(tautTableEntry(calc, 4, 0, 1), InputError);
    CHECK_THROWS_AS(tautTableEntry(calc, 2, -1, 1), InputError);
    CHECK_THROWS_AS(buildCohomologyTable(calc, 2, 3, 2), InputError);
}

TEST_CASE("alternating sums tie the tables to chi") {
    SecantCalculator c29(VarietySpec::curve(2, 9));
    for (long ell = 1; ell <= 6; ++ell) {
        const Rational expected =
            c29.sigma1Polynomial().evaluate(ell) - Rational(2) * c29.euler().l(ell);
        CHECK(tautEulerCheck(c29, 2, ell) == expected);
    }

    SecantCalculator p2(VarietySpec::productProj({2}, {8}));
    for (long ell = 1; ell <= 4; ++ell)
        CHECK(tautEulerCheck(p2, 2, ell) == p2.sigma1Polynomial().evaluate(ell));

    SecantCalculator quartic(VarietySpec::curve(0, 4));
    CHECK(tautEulerCheck(quartic, 2, 3) == Rational(34));
    CHECK(tautEulerCheck(quartic, 2, 3) == quartic.chiTautSym(3, 0));
}

TEST_CASE("dense tables cover the requested window") {
    SecantCalculator calc(VarietySpec::curve(1, 8));
    const CohomologyTable table = buildCohomologyTable(calc, 2, 1, 4);
    CHECK(table.rows.size() == 8);  // i in {0, 1}, ell in 1..4
    CHECK(table.rows.at({0, 1}) == 8);  // P1(1) = l(1) = 8 + 1 - 1
    CHECK(table.rows.at({1, 1}) == 8);  // g * l(1)
}
