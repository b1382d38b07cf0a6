#include "secant/taut_cohomology.hpp"

#include <sstream>

#include "secant/errors.hpp"

namespace secant {

namespace {

mpz_class asDimension(const Rational& value, const char* what) {
    if (!value.isInteger() || value.sign() < 0) {
        std::ostringstream os;
        os << what << " produced " << value.str()
           << ", not a nonnegative integer; positivity or formula bug";
        throw ConsistencyError(os.str());
    }
    return value.asInteger();
}

void checkTableArgs(int k, long ell) {
    if (k != 2 && k != 3) throw InputError("tautological table index k must be 2 or 3");
    if (ell < 1) throw InputError("tautological table twist must be positive");
}

}  // namespace

std::vector<mpz_class> hodgeHilb2(const HodgeVector& h) {
    const long n = static_cast<long>(h.size()) - 1;
    std::vector<mpz_class> out(static_cast<size_t>(2 * n) + 1, mpz_class(0));
    for (long i = 0; i <= 2 * n; ++i) {
        mpz_class total = 0;
        for (long p = 0; 2 * p < i; ++p)
            total += mpz_class(h[static_cast<size_t>(p)]) * h[static_cast<size_t>(i - p)];
        if (i % 2 == 0) {
            const long half = i / 2;
            const mpz_class hh(h[static_cast<size_t>(half)]);
            // S^2 for even half, wedge^2 for odd half.
            if (half % 2 == 0)
                total += hh * (hh + 1) / 2;
            else
                total += hh * (hh - 1) / 2;
        }
        out[static_cast<size_t>(i)] = total;
    }
    return out;
}

mpz_class tautTableEntry(SecantCalculator& calc, int k, long i, long ell) {
    checkTableArgs(k, ell);
    if (i < 0) throw InputError("cohomological degree must be nonnegative");
    const EulerData& e = calc.euler();
    const long n = e.dimension();
    const HodgeVector h = e.hodgeVector();

    if (k == 2) {
        if (i == 0) return asDimension(calc.sigma1Polynomial().evaluate(ell), "h^0 of X^[2] table");
        if (i <= n)
            return asDimension(Rational(h[static_cast<size_t>(i)]) * e.l(ell), "X^[2] table row");
        return 0;
    }

    const std::vector<mpz_class> h2 = hodgeHilb2(h);
    if (i == 0) return asDimension(calc.sigma2Polynomial().evaluate(ell), "h^0 of X^[3] table");
    if (i <= n) {
        const mpz_class quotient = h2[static_cast<size_t>(i)] - h[static_cast<size_t>(i)];
        if (quotient < 0)
            throw ConsistencyError("Hilbert-square Hodge number below the Hodge number of X");
        return asDimension(Rational(h[static_cast<size_t>(i)]) * calc.sigma1Polynomial().evaluate(ell)
                               + Rational(quotient) * e.l(ell),
                           "X^[3] table middle row");
    }
    if (i <= 2 * n)
        return asDimension(Rational(h2[static_cast<size_t>(i)]) * e.l(ell), "X^[3] table row");
    return 0;
}

std::vector<mpz_class> tautTableColumn(SecantCalculator& calc, int k, long ell) {
    checkTableArgs(k, ell);
    const long top = (k - 1) * calc.euler().dimension();
    std::vector<mpz_class> column;
    column.reserve(static_cast<size_t>(top) + 1);
    for (long i = 0; i <= top; ++i) column.push_back(tautTableEntry(calc, k, i, ell));
    return column;
}

CohomologyTable buildCohomologyTable(SecantCalculator& calc, int k, long ellLo, long ellHi) {
    checkTableArgs(k, ellLo);
    if (ellHi < ellLo) throw InputError("empty twist range");
    CohomologyTable table{k, calc.variety(), ellLo, ellHi, {}};
    for (long ell = ellLo; ell <= ellHi; ++ell) {
        const auto column = tautTableColumn(calc, k, ell);
        for (size_t i = 0; i < column.size(); ++i)
            table.rows.emplace(std::make_pair(static_cast<long>(i), ell), column[i]);
    }
    return table;
}

Rational tautEulerCheck(SecantCalculator& calc, int k, long ell) {
    checkTableArgs(k, ell);
    const auto column = tautTableColumn(calc, k, ell);
    Rational total = 0;
    for (size_t i = 0; i < column.size(); ++i) {
        if (i % 2 == 0)
            total += Rational(column[i]);
        else
            total -= Rational(column[i]);
    }
    if (k == 2) {
        const Rational expected = calc.chiTautSym(ell, 0);
        if (total != expected) {
            std::ostringstream os;
            os << "alternating table sum " << total.str() << " != chi(S^" << ell
               << " E_2) = " << expected.str() << " for " << calc.variety().canonical();
            throw ConsistencyError(os.str());
        }
    }
    return total;
}

}  // namespace secant
