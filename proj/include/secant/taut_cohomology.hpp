#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "secant/euler_data.hpp"
#include "secant/secant_poly.hpp"

namespace secant {

/// Hodge numbers h^i(X^[2], O) of the Hilbert square, i = 0..2n, from the
/// Hodge numbers of X: the Kuenneth pairs p < q contribute h^p h^q, and the
/// diagonal p = q = i/2 contributes S^2 H^{i/2} when i/2 is even and
/// wedge^2 H^{i/2} when i/2 is odd.
std::vector<mpz_class> hodgeHilb2(const HodgeVector& h);

/// h^i(X^[k], S^ell E_{k,L}) for k = 2 or 3 and ell >= 1. Defined for every
/// i >= 0; vanishes for i > (k-1) n.
mpz_class tautTableEntry(SecantCalculator& calc, int k, long i, long ell);

/// The column (h^0, ..., h^{(k-1)n}) at a fixed twist.
std::vector<mpz_class> tautTableColumn(SecantCalculator& calc, int k, long ell);

/// Dense dimension grid over a twist window, rows keyed by (i, ell).
struct CohomologyTable {
    int k = 2;
    VarietySpec variety;
    long ellLo = 1;
    long ellHi = 1;
    std::map<std::pair<long, long>, mpz_class> rows;
};

CohomologyTable buildCohomologyTable(SecantCalculator& calc, int k, long ellLo, long ellHi);

/// Alternating sum over the table column. For k = 2 the result must equal
/// chi(S^ell E_{2,L}) = chiTautSym(ell, 0); a mismatch throws
/// ConsistencyError.
Rational tautEulerCheck(SecantCalculator& calc, int k, long ell);

}  // namespace secant
