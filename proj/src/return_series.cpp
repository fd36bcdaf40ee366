#include "qwlab/return_series.hpp"

#include <stdexcept>

namespace qwlab {

RationalSeries sqrt_one_plus_z4(int trunc) {
    RationalSeries a = RationalSeries::constant(1, trunc);
    if (trunc >= 4) a[4] = 1;
    return ps_sqrt(a);
}

RationalSeries rstar_series(int trunc) {
    if (trunc < 1) throw std::invalid_argument("truncation must be >= 1");
    // work one order higher, then divide by z
    RationalSeries num = sqrt_one_plus_z4(trunc + 1);
    num[0] -= 1;
    num[2] -= 1;
    return num.shift_down(1);
}

rational rstar_closed(int n) {
    if (n < 1) throw std::invalid_argument("index must be >= 1");
    if (n == 1) return rational(-1);
    if (n % 4 != 3) return rational(0);
    const int m = (n + 1) / 4;
    bigint num = 1;
    for (int k = m + 1; k <= 2 * m - 2; ++k) num *= k;  // (2m-2)!/m!
    bigint den = bigint(1) << (2 * m - 1);
    for (int k = 2; k <= m - 1; ++k) den *= k;  // 2^(2m-1) (m-1)!
    rational r(num, den);
    return (m % 2 == 0) ? -r : r;
}

RationalSeries first_return_series_plus(int trunc) {
    if (trunc < 1) throw std::invalid_argument("truncation must be >= 1");
    RationalSeries num = sqrt_one_plus_z4(trunc + 1);
    num[0] -= 1;
    return num.shift_down(1);
}

}  // namespace qwlab
