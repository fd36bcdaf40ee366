#pragma once

#include "qwlab/power_series.hpp"

namespace qwlab {

inline constexpr int kDefaultSeriesTrunc = 256;

// sqrt(1 + z^4) truncated at order T.
RationalSeries sqrt_one_plus_z4(int trunc);

// Coefficients of (-1 - z^2 + sqrt(1 + z^4))/z, the generating function of the
// signed first-return weights r*_n of the walk split at the defect.
RationalSeries rstar_series(int trunc);

// Closed form for r*_n: -1 at n = 1, zero off the n = 4m-1 pattern, and
// (-1)^(m-1) (2m-2)! / (2^(2m-1) (m-1)! m!) at n = 4m-1.
rational rstar_closed(int n);

// Coefficients of (-1 + sqrt(1 + z^4))/z, the one-sided first-return series
// r^(inf,1); its left-side companion is the negation term by term.
RationalSeries first_return_series_plus(int trunc);

}  // namespace qwlab
