#pragma once

#include <complex>
#include <map>

namespace qwlab {

using cplx = std::complex<double>;

// One 2x2 unitary coin U = [[a,b],[c,d]], det cached.
struct CoinMatrix {
    cplx a, b, c, d;
    cplx det;
};

CoinMatrix make_coin(cplx a, cplx b, cplx c, cplx d);

// Max entrywise deviation of U U^dag from the identity.
double unitarity_defect(const CoinMatrix& u);

CoinMatrix hadamard_coin();
CoinMatrix defect_coin(double xi);

// P keeps the top row (left movers), Q the bottom row (right movers); P + Q = U exactly.
struct CoinSplit {
    CoinMatrix p;
    CoinMatrix q;
};
CoinSplit split(const CoinMatrix& u);

// Rule x -> coin. OneDefect puts the reflection coin at the origin and the
// Hadamard coin elsewhere; Wojcik multiplies the Hadamard coin by exp(2*pi*i*phi)
// at the origin only; Custom is a site table over a background coin.
class CoinField {
  public:
    enum class Kind { OneDefect, Wojcik, Hadamard, Custom };

    static CoinField one_defect(double xi);    // xi in (0, pi/2)
    static CoinField wojcik(double phi);       // phi in (0, 1)
    static CoinField hadamard();
    static CoinField custom(std::map<int, CoinMatrix> table,
                            CoinMatrix background = hadamard_coin());

    Kind kind() const { return kind_; }
    double xi() const { return xi_; }
    double phi() const { return phi_; }

    const CoinMatrix& coin_at(int x) const;

  private:
    CoinField() = default;

    Kind kind_ = Kind::Hadamard;
    double xi_ = 0.0;
    double phi_ = 0.0;
    CoinMatrix defect_{};      // coin at the origin for OneDefect/Wojcik
    CoinMatrix background_{};  // coin everywhere else (and Custom default)
    std::map<int, CoinMatrix> table_;
};

inline CoinMatrix coin_at(const CoinField& field, int x) { return field.coin_at(x); }

}  // namespace qwlab
