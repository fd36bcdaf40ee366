#include "qwlab/coin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qwlab {

namespace {

double coin_tol = 1e-12;

}  // namespace

CoinMatrix make_coin(cplx a, cplx b, cplx c, cplx d) {
    return CoinMatrix{a, b, c, d, a * d - b * c};
}

double unitarity_defect(const CoinMatrix& u) {
    // rows of U U^dag - I
    const cplx r00 = u.a * std::conj(u.a) + u.b * std::conj(u.b) - 1.0;
    const cplx r01 = u.a * std::conj(u.c) + u.b * std::conj(u.d);
    const cplx r10 = u.c * std::conj(u.a) + u.d * std::conj(u.b);
    const cplx r11 = u.c * std::conj(u.c) + u.d * std::conj(u.d) - 1.0;
    return std::max(std::max(std::abs(r00), std::abs(r01)),
                    std::max(std::abs(r10), std::abs(r11)));
}

CoinMatrix defect_coin(double xi) {
    const double c = std::cos(xi);
    const double s = std::sin(xi);
    return make_coin(c, s, s, -c);
}

// Built as the defect coin at xi = pi/4 so that OneDefect(pi/4) reduces to the
// homogeneous walk bit for bit.
CoinMatrix hadamard_coin() {
    return defect_coin(std::numbers::pi / 4);
}

CoinSplit split(const CoinMatrix& u) {
    const cplx zero{0.0, 0.0};
    return CoinSplit{make_coin(u.a, u.b, zero, zero), make_coin(zero, zero, u.c, u.d)};
}

CoinField CoinField::one_defect(double xi) {
    if (!(xi > 0.0 && xi < std::numbers::pi / 2)) {
        throw std::domain_error("one-defect coin angle xi must lie in the open interval (0, pi/2)");
    }
    CoinField f;
    f.kind_ = Kind::OneDefect;
    f.xi_ = xi;
    f.defect_ = defect_coin(xi);
    f.background_ = hadamard_coin();
    return f;
}

CoinField CoinField::wojcik(double phi) {
    if (!(phi > 0.0 && phi < 1.0)) {
        throw std::domain_error("wojcik phase parameter phi must lie in the open interval (0, 1)");
    }
    CoinField f;
    f.kind_ = Kind::Wojcik;
    f.phi_ = phi;
    const cplx omega = std::polar(1.0, 2.0 * std::numbers::pi * phi);
    const CoinMatrix h = hadamard_coin();
    f.defect_ = make_coin(omega * h.a, omega * h.b, omega * h.c, omega * h.d);
    f.background_ = h;
    return f;
}

CoinField CoinField::hadamard() {
    CoinField f;
    f.kind_ = Kind::Hadamard;
    f.defect_ = hadamard_coin();
    f.background_ = hadamard_coin();
    return f;
}

CoinField CoinField::custom(std::map<int, CoinMatrix> table, CoinMatrix background) {
    if (unitarity_defect(background) > coin_tol) {
        throw std::invalid_argument("custom background coin is not unitary");
    }
    for (const auto& [x, u] : table) {
        if (unitarity_defect(u) > coin_tol) {
            throw std::invalid_argument("custom coin at x=" + std::to_string(x) +
                                        " is not unitary");
        }
    }
    CoinField f;
    f.kind_ = Kind::Custom;
    f.background_ = background;
    f.table_ = std::move(table);
    return f;
}

const CoinMatrix& CoinField::coin_at(int x) const {
    switch (kind_) {
        case Kind::OneDefect:
        case Kind::Wojcik:
            return x == 0 ? defect_ : background_;
        case Kind::Hadamard:
            return background_;
        case Kind::Custom: {
            auto it = table_.find(x);
            return it != table_.end() ? it->second : background_;
        }
    }
    return background_;
}

}  // namespace qwlab
