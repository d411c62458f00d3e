#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "curvechi/rational.hpp"

namespace curvechi {

/// Arbitrary-precision float; working precision is the process-wide default
/// in decimal digits (40 unless changed).
using BigFloat = boost::multiprecision::mpfr_float;

inline void set_precision_digits(unsigned digits) {
    BigFloat::default_precision(digits);
}

inline unsigned precision_digits() { return BigFloat::default_precision(); }

inline BigFloat bf_pi() {
    BigFloat r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline BigFloat bf_zeta_ui(unsigned long s) {
    BigFloat r;
    mpfr_zeta_ui(r.backend().data(), s, MPFR_RNDN);
    return r;
}

inline BigFloat bf_zeta(const BigFloat& s) {
    BigFloat r;
    mpfr_zeta(r.backend().data(), s.backend().data(), MPFR_RNDN);
    return r;
}

/// Gamma(x + 1), the real-argument factorial.
inline BigFloat bf_rfactorial(const BigFloat& x) {
    BigFloat r;
    BigFloat y = x + 1;
    mpfr_gamma(r.backend().data(), y.backend().data(), MPFR_RNDN);
    return r;
}

inline BigFloat bf_factorial(long n) {
    BigFloat r;
    mpfr_fac_ui(r.backend().data(), static_cast<unsigned long>(n), MPFR_RNDN);
    return r;
}

inline BigFloat bf_from_rat(const Rat& q) {
    BigFloat r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

/// Minimal complex pair for the hump-shaped alternating series evaluated on
/// the imaginary axis.
struct CBig {
    BigFloat re, im;

    CBig() : re(0), im(0) {}
    CBig(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    CBig operator*(const CBig& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CBig operator*(const BigFloat& s) const { return {re * s, im * s}; }
    CBig operator+(const CBig& o) const { return {re + o.re, im + o.im}; }
    BigFloat abs() const {
        BigFloat r;
        mpfr_hypot(r.backend().data(), re.backend().data(), im.backend().data(), MPFR_RNDN);
        return r;
    }
};

} // namespace curvechi
