#pragma once

#include <stdexcept>
#include <vector>

#include "curvechi/ring.hpp"

namespace curvechi {

/// Dense polynomial in one auxiliary variable with coefficients in R and all
/// degrees above `cap` identically dropped. Used for the w-variable of the
/// weight truncation operator (cap 10) and for the marked-point counting
/// variable of the dimension scan. Dropping is sound for w because w only
/// ever occurs with nonnegative exponents and only T_{<=Gamma}, Gamma <= cap,
/// is ever read off.
template <class R>
struct CPoly {
    int cap = 0;
    std::vector<R> c; // size cap+1

    CPoly() = default;
    CPoly(int cap_, const R& proto) : cap(cap_), c(cap_ + 1, ring_zero_like(proto)) {}

    const R& operator[](int i) const { return c[i]; }
    R& operator[](int i) { return c[i]; }

    static CPoly monomial(int deg, const R& value, int cap, const R& proto) {
        CPoly r(cap, proto);
        if (deg <= cap) r.c[deg] = value;
        return r;
    }
};

template <class R>
CPoly<R> ring_zero_like(const CPoly<R>& a) {
    CPoly<R> r;
    r.cap = a.cap;
    r.c.reserve(a.cap + 1);
    for (int i = 0; i <= a.cap; ++i) r.c.push_back(ring_zero_like(a.c[0]));
    return r;
}

template <class R>
CPoly<R> ring_one_like(const CPoly<R>& a) {
    CPoly<R> r = ring_zero_like(a);
    r.c[0] = ring_one_like(a.c[0]);
    return r;
}

template <class R>
bool ring_is_zero(const CPoly<R>& a) {
    for (const auto& x : a.c)
        if (!ring_is_zero(x)) return false;
    return true;
}

template <class R>
void ring_add_assign(CPoly<R>& a, const CPoly<R>& b) {
    if (a.cap != b.cap) throw std::invalid_argument("CPoly cap mismatch");
    for (int i = 0; i <= a.cap; ++i) ring_add_assign(a.c[i], b.c[i]);
}

template <class R>
void ring_sub_assign(CPoly<R>& a, const CPoly<R>& b) {
    if (a.cap != b.cap) throw std::invalid_argument("CPoly cap mismatch");
    for (int i = 0; i <= a.cap; ++i) ring_sub_assign(a.c[i], b.c[i]);
}

template <class R>
CPoly<R> ring_mul(const CPoly<R>& a, const CPoly<R>& b) {
    if (a.cap != b.cap) throw std::invalid_argument("CPoly cap mismatch");
    CPoly<R> r = ring_zero_like(a);
    for (int i = 0; i <= a.cap; ++i) {
        if (ring_is_zero(a.c[i])) continue;
        for (int j = 0; i + j <= a.cap; ++j) {
            if (ring_is_zero(b.c[j])) continue;
            ring_add_assign(r.c[i + j], ring_mul(a.c[i], b.c[j]));
        }
    }
    return r;
}

template <class R>
void ring_scale(CPoly<R>& a, const Rat& s) {
    for (auto& x : a.c) ring_scale(x, s);
}

template <class R>
void ring_axpy(CPoly<R>& acc, const Rat& s, const CPoly<R>& x) {
    if (acc.cap != x.cap) throw std::invalid_argument("CPoly cap mismatch");
    for (int i = 0; i <= acc.cap; ++i) ring_axpy(acc.c[i], s, x.c[i]);
}

template <class R>
CPoly<R> ring_neg(const CPoly<R>& a) {
    CPoly<R> r = a;
    for (auto& x : r.c) x = ring_neg(x);
    return r;
}

/// T_{<=Gamma}: sum of the coefficients of degrees 0..Gamma.
template <class R>
R truncate_w(const CPoly<R>& a, int gamma) {
    if (gamma < 0 || gamma > a.cap) throw std::invalid_argument("truncate_w: bad Gamma");
    R s = ring_zero_like(a.c[0]);
    for (int i = 0; i <= gamma; ++i) ring_add_assign(s, a.c[i]);
    return s;
}

} // namespace curvechi
