#pragma once

#include <stdexcept>
#include <vector>

#include "curvechi/cpoly.hpp"
#include "curvechi/ring.hpp"

namespace curvechi {

/// Truncated formal power series in u: coefficients of u^0 .. u^{u_cap} in a
/// coefficient ring C. Arithmetic never consults anything beyond u_cap.
template <class C>
struct USeries {
    int u_cap = 0;
    std::vector<C> c;

    USeries() = default;
    USeries(int cap, const C& proto) : u_cap(cap), c(cap + 1, ring_zero_like(proto)) {}

    const C& operator[](int i) const { return c[i]; }
    C& operator[](int i) { return c[i]; }

    const C& proto() const { return c[0]; }

    /// Least N with nonzero coefficient, or u_cap+1 for the zero series.
    int valuation() const {
        for (int i = 0; i <= u_cap; ++i)
            if (!ring_is_zero(c[i])) return i;
        return u_cap + 1;
    }

    bool is_zero() const { return valuation() > u_cap; }
};

template <class C>
void check_caps(const USeries<C>& a, const USeries<C>& b) {
    if (a.u_cap != b.u_cap) throw std::invalid_argument("USeries u_cap mismatch");
}

template <class C>
USeries<C> us_zero(int u_cap, const C& proto) {
    return USeries<C>(u_cap, proto);
}

template <class C>
USeries<C> us_one(int u_cap, const C& proto) {
    USeries<C> r(u_cap, proto);
    r.c[0] = ring_one_like(proto);
    return r;
}

template <class C>
USeries<C> us_add(USeries<C> a, const USeries<C>& b) {
    check_caps(a, b);
    for (int i = 0; i <= a.u_cap; ++i) ring_add_assign(a.c[i], b.c[i]);
    return a;
}

template <class C>
USeries<C> us_sub(USeries<C> a, const USeries<C>& b) {
    check_caps(a, b);
    for (int i = 0; i <= a.u_cap; ++i) ring_sub_assign(a.c[i], b.c[i]);
    return a;
}

template <class C>
void us_add_assign(USeries<C>& a, const USeries<C>& b) {
    check_caps(a, b);
    for (int i = 0; i <= a.u_cap; ++i) ring_add_assign(a.c[i], b.c[i]);
}

template <class C>
void us_sub_assign(USeries<C>& a, const USeries<C>& b) {
    check_caps(a, b);
    for (int i = 0; i <= a.u_cap; ++i) ring_sub_assign(a.c[i], b.c[i]);
}

template <class C>
USeries<C> us_scale(USeries<C> a, const Rat& s) {
    for (auto& x : a.c) ring_scale(x, s);
    return a;
}

template <class C>
USeries<C> us_neg(USeries<C> a) {
    for (auto& x : a.c) x = ring_neg(x);
    return a;
}

/// Reference product: plain truncated convolution, single-threaded.
template <class C>
USeries<C> us_mul_serial(const USeries<C>& a, const USeries<C>& b, int out_cap = -1) {
    check_caps(a, b);
    if (out_cap < 0) out_cap = a.u_cap;
    USeries<C> r(a.u_cap, a.proto());
    for (int n = 0; n <= out_cap; ++n)
        for (int i = 0; i <= n; ++i) {
            if (ring_is_zero(a.c[i]) || ring_is_zero(b.c[n - i])) continue;
            ring_add_assign(r.c[n], ring_mul(a.c[i], b.c[n - i]));
        }
    return r;
}

/// Product parallelized over output u-degrees. Exact arithmetic makes the
/// result independent of the thread schedule.
template <class C>
USeries<C> us_mul(const USeries<C>& a, const USeries<C>& b, int out_cap = -1) {
    check_caps(a, b);
    if (out_cap < 0) out_cap = a.u_cap;
    USeries<C> r(a.u_cap, a.proto());
#pragma omp parallel for schedule(dynamic, 1)
    for (int n = 0; n <= out_cap; ++n)
        for (int i = 0; i <= n; ++i) {
            if (ring_is_zero(a.c[i]) || ring_is_zero(b.c[n - i])) continue;
            ring_add_assign(r.c[n], ring_mul(a.c[i], b.c[n - i]));
        }
    return r;
}

/// Multiply by u^k (shift up), dropping overflow.
template <class C>
USeries<C> us_shift_up(const USeries<C>& a, int k) {
    USeries<C> r(a.u_cap, a.proto());
    for (int n = a.u_cap; n >= k; --n) r.c[n] = a.c[n - k];
    return r;
}

/// Divide by u; the constant term must vanish.
template <class C>
USeries<C> us_div_u(const USeries<C>& a) {
    if (!ring_is_zero(a.c[0]))
        throw std::domain_error("us_div_u: nonzero constant term");
    USeries<C> r(a.u_cap, a.proto());
    for (int n = 0; n < a.u_cap; ++n) r.c[n] = a.c[n + 1];
    return r;
}

/// exp by direct powering with factorial division: sum_k a^k / k!.
/// Requires constant term zero; higher powers have growing valuation, so the
/// incremental products shrink as k grows.
template <class C>
USeries<C> us_exp(const USeries<C>& a) {
    if (!ring_is_zero(a.c[0]))
        throw std::domain_error("us_exp: nonzero constant term");
    USeries<C> r = us_one(a.u_cap, a.proto());
    int val = a.valuation();
    if (val > a.u_cap) return r;
    USeries<C> pw = a;
    Rat kfact(1);
    for (int k = 1; static_cast<long>(k) * val <= a.u_cap; ++k) {
        if (k > 1) {
            kfact *= k;
            pw = us_mul(pw, a);
        }
        for (int n = k * val; n <= a.u_cap; ++n)
            ring_axpy(r.c[n], Rat(1) / kfact, pw.c[n]);
    }
    return r;
}

/// exp by the coefficient recurrence n*y_n = sum_{k=1..n} k a_k y_{n-k};
/// identical exact output to us_exp at the cost of a single convolution.
template <class C>
USeries<C> us_exp_recurrence(const USeries<C>& a) {
    if (!ring_is_zero(a.c[0]))
        throw std::domain_error("us_exp: nonzero constant term");
    USeries<C> y = us_one(a.u_cap, a.proto());
    for (int n = 1; n <= a.u_cap; ++n) {
        C acc = ring_zero_like(a.proto());
        for (int k = 1; k <= n; ++k) {
            if (ring_is_zero(a.c[k]) || ring_is_zero(y.c[n - k])) continue;
            ring_axpy(acc, Rat(k), ring_mul(a.c[k], y.c[n - k]));
        }
        ring_scale(acc, Rat(1, n));
        y.c[n] = std::move(acc);
    }
    return y;
}

/// log by direct powering: -sum_{m>=1} (1-a)^m / m. Constant term must be 1.
template <class C>
USeries<C> us_log(const USeries<C>& a) {
    C head = a.c[0];
    ring_sub_assign(head, ring_one_like(a.proto()));
    if (!ring_is_zero(head))
        throw std::domain_error("us_log: constant term is not 1");
    USeries<C> y = us_sub(us_one(a.u_cap, a.proto()), a); // 1 - a, valuation >= 1
    USeries<C> r(a.u_cap, a.proto());
    int val = y.valuation();
    if (val > a.u_cap) return r;
    USeries<C> pw = y;
    for (int m = 1; static_cast<long>(m) * val <= a.u_cap; ++m) {
        if (m > 1) pw = us_mul(pw, y);
        for (int n = m * val; n <= a.u_cap; ++n)
            ring_axpy(r.c[n], Rat(-1, m), pw.c[n]);
    }
    return r;
}

/// Multiplicative inverse; the constant term must be an invertible Rat-like
/// unit (only used with coefficient rings whose unit is a nonzero rational
/// times the identity). Standard recurrence b_n = -a_0^{-1} sum a_k b_{n-k}.
template <class C>
USeries<C> us_invert(const USeries<C>& a);

// Rational-coefficient specialization knows how to invert the leading unit.
inline Rat ring_unit_inverse(const Rat& a) {
    if (a == 0) throw std::domain_error("us_invert: zero constant term");
    return Rat(1) / a;
}

inline SymFunc ring_unit_inverse(const SymFunc& a) {
    // invertible only when a = c * 1
    SymFunc c0 = a.graded_part(0);
    SymFunc rest = a;
    rest -= c0;
    if (!rest.is_zero() || c0.is_zero())
        throw std::domain_error("us_invert: constant coefficient is not a unit");
    return SymFunc::constant(Rat(1) / c0.coeff({}), a.p_cap());
}

template <class R>
CPoly<R> ring_unit_inverse(const CPoly<R>& a) {
    for (int i = 1; i <= a.cap; ++i)
        if (!ring_is_zero(a.c[i]))
            throw std::domain_error("us_invert: constant coefficient is not a unit");
    CPoly<R> r = ring_zero_like(a);
    r.c[0] = ring_unit_inverse(a.c[0]);
    return r;
}

template <class C>
USeries<C> us_invert(const USeries<C>& a) {
    C inv0 = ring_unit_inverse(a.c[0]);
    USeries<C> b(a.u_cap, a.proto());
    b.c[0] = inv0;
    for (int n = 1; n <= a.u_cap; ++n) {
        C acc = ring_zero_like(a.proto());
        for (int k = 1; k <= n; ++k) {
            if (ring_is_zero(a.c[k]) || ring_is_zero(b.c[n - k])) continue;
            ring_add_assign(acc, ring_mul(a.c[k], b.c[n - k]));
        }
        b.c[n] = ring_neg(ring_mul(inv0, acc));
    }
    return b;
}

/// Apply T_{<=Gamma} to every u-coefficient of a series over CPoly.
template <class R>
USeries<R> us_truncate_w(const USeries<CPoly<R>>& a, int gamma) {
    USeries<R> r(a.u_cap, ring_zero_like(a.proto().c[0]));
    for (int n = 0; n <= a.u_cap; ++n) r.c[n] = truncate_w(a.c[n], gamma);
    return r;
}

} // namespace curvechi
