#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "curvechi/numtheory.hpp"
#include "curvechi/series.hpp"
#include "curvechi/symfunc.hpp"

namespace curvechi {

using WRat = CPoly<Rat>;      // w-polynomials over Q
using WXRat = CPoly<WRat>;    // w outer, marked-point variable inner
using WSym = CPoly<SymFunc>;  // w-polynomials over the symmetric function ring

struct GenfunOptions {
    int w_cap = 10;
    bool exp_by_recurrence = false; // powering is the default; see bench/
};

/// Shared exact series for the special-function layer. All negative powers of
/// u are eliminated up front: with e_l := l u^l E_l = sum_{d|l} mu(l/d) u^{l-d}
/// (a unit power series) one has 1/E_l^m = (l u^l)^m e_l^{-m} and
/// lambda_l E_l = (1-u^l) e_l, so everything downstream is an honest power
/// series. Instances are immutable after construction and safe to share.
class GenfunContext {
public:
    explicit GenfunContext(int u_cap, GenfunOptions opt = {});

    int u_cap() const { return u_cap_; }
    int ell_max() const { return 2 * u_cap_; } // U_l - 1 has valuation >= l/2
    const GenfunOptions& options() const { return opt_; }

    const USeries<Rat>& log_unit(int ell) const { return log_unit_[ell]; }

    /// P_l^m = (l u^l)^m e_l^{-m}; powers m = 0 .. (u_cap/l + 1).
    const std::vector<USeries<Rat>>& p_powers(int ell) const { return p_pow_[ell]; }

    template <class C>
    USeries<C> exp(const USeries<C>& a) const {
        return opt_.exp_by_recurrence ? us_exp_recurrence(a) : us_exp(a);
    }

private:
    int u_cap_;
    GenfunOptions opt_;
    std::vector<USeries<Rat>> log_unit_;          // [ell]
    std::vector<std::vector<USeries<Rat>>> p_pow_; // [ell][m]
};

enum class LogPart { A, B, Both };

namespace detail {
// acc[N] += (k * s[N]) * x for every u-degree N with s[N] != 0.
template <class C>
void add_scaled_mixed(USeries<C>& acc, const USeries<Rat>& s, const Rat& k, const C& x) {
    for (int n = 0; n <= acc.u_cap; ++n)
        if (s.c[n] != 0) ring_axpy(acc.c[n], k * s.c[n], x);
}
} // namespace detail

/// A_l(X) + B_l(X) (or one of the two parts) for a u-constant argument X:
///   A_l(X) = X log((1-u^l) e_l) + sum_{m>=2} X^m P^{m-1}/m
///            - (X - 1/2) sum_{m>=1} X^m P^m / m
///   B_l(X) = sum_{r>=2} B_r/(r(r-1)) (-1)^{r-1} P^{r-1} ((1 - X P/(l u^l) ...)
/// organized by total P-power s = r-1+j:
///   B_l(X) = sum_{s>=2} P^s sum_{j=1}^{s-1} (-1)^{s-j} B_{s+1-j} C(s-1,j)
///                         / ((s+1-j)(s-j)) X^j.
/// The m/r sums terminate once the u-valuation l*(power of P) exceeds u_cap.
template <class C>
USeries<C> log_u_factor(const GenfunContext& ctx, int ell, const C& X,
                        LogPart part = LogPart::Both) {
    const int u_cap = ctx.u_cap();
    USeries<C> out(u_cap, ring_zero_like(X));
    if (ring_is_zero(X)) return out;
    const auto& ppow = ctx.p_powers(ell);
    const int max_m = static_cast<int>(ppow.size()) - 1;

    // powers of the argument, X^0 .. X^{max_m + 1}
    std::vector<C> xpow;
    xpow.push_back(ring_one_like(X));
    for (int j = 1; j <= max_m + 1; ++j) {
        if (ring_is_zero(xpow.back()) && j > 1) { xpow.push_back(xpow.back()); continue; }
        xpow.push_back(ring_mul(xpow.back(), X));
    }

    if (part != LogPart::B) {
        detail::add_scaled_mixed(out, ctx.log_unit(ell), Rat(1), X);
        for (int m = 2; (static_cast<long>(m) - 1) * ell <= u_cap && m - 1 <= max_m; ++m)
            detail::add_scaled_mixed(out, ppow[m - 1], Rat(1, m), xpow[m]);
        USeries<C> tail(u_cap, ring_zero_like(X));
        for (int m = 1; static_cast<long>(m) * ell <= u_cap && m <= max_m; ++m)
            detail::add_scaled_mixed(tail, ppow[m], Rat(1, m), xpow[m]);
        // out -= (X - 1/2) * tail
        C half_shift = X;
        C one = ring_one_like(X);
        ring_scale(one, Rat(1, 2));
        ring_sub_assign(half_shift, one);
        for (int n = 0; n <= u_cap; ++n) {
            if (ring_is_zero(tail.c[n])) continue;
            ring_sub_assign(out.c[n], ring_mul(half_shift, tail.c[n]));
        }
    }

    if (part != LogPart::A) {
        for (int s = 2; static_cast<long>(s) * ell <= u_cap && s <= max_m; ++s) {
            C inner = ring_zero_like(X);
            for (int j = 1; j <= s - 1; ++j) {
                unsigned r = static_cast<unsigned>(s + 1 - j);
                const Rat& br = bernoulli(r);
                if (br == 0) continue;
                Rat coef = br / Rat(Int(r) * Int(r - 1));
                if ((r - 1) % 2 == 1) coef = -coef;
                coef *= Rat(binomial(s - 1, j));
                ring_axpy(inner, coef, xpow[j]);
            }
            if (!ring_is_zero(inner))
                detail::add_scaled_mixed(out, ppow[s], Rat(1), inner);
        }
    }
    return out;
}

template <class C>
USeries<C> a_ell(const GenfunContext& ctx, int ell, const C& X) {
    return log_u_factor(ctx, ell, X, LogPart::A);
}

template <class C>
USeries<C> b_ell(const GenfunContext& ctx, int ell, const C& X) {
    return log_u_factor(ctx, ell, X, LogPart::B);
}

/// U_l(X, u) = exp(A_l(X) + B_l(X)); U_l(0, u) = 1.
template <class C>
USeries<C> u_ell(const GenfunContext& ctx, int ell, const C& X) {
    return ctx.exp(log_u_factor(ctx, ell, X));
}

/// Sum over l of log U_l(Xnum_l) - log U_l(Xden_l); the den callback may
/// return an empty optional to mean "argument zero" (log U_l(0) = 0).
/// Parallel over l; exact arithmetic keeps the result schedule-independent.
template <class C, class FNum, class FDen>
USeries<C> sum_log_factors(const GenfunContext& ctx, const FNum& xnum, const FDen& xden,
                           const C& proto, LogPart part = LogPart::Both) {
    USeries<C> total(ctx.u_cap(), proto);
    const int lmax = ctx.ell_max();
#pragma omp parallel
    {
        USeries<C> local(ctx.u_cap(), proto);
#pragma omp for schedule(dynamic, 1) nowait
        for (int ell = 1; ell <= lmax; ++ell) {
            std::optional<C> xn = xnum(ell);
            if (xn && !ring_is_zero(*xn))
                us_add_assign(local, log_u_factor(ctx, ell, *xn, part));
            std::optional<C> xd = xden(ell);
            if (xd && !ring_is_zero(*xd))
                us_sub_assign(local, log_u_factor(ctx, ell, *xd, part));
        }
#pragma omp critical
        us_add_assign(total, local);
    }
    return total;
}

/// W_l as a w-polynomial over an arbitrary coefficient ring:
/// W_1 = 1 - w, and for l >= 2, W_l = -(1/l) sum_{d|l} mu(l/d) w^d.
template <class R>
CPoly<R> w_ell_poly(int ell, int w_cap, const R& proto) {
    CPoly<R> w(w_cap, proto);
    if (ell == 1) {
        w.c[0] = ring_one_like(proto);
        if (w_cap >= 1) w.c[1] = ring_neg(ring_one_like(proto));
        return w;
    }
    for (unsigned long d : divisors(ell)) {
        int mu = mobius(ell / d);
        if (mu == 0 || static_cast<int>(d) > w_cap) continue;
        R t = ring_one_like(proto);
        ring_scale(t, Rat(-mu, ell));
        ring_add_assign(w.c[d], t);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Weight-eleven drivers.

/// Z = -u T_{<=10}(prod_l U_l(W_l, u) - 1); the coefficient of u^g is half the
/// weight-11 compactly supported Euler characteristic of M_g.
USeries<Rat> weight11_scalar_z(int g_max, const GenfunOptions& opt = {});

/// Marked-point dimension series: the coefficient of u^{g+n} x^n is
/// (1/2) chi11(M_{g,n}) / n!. Coefficients are x-polynomials of degree <= n_max.
USeries<WRat> weight11_dimension_series(int sum_max, int n_max,
                                        const GenfunOptions& opt = {});

/// Equivariant series: the weighted-degree-n part of the u^{g+n} coefficient
/// is (1/2) chi11^S(M_{g,n}) in the power-sum basis.
USeries<SymFunc> weight11_equivariant_series(int sum_max, int n_max,
                                             const GenfunOptions& opt = {});

/// Exact B_1 series (argument 1 - w) and the leading term L = -u T_{<=10} B_1.
USeries<WRat> b_one_series(int u_cap, const GenfunOptions& opt = {});
USeries<Rat> leading_term_series(int u_cap, const GenfunOptions& opt = {});

/// exp(sum_l A_l(W_l) + sum_{l>=2} B_l(W_l)) - 1: everything except the
/// exp(B_1) factor; feeds the remainder certificate's finite polynomial part.
USeries<WRat> big_a_series(int u_cap, const GenfunOptions& opt = {});

// ---------------------------------------------------------------------------
// Weight-thirteen drivers.

/// Y = prod_l U_l((1/l) sum_{d|l} mu(l/d) p_d, u), truncated at p_cap.
USeries<SymFunc> big_y(const GenfunContext& ctx, int p_cap);

/// Character series of H^2, H^11, H^13 of the stable modular compactifications
/// with the genus variable already renamed to u; coefficients truncated to
/// weighted degree p_cap.
USeries<SymFunc> op_weight2(int u_cap, int p_cap);
USeries<SymFunc> op_weight11(int u_cap, int p_cap);
USeries<SymFunc> op_weight13(int u_cap, int p_cap);

/// Substitute p_j -> j d/dp_j into the monomials of `op` (u-power kept as a
/// multiplier) and apply to `target`; the result is truncated at result_p_cap.
USeries<SymFunc> apply_dk(const USeries<SymFunc>& op, const USeries<SymFunc>& target,
                          int result_p_cap);

/// The full weight-13 equivariant series
///   I( Y^{-1} D13 Y + (uY)^{-1} D11 D2 Y - (u Y^2)^{-1} (D11 Y)(D2 Y) );
/// the weighted-degree-n part of the u^{g+n} coefficient is chi13^S(M_{g,n})
/// (the whole characteristic; halve for table values).
USeries<SymFunc> weight13_equivariant_series(int sum_max, int n_max,
                                             const GenfunOptions& opt = {});

// ---------------------------------------------------------------------------
// Extraction helpers.

inline bool stable_pair(int g, int n) { return 2 * g + n >= 3 && g >= 0 && n >= 0; }

/// (1/2) chi11^S(M_{g,n}) from weight11_equivariant_series output.
SymFunc weight11_half(const USeries<SymFunc>& series, int g, int n);

/// (1/2) chi13^S(M_{g,n}) from weight13_equivariant_series output.
SymFunc weight13_half(const USeries<SymFunc>& series, int g, int n);

/// chi11(M_{g,n}) (whole, scalar) from weight11_dimension_series output.
Rat weight11_dimension(const USeries<WRat>& series, int g, int n);

} // namespace curvechi
