#include "curvechi/genfun.hpp"

#include <stdexcept>
#include <functional>

namespace curvechi {

GenfunContext::GenfunContext(int u_cap, GenfunOptions opt) : u_cap_(u_cap), opt_(opt) {
    const int lmax = ell_max();
    log_unit_.resize(lmax + 1);
    p_pow_.resize(lmax + 1);
    const Rat rzero(0);
#pragma omp parallel for schedule(dynamic, 1)
    for (int ell = 1; ell <= lmax; ++ell) {
        // e_l = sum_{d|l} mu(l/d) u^{l-d}; constant term mu(1) = 1.
        USeries<Rat> e(u_cap_, rzero);
        for (unsigned long d : divisors(ell)) {
            int mu = mobius(ell / static_cast<unsigned long>(d));
            int expo = ell - static_cast<int>(d);
            if (mu != 0 && expo <= u_cap_) e.c[expo] += mu;
        }
        USeries<Rat> unit_arg = e;
        if (ell <= u_cap_) us_sub_assign(unit_arg, us_shift_up(e, ell)); // (1-u^l) e_l
        log_unit_[ell] = us_log(unit_arg);

        // P = l u^l e_l^{-1} and its powers up to floor(u_cap/l).
        auto& pw = p_pow_[ell];
        pw.push_back(us_one(u_cap_, rzero));
        if (ell <= u_cap_) {
            USeries<Rat> p = us_scale(us_shift_up(us_invert(e), ell), Rat(ell));
            int mmax = u_cap_ / ell;
            for (int m = 1; m <= mmax; ++m) pw.push_back(us_mul_serial(pw.back(), p));
        }
    }
}

namespace {

template <class C, class FNum, class FDen>
USeries<C> product_minus_one(const GenfunContext& ctx, const FNum& xnum, const FDen& xden,
                             const C& proto) {
    USeries<C> logsum = sum_log_factors(ctx, xnum, xden, proto);
    USeries<C> prod = ctx.exp(logsum);
    ring_sub_assign(prod.c[0], ring_one_like(proto));
    return prod;
}

// -u T_{<=10}(s) applied coefficientwise in u.
template <class R>
USeries<R> neg_u_t10(const USeries<CPoly<R>>& s) {
    return us_neg(us_shift_up(us_truncate_w(s, 10), 1));
}

std::optional<SymFunc> moebius_p_average(int ell, int p_cap, int sign) {
    SymFunc s(p_cap);
    for (unsigned long d : divisors(ell)) {
        int mu = mobius(ell / d);
        if (mu == 0 || static_cast<int>(d) > p_cap) continue;
        s.axpy(Rat(sign * mu, ell), SymFunc::p(static_cast<int>(d), p_cap));
    }
    if (s.is_zero()) return std::nullopt;
    return s;
}

} // namespace

USeries<Rat> weight11_scalar_z(int g_max, const GenfunOptions& opt) {
    GenfunContext ctx(g_max + 1, opt);
    WRat proto(opt.w_cap, Rat(0));
    auto xnum = [&](int ell) -> std::optional<WRat> {
        WRat w = w_ell_poly(ell, opt.w_cap, Rat(0));
        if (ring_is_zero(w)) return std::nullopt;
        return w;
    };
    auto xden = [](int) -> std::optional<WRat> { return std::nullopt; };
    return neg_u_t10(product_minus_one(ctx, xnum, xden, proto));
}

USeries<WRat> weight11_dimension_series(int sum_max, int n_max, const GenfunOptions& opt) {
    GenfunContext ctx(sum_max + 1, opt);
    WRat xproto(n_max, Rat(0));
    WXRat proto(opt.w_cap, xproto);
    auto xnum = [&](int ell) -> std::optional<WXRat> {
        WXRat arg = w_ell_poly(ell, opt.w_cap, xproto);
        int mu = mobius(ell);
        if (mu != 0 && n_max >= 1) arg.c[0].c[1] += Rat(-mu, ell);
        if (ring_is_zero(arg)) return std::nullopt;
        return arg;
    };
    auto xden = [&](int ell) -> std::optional<WXRat> {
        int mu = mobius(ell);
        if (mu == 0 || n_max < 1) return std::nullopt;
        WXRat arg(opt.w_cap, xproto);
        arg.c[0].c[1] += Rat(-mu, ell);
        return arg;
    };
    return neg_u_t10(product_minus_one(ctx, xnum, xden, proto));
}

USeries<SymFunc> weight11_equivariant_series(int sum_max, int n_max,
                                             const GenfunOptions& opt) {
    GenfunContext ctx(sum_max + 1, opt);
    SymFunc sproto(n_max);
    WSym proto(opt.w_cap, sproto);
    auto xnum = [&](int ell) -> std::optional<WSym> {
        WSym arg = w_ell_poly(ell, opt.w_cap, sproto);
        if (auto s = moebius_p_average(ell, n_max, -1)) arg.c[0] += *s;
        if (ring_is_zero(arg)) return std::nullopt;
        return arg;
    };
    auto xden = [&](int ell) -> std::optional<WSym> {
        auto s = moebius_p_average(ell, n_max, -1);
        if (!s) return std::nullopt;
        WSym arg(opt.w_cap, sproto);
        arg.c[0] = *s;
        return arg;
    };
    return neg_u_t10(product_minus_one(ctx, xnum, xden, proto));
}

USeries<WRat> b_one_series(int u_cap, const GenfunOptions& opt) {
    GenfunContext ctx(u_cap, opt);
    return b_ell(ctx, 1, w_ell_poly(1, opt.w_cap, Rat(0)));
}

USeries<Rat> leading_term_series(int u_cap, const GenfunOptions& opt) {
    return us_neg(us_shift_up(us_truncate_w(b_one_series(u_cap, opt), 10), 1));
}

USeries<WRat> big_a_series(int u_cap, const GenfunOptions& opt) {
    GenfunContext ctx(u_cap, opt);
    WRat proto(opt.w_cap, Rat(0));
    auto xnum = [&](int ell) -> std::optional<WRat> {
        if (ell == 1) return std::nullopt; // ell = 1 handled below, A-part only
        WRat w = w_ell_poly(ell, opt.w_cap, Rat(0));
        if (ring_is_zero(w)) return std::nullopt;
        return w;
    };
    auto xden = [](int) -> std::optional<WRat> { return std::nullopt; };
    USeries<WRat> logsum = sum_log_factors(ctx, xnum, xden, proto);
    us_add_assign(logsum, a_ell(ctx, 1, w_ell_poly(1, opt.w_cap, Rat(0))));
    USeries<WRat> prod = ctx.exp(logsum);
    ring_sub_assign(prod.c[0], ring_one_like(proto));
    return prod;
}

// ---------------------------------------------------------------------------
// Weight thirteen.

USeries<SymFunc> big_y(const GenfunContext& ctx, int p_cap) {
    SymFunc proto(p_cap);
    auto xnum = [&](int ell) { return moebius_p_average(ell, p_cap, +1); };
    auto xden = [](int) -> std::optional<SymFunc> { return std::nullopt; };
    return ctx.exp(sum_log_factors(ctx, xnum, xden, proto));
}

namespace {

// cap each u-coefficient to the weights a derivative acting at u^a can still
// consume: targets live at u^M with weighted degree <= 2M, M <= u_cap - a.
void truncate_op_coeffs(USeries<SymFunc>& op, int p_cap) {
    for (int a = 0; a <= op.u_cap; ++a) {
        int avail = 2 * (op.u_cap - a);
        if (avail < p_cap) op.c[a] = op.c[a].truncated(std::min(avail, p_cap));
    }
}

std::vector<SymFunc> h_table(int p_cap) {
    std::vector<SymFunc> h;
    for (int n = 0; n <= p_cap; ++n) h.push_back(h_to_p(n, p_cap));
    return h;
}

} // namespace

USeries<SymFunc> op_weight2(int u_cap, int p_cap) {
    SymFunc proto(p_cap);
    USeries<SymFunc> x2(u_cap, proto);
    auto h = h_table(p_cap);
    SymFunc hall(p_cap);
    for (const auto& hn : h) hall += hn;
    SymFunc p1 = SymFunc::p(1, p_cap);
    SymFunc p1_hall = p1 * hall;

    // kappa classes (g >= 3), psi classes (g >= 2, n >= 1), delta_irr
    // (g >= 1, 2g + n >= 3)
    for (int g = 3; g <= u_cap; ++g) x2.c[g] += hall;
    for (int g = 2; g <= u_cap; ++g) x2.c[g] += p1_hall;
    if (u_cap >= 1) {
        x2.c[1] += hall;
        x2.c[1] -= h[0];
    }
    for (int g = 2; g <= u_cap; ++g) x2.c[g] += hall;

    // separating boundary divisors: s_2 plethysm of f = sum_{2g+n>=2} u^g h_n,
    // realized as (f^2 + psi_2 f)/2 with psi_2 doubling both gradings.
    SymFunc a = hall;
    a -= h[0];
    if (p_cap >= 1) a -= h[1];
    SymFunc a2 = a * a, ah = a * hall, h2all = hall * hall;
    for (int gg = 0; gg <= u_cap; ++gg) {
        SymFunc f2(p_cap);
        if (gg == 0) f2 = a2;
        else if (gg == 1) f2.axpy(Rat(2), ah);
        else {
            f2.axpy(Rat(2), ah);
            f2.axpy(Rat(gg - 1), h2all);
        }
        x2.c[gg].axpy(Rat(1, 2), f2);
    }
    for (int g = 0; 2 * g <= u_cap; ++g) {
        const SymFunc& fg = (g == 0) ? a : hall;
        x2.c[2 * g].axpy(Rat(1, 2), fg.frobenius(2));
    }

    // genus-0 psi classes minus relations
    for (int n = 4; n <= p_cap; ++n) {
        x2.c[0] += p1 * h[n - 1];
        x2.c[0] -= h[2] * h[n - 2];
    }
    truncate_op_coeffs(x2, p_cap);
    return x2;
}

USeries<SymFunc> op_weight11(int u_cap, int p_cap) {
    SymFunc proto(p_cap);
    USeries<SymFunc> x11(u_cap, proto);
    if (u_cap >= 1) {
        for (int n = 11; n <= p_cap; ++n) {
            std::vector<int> hook{n - 10};
            hook.insert(hook.end(), 10, 1);
            x11.c[1].axpy(Rat(-2), schur_to_p(Partition(hook), p_cap));
        }
    }
    truncate_op_coeffs(x11, p_cap);
    return x11;
}

USeries<SymFunc> op_weight13(int u_cap, int p_cap) {
    SymFunc proto(p_cap);
    USeries<SymFunc> x13(u_cap, proto);
    auto h = h_table(p_cap);
    SymFunc hall(p_cap);
    for (const auto& hn : h) hall += hn;
    SymFunc s110 = e_to_p(10, p_cap);
    SymFunc s110_h = s110 * hall;
    SymFunc s110_h2 = s110_h * hall;
    for (int g = 2; g <= u_cap; ++g) x13.c[g].axpy(Rat(-2), s110_h2);
    if (u_cap >= 1) {
        // genus one: basis is indexed by k <= n-3 hooks plus the pullback
        // classes of type (2,1^10); all groups carry the same -2 factor
        SymFunc tail = hall;
        tail -= h[0];
        if (p_cap >= 1) tail -= h[1];
        if (p_cap >= 2) tail -= h[2];
        x13.c[1].axpy(Rat(-2), s110_h * tail);
        std::vector<int> shape{2};
        shape.insert(shape.end(), 10, 1);
        x13.c[1].axpy(Rat(-2), schur_to_p(Partition(shape), p_cap) * hall);
    }
    truncate_op_coeffs(x13, p_cap);
    return x13;
}

namespace {

struct OpIndex {
    // monomial -> list of (u-power, coefficient)
    std::map<PMono, std::vector<std::pair<int, Rat>>, PMonoLess> entries;
};

OpIndex index_op(const USeries<SymFunc>& op) {
    OpIndex idx;
    for (int a = 0; a <= op.u_cap; ++a)
        for (const auto& [m, c] : op.c[a].terms())
            idx.entries[m].emplace_back(a, c);
    return idx;
}

// Enumerate sub-exponent-vectors tau <= nu; for each, omega = nu - tau is a
// candidate derivative monomial with combinatorial factor
// prod_j j^{omega_j} nu_j!/tau_j!.
void enumerate_contractions(const PMono& nu, const Rat& c_nu, const OpIndex& idx,
                            int M, int result_p_cap, USeries<SymFunc>& out) {
    std::vector<int> support;
    for (size_t j = 0; j < nu.size(); ++j)
        if (nu[j]) support.push_back(static_cast<int>(j));
    PMono tau = nu;
    int nu_weight = pmono_weight(nu);

    std::function<void(size_t, int, Rat)> rec = [&](size_t pos, int tau_weight, Rat factor) {
        if (pos == support.size()) {
            if (tau_weight > result_p_cap) return;
            PMono omega(nu.size(), 0);
            for (size_t j = 0; j < nu.size(); ++j)
                omega[j] = static_cast<uint16_t>(nu[j] - tau[j]);
            while (!omega.empty() && omega.back() == 0) omega.pop_back();
            // omega empty means the identity part: constant operator terms
            // act by plain multiplication
            auto it = idx.entries.find(omega);
            if (it == idx.entries.end()) return;
            for (const auto& [a, c_op] : it->second) {
                int n_out = M + a;
                if (n_out > out.u_cap) continue;
                out.c[n_out].add_term(tau, c_nu * c_op * factor);
            }
            return;
        }
        int j = support[pos]; // zero-based: the generator p_{j+1}
        int e = nu[j];
        // tau_j = e, e-1, ..., 0; factor accumulates j^{omega_j} e!/tau_j!
        Rat f = factor;
        for (int t = e; t >= 0; --t) {
            tau[j] = static_cast<uint16_t>(t);
            int w = tau_weight - (e - t) * (j + 1);
            if (w >= 0) rec(pos + 1, w, f);
            if (t > 0) f *= Rat((j + 1) * t);
        }
        tau[j] = static_cast<uint16_t>(e);
    };
    rec(0, nu_weight, Rat(1));
}

} // namespace

USeries<SymFunc> apply_dk(const USeries<SymFunc>& op, const USeries<SymFunc>& target,
                          int result_p_cap) {
    OpIndex idx = index_op(op);
    SymFunc proto(result_p_cap);
    USeries<SymFunc> out(target.u_cap, proto);
#pragma omp parallel
    {
        USeries<SymFunc> local(target.u_cap, proto);
#pragma omp for schedule(dynamic, 1) nowait
        for (int m = 0; m <= target.u_cap; ++m)
            for (const auto& [nu, c] : target.c[m].terms())
                enumerate_contractions(nu, c, idx, m, result_p_cap, local);
#pragma omp critical
        us_add_assign(out, local);
    }
    return out;
}

namespace {
USeries<SymFunc> truncate_coeffs(const USeries<SymFunc>& s, int p_cap) {
    USeries<SymFunc> r(s.u_cap, SymFunc(p_cap));
    for (int n = 0; n <= s.u_cap; ++n) r.c[n] = s.c[n].truncated(p_cap);
    return r;
}
} // namespace

USeries<SymFunc> weight13_equivariant_series(int sum_max, int n_max,
                                             const GenfunOptions& opt) {
    const int u_cap = sum_max + 1;
    const int p_full = 2 * u_cap; // Y's u^M coefficient has weighted degree <= 2M
    GenfunContext ctx(u_cap, opt);
    USeries<SymFunc> y = big_y(ctx, p_full);
    USeries<SymFunc> x2 = op_weight2(u_cap, p_full);
    USeries<SymFunc> x11 = op_weight11(u_cap, p_full);
    USeries<SymFunc> x13 = op_weight13(u_cap, p_full);

    USeries<SymFunc> d2y_full = apply_dk(x2, y, p_full);
    USeries<SymFunc> d13y = apply_dk(x13, y, n_max);
    USeries<SymFunc> d11d2y = apply_dk(x11, d2y_full, n_max);
    USeries<SymFunc> d11y = apply_dk(x11, y, n_max);

    USeries<SymFunc> yt = truncate_coeffs(y, n_max);
    USeries<SymFunc> d2yt = truncate_coeffs(d2y_full, n_max);
    USeries<SymFunc> yinv = us_invert(yt);

    USeries<SymFunc> total = us_mul(yinv, d13y);
    us_add_assign(total, us_div_u(us_mul(yinv, d11d2y)));
    us_sub_assign(total,
                  us_div_u(us_mul(us_mul(yinv, yinv), us_mul(d11y, d2yt))));

    for (int n = 0; n <= total.u_cap; ++n) total.c[n] = total.c[n].sign_substitute();
    return total;
}

// ---------------------------------------------------------------------------
// Extraction.

SymFunc weight11_half(const USeries<SymFunc>& series, int g, int n) {
    SymFunc zero(series.proto().p_cap());
    if (!stable_pair(g, n) || g + n > series.u_cap || n > series.proto().p_cap())
        return zero;
    return series.c[g + n].graded_part(n);
}

SymFunc weight13_half(const USeries<SymFunc>& series, int g, int n) {
    SymFunc half = weight11_half(series, g, n); // same indexing
    half.scale(Rat(1, 2));
    return half;
}

Rat weight11_dimension(const USeries<WRat>& series, int g, int n) {
    if (!stable_pair(g, n) || g + n > series.u_cap || n > series.proto().cap)
        return Rat(0);
    return Rat(2) * Rat(factorial(n)) * series.c[g + n].c[n];
}

} // namespace curvechi
