#include "curvechi/asymptotics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace curvechi {

BigFloat c_infinity(Parity p) {
    BigFloat pi = bf_pi();
    BigFloat pi2 = pi * pi;
    BigFloat f10 = bf_factorial(10);
    if (p == Parity::Even) {
        BigFloat poly = 14175 - 4725 * pi2 + 630 * pi2 * pi2 - 45 * pi2 * pi2 * pi2 +
                        2 * pi2 * pi2 * pi2 * pi2;
        return 1024 * pi2 * poly / f10;
    }
    BigFloat poly = 2835 + 2 * pi2 * (-945 + 189 * pi2 - 18 * pi2 * pi2 + pi2 * pi2 * pi2);
    return 4 * pi * 1280 * poly / f10;
}

BigFloat z_asymp(long g) {
    if (g < 2) throw std::invalid_argument("z_asymp needs g >= 2");
    BigFloat mag = bf_factorial(g - 2) / pow(2 * bf_pi(), g);
    int sign = (g % 2 == 0) ? ((g / 2) % 2 == 0 ? 1 : -1)
                            : (((g - 1) / 2) % 2 == 0 ? 1 : -1);
    BigFloat c = c_infinity(g % 2 == 0 ? Parity::Even : Parity::Odd);
    return sign * c * mag;
}

CBig phi_k_gamma(int k, int gamma, const CBig& x) {
    if (k < 1 || gamma < 0) throw std::invalid_argument("phi_k_gamma parameters");
    long j0 = std::max<long>(k, gamma + 1);
    // t_J = x^J (J-1)! / ((J-Gamma-1)! Gamma! (J-k+1)!)
    CBig t{bf_from_rat(Rat(1)), BigFloat(0)};
    for (long i = 0; i < j0; ++i) t = t * x;
    BigFloat num = bf_factorial(j0 - 1);
    BigFloat den = bf_factorial(j0 - gamma - 1) * bf_factorial(gamma) * bf_factorial(j0 - k + 1);
    t = t * (num / den);
    CBig acc = t;
    BigFloat xa = x.abs();
    BigFloat eps = pow(BigFloat(10), -static_cast<long>(precision_digits() + 5));
    for (long j = j0;; ++j) {
        // t_{J+1}/t_J = x J / ((J - Gamma)(J - k + 2))
        t = t * x * (BigFloat(j) / (BigFloat(j - gamma) * BigFloat(j - k + 2)));
        acc = acc + t;
        if (t.abs() < eps && BigFloat(j) > 2 * xa) break;
    }
    return acc;
}

BigFloat phi_gamma(int gamma, const BigFloat& x) {
    if (gamma < 0) throw std::invalid_argument("phi_gamma parameters");
    if (x == 0) return BigFloat(0);
    // t_J = x^J / (J (J-Gamma-1)! Gamma!), J from Gamma+1
    long j0 = gamma + 1;
    BigFloat t = pow(x, j0) / (BigFloat(j0) * bf_factorial(gamma));
    BigFloat acc = t;
    BigFloat eps = pow(BigFloat(10), -static_cast<long>(precision_digits() + 5));
    for (long j = j0;; ++j) {
        t = t * x * BigFloat(j) / (BigFloat(j + 1) * BigFloat(j - gamma));
        acc = acc + t;
        if (t < eps * acc && BigFloat(j) > 2 * x) break;
    }
    return acc;
}

namespace {

std::mutex g_phi_mutex;

// |phi_{k,Gamma}(2 pi i)| and phi_Gamma(2 pi k), memoized per precision.
BigFloat phi_k_gamma_2pii_abs(int k, int gamma) {
    static std::map<std::tuple<int, int, unsigned>, BigFloat> memo;
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto key = std::make_tuple(k, gamma, precision_digits());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigFloat v = phi_k_gamma(k, gamma, CBig{BigFloat(0), 2 * bf_pi()}).abs();
    memo.emplace(key, v);
    return v;
}

BigFloat phi_gamma_2pik(int gamma, long k) {
    static std::map<std::tuple<int, long, unsigned>, BigFloat> memo;
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto key = std::make_tuple(gamma, k, precision_digits());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigFloat v = phi_gamma(gamma, 2 * bf_pi() * k);
    memo.emplace(key, v);
    return v;
}

// (g-a)! / (g-2)! = 1 / prod_{i=g-a+1}^{g-2} i, for a >= 2.
BigFloat factorial_ratio(long g, long a) {
    if (g - a < 0) throw std::invalid_argument("factorial_ratio out of range");
    BigFloat denom(1);
    for (long i = g - a + 1; i <= g - 2; ++i) denom *= i;
    return 1 / denom;
}

BigFloat two_zeta2() { return 2 * bf_zeta_ui(2); }

} // namespace

BigFloat lambda_bound(long g, int k, int gamma) {
    if (k < 1 || g < 2 * k) throw std::invalid_argument("lambda_bound needs g >= 2k, k >= 1");
    BigFloat pre = pow(BigFloat(2), k) * pow(bf_zeta_ui(2), k - 1) /
                   (bf_factorial(k - 1) * pow(2 * bf_pi(), k - 1));
    BigFloat phi_err = phi_k_gamma_2pii_abs(k, gamma) + pow(BigFloat(10), -14);
    return pre * phi_err * factorial_ratio(g, 2 * k);
}

BigFloat lambda_prime_bound(long g, int k, int gamma) {
    if (k == 1) return BigFloat(0);
    if (k < 2 || g < 2 * k + 1)
        throw std::invalid_argument("lambda_prime_bound needs g >= 2k+1, k >= 2");
    BigFloat pre = pow(BigFloat(2), k) * pow(bf_zeta_ui(2), k - 1) /
                   (bf_factorial(k - 2) * pow(2 * bf_pi(), k - 1));
    BigFloat phi_err = phi_k_gamma_2pii_abs(k + 1, gamma) + pow(BigFloat(10), -13);
    return pre * phi_err * factorial_ratio(g, 2 * k + 1);
}

BigFloat delta_bound(long g, int k0, int gamma) {
    if (k0 < 2 || g < 2 * k0 + 1)
        throw std::invalid_argument("delta_bound needs g >= 2k0+1, k0 >= 2");
    BigFloat acc(0);
    BigFloat z2 = two_zeta2(), twopi = 2 * bf_pi();
    Rat growth(31, 10);
    for (long k = k0; 2 * k <= g - 1; ++k) {
        BigFloat term = pow(bf_from_rat(growth), k - 1) * pow(z2, k) /
                        (pow(twopi, k - 1) * bf_factorial(k));
        term *= phi_gamma_2pik(gamma, k);
        term *= factorial_ratio(g, 2 * k);
        acc += term;
    }
    return acc;
}

BigFloat delta_prime_bound(long g, int k, int gamma) {
    if (k < 2 || g < 2 * k + 2)
        throw std::invalid_argument("delta_prime_bound needs g >= 2k+2, k >= 2");
    BigFloat pre = bf_from_rat(a_prime_max(k)) * pow(two_zeta2(), k) /
                   (bf_factorial(k) * pow(2 * bf_pi(), k - 1));
    return pre * phi_gamma_2pik(gamma, k) * factorial_ratio(g, 2 * k + 2);
}

BigFloat delta_beta_bound(long g, int k, int gamma) {
    BigFloat twopi = 2 * bf_pi();
    BigFloat z2 = bf_zeta_ui(2);
    BigFloat delta(0);
    for (long j = std::max<long>(k, gamma + 1); j <= g - k - 1; ++j) {
        BigFloat a = pow(twopi, j) * bf_factorial(j - 1) * z2 /
                     (bf_factorial(j - gamma - 1) * bf_factorial(gamma) * bf_factorial(j - k + 1));
        delta += a / pow(BigFloat(2), g - k - j);
    }
    BigFloat beta = pow(BigFloat(2), k - 2) * exp(twopi) * pow(twopi, g - k) /
                    (bf_factorial(gamma) * bf_factorial(g - 2 * k - gamma + 1));
    return delta + beta;
}

BigFloat delta_beta_prime_bound(long g, int k, int gamma) {
    BigFloat twopi = 2 * bf_pi();
    BigFloat z2 = bf_zeta_ui(2);
    BigFloat delta(0);
    for (long j = std::max<long>(k + 1, gamma + 1); j <= g - k - 1; ++j) {
        BigFloat a = pow(twopi, j) * bf_factorial(j - 1) * z2 /
                     (bf_factorial(j - gamma - 1) * bf_factorial(gamma) * bf_factorial(j - k));
        delta += a / pow(BigFloat(2), g - k - j);
    }
    BigFloat beta = pow(BigFloat(2), k - 1) * exp(twopi) * pow(twopi, g - k) /
                    (bf_factorial(gamma) * bf_factorial(g - 2 * k - gamma));
    return delta + beta;
}

namespace {
std::mutex g_fk_mutex;
// f_tables[k][N] = F_k(N)
std::vector<std::vector<Int>> g_fk_tables;

void extend_fk(int k, int n) {
    if (static_cast<int>(g_fk_tables.size()) <= k) g_fk_tables.resize(k + 1);
    auto& t1 = g_fk_tables[1].empty() ? (g_fk_tables[1] = {Int(1)}) : g_fk_tables[1];
    for (int m = static_cast<int>(t1.size()); m <= n; ++m) t1.push_back(factorial(m));
    for (int kk = 2; kk <= k; ++kk) {
        auto& tk = g_fk_tables[kk];
        if (tk.empty()) tk.push_back(Int(0)); // F_k(0) = 0
        const auto& prev = g_fk_tables[kk - 1];
        for (int m = static_cast<int>(tk.size()); m <= n; ++m) {
            Int acc(0);
            for (int t = 1; t <= m - kk + 1; ++t) acc += factorial(t) * prev[m - t];
            tk.push_back(acc);
        }
    }
}
} // namespace

Int f_k(int k, int n) {
    if (k < 1 || n < 0) throw std::invalid_argument("f_k parameters");
    if (n < k) return Int(0);
    std::lock_guard<std::mutex> lock(g_fk_mutex);
    extend_fk(k, n);
    return g_fk_tables[k][n];
}

namespace {
// direct enumeration with a part cap, for the small-N regime
Int f_capped(int k, int n, int cap) {
    if (k == 0) return n == 0 ? Int(1) : Int(0);
    Int acc(0);
    for (int t = 1; t <= std::min(n - k + 1, cap); ++t)
        acc += factorial(t) * f_capped(k - 1, n - t, cap);
    return acc;
}
} // namespace

Int f_k_prime(int k, int n) {
    if (k < 1 || n < 0) throw std::invalid_argument("f_k_prime parameters");
    int cap = n - k - 1;
    if (cap < 1 || n < k) return Int(0);
    if (n < 2 * k + 2) return f_capped(k, n, cap);
    // at most one part can exceed n-k-1, and it is n-k or n-k+1
    Int big = Int(k) * factorial(n - k + 1) + Int(2) * Int(k) * Int(k - 1) * factorial(n - k);
    return f_k(k, n) - big;
}

Rat a_prime_max(int k, int n_limit) {
    static std::mutex m;
    static std::map<std::pair<int, int>, Rat> memo;
    std::lock_guard<std::mutex> lock(m);
    auto it = memo.find({k, n_limit});
    if (it != memo.end()) return it->second;
    Rat best(0);
    for (int n = k + 2; n <= n_limit; ++n) {
        Rat r = Rat(f_k_prime(k, n)) / Rat(factorial(n - k - 1));
        if (r > best) best = r;
    }
    memo.emplace(std::make_pair(k, n_limit), best);
    return best;
}

BigFloat eta(long g, int n0, const Rat& lambda) {
    if (g < n0 + 2) return BigFloat(0);
    BigFloat twopi = 2 * bf_pi();
    BigFloat acc(0);
    // ratio = (g-N-2)!/(g-2)!, maintained incrementally
    BigFloat ratio = factorial_ratio(g, n0 + 2);
    BigFloat lam = bf_from_rat(lambda);
    for (long n = n0; n <= g - 2; ++n) {
        acc += bf_rfactorial(lam * n / 2) * ratio * pow(twopi, n + 2);
        ratio /= (g - n - 2 > 0) ? BigFloat(g - n - 2) : BigFloat(1);
    }
    return acc;
}

NamedConstants named_constants(int g_scan_max) {
    NamedConstants c;
    BigFloat pi = bf_pi();
    c.d = bf_zeta_ui(2) * (exp(2 * pi) - 1) * 2 / (pi * pi * pi);
    c.e_prime = 2 * c.d;
    c.e = c.e_prime + 1;
    // F' = sum_k E^k a^{k-1} / (k! (k-1)!), a = 2 * (4/3)!
    BigFloat a = 2 * bf_rfactorial(bf_from_rat(Rat(4, 3)));
    BigFloat fp(0), term = c.e; // k = 1 term
    for (long k = 1;; ++k) {
        fp += term;
        BigFloat next = term * c.e * a / (BigFloat(k + 1) * BigFloat(k));
        if (next < pow(BigFloat(10), -static_cast<long>(precision_digits())) * fp) {
            fp += next;
            break;
        }
        term = next;
    }
    c.f_prime = fp;
    c.f = 4 * fp + 2;

    BigFloat best(0);
    for (long g = 11; g <= g_scan_max; ++g) {
        BigFloat s(0);
        for (int gamma = 0; gamma <= 10; ++gamma) {
            for (int k = 1; k <= 4; ++k) {
                if (g >= 2 * k) s += lambda_bound(g, k, gamma);
                if (k >= 2 && g >= 2 * k + 1) s += lambda_prime_bound(g, k, gamma);
            }
            for (int k = 2; k <= 4; ++k)
                if (g >= 2 * k + 2) s += delta_prime_bound(g, k, gamma);
            if (g >= 11) s += delta_bound(g, 5, gamma);
        }
        if (s > best) best = s;
    }
    c.a_tilde = best;
    return c;
}

CertificateReport remainder_certificate(const std::vector<long>& gs,
                                        const USeries<WRat>& big_a) {
    if (big_a.u_cap < 59)
        throw std::invalid_argument("remainder_certificate needs the exact series to u^59");
    CertificateReport rep;
    rep.consts = named_constants();
    BigFloat twopi = 2 * bf_pi();
    BigFloat budget = min(c_infinity(Parity::Even), c_infinity(Parity::Odd)) / 2;
    const int n0 = 60;

    rep.all_pass = true;
    for (long g : gs) {
        CertificateRow row;
        row.g = g;
        row.budget = budget;

        row.lead_sublead = BigFloat(0);
        for (int k = 2; k <= 4; ++k)
            row.lead_sublead += lambda_bound(g, k, 10) + lambda_prime_bound(g, k, 10);
        row.delta_tail = delta_bound(g, 5, 10);
        row.delta_prime_sum = BigFloat(0);
        for (int k = 2; k <= 4; ++k) row.delta_prime_sum += delta_prime_bound(g, k, 10);

        // u T(A) <= 11 u ||A||; coefficient at u^g bounded by F (2(g-1)/3)!
        row.a_term = 11 * rep.consts.f * bf_rfactorial(BigFloat(2) * (g - 1) / 3) *
                     pow(twopi, g) / bf_factorial(g - 2);

        // mixed terms: finite polynomial part of the exact series against the
        // closed-form families, plus the analytic tail
        BigFloat x1(0), x2(0);
        for (int gamma = 0; gamma <= 10; ++gamma) {
            int alpha = 10 - gamma;
            for (int n = 1; n < n0; ++n) {
                BigFloat a_abs = abs(bf_from_rat(big_a.c[n].c[alpha]));
                if (a_abs == 0) continue;
                BigFloat common = a_abs * pow(twopi, n) * factorial_ratio(g, n + 2);
                BigFloat lam_sum(0);
                for (int k = 1; k <= 4; ++k) {
                    lam_sum += lambda_bound(g - n, k, gamma);
                    lam_sum += lambda_prime_bound(g - n, k, gamma);
                }
                x1 += common * lam_sum;
                BigFloat d_sum = delta_bound(g - n, 5, gamma);
                for (int k = 2; k <= 4; ++k) d_sum += delta_prime_bound(g - n, k, gamma);
                x2 += common * d_sum;
            }
        }
        row.mixed_x1 = x1;
        row.mixed_x2 = x2;
        row.mixed_x3 = rep.consts.f * rep.consts.a_tilde * eta(g, n0, Rat(4, 3));

        row.total = row.lead_sublead + row.delta_tail + row.delta_prime_sum + row.a_term +
                    row.mixed_x1 + row.mixed_x2 + row.mixed_x3;
        row.pass = row.total < row.budget;
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace curvechi
