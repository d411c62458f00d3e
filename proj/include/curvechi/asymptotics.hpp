#pragma once

#include <string>
#include <vector>

#include "curvechi/bigfloat.hpp"
#include "curvechi/genfun.hpp"
#include "curvechi/rational.hpp"

namespace curvechi {

enum class Parity { Even, Odd };

/// Closed-form limit constants of the leading-term asymptotics
/// (about 12.8765 for even genus, 23.7991 for odd).
BigFloat c_infinity(Parity p);

/// Asymptotic value of half the weight-11 Euler characteristic:
/// C_inf(parity) * (-1)^{floor(g/2)} (g-2)!/(2pi)^g.
BigFloat z_asymp(long g);

/// phi_{k,Gamma}(x) = sum_{J >= max(k,Gamma+1)} x^J (J-1)! /
///                    ((J-Gamma-1)! Gamma! (J-k+1)!), complex argument.
CBig phi_k_gamma(int k, int gamma, const CBig& x);

/// phi_Gamma(x) = (1/Gamma!) sum_{J > Gamma} x^J / (J (J-Gamma-1)!).
BigFloat phi_gamma(int gamma, const BigFloat& x);

// Bound families controlling the non-leading contributions, evaluated from
// their closed forms. lambda requires g >= 2k, lambda' g >= 2k+1 and k >= 2
// (k = 1 yields 0 by convention), delta' g >= 2k+2.
BigFloat lambda_bound(long g, int k, int gamma);
BigFloat lambda_prime_bound(long g, int k, int gamma);
BigFloat delta_bound(long g, int k0, int gamma);
BigFloat delta_prime_bound(long g, int k, int gamma);

/// Explicit tail bounds delta_g + beta_g (and primed) certifying the
/// 1e-14 / 1e-13 error constants used inside lambda and lambda'.
BigFloat delta_beta_bound(long g, int k, int gamma);
BigFloat delta_beta_prime_bound(long g, int k, int gamma);

/// F_k(N) = sum over compositions N_1+...+N_k = N, parts >= 1, of prod N_i!.
Int f_k(int k, int n);
/// Same with every part <= N-k-1.
Int f_k_prime(int k, int n);
/// Exact maximum of F'_k(N)/(N-k-1)! over k+1 <= N <= n_limit.
Rat a_prime_max(int k, int n_limit = 300);

/// eta_g = sum_{N=N0}^{g-2} (lambda N/2)! (g-N-2)! (2pi)^{N+2} / (g-2)!.
BigFloat eta(long g, int n0 = 60, const Rat& lambda = Rat(4, 3));

struct NamedConstants {
    BigFloat d;        // ~56.7113
    BigFloat e_prime;  // < 114
    BigFloat e;        // e_prime + 1 < 115 (stated bound 120)
    BigFloat f_prime;
    BigFloat f;        // < 1e15
    BigFloat a_tilde;  // < 1e18 (stated bound 1e20)
};

/// All constants for lambda = 4/3; a_tilde scans g in [11, g_scan_max].
NamedConstants named_constants(int g_scan_max = 150);

struct CertificateRow {
    long g;
    BigFloat lead_sublead;     // sum_{k=2..4} lambda + lambda', Gamma = 10
    BigFloat delta_tail;       // Delta_{g,5,10}
    BigFloat delta_prime_sum;  // sum_{k=2..4} Delta'_{g,k,10}
    BigFloat a_term;           // 11 F (2(g-1)/3)! (2pi)^g/(g-2)!
    BigFloat mixed_x1, mixed_x2, mixed_x3;
    BigFloat total;
    BigFloat budget;           // (1/2) min(C_inf)
    bool pass = false;
};

struct CertificateReport {
    NamedConstants consts;
    std::vector<CertificateRow> rows;
    bool all_pass = false;
};

/// Assemble the per-genus remainder bound from the closed-form families plus
/// the exact finite polynomial part `big_a` (the u-truncation of
/// exp(sum A_l + sum_{l>=2} B_l) - 1, required to u-degree >= 59).
CertificateReport remainder_certificate(const std::vector<long>& gs,
                                        const USeries<WRat>& big_a);

} // namespace curvechi
