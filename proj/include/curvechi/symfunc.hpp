#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "curvechi/numtheory.hpp"
#include "curvechi/rational.hpp"

namespace curvechi {

// A power-sum monomial p_1^{e_1} p_2^{e_2} ... as its exponent vector with
// trailing zeros trimmed. Weighted degree is sum j*e_j, i.e. the number of
// marked points the monomial tracks.
using PMono = std::vector<uint16_t>;

int pmono_weight(const PMono& m);
PMono pmono_from_partition(const Partition& mu);
Partition pmono_to_partition(const PMono& m);

// Graded lexicographic: first by weighted degree, then lexicographic on the
// exponent vectors. Gives every SymFunc a stable term order.
struct PMonoLess {
    bool operator()(const PMono& a, const PMono& b) const;
};

/// Element of the truncated ring of symmetric functions in power sums
/// p_1, p_2, ...: a sparse rational combination of monomials of weighted
/// degree <= p_cap. No zero coefficients are stored.
class SymFunc {
public:
    using Terms = std::map<PMono, Rat, PMonoLess>;

    SymFunc() : p_cap_(0) {}
    explicit SymFunc(int p_cap) : p_cap_(p_cap) {}

    static SymFunc zero(int p_cap) { return SymFunc(p_cap); }
    static SymFunc constant(const Rat& c, int p_cap);
    static SymFunc p(int j, int p_cap); // the generator p_j (zero if j > p_cap)

    int p_cap() const { return p_cap_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const PMono& m) const;

    void add_term(const PMono& m, const Rat& c); // drops weight > p_cap, erases zeros

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { a += b; return a; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { a -= b; return a; }
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    SymFunc operator-() const;
    SymFunc& scale(const Rat& c);
    void axpy(const Rat& c, const SymFunc& x); // *this += c*x
    bool operator==(const SymFunc& o) const { return p_cap_ == o.p_cap_ && terms_ == o.terms_; }

    /// p_j -> -p_j for every j.
    SymFunc sign_substitute() const;
    /// p_j -> p_{jk}; weighted degrees multiply by k, overflow dropped.
    SymFunc frobenius(int k) const;
    /// Graded piece of weighted degree exactly n.
    SymFunc graded_part(int n) const;
    /// Drop all terms of weighted degree > new_cap and lower the cap.
    SymFunc truncated(int new_cap) const;

private:
    int p_cap_;
    Terms terms_;
};

/// Irreducible symmetric group character chi^lambda(mu), |lambda| = |mu|,
/// via the Murnaghan-Nakayama rule; memoized, safe for concurrent callers.
Int sym_character(const Partition& lambda, const Partition& mu);

/// Exact power-sum expansion of the Schur function s_lambda:
/// s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu.
SymFunc schur_to_p(const Partition& lambda, int p_cap);

/// Complete homogeneous h_n = sum_{mu |- n} p_mu / z_mu (trivial character).
SymFunc h_to_p(int n, int p_cap);

/// Elementary e_n = sum_{mu |- n} sgn(mu) p_mu / z_mu (sign character).
SymFunc e_to_p(int n, int p_cap);

/// Schur expansion keyed by partitions (parts descending); map order is
/// lexicographic ascending on the part vectors, which is the rendering order.
using SchurExpansion = std::map<std::vector<int>, Rat>;

/// Exact inverse of schur_to_p via <p_mu, p_nu> = z_mu delta:
/// the s_lambda coefficient of f is sum_mu f_mu chi^lambda(mu).
SchurExpansion p_to_schur(const SymFunc& f);

/// Canonical text form, e.g. "-2*s[2,1,1] + s[3]"; "0" for empty.
std::string schur_text(const SchurExpansion& e);

} // namespace curvechi
