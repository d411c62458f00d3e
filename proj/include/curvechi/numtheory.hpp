#pragma once

#include <vector>

#include "curvechi/rational.hpp"

namespace curvechi {

/// Weakly decreasing sequence of positive integers.
struct Partition {
    std::vector<int> parts; // sorted descending

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;                 // sum of parts
    int rows() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; } // lexicographic
    std::string to_string() const;    // "[3,1,1]"
};

/// Exact Bernoulli number B_r with the B_1 = -1/2 convention; memoized.
const Rat& bernoulli(unsigned r);

/// Moebius mu(n) by trial-division factorization, n >= 1.
int mobius(unsigned long n);

/// Divisors of n in increasing order.
std::vector<unsigned long> divisors(unsigned long n);

/// All partitions of n, lexicographically descending: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Dimension of the irreducible S_{|lambda|}-representation V_lambda
/// (hook length formula).
Int specht_dim(const Partition& lambda);

/// Smallest n such that the count of genus-g curves with n marked points over
/// finite fields fails to be polynomial: max{ceil((25-3g)/2), 0}.
int n_min(int g);

/// Centralizer order z_mu = prod_j j^{m_j} m_j! of a permutation of cycle type mu.
Int z_order(const Partition& mu);

} // namespace curvechi
