#pragma once

#include <vector>

#include "curvechi/numtheory.hpp"
#include "curvechi/symfunc.hpp"

namespace curvechi {

// The motive of weight-12 cusp forms is two-dimensional; every thirteenth
// cohomology group of a stable modular compactification is (multiplicity
// space) tensor that structure, so dimensions carry this factor.
inline constexpr int kCuspFormDim = 2;

/// Index of a boundary pushforward class: an ordered 10-element subset B of
/// {1..n} inside A with B <= A <= {1..n}.
struct ZIndex {
    std::vector<int> b; // increasing, |b| = 10
    std::vector<int> a; // increasing, b subset of a
    bool operator==(const ZIndex& o) const { return b == o.b && a == o.a; }
};

struct DimResult {
    Int dim;       // dim H^13
    bool stable;   // 2g + n >= 3
};

/// dim H^13 of the compactified moduli space of genus-g curves with n marks.
/// g >= 2: 2 * sum_{m=10}^{n} C(n,m) C(m,10); g = 1 by basis enumeration;
/// g = 0 and n < 10 vanish. Unstable input reports dim 0 with stable=false.
DimResult dim_h13(int g, int n);

/// Multiplicity character (without the two-dimensional cusp form factor):
/// sum_{m=10}^{n} s_{1^10} s_{m-10} s_{n-m}, for g >= 2.
SymFunc char_h13(int g, int n, int p_cap);

/// Basis of the genus-1 Hodge piece: the Z_{B in A} with |A^c| >= 3, or
/// |A^c| = 2 and min(A^c) < min(B). Deterministic order; empty for n < 12.
std::vector<ZIndex> basis_genus1(int n);

/// Excess statistic 3g + n + rows(lambda) of an isotypic component.
int excess(int g, int n, const Partition& lambda);

} // namespace curvechi
