#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvechi/cohomology.hpp"

using namespace curvechi;

TEST_CASE("thirteenth cohomology dimensions") {
    CHECK(dim_h13(2, 10).dim == 2);
    CHECK(dim_h13(2, 11).dim == 44);
    CHECK(dim_h13(2, 12).dim == 528);
    CHECK(dim_h13(2, 13).dim == 4576);
    // n < 10 vanishes for every genus
    for (int g = 0; g <= 20; ++g) {
        auto r = dim_h13(g, 9);
        CHECK(r.dim == 0);
    }
    CHECK(dim_h13(0, 15).dim == 0);
    auto unstable = dim_h13(1, 0);
    CHECK(unstable.dim == 0);
    CHECK(!unstable.stable);
}

TEST_CASE("closed form equals the index count") {
    // brute-force enumeration of pairs B in A over subsets of {1..n}
    for (int n = 10; n <= 13; ++n) {
        long pairs = 0;
        for (unsigned a = 0; a < (1u << n); ++a) {
            int m = __builtin_popcount(a);
            if (m < 10) continue;
            for (unsigned b = a;; b = (b - 1) & a) { // subsets of a
                if (__builtin_popcount(b) == 10) ++pairs;
                if (b == 0) break;
            }
        }
        CHECK(dim_h13(5, n).dim == Int(kCuspFormDim) * Int(pairs));
    }
    // binomial form at the larger sizes
    for (int n = 14; n <= 16; ++n) {
        Int pairs(0);
        for (int m = 10; m <= n; ++m) pairs += binomial(n, m) * binomial(m, 10);
        CHECK(dim_h13(5, n).dim == Int(kCuspFormDim) * pairs);
    }
}

TEST_CASE("multiplicity character") {
    int cap = 14;
    CHECK(char_h13(2, 10, cap) == e_to_p(10, cap));
    CHECK(char_h13(3, 9, cap).is_zero());
    // characters have nonnegative integer Schur coefficients and the right
    // dimension
    for (int n = 10; n <= 13; ++n) {
        SymFunc ch = char_h13(2, n, cap);
        Int d(0);
        for (const auto& [shape, c] : p_to_schur(ch)) {
            CHECK(is_integer(c));
            CHECK(c > 0);
            d += c.get_num() * specht_dim(Partition(shape));
        }
        CHECK(Int(kCuspFormDim) * d == dim_h13(2, n).dim);
    }
}

TEST_CASE("genus-one basis enumeration") {
    CHECK(basis_genus1(10).empty());
    CHECK(basis_genus1(11).empty());
    auto b12 = basis_genus1(12);
    REQUIRE(b12.size() == 11);
    for (const auto& z : b12) {
        CHECK(z.a == z.b);
        // the complement always contains 1, i.e. 1 is never a member of B
        CHECK(z.b[0] >= 2);
    }
    CHECK(dim_h13(1, 12).dim == 22);

    // cardinality grows with n and matches the independent character count:
    // the pullback part contributes C(n,12) * 11 and the boundary part
    // C(n,k) C(k,10) for 10 <= k <= n-3.
    size_t prev = 0;
    std::vector<int> pullback_shape{2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    for (int n = 12; n <= 16; ++n) {
        auto basis = basis_genus1(n);
        CHECK(basis.size() >= prev);
        prev = basis.size();
        Int expect = binomial(n, 12) * specht_dim(Partition(pullback_shape));
        for (int k = 10; k <= n - 3; ++k) expect += binomial(n, k) * binomial(k, 10);
        CHECK(Int(basis.size()) == expect);
    }
}

TEST_CASE("excess statistic") {
    std::vector<int> col11(11, 1);
    CHECK(excess(1, 11, Partition(col11)) == 25);
    std::vector<int> hook{2};
    hook.insert(hook.end(), 10, 1);
    CHECK(excess(1, 12, Partition(hook)) == 26);

    // the non-Tate isotypic table: minimum excess is 25
    struct Row {
        int m;
        std::vector<int> shape;
    };
    std::vector<Row> table = {
        {11, std::vector<int>(11, 1)},
        {12, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {13, {4, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {13, {2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {13, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {13, {3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {14, {5, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {14, {4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {14, {3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {14, {4, 2, 1, 1, 1, 1, 1, 1, 1, 1}},
        {14, {3, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {14, {2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
    };
    int min_excess = 1000;
    for (const auto& row : table) {
        Partition lam(row.shape);
        CHECK(lam.size() == row.m);
        min_excess = std::min(min_excess, excess(1, row.m, lam));
    }
    CHECK(min_excess == 25);
}
