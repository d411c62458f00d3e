#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvechi/numtheory.hpp"

using namespace curvechi;

TEST_CASE("bernoulli values") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == Rat(-1, 2));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(3) == Rat(0));
    CHECK(bernoulli(12) == Rat(-691, 2730));
}

TEST_CASE("bernoulli recurrence to r = 200") {
    for (unsigned r = 1; r <= 200; ++r) {
        Rat acc(0);
        for (unsigned j = 0; j <= r; ++j) acc += Rat(binomial(r + 1, j)) * bernoulli(j);
        CHECK(acc == 0);
    }
}

TEST_CASE("mobius small values") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
}

TEST_CASE("mobius divisor sums vanish") {
    for (unsigned long n = 1; n <= 10000; ++n) {
        long s = 0;
        for (unsigned long d : divisors(n)) s += mobius(d);
        CHECK(s == (n == 1 ? 1 : 0));
    }
}

namespace {
// independent oracle: p(n) by the standard two-dimensional count
unsigned long partition_count_dp(int n) {
    std::vector<std::vector<unsigned long>> dp(n + 1, std::vector<unsigned long>(n + 1, 0));
    for (int k = 0; k <= n; ++k) dp[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            dp[m][k] = dp[m][k - 1] + (m >= k ? dp[m - k][k] : 0);
    return dp[n][n];
}

// independent oracle: standard Young tableaux counted by direct recursion
long syt_count(std::vector<int> shape) {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    long total = 0;
    for (size_t i = 0; i < shape.size(); ++i) {
        bool corner = (i + 1 == shape.size()) || (shape[i] > shape[i + 1]);
        if (!corner) continue;
        auto s = shape;
        s[i] -= 1;
        total += syt_count(s);
    }
    return total;
}
} // namespace

TEST_CASE("partition enumeration") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].parts.empty());

    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    // lexicographically descending
    CHECK(p4[0].parts == std::vector<int>{4});
    CHECK(p4[1].parts == std::vector<int>{3, 1});
    CHECK(p4[2].parts == std::vector<int>{2, 2});
    CHECK(p4[3].parts == std::vector<int>{2, 1, 1});
    CHECK(p4[4].parts == std::vector<int>{1, 1, 1, 1});

    CHECK(partitions_of(10).size() == 42);
    for (int n = 0; n <= 60; ++n)
        CHECK(partitions_of(n).size() == partition_count_dp(n));
}

TEST_CASE("specht dimensions") {
    CHECK(specht_dim(Partition({1})) == 1);
    // hooks (n-m+1, 1^{m-1}) have dimension C(n-1, m-1)
    for (int n = 2; n <= 12; ++n)
        for (int m = 1; m <= n; ++m) {
            std::vector<int> hook{n - m + 1};
            hook.insert(hook.end(), m - 1, 1);
            CHECK(specht_dim(Partition(hook)) == binomial(n - 1, m - 1));
        }
    std::vector<int> shape{2};
    shape.insert(shape.end(), 10, 1);
    CHECK(specht_dim(Partition(shape)) == 11);
    CHECK(specht_dim(Partition(shape)) == syt_count(shape));
    CHECK(specht_dim(Partition({3, 2, 1})) == syt_count({3, 2, 1}));
}

TEST_CASE("sum of squared dimensions is n!") {
    for (int n = 1; n <= 14; ++n) {
        Int acc(0);
        for (const auto& lam : partitions_of(n)) {
            Int d = specht_dim(lam);
            acc += d * d;
        }
        CHECK(acc == factorial(n));
    }
}

TEST_CASE("smallest non-polynomial marking count") {
    CHECK(n_min(1) == 11);
    CHECK(n_min(2) == 10);
    CHECK(n_min(3) == 8);
    CHECK(n_min(7) == 2);
    CHECK(n_min(8) == 1);
    CHECK(n_min(9) == 0);
    CHECK(n_min(50) == 0);
}
