#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvechi/symfunc.hpp"

using namespace curvechi;

namespace {
SymFunc random_symfunc(std::mt19937& rng, int p_cap, int max_terms) {
    SymFunc f(p_cap);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-6, 6);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        int w = std::uniform_int_distribution<int>(0, p_cap)(rng);
        auto parts = partitions_of(w);
        const auto& mu = parts[std::uniform_int_distribution<size_t>(0, parts.size() - 1)(rng)];
        Rat q(coeff(rng), 1 + (t % 3));
        q.canonicalize();
        f.add_term(pmono_from_partition(mu), q);
    }
    return f;
}
} // namespace

TEST_CASE("ring basics") {
    int cap = 6;
    SymFunc p1 = SymFunc::p(1, cap), p2 = SymFunc::p(2, cap);
    SymFunc s1 = schur_to_p(Partition({1}), cap);
    CHECK(s1 == p1);

    // s_1 * s_1 = s_2 + s_{1,1}
    auto sq = p_to_schur(s1 * s1);
    REQUIRE(sq.size() == 2);
    CHECK(sq.at({2}) == Rat(1));
    CHECK(sq.at({1, 1}) == Rat(1));

    // p_1 p_2 is a single monomial
    SymFunc prod = p1 * p2;
    CHECK(prod.coeff({1, 1}) == Rat(1));
    CHECK(prod.terms().size() == 1);

    CHECK((p1 * SymFunc::zero(cap)).is_zero());
}

TEST_CASE("classical schur expansions") {
    int cap = 8;
    SymFunc s2 = schur_to_p(Partition({2}), cap);
    CHECK(s2.coeff({2}) == Rat(1, 2));
    CHECK(s2.coeff({0, 1}) == Rat(1, 2));
    SymFunc s11 = schur_to_p(Partition({1, 1}), cap);
    CHECK(s11.coeff({2}) == Rat(1, 2));
    CHECK(s11.coeff({0, 1}) == Rat(-1, 2));
    CHECK(h_to_p(2, cap) == s2);
    CHECK(e_to_p(2, cap) == s11);
}

TEST_CASE("schur <-> power sum round trip") {
    for (int n = 1; n <= 10; ++n) {
        for (const auto& lam : partitions_of(n)) {
            auto e = p_to_schur(schur_to_p(lam, n));
            REQUIRE(e.size() == 1);
            CHECK(e.begin()->first == lam.parts);
            CHECK(e.begin()->second == Rat(1));
        }
    }
    // the larger sizes, sampled across shapes
    for (int n : {12, 13, 14}) {
        auto shapes = partitions_of(n);
        for (size_t i = 0; i < shapes.size(); i += 7) {
            auto e = p_to_schur(schur_to_p(shapes[i], n));
            REQUIRE(e.size() == 1);
            CHECK(e.begin()->first == shapes[i].parts);
            CHECK(e.begin()->second == Rat(1));
        }
    }
}

TEST_CASE("p_1^11 expansion hits the sign character with coefficient 1") {
    int cap = 11;
    SymFunc f = SymFunc::constant(Rat(1), cap);
    SymFunc p1 = SymFunc::p(1, cap);
    for (int i = 0; i < 11; ++i) f = f * p1;
    auto e = p_to_schur(f);
    std::vector<int> sign_shape(11, 1);
    CHECK(e.at(sign_shape) == Rat(1));
    // and every coefficient is the dimension of its shape
    for (const auto& [shape, c] : e) CHECK(c == Rat(specht_dim(Partition(shape))));
    CHECK(p_to_schur(SymFunc::zero(cap)).empty());
}

TEST_CASE("sign character normalization") {
    for (int n = 1; n <= 12; ++n) {
        SymFunc e = e_to_p(n, n);
        PMono ones(1, 0);
        ones[0] = static_cast<uint16_t>(n);
        CHECK(e.coeff(ones) == Rat(1) / Rat(factorial(n)));
    }
}

TEST_CASE("sign substitution is an involution and a homomorphism") {
    CHECK(SymFunc::p(2, 5).sign_substitute().coeff({0, 1}) == Rat(-1));
    SymFunc sq = SymFunc::p(1, 5) * SymFunc::p(1, 5);
    CHECK(sq.sign_substitute() == sq);
    SymFunc mixed = SymFunc::p(1, 5) * SymFunc::p(2, 5);
    CHECK(mixed.sign_substitute() == mixed);

    std::mt19937 rng(20240811);
    for (int t = 0; t < 200; ++t) {
        SymFunc a = random_symfunc(rng, 9, 5);
        SymFunc b = random_symfunc(rng, 9, 5);
        CHECK(a.sign_substitute().sign_substitute() == a);
        CHECK((a * b).sign_substitute() == a.sign_substitute() * b.sign_substitute());
        CHECK((a + b).sign_substitute() == a.sign_substitute() + b.sign_substitute());
    }
}

TEST_CASE("frobenius substitution") {
    CHECK(SymFunc::p(1, 4).frobenius(2) == SymFunc::p(2, 4));
    SymFunc p1sq = SymFunc::p(1, 8) * SymFunc::p(1, 8);
    CHECK(p1sq.frobenius(2) == SymFunc::p(2, 8) * SymFunc::p(2, 8));
    CHECK(schur_to_p(Partition({1}), 9).frobenius(3) == SymFunc::p(3, 9));
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937 rng(7);
    for (int t = 0; t < 300; ++t) {
        SymFunc a = random_symfunc(rng, 12, 4);
        SymFunc b = random_symfunc(rng, 12, 4);
        SymFunc c = random_symfunc(rng, 12, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("column times row expands by the Pieri rule") {
    int cap = 16;
    SymFunc col = e_to_p(10, cap);
    for (int m = 0; m <= 6; ++m) {
        auto e = p_to_schur(col * h_to_p(m, cap));
        for (const auto& [shape, c] : e) {
            CHECK(c == Rat(1));
            // shapes are hooks plus at most one extra column box:
            // (m, 1^10) or (m+1, 1^9)
            Partition p{shape};
            if (m == 0) {
                CHECK(shape == std::vector<int>(10, 1));
            } else {
                bool hook_m = (shape[0] == m && p.rows() == 11);
                bool hook_m1 = (shape[0] == m + 1 && p.rows() == 10);
                for (size_t i = 1; i < shape.size(); ++i) CHECK(shape[i] == 1);
                CHECK((hook_m || hook_m1));
            }
        }
    }
}

TEST_CASE("schur text rendering") {
    SymFunc f(4);
    f.axpy(Rat(-2), schur_to_p(Partition({2, 1, 1}), 4));
    f += schur_to_p(Partition({3}), 4);
    // note [2,1,1] sorts before [3]
    auto e = p_to_schur(f);
    CHECK(schur_text(e) == "-2*s[2,1,1] + s[3]");
    CHECK(schur_text({}) == "0");
    SymFunc g(3);
    g.axpy(Rat(1, 2), schur_to_p(Partition({1, 1, 1}), 3));
    CHECK(schur_text(p_to_schur(g)) == "1/2*s[1,1,1]");
}
