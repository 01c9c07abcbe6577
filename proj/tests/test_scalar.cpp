#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cyq/scalar.hpp"

using namespace cyq;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> e(0, 2), c(-4, 4), den(1, 3), nterms(0, 3);
    Scalar s;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) s.add_term({e(rng), e(rng)}, Rational(c(rng), den(rng)));
    return s;
}

std::vector<int> random_perm(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Independent oracle: bubble-sort the items to their targets, one adjacent swap at a time.
int bubble_sign(const std::vector<int>& perm, const std::vector<int>& deg) {
    std::vector<int> tgt = perm, d = deg;
    int s = 1;
    for (std::size_t i = 0; i < tgt.size(); ++i)
        for (std::size_t j = 0; j + 1 < tgt.size(); ++j)
            if (tgt[j] > tgt[j + 1]) {
                if ((d[j] & 1) && (d[j + 1] & 1)) s = -s;
                std::swap(tgt[j], tgt[j + 1]);
                std::swap(d[j], d[j + 1]);
            }
    return s;
}

}  // namespace

TEST(KoszulSign, SpecExamples) {
    EXPECT_EQ(koszul_sign({1, 0}, {1, 1}), -1);
    EXPECT_EQ(koszul_sign({0, 1, 2}, {3, 5, 7}), 1);
    EXPECT_EQ(koszul_sign({1, 2, 0}, {1, 2, 1}), -1);
    EXPECT_THROW(koszul_sign({0, 1}, {1}), MalformedInput);
    EXPECT_THROW(koszul_sign({0, 0}, {1, 1}), MalformedInput);
}

TEST(KoszulSign, MatchesAdjacentSwapOracle) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dd(-2, 3);
    for (int t = 0; t < 500; ++t) {
        int n = 1 + t % 7;
        auto p = random_perm(rng, n);
        std::vector<int> d(n);
        for (auto& x : d) x = dd(rng);
        EXPECT_EQ(koszul_sign(p, d), bubble_sign(p, d));
    }
}

TEST(KoszulSign, Cocycle) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dd(0, 3);
    for (int t = 0; t < 500; ++t) {
        int n = 1 + t % 8;
        auto pi = random_perm(rng, n), sigma = random_perm(rng, n);
        std::vector<int> d(n);
        for (auto& x : d) x = dd(rng);
        std::vector<int> comp(n), sd(n);
        for (int i = 0; i < n; ++i) {
            comp[i] = pi[sigma[i]];
            sd[sigma[i]] = d[i];
        }
        EXPECT_EQ(koszul_sign(comp, d), koszul_sign(pi, sd) * koszul_sign(sigma, d));
    }
}

TEST(Scalar, RingAxioms) {
    std::mt19937 rng(3);
    for (int t = 0; t < 300; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * Scalar(1), a);
        EXPECT_EQ(a + Scalar(), a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Scalar, CanonicalFormHasNoZeroTerms) {
    Scalar s = Scalar::h() - Scalar::h();
    EXPECT_TRUE(s.is_zero());
    EXPECT_TRUE(s.terms().empty());
}

TEST(Scalar, StringRoundTrip) {
    std::mt19937 rng(5);
    for (int t = 0; t < 300; ++t) {
        Scalar a = random_scalar(rng);
        std::string s = a.to_string();
        Scalar b = Scalar::parse(s);
        EXPECT_EQ(a, b);
        EXPECT_EQ(b.to_string(), s);
    }
    Scalar x = Scalar(3) + Scalar::h().scaled(2) - Scalar::hbar();
    EXPECT_EQ(x.to_string(), "3 + -1*hbar^1 + 2*h^1");
    EXPECT_THROW(Scalar::parse("3*q^2"), MalformedInput);
    EXPECT_THROW(Scalar::parse("1/0"), MalformedInput);
}

TEST(Scalar, ReduceModParams) {
    Scalar x = Scalar(3) + Scalar::h().scaled(2) - Scalar::hbar();
    EXPECT_EQ(reduce_mod_params(x), 3);
    EXPECT_EQ(reduce_mod_params(Scalar::h() * Scalar::hbar()), 0);
    EXPECT_EQ(reduce_mod_params(Scalar(Rational(5, 2))), Rational(5, 2));
}
