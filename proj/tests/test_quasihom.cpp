#include "palwidth/palwidth.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace palwidth;
using namespace palwidth::testing;

namespace {

Word w(const SpecPtr& spec, std::string_view text) { return parse_word(text, spec); }
Syllable s(const SpecPtr& spec, std::string_view text) { return parse_syllable(text, *spec); }

// Smallest k >= 1 with delta <= slope*k - defect, by counting up.
std::int64_t k_by_search(std::int64_t delta, std::int64_t slope, std::int64_t defect)
{
    std::int64_t k = 1;
    while (delta > slope * k - defect)
        ++k;
    return k;
}

} // namespace

TEST(Delta1, Examples)
{
    auto spec = spec_z_z2();
    Syllable a = s(spec, "A:1");
    EXPECT_EQ(delta1(w(spec, "B:1 A:1 B:1 A:-1 B:1 A:1"), a), 1);
    EXPECT_EQ(delta1(Word(spec), a), 0);
    // t = {0:1, 1:-1, 2:1}
    EXPECT_EQ(delta1(w(spec, "A:1 B:1 A:1 B:1 A:2 B:1 A:-1 B:1 A:1 B:1 A:-1"), a), 3);
}

TEST(Delta1, RejectsInvolutionAnchor)
{
    auto spec = spec_z2_z2();
    try {
        delta1(Word(spec), s(spec, "A:1"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::AnchorOrderTooSmall);
    }
    auto z3 = spec_z3_z2();
    EXPECT_NO_THROW(delta1(Word(z3), s(z3, "A:1")));
}

TEST(Delta1, NonnegativeAndInversionInvariant)
{
    auto rng = make_rng(31);
    auto spec = spec_z_z2();
    Syllable a = s(spec, "A:1");
    for (int i = 0; i < 2000; ++i) {
        Word g = random_word(rng, spec, 60);
        std::int64_t d = delta1(g, a);
        EXPECT_GE(d, 0);
        EXPECT_EQ(d, delta1(invert(g), a));
    }
}

TEST(Delta2, Examples)
{
    auto fam = WitnessFamily::canonical_case_two();
    auto spec = fam.spec();
    EXPECT_EQ(delta2(w(spec, "B:1 K:a B:1 K:c B:1 K:f B:1 K:a B:1 K:c"), fam.a(), fam.c()), 1);
    EXPECT_EQ(delta2(Word(spec), fam.a(), fam.c()), 0);
    EXPECT_THROW(delta2(Word(spec), fam.a(), fam.b()), Error);
}

TEST(Delta2, NegatesUnderInversion)
{
    auto rng = make_rng(32);
    auto fam = WitnessFamily::canonical_case_two();
    for (int i = 0; i < 2000; ++i) {
        Word g = random_word(rng, fam.spec(), 60);
        EXPECT_EQ(delta2(invert(g), fam.a(), fam.c()), -delta2(g, fam.a(), fam.c()));
    }
}

TEST(LowerBound, KLowerArithmetic)
{
    Method d1 = Delta1Method{};
    Method d2 = Delta2Method{};
    EXPECT_EQ(k_lower_for(d1, 1), 1);
    EXPECT_EQ(k_lower_for(d1, 14), 3);
    EXPECT_EQ(k_lower_for(d1, 2), 1);
    EXPECT_EQ(k_lower_for(d2, 0), 1);
    EXPECT_EQ(k_lower_for(d2, 9), 3);
    EXPECT_EQ(k_lower_for(d2, -20), 1);
    for (std::int64_t delta = -30; delta <= 300; ++delta) {
        EXPECT_EQ(k_lower_for(d1, delta), k_by_search(delta, 11, 9)) << delta;
        EXPECT_EQ(k_lower_for(d2, delta), k_by_search(delta, 8, 8)) << delta;
    }
    EXPECT_EQ(constants(d1).per_palindrome, 2);
    EXPECT_EQ(constants(d1).defect, 9);
    EXPECT_EQ(constants(d2).per_palindrome, 0);
    EXPECT_EQ(constants(d2).defect, 8);
}

TEST(LowerBound, Certificates)
{
    auto fam = WitnessFamily::canonical_case_one();
    Word g = witness(fam, 3);
    auto cert = lower_bound_delta1(g, fam.a());
    EXPECT_EQ(cert.delta_value, delta1(g, fam.a()));
    EXPECT_EQ(cert.k_lower, k_lower_for(fam.method(), cert.delta_value));
    EXPECT_EQ(cert.word, g);
    EXPECT_EQ(cert.chain, "Δ₁(g)=4 ≤ 11k−9 ⇒ k ≥ 2");

    auto fam2 = WitnessFamily::canonical_case_two();
    auto cert2 = lower_bound(witness(fam2, 9), fam2.method());
    EXPECT_EQ(cert2.delta_value, 9);
    EXPECT_EQ(cert2.k_lower, 3);
    EXPECT_EQ(cert2.chain, "Δ₂(g)=9 ≤ 8k−8 ⇒ k ≥ 3");
    EXPECT_EQ(method_name(fam2.method()), "delta2");
    EXPECT_EQ(method_anchors(fam2.method()), (std::vector<Syllable>{fam2.a(), fam2.c()}));

    try {
        lower_bound(Word(fam.spec()), fam.method());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EmptyWord);
    }
}

TEST(LowerBound, PalindromesCertifyOne)
{
    auto rng = make_rng(33);
    auto fam = WitnessFamily::canonical_case_one();
    for (int i = 0; i < 500; ++i) {
        Word p = random_palindrome(rng, fam.spec(), 41);
        EXPECT_EQ(lower_bound(p, fam.method()).k_lower, 1);
    }
}

TEST(DefectReport, EmptyPair)
{
    auto fam = WitnessFamily::canonical_case_one();
    auto r = quasi_defect_report(Word(fam.spec()), Word(fam.spec()), fam.method());
    EXPECT_TRUE(r.bound_holds);
    EXPECT_EQ(r.defect_count(), 0u);
    EXPECT_EQ(r.lhs, 0);
    EXPECT_EQ(r.rhs, 9);
}

TEST(DefectReport, PositionsMatchDirectComparison)
{
    auto rng = make_rng(34);
    auto fam = WitnessFamily::canonical_case_one();
    Syllable a = fam.a();
    for (int i = 0; i < 1000; ++i) {
        auto [u, v] = random_pair(rng, fam.spec(), 40);
        auto r = quasi_defect_report(u, v, fam.method());
        CountMap tu = t_k_map(u, a), tv = t_k_map(v, a), tuv = t_k_map(u * v, a);
        std::set<std::size_t> keys;
        for (const CountMap* m : {&tu, &tv, &tuv})
            for (auto [k, n] : *m)
                keys.insert(k);
        std::vector<std::size_t> expected;
        auto at = [](const CountMap& m, std::size_t k) { return m.contains(k) ? m.at(k) : 0; };
        for (std::size_t k : keys)
            if (at(tuv, k) != at(tu, k) + at(tv, k))
                expected.push_back(k);
        EXPECT_EQ(r.k_positions, expected);
        EXPECT_EQ(r.lhs, delta1(u * v, a));
        EXPECT_EQ(r.rhs, delta1(u, a) + delta1(v, a) + 9);
    }
    auto fam2 = WitnessFamily::canonical_case_two();
    for (int i = 0; i < 1000; ++i) {
        auto [u, v] = random_pair(rng, fam2.spec(), 40);
        auto r = quasi_defect_report(u, v, fam2.method());
        std::size_t unordered = 0;
        for (auto [m, n] : r.pair_positions)
            unordered += m < n;
        EXPECT_EQ(r.unordered_pairs, unordered);
        EXPECT_TRUE(std::is_sorted(r.pair_positions.begin(), r.pair_positions.end()));
    }
}

TEST(Bounds, PalindromesAndProducts)
{
    auto rng = make_rng(35);
    auto f1 = WitnessFamily::canonical_case_one();
    auto f2 = WitnessFamily::canonical_case_two();
    for (int i = 0; i < 1000; ++i) {
        EXPECT_LE(evaluate(random_palindrome(rng, f1.spec(), 41), f1.method()), 2);
        EXPECT_EQ(evaluate(random_palindrome(rng, f2.spec(), 41), f2.method()), 0);
        std::int64_t k = 1 + i % 5;
        EXPECT_LE(evaluate(random_palindrome_product(rng, f1.spec(), k, 21), f1.method()), 11 * k - 9);
        EXPECT_LE(evaluate(random_palindrome_product(rng, f2.spec(), k, 21), f2.method()), 8 * k - 8);
    }
}

TEST(Bounds, CPalindromes)
{
    auto rng = make_rng(36);
    auto f1 = WitnessFamily::canonical_case_one();
    auto f2 = WitnessFamily::canonical_case_two();
    CSet c1(*f1.spec(), {f1.a(), f1.spec()->inverse(f1.a())});
    CSet c2(*f2.spec(), {f2.a(), f2.c()});
    for (int i = 0; i < 1000; ++i) {
        Word g1 = random_c_palindrome(rng, f1.spec(), c1, 41);
        ASSERT_TRUE(is_c_palindrome(g1, c1));
        EXPECT_LE(evaluate(g1, f1.method()), 2) << format_word(g1);
        Word g2 = random_c_palindrome(rng, f2.spec(), c2, 41);
        ASSERT_TRUE(is_c_palindrome(g2, c2));
        EXPECT_EQ(evaluate(g2, f2.method()), 0) << format_word(g2);
    }
}
