#include "palwidth/palwidth.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace palwidth;
using namespace palwidth::testing;

namespace {

Word w(const SpecPtr& spec, std::string_view text) { return parse_word(text, spec); }

// Concatenation v w v w^2 ... v w^n v built syllable by syllable.
std::vector<Syllable> naive_witness(std::vector<Syllable> v, std::vector<Syllable> wv, std::int64_t n)
{
    std::vector<Syllable> out;
    for (std::int64_t i = 1; i <= n; ++i) {
        out.insert(out.end(), v.begin(), v.end());
        for (std::int64_t j = 0; j < i; ++j)
            out.insert(out.end(), wv.begin(), wv.end());
    }
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::int64_t expected_delta1(std::int64_t n)
{
    std::int64_t m = n / 4;
    switch (n % 4) {
    case 0: return 4 * m - 1;
    case 1: return 4 * m + 1;
    case 2: return 4 * m + 2;
    default: return 4 * m + 4;
    }
}

} // namespace

TEST(WitnessCaseOne, FirstWord)
{
    auto fam = WitnessFamily::canonical_case_one();
    Word g1 = witness_case1(fam, 1);
    EXPECT_EQ(g1, w(fam.spec(), "B:1 A:1 B:1 A:-1 B:1 A:1"));
    EXPECT_EQ(g1.length(), 6u);
}

TEST(WitnessCaseOne, LengthAndConstruction)
{
    auto fam = WitnessFamily::canonical_case_one();
    Syllable a = fam.a(), b = fam.b(), ai = fam.spec()->inverse(a);
    for (std::int64_t n = 1; n <= 50; ++n) {
        Word g = witness_case1(fam, n);
        EXPECT_EQ(static_cast<std::int64_t>(g.length()), n * n + 3 * n + 2);
        auto raw = naive_witness({b, a}, {b, ai}, n);
        EXPECT_EQ(std::vector<Syllable>(g.syllables().begin(), g.syllables().end()), raw);
    }
}

TEST(WitnessCaseOne, StatsMatchPrediction)
{
    auto fam = WitnessFamily::canonical_case_one();
    EXPECT_EQ(expected_stats_case1(3), (CountMap{{1, 1}, {2, 1}, {3, 1}}));
    EXPECT_EQ(expected_stats_case1(1), (CountMap{{1, 1}}));
    for (std::int64_t n = 1; n <= 50; ++n) {
        auto st = stats_case1(witness_case1(fam, n), fam.a());
        EXPECT_EQ(st.d, expected_stats_case1(n)) << n;
        EXPECT_FALSE(st.d.contains(0));
        for (auto [k, c] : st.d_star)
            EXPECT_LT(k, 2u) << "n=" << n << " k=" << k;
    }
}

TEST(WitnessCaseOne, Delta1Sequence)
{
    auto fam = WitnessFamily::canonical_case_one();
    for (std::int64_t n = 1; n <= 50; ++n) {
        std::int64_t d = delta1(witness_case1(fam, n), fam.a());
        EXPECT_GE(d, n - 1);
        EXPECT_EQ(d, expected_delta1(n)) << n;
    }
}

TEST(WitnessCaseTwo, FirstWordAndDelta)
{
    auto fam = WitnessFamily::canonical_case_two();
    Word g1 = witness_case2(fam, 1);
    EXPECT_EQ(g1, w(fam.spec(), "B:1 K:a B:1 K:c B:1 K:f B:1 K:a B:1 K:c"));
    EXPECT_EQ(g1.length(), 10u);
    for (std::int64_t n = 1; n <= 50; ++n) {
        Word g = witness_case2(fam, n);
        EXPECT_EQ(delta2(g, fam.a(), fam.c()), n);
        auto raw = naive_witness({fam.b(), fam.a(), fam.b(), fam.c()}, {fam.b(), fam.f()}, n);
        EXPECT_EQ(std::vector<Syllable>(g.syllables().begin(), g.syllables().end()), raw);
    }
}

TEST(WitnessTable, CaseTwoIsMonotoneAndCaseOneHasAFloor)
{
    auto rows2 = witness_table(WitnessFamily::canonical_case_two(), 1, 50);
    ASSERT_EQ(rows2.size(), 50u);
    for (std::size_t i = 1; i < rows2.size(); ++i)
        EXPECT_GE(rows2[i].k_lower, rows2[i - 1].k_lower);
    EXPECT_EQ(rows2.back().k_lower, 8);

    auto rows1 = witness_table(WitnessFamily::canonical_case_one(), 1, 50);
    for (const WitnessRow& r : rows1)
        EXPECT_GE(r.k_lower, (r.n + 8 + 10) / 11);
    EXPECT_EQ(rows1.back().k_lower, 6);
    // The table dips where delta1 drops by one.
    EXPECT_EQ(rows1[34].k_lower, 5);
    EXPECT_EQ(rows1[35].k_lower, 4);
}

TEST(WitnessFamily, FromSpec)
{
    auto z3 = spec_z3_z2();
    auto f = WitnessFamily::from_spec(z3, WitnessCase::I);
    EXPECT_EQ(f.a(), (Syllable{factor_id(0), 1}));
    EXPECT_EQ(f.b(), (Syllable{factor_id(1), 1}));
    auto zz = WitnessFamily::from_spec(spec_z_z2(), WitnessCase::I);
    EXPECT_EQ(zz.a(), (Syllable{factor_id(0), 1}));

    auto klein = WitnessFamily::from_spec(spec_klein_z2(), WitnessCase::II);
    auto canon = WitnessFamily::canonical_case_two();
    EXPECT_EQ(klein.a(), canon.a());
    EXPECT_EQ(klein.c(), canon.c());
    EXPECT_EQ(klein.f(), canon.f());
    EXPECT_EQ(klein.b(), canon.b());

    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InvalidArgument;
    };
    EXPECT_EQ(code([&] { WitnessFamily::from_spec(z3, WitnessCase::II); }), Errc::WrongCase);
    EXPECT_EQ(code([&] { WitnessFamily::from_spec(spec_z2_z2(), WitnessCase::I); }), Errc::WrongCase);
    EXPECT_EQ(code([&] { witness_case2(f, 1); }), Errc::WrongCase);
    EXPECT_EQ(code([&] { witness_case1(canon, 1); }), Errc::WrongCase);
    EXPECT_EQ(code([&] { witness(f, 0); }), Errc::InvalidArgument);
    EXPECT_EQ(code([&] { WitnessFamily::case_one(spec_z2_z2(), {factor_id(0), 1}, {factor_id(1), 1}); }),
              Errc::WrongCase);
}
