#pragma once

// Families of words on which the quasi-homomorphisms grow without bound:
//
//   g_n = v w v w^2 ... v w^n v
//
// with v = b a, w = b a^-1 for delta1, and v = b a b c, w = b f for delta2.

#include "palwidth/quasihom.hpp"
#include "palwidth/segments.hpp"
#include "palwidth/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace palwidth {

enum class WitnessCase { I, II };

class WitnessFamily {
public:
    /// `a` of order >= 3 (infinite included), `b` nontrivial in another factor.
    static WitnessFamily case_one(SpecPtr spec, Syllable a, Syllable b);
    /// `a`, `c`, `f` pairwise distinct involutions of one factor, `b`
    /// nontrivial in another factor.
    static WitnessFamily case_two(SpecPtr spec, Syllable a, Syllable c, Syllable f, Syllable b);

    /// Derives the parameters from classify_product: the verdict's witness
    /// element(s), the next nontrivial element for f, and the first
    /// nontrivial element of the other factor for b. Throws WrongCase when
    /// the spec does not fall into the requested case.
    static WitnessFamily from_spec(SpecPtr spec, WitnessCase which);

    /// Z * Z2 with a = A:1, b = B:1.
    static WitnessFamily canonical_case_one();
    /// (Klein four-group) * Z2 with a, c, f the three involutions, b = B:1.
    static WitnessFamily canonical_case_two();

    WitnessCase which() const noexcept { return case_; }
    const SpecPtr& spec() const noexcept { return spec_; }
    Syllable a() const noexcept { return a_; }
    Syllable b() const noexcept { return b_; }
    Syllable c() const noexcept { return c_; }
    Syllable f() const noexcept { return f_; }

    /// delta1 anchored at a (case I) or delta2 anchored at (a, c) (case II).
    Method method() const;

private:
    WitnessFamily() = default;

    WitnessCase case_ = WitnessCase::I;
    SpecPtr spec_;
    Syllable a_, b_, c_, f_;
};

/// Throw WrongCase on a family of the other case; n >= 1.
Word witness_case1(const WitnessFamily& family, std::int64_t n);
Word witness_case2(const WitnessFamily& family, std::int64_t n);
Word witness(const WitnessFamily& family, std::int64_t n);

/// Predicted anchor-segment counts of the case I witness: d_1 = ... = d_n = 1
/// and nothing else. (d*_k vanishes for k >= 2; d*_0 and d*_1 are not
/// predicted.)
CountMap expected_stats_case1(std::int64_t n);

struct WitnessRow {
    std::int64_t n = 0;
    std::size_t length = 0;
    std::int64_t delta = 0;
    std::int64_t k_lower = 0;
};

std::vector<WitnessRow> witness_table(const WitnessFamily& family, std::int64_t first,
                                      std::int64_t last);

} // namespace palwidth
