#pragma once

// Random reduced words, palindromes and C-palindromes for the property
// suites. Every generator takes the engine by reference so a run is fully
// determined by PALWIDTH_SEED.

#include "palwidth/palwidth.hpp"

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace palwidth::testing {

using Rng = std::mt19937_64;

inline std::uint64_t seed_from_env(std::uint64_t fallback = 20061018)
{
    if (const char* s = std::getenv("PALWIDTH_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
        }
    }
    return fallback;
}

inline Rng make_rng(std::uint64_t salt = 0) { return Rng(seed_from_env() ^ (salt * 0x9e3779b97f4a7c15ull)); }

inline SpecPtr spec_z_z2() { return make_spec({Factor::infinite_cyclic("A"), Factor::cyclic("B", 2)}); }
inline SpecPtr spec_z3_z2() { return make_spec({Factor::cyclic("A", 3), Factor::cyclic("B", 2)}); }
inline SpecPtr spec_z2_z2() { return make_spec({Factor::cyclic("A", 2), Factor::cyclic("B", 2)}); }
inline SpecPtr spec_klein_z2() { return WitnessFamily::canonical_case_two().spec(); }
inline SpecPtr spec_three_factors()
{
    return make_spec({Factor::cyclic("G1", 3), Factor::cyclic("G2", 2), Factor::infinite_cyclic("G3")});
}

/// Nontrivial elements used when sampling; infinite cyclic factors draw
/// from [-3, 3] so that anchors +-1 occur often.
inline std::vector<ElementValue> sample_elements(const Factor& f)
{
    return f.nontrivial_elements(f.kind() == FactorKind::InfiniteCyclic ? 3 : 0);
}

inline Syllable random_syllable(Rng& rng, const GroupSpec& spec, std::optional<FactorId> avoid)
{
    std::vector<std::size_t> choices;
    for (std::size_t i = 0; i < spec.size(); ++i)
        if (!avoid || factor_id(i) != *avoid)
            choices.push_back(i);
    std::size_t fi = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    auto elems = sample_elements(spec.factors()[fi]);
    ElementValue x = elems[std::uniform_int_distribution<std::size_t>(0, elems.size() - 1)(rng)];
    return {factor_id(fi), x};
}

inline Word random_word_of_length(Rng& rng, const SpecPtr& spec, std::size_t length)
{
    std::vector<Syllable> out;
    for (std::size_t i = 0; i < length; ++i)
        out.push_back(random_syllable(rng, *spec, out.empty() ? std::nullopt : std::optional(out.back().factor)));
    return Word::reduced(spec, std::move(out));
}

inline Word random_word(Rng& rng, const SpecPtr& spec, std::size_t max_len)
{
    return random_word_of_length(rng, spec, std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
}

/// h v reverse(h) with |h| <= (max_len - 1) / 2.
inline Word random_palindrome(Rng& rng, const SpecPtr& spec, std::size_t max_len)
{
    Word h = random_word(rng, spec, (max_len - 1) / 2);
    std::optional<FactorId> last;
    if (!h.empty())
        last = h[h.length() - 1].factor;
    return make_palindrome(h, random_syllable(rng, *spec, last));
}

/// C-palindrome over a two-factor spec. Mirror positions carry the same
/// C-member or two (independent) non-members; with small probability the
/// word has even length and avoids C entirely.
inline Word random_c_palindrome(Rng& rng, const SpecPtr& spec, const CSet& c, std::size_t max_len)
{
    const GroupSpec& g = *spec;
    auto pick = [&](FactorId f, bool member) -> std::optional<ElementValue> {
        std::vector<ElementValue> pool;
        for (ElementValue x : sample_elements(g.factor(f)))
            if (c.contains({f, x}) == member)
                pool.push_back(x);
        if (pool.empty())
            return std::nullopt;
        return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };
    const FactorId first = factor_id(std::uniform_int_distribution<std::size_t>(0, 1)(rng));
    auto factor_at = [&](std::size_t i) { return factor_id((index_of(first) + i) % 2); };

    if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) {
        std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
        std::vector<Syllable> out;
        for (std::size_t i = 0; i < len; ++i) {
            auto x = pick(factor_at(i), false);
            if (!x)
                break;
            out.push_back({factor_at(i), *x});
        }
        return Word::reduced(spec, std::move(out));
    }

    std::size_t half = std::uniform_int_distribution<std::size_t>(0, (max_len - 1) / 2)(rng);
    std::size_t len = 2 * half + 1;
    std::vector<Syllable> out(len);
    for (std::size_t i = 0; i < half; ++i) {
        FactorId f = factor_at(i);
        bool member = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
        auto x = pick(f, member);
        if (!x) {
            member = !member;
            x = pick(f, member);
        }
        out[i] = {f, *x};
        if (member) {
            out[len - 1 - i] = out[i];
        } else {
            out[len - 1 - i] = {f, *pick(f, false)};
        }
    }
    out[half] = {factor_at(half), sample_elements(g.factor(factor_at(half)))[std::uniform_int_distribution<std::size_t>(
                                      0, sample_elements(g.factor(factor_at(half))).size() - 1)(rng)]};
    return Word::reduced(spec, std::move(out));
}

/// Pairs (u, v) where half of the time v starts by cancelling a suffix of u.
inline std::pair<Word, Word> random_pair(Rng& rng, const SpecPtr& spec, std::size_t max_len)
{
    Word u = random_word(rng, spec, max_len);
    if (u.empty() || std::uniform_int_distribution<int>(0, 1)(rng) == 0)
        return {u, random_word(rng, spec, max_len)};
    std::size_t cut = std::uniform_int_distribution<std::size_t>(1, u.length())(rng);
    Word suffix = u.subword(u.length() - cut, cut);
    Word tail = random_word(rng, spec, max_len - cut);
    Word v = multiply(invert(suffix), tail);
    // Occasionally merge instead of cancelling the last syllable.
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0 && !v.empty())
        v = multiply(Word::reduced(spec, {random_syllable(rng, *spec, std::nullopt)}), v);
    return {u, v};
}

/// Product of k random palindromes.
inline Word random_palindrome_product(Rng& rng, const SpecPtr& spec, std::size_t k, std::size_t max_len)
{
    Word out(spec);
    for (std::size_t i = 0; i < k; ++i)
        out = multiply(out, random_palindrome(rng, spec, max_len));
    return out;
}

} // namespace palwidth::testing
