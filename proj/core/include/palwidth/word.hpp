#pragma once

// Reduced words of a free product and the palindrome predicates on them.

#include "palwidth/group.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace palwidth {

/// Normal form of an element of a free product: nontrivial syllables, no two
/// adjacent ones in the same factor. The empty word is the identity.
class Word {
public:
    explicit Word(SpecPtr spec);

    /// Reduces an arbitrary syllable sequence (merging same-factor neighbours
    /// and dropping identities, cascading). Elements are checked against the
    /// spec.
    static Word normalize(SpecPtr spec, std::span<const Syllable> syllables);

    /// Wraps a sequence that must already be reduced; throws
    /// NotReducedJunction otherwise.
    static Word reduced(SpecPtr spec, std::vector<Syllable> syllables);

    const GroupSpec& spec() const noexcept { return *spec_; }
    const SpecPtr& spec_ptr() const noexcept { return spec_; }

    std::span<const Syllable> syllables() const noexcept { return syllables_; }
    std::size_t length() const noexcept { return syllables_.size(); }
    bool empty() const noexcept { return syllables_.empty(); }
    const Syllable& operator[](std::size_t i) const noexcept { return syllables_[i]; }

    /// Prefix/infix of the syllable sequence; always reduced.
    Word subword(std::size_t start, std::size_t count) const;

    friend bool operator==(const Word& u, const Word& v);

private:
    Word(SpecPtr spec, std::vector<Syllable> syllables);

    SpecPtr spec_;
    std::vector<Syllable> syllables_;
};

/// Word text format: syllables "<factor>:<element>" separated by single
/// spaces; the empty word is "1".
Word parse_word(std::string_view text, SpecPtr spec);
std::string format_word(const Word& g);

/// A single syllable "<factor>:<element>"; must be nontrivial.
Syllable parse_syllable(std::string_view text, const GroupSpec& spec);
std::string format_syllable(const GroupSpec& spec, Syllable s);

Word multiply(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }
Word invert(const Word& g);
Word reverse(const Word& g);
bool is_palindrome(const Word& g);

/// h v reverse(h). Throws NotReducedJunction when v lies in the factor of
/// the last syllable of h.
Word make_palindrome(const Word& h, Syllable v);

/// Finite set C of nontrivial syllables.
class CSet {
public:
    CSet() = default;
    CSet(const GroupSpec& spec, std::vector<Syllable> members);

    bool contains(Syllable s) const { return members_.contains(s); }
    std::size_t size() const noexcept { return members_.size(); }
    const std::set<Syllable>& members() const noexcept { return members_; }

    /// Every nontrivial element of every factor (infinite cyclic factors
    /// truncated to |exponent| <= exponent_bound).
    static CSet everything(const GroupSpec& spec, std::int64_t exponent_bound);

private:
    std::set<Syllable> members_;
};

/// A letter of the projected word: the syllable when it lies in C,
/// std::nullopt for the mark standing for every other syllable.
using XLetter = std::optional<Syllable>;

std::vector<XLetter> alpha_project(const Word& g, const CSet& c);
bool is_c_palindrome(const Word& g, const CSet& c);

/// Word over the two-factor decomposition A * B where B is the pivot factor
/// and A the free product of the remaining factors. A-syllables are
/// composite: nonempty reduced words containing no pivot syllable.
struct RegroupedWord {
    using Letter = std::variant<Word, Syllable>;

    SpecPtr spec;
    FactorId pivot{};
    std::vector<Letter> letters;

    std::size_t length() const noexcept { return letters.size(); }
    friend bool operator==(const RegroupedWord&, const RegroupedWord&) = default;
};

/// Requires a spec with at least three factors; throws UnknownFactor for a
/// bad pivot and WrongSpec for a two-factor spec.
RegroupedWord regroup(const Word& g, FactorId pivot);
Word flatten(const RegroupedWord& g);
RegroupedWord reverse(const RegroupedWord& g);
bool is_palindrome(const RegroupedWord& g);

} // namespace palwidth
