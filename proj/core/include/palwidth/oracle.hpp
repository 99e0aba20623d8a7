#pragma once

// Exact palindromic length by bounded exhaustive search.
//
// The search space is the finite set of palindromes with at most
// `max_factor_length` syllables (exponents of infinite cyclic factors capped
// by `exponent_bound`). Within that set the oracle finds the least k with
// g = p_1 ... p_k, k <= max_k, and reports the lexicographically least such
// factorization (palindromes ordered by length, then syllable by syllable).

#include "palwidth/quasihom.hpp"
#include "palwidth/word.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace palwidth {

struct SearchBudget {
    std::size_t max_factor_length = 9;
    std::size_t max_k = 4;
    std::int64_t exponent_bound = 4;

    /// Throws InvalidBudget unless all fields are positive.
    void validate() const;
};

struct ExactWithinBudget {
    std::size_t k = 0;
    std::vector<Word> factors;
};

struct AtLeast {
    std::size_t k = 0;
};

struct OracleResult {
    std::variant<ExactWithinBudget, AtLeast> verdict;
    SearchBudget budget;

    bool exact() const noexcept { return std::holds_alternative<ExactWithinBudget>(verdict); }
    /// The exact length, or the certified lower bound.
    std::size_t k() const noexcept;
};

/// Reduced words of length <= max_len, ordered by length and then
/// lexicographically by (factor, element) in canonical element order.
std::vector<Word> enumerate_reduced_words(const SpecPtr& spec, std::size_t max_len,
                                          std::int64_t exponent_bound);

/// Every palindrome h v reverse(h) with at most max_len syllables, each once,
/// ordered by length and then lexicographically.
std::vector<Word> enumerate_palindromes(const SpecPtr& spec, std::size_t max_len,
                                        std::int64_t exponent_bound);

/// Reusable search state for one spec and budget. Failed (residual, depth)
/// pairs are remembered across queries.
class PalindromeOracle {
public:
    PalindromeOracle(SpecPtr spec, SearchBudget budget);
    ~PalindromeOracle();
    PalindromeOracle(PalindromeOracle&&) noexcept;
    PalindromeOracle& operator=(PalindromeOracle&&) noexcept;

    /// Throws BudgetTooSmall when g is longer than max_k * max_factor_length.
    OracleResult solve(const Word& g);

    const std::vector<Word>& palindromes() const noexcept;
    const SearchBudget& budget() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

OracleResult palindromic_length(const Word& g, const SearchBudget& budget);

/// Free product of two groups of order 2: the odd-length words are
/// palindromes, and (xy)^k = (xy)^(k-1) x * y. Returns at most two
/// palindromes (none for the identity). Throws WrongSpec on other specs.
std::vector<Word> decompose_z2z2(const Word& g);

struct Z2Z2Report {
    std::size_t max_len = 0;
    std::size_t words_checked = 0;
    std::size_t max_observed = 0;
    std::optional<Word> max_witness;
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks every reduced word of length <= max_len over Z2 * Z2 against
/// decompose_z2z2 and the oracle.
Z2Z2Report verify_z2z2_width(std::size_t max_len);

struct CrosscheckRow {
    Word word;
    LowerBoundCertificate certificate;
    OracleResult oracle;
    bool violation = false;
};

struct CrosscheckReport {
    std::vector<CrosscheckRow> rows;
    std::size_t violations = 0;
};

/// Flags every word whose certified lower bound exceeds its exact length.
CrosscheckReport crosscheck_bounds(std::span<const Word> words, const Method& method,
                                   const SearchBudget& budget);

} // namespace palwidth
