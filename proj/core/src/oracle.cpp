#include "palwidth/oracle.hpp"

#include "palwidth/error.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace palwidth {

void SearchBudget::validate() const
{
    if (max_factor_length == 0 || max_k == 0 || exponent_bound <= 0)
        throw Error(Errc::InvalidBudget, "budget fields must all be positive");
}

std::size_t OracleResult::k() const noexcept
{
    if (const auto* e = std::get_if<ExactWithinBudget>(&verdict))
        return e->k;
    return std::get<AtLeast>(verdict).k;
}

namespace {

std::vector<Syllable> alphabet(const GroupSpec& spec, std::int64_t exponent_bound)
{
    std::vector<Syllable> out;
    for (std::size_t i = 0; i < spec.size(); ++i)
        for (ElementValue x : spec.factors()[i].nontrivial_elements(exponent_bound))
            out.push_back({factor_id(i), x});
    return out;
}

void words_of_length(const std::vector<Syllable>& letters, std::size_t length,
                     std::vector<Syllable>& prefix, std::vector<std::vector<Syllable>>& out)
{
    if (prefix.size() == length) {
        out.push_back(prefix);
        return;
    }
    for (Syllable s : letters) {
        if (!prefix.empty() && prefix.back().factor == s.factor)
            continue;
        prefix.push_back(s);
        words_of_length(letters, length, prefix, out);
        prefix.pop_back();
    }
}

struct SyllablesHash {
    std::size_t operator()(const std::vector<Syllable>& w) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (Syllable s : w) {
            h ^= index_of(s.factor) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h ^= static_cast<std::size_t>(s.value) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::vector<Syllable> to_vector(const Word& w)
{
    return {w.syllables().begin(), w.syllables().end()};
}

} // namespace

std::vector<Word> enumerate_reduced_words(const SpecPtr& spec, std::size_t max_len,
                                          std::int64_t exponent_bound)
{
    const auto letters = alphabet(*spec, exponent_bound);
    std::vector<Word> out;
    std::vector<Syllable> prefix;
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<std::vector<Syllable>> raw;
        words_of_length(letters, len, prefix, raw);
        for (auto& w : raw)
            out.push_back(Word::reduced(spec, std::move(w)));
    }
    return out;
}

std::vector<Word> enumerate_palindromes(const SpecPtr& spec, std::size_t max_len,
                                        std::int64_t exponent_bound)
{
    std::vector<Word> out;
    if (max_len == 0)
        return out;
    const auto letters = alphabet(*spec, exponent_bound);
    std::vector<Syllable> prefix;
    for (std::size_t half = 0; 2 * half + 1 <= max_len; ++half) {
        std::vector<std::vector<Syllable>> hs;
        words_of_length(letters, half, prefix, hs);
        for (const auto& h : hs) {
            Word hw = Word::reduced(spec, h);
            for (Syllable v : letters)
                if (h.empty() || h.back().factor != v.factor)
                    out.push_back(make_palindrome(hw, v));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Search

struct PalindromeOracle::Impl {
    SpecPtr spec;
    SearchBudget budget;
    std::vector<Word> palindromes;
    std::vector<Word> inverses;
    std::unordered_map<std::vector<Syllable>, std::size_t, SyllablesHash> index;
    // failed[j] holds residuals known not to be a product of j palindromes.
    std::vector<std::unordered_set<std::vector<Syllable>, SyllablesHash>> failed;

    bool search(const Word& residual, std::size_t remaining, std::vector<std::size_t>& chosen)
    {
        const std::size_t limit = budget.max_factor_length;
        if (residual.length() > remaining * limit)
            return false;
        auto key = to_vector(residual);
        if (remaining == 1) {
            auto it = index.find(key);
            if (it == index.end())
                return false;
            chosen.push_back(it->second);
            return true;
        }
        if (failed[remaining].contains(key))
            return false;
        for (std::size_t i = 0; i < palindromes.size(); ++i) {
            Word next = multiply(inverses[i], residual);
            if (next.length() > (remaining - 1) * limit)
                continue;
            chosen.push_back(i);
            if (search(next, remaining - 1, chosen))
                return true;
            chosen.pop_back();
        }
        failed[remaining].insert(std::move(key));
        return false;
    }
};

PalindromeOracle::PalindromeOracle(SpecPtr spec, SearchBudget budget)
    : impl_(std::make_unique<Impl>())
{
    budget.validate();
    impl_->spec = std::move(spec);
    impl_->budget = budget;
    impl_->palindromes =
        enumerate_palindromes(impl_->spec, budget.max_factor_length, budget.exponent_bound);
    for (std::size_t i = 0; i < impl_->palindromes.size(); ++i) {
        impl_->inverses.push_back(invert(impl_->palindromes[i]));
        impl_->index.emplace(to_vector(impl_->palindromes[i]), i);
    }
    impl_->failed.resize(budget.max_k + 1);
}

PalindromeOracle::~PalindromeOracle() = default;
PalindromeOracle::PalindromeOracle(PalindromeOracle&&) noexcept = default;
PalindromeOracle& PalindromeOracle::operator=(PalindromeOracle&&) noexcept = default;

const std::vector<Word>& PalindromeOracle::palindromes() const noexcept { return impl_->palindromes; }
const SearchBudget& PalindromeOracle::budget() const noexcept { return impl_->budget; }

OracleResult PalindromeOracle::solve(const Word& g)
{
    const SearchBudget& budget = impl_->budget;
    if (g.spec_ptr() != impl_->spec && !(g.spec() == *impl_->spec))
        throw Error(Errc::SpecMismatch, "word and oracle belong to different free products");
    if (g.empty())
        return {ExactWithinBudget{0, {}}, budget};
    if (g.length() > budget.max_k * budget.max_factor_length)
        throw Error(Errc::BudgetTooSmall,
                    "word of length " + std::to_string(g.length()) + " exceeds max_k * max_factor_length = " +
                        std::to_string(budget.max_k * budget.max_factor_length));
    for (std::size_t k = 1; k <= budget.max_k; ++k) {
        std::vector<std::size_t> chosen;
        if (impl_->search(g, k, chosen)) {
            ExactWithinBudget exact{k, {}};
            for (std::size_t i : chosen)
                exact.factors.push_back(impl_->palindromes[i]);
            return {std::move(exact), budget};
        }
    }
    return {AtLeast{budget.max_k + 1}, budget};
}

OracleResult palindromic_length(const Word& g, const SearchBudget& budget)
{
    budget.validate();
    if (g.empty())
        return {ExactWithinBudget{0, {}}, budget};
    PalindromeOracle oracle(g.spec_ptr(), budget);
    return oracle.solve(g);
}

// ---------------------------------------------------------------------------
// Z2 * Z2

std::vector<Word> decompose_z2z2(const Word& g)
{
    const GroupSpec& spec = g.spec();
    if (spec.size() != 2 || spec.factors()[0].size() != 2u || spec.factors()[1].size() != 2u)
        throw Error(Errc::WrongSpec, "decompose_z2z2 needs a free product of two groups of order 2");
    if (g.empty())
        return {};
    if (g.length() % 2 == 1)
        return {g};
    return {g.subword(0, g.length() - 1), g.subword(g.length() - 1, 1)};
}

Z2Z2Report verify_z2z2_width(std::size_t max_len)
{
    auto spec = make_spec({Factor::cyclic("A", 2), Factor::cyclic("B", 2)});
    Z2Z2Report report;
    report.max_len = max_len;
    SearchBudget budget{std::max<std::size_t>(max_len, 1), 3, 1};
    PalindromeOracle oracle(spec, budget);

    for (const Word& g : enumerate_reduced_words(spec, max_len, 1)) {
        ++report.words_checked;
        const std::string text = format_word(g);
        auto parts = decompose_z2z2(g);
        Word product(spec);
        for (const Word& p : parts) {
            if (!is_palindrome(p))
                report.violations.push_back(text + ": factor " + format_word(p) + " is not a palindrome");
            product = multiply(product, p);
        }
        if (!(product == g))
            report.violations.push_back(text + ": decomposition multiplies to " + format_word(product));
        if (parts.size() > 2)
            report.violations.push_back(text + ": decomposition uses " + std::to_string(parts.size()) +
                                        " palindromes");
        OracleResult r = oracle.solve(g);
        if (!r.exact() || r.k() != parts.size())
            report.violations.push_back(text + ": oracle reports " + std::to_string(r.k()) +
                                        (r.exact() ? "" : "+") + ", decomposition uses " +
                                        std::to_string(parts.size()));
        if (parts.size() > report.max_observed) {
            report.max_observed = parts.size();
            report.max_witness = g;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Cross-validation

CrosscheckReport crosscheck_bounds(std::span<const Word> words, const Method& method,
                                   const SearchBudget& budget)
{
    CrosscheckReport report;
    if (words.empty())
        return report;
    PalindromeOracle oracle(words.front().spec_ptr(), budget);
    for (const Word& g : words) {
        LowerBoundCertificate cert = lower_bound(g, method);
        OracleResult result = oracle.solve(g);
        bool violation = result.exact() && static_cast<std::size_t>(cert.k_lower) > result.k();
        report.violations += violation ? 1 : 0;
        report.rows.push_back({g, std::move(cert), std::move(result), violation});
    }
    return report;
}

} // namespace palwidth
