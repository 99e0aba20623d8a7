#include "palwidth/word.hpp"

#include "palwidth/error.hpp"

#include <algorithm>
#include <cassert>

namespace palwidth {

namespace {

void push_reduced(const GroupSpec& spec, std::vector<Syllable>& stack, Syllable s)
{
    const Factor& f = spec.factor(s.factor);
    if (f.is_identity(s.value))
        return;
    if (!stack.empty() && stack.back().factor == s.factor) {
        ElementValue merged = f.multiply(stack.back().value, s.value);
        if (f.is_identity(merged))
            stack.pop_back();
        else
            stack.back().value = merged;
        return;
    }
    stack.push_back(s);
}

void require_same_spec(const Word& u, const Word& v)
{
    if (u.spec_ptr() != v.spec_ptr() && !(u.spec() == v.spec()))
        throw Error(Errc::SpecMismatch, "words belong to different free products");
}

} // namespace

Word::Word(SpecPtr spec) : spec_(std::move(spec)) {}

Word::Word(SpecPtr spec, std::vector<Syllable> syllables)
    : spec_(std::move(spec)), syllables_(std::move(syllables))
{
}

Word Word::normalize(SpecPtr spec, std::span<const Syllable> syllables)
{
    std::vector<Syllable> stack;
    stack.reserve(syllables.size());
    for (Syllable s : syllables) {
        const Factor& f = spec->factor(s.factor);
        if (!f.contains(s.value))
            throw Error(Errc::UnknownElement,
                        "factor " + f.name() + " has no element " + std::to_string(s.value));
        push_reduced(*spec, stack, s);
    }
    return Word(std::move(spec), std::move(stack));
}

Word Word::reduced(SpecPtr spec, std::vector<Syllable> syllables)
{
    for (std::size_t i = 0; i < syllables.size(); ++i) {
        spec->check_syllable(syllables[i]);
        if (i > 0 && syllables[i - 1].factor == syllables[i].factor)
            throw Error(Errc::NotReducedJunction,
                        "syllables " + std::to_string(i - 1) + " and " + std::to_string(i) +
                            " lie in the same factor");
    }
    return Word(std::move(spec), std::move(syllables));
}

Word Word::subword(std::size_t start, std::size_t count) const
{
    assert(start + count <= syllables_.size());
    auto first = syllables_.begin() + static_cast<std::ptrdiff_t>(start);
    return Word(spec_, std::vector<Syllable>(first, first + static_cast<std::ptrdiff_t>(count)));
}

bool operator==(const Word& u, const Word& v)
{
    if (u.syllables_ != v.syllables_)
        return false;
    return u.spec_ == v.spec_ || *u.spec_ == *v.spec_;
}

// ---------------------------------------------------------------------------
// Text format

Syllable parse_syllable(std::string_view text, const GroupSpec& spec)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error(Errc::SyntaxError, "expected '<factor>:<element>', got '" + std::string(text) + "'", 0);
    FactorId id = spec.find(text.substr(0, colon));
    ElementValue x;
    try {
        x = spec.factor(id).parse_element(text.substr(colon + 1));
    } catch (const Error& e) {
        if (e.code() == Errc::SyntaxError)
            throw Error(Errc::SyntaxError, "bad element in '" + std::string(text) + "'", colon + 1);
        throw;
    }
    Syllable s{id, x};
    spec.check_syllable(s);
    return s;
}

Word parse_word(std::string_view text, SpecPtr spec)
{
    if (text == "1")
        return Word(std::move(spec));
    if (text.empty())
        throw Error(Errc::SyntaxError, "empty text; the identity is written \"1\"", 0);

    std::vector<Syllable> raw;
    std::size_t pos = 0;
    while (true) {
        std::size_t end = text.find(' ', pos);
        std::string_view token = text.substr(pos, end == std::string_view::npos ? end : end - pos);
        if (token.empty())
            throw Error(Errc::SyntaxError, "empty syllable (syllables are separated by single spaces)", pos);
        auto colon = token.find(':');
        if (colon == std::string_view::npos)
            throw Error(Errc::SyntaxError, "expected '<factor>:<element>', got '" + std::string(token) + "'",
                        pos);
        FactorId id = spec->find(token.substr(0, colon));
        try {
            raw.push_back({id, spec->factor(id).parse_element(token.substr(colon + 1))});
        } catch (const Error& e) {
            if (e.code() == Errc::SyntaxError)
                throw Error(Errc::SyntaxError, "bad element in '" + std::string(token) + "'",
                            pos + colon + 1);
            throw;
        }
        if (end == std::string_view::npos)
            break;
        pos = end + 1;
    }
    return Word::normalize(std::move(spec), raw);
}

std::string format_syllable(const GroupSpec& spec, Syllable s)
{
    const Factor& f = spec.factor(s.factor);
    return f.name() + ":" + f.format_element(s.value);
}

std::string format_word(const Word& g)
{
    if (g.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < g.length(); ++i) {
        if (i)
            out += ' ';
        out += format_syllable(g.spec(), g[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arithmetic

Word multiply(const Word& u, const Word& v)
{
    require_same_spec(u, v);
    const GroupSpec& spec = u.spec();
    std::vector<Syllable> out(u.syllables().begin(), u.syllables().end());
    out.reserve(u.length() + v.length());
    // Cancellation and merging only happen at the junction; once a syllable
    // of v survives, the rest of v is appended verbatim.
    std::size_t i = 0;
    while (i < v.length()) {
        std::size_t before = out.size();
        push_reduced(spec, out, v[i++]);
        if (out.size() >= before)
            break;
    }
    out.insert(out.end(), v.syllables().begin() + static_cast<std::ptrdiff_t>(i), v.syllables().end());
    return Word::reduced(u.spec_ptr(), std::move(out));
}

Word invert(const Word& g)
{
    std::vector<Syllable> out;
    out.reserve(g.length());
    for (std::size_t i = g.length(); i-- > 0;)
        out.push_back(g.spec().inverse(g[i]));
    return Word::reduced(g.spec_ptr(), std::move(out));
}

Word reverse(const Word& g)
{
    std::vector<Syllable> out(g.syllables().rbegin(), g.syllables().rend());
    return Word::reduced(g.spec_ptr(), std::move(out));
}

bool is_palindrome(const Word& g)
{
    auto s = g.syllables();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

Word make_palindrome(const Word& h, Syllable v)
{
    h.spec().check_syllable(v);
    if (!h.empty() && h[h.length() - 1].factor == v.factor)
        throw Error(Errc::NotReducedJunction,
                    "central syllable " + format_syllable(h.spec(), v) +
                        " lies in the factor of the last syllable of h");
    std::vector<Syllable> out(h.syllables().begin(), h.syllables().end());
    out.reserve(2 * h.length() + 1);
    out.push_back(v);
    out.insert(out.end(), h.syllables().rbegin(), h.syllables().rend());
    return Word::reduced(h.spec_ptr(), std::move(out));
}

// ---------------------------------------------------------------------------
// C-palindromes

CSet::CSet(const GroupSpec& spec, std::vector<Syllable> members)
{
    for (Syllable s : members) {
        spec.check_syllable(s);
        members_.insert(s);
    }
}

CSet CSet::everything(const GroupSpec& spec, std::int64_t exponent_bound)
{
    std::vector<Syllable> all;
    for (std::size_t i = 0; i < spec.size(); ++i)
        for (ElementValue x : spec.factors()[i].nontrivial_elements(exponent_bound))
            all.push_back({factor_id(i), x});
    return CSet(spec, std::move(all));
}

std::vector<XLetter> alpha_project(const Word& g, const CSet& c)
{
    std::vector<XLetter> out;
    out.reserve(g.length());
    for (Syllable s : g.syllables())
        out.push_back(c.contains(s) ? XLetter(s) : std::nullopt);
    return out;
}

bool is_c_palindrome(const Word& g, const CSet& c)
{
    auto s = g.syllables();
    for (std::size_t i = 0, j = s.size(); i + 1 < j; ++i, --j) {
        bool left = c.contains(s[i]);
        bool right = c.contains(s[j - 1]);
        if (left != right || (left && s[i] != s[j - 1]))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Regrouping

RegroupedWord regroup(const Word& g, FactorId pivot)
{
    const GroupSpec& spec = g.spec();
    if (index_of(pivot) >= spec.size())
        throw Error(Errc::UnknownFactor, "pivot factor index " + std::to_string(index_of(pivot)));
    if (spec.size() < 3)
        throw Error(Errc::WrongSpec, "regrouping needs at least three factors");

    RegroupedWord out{g.spec_ptr(), pivot, {}};
    std::size_t run_start = 0;
    auto flush = [&](std::size_t end) {
        if (end > run_start)
            out.letters.emplace_back(g.subword(run_start, end - run_start));
    };
    for (std::size_t i = 0; i < g.length(); ++i) {
        if (g[i].factor == pivot) {
            flush(i);
            out.letters.emplace_back(g[i]);
            run_start = i + 1;
        }
    }
    flush(g.length());
    return out;
}

Word flatten(const RegroupedWord& g)
{
    std::vector<Syllable> out;
    for (const auto& letter : g.letters) {
        if (const Word* w = std::get_if<Word>(&letter))
            out.insert(out.end(), w->syllables().begin(), w->syllables().end());
        else
            out.push_back(std::get<Syllable>(letter));
    }
    return Word::reduced(g.spec, std::move(out));
}

RegroupedWord reverse(const RegroupedWord& g)
{
    RegroupedWord out = g;
    std::reverse(out.letters.begin(), out.letters.end());
    return out;
}

bool is_palindrome(const RegroupedWord& g)
{
    const auto& l = g.letters;
    return std::equal(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(l.size() / 2), l.rbegin());
}

} // namespace palwidth
