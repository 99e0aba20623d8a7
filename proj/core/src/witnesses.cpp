#include "palwidth/witnesses.hpp"

#include "palwidth/error.hpp"

namespace palwidth {

namespace {

void require_other_factor(const GroupSpec& spec, Syllable a, Syllable b)
{
    spec.check_syllable(b);
    if (a.factor == b.factor)
        throw Error(Errc::WrongCase, "b must lie in a factor other than a's");
}

bool is_involution(const GroupSpec& spec, Syllable s)
{
    Order o = spec.factor(s.factor).order(s.value);
    return o && *o == 2;
}

Syllable first_nontrivial_outside(const GroupSpec& spec, FactorId excluded)
{
    for (std::size_t i = 0; i < spec.size(); ++i)
        if (factor_id(i) != excluded) {
            const Factor& f = spec.factors()[i];
            if (f.kind() == FactorKind::InfiniteCyclic)
                return {factor_id(i), 1};
            return {factor_id(i), f.nontrivial_elements().front()};
        }
    throw Error(Errc::WrongCase, "no second factor");
}

} // namespace

WitnessFamily WitnessFamily::case_one(SpecPtr spec, Syllable a, Syllable b)
{
    spec->check_syllable(a);
    Order o = spec->factor(a.factor).order(a.value);
    if (o && *o < 3)
        throw Error(Errc::WrongCase, "case I needs an element of order at least 3");
    require_other_factor(*spec, a, b);
    WitnessFamily f;
    f.case_ = WitnessCase::I;
    f.spec_ = std::move(spec);
    f.a_ = a;
    f.b_ = b;
    f.c_ = f.f_ = a;
    return f;
}

WitnessFamily WitnessFamily::case_two(SpecPtr spec, Syllable a, Syllable c, Syllable f, Syllable b)
{
    for (Syllable s : {a, c, f}) {
        spec->check_syllable(s);
        if (!is_involution(*spec, s))
            throw Error(Errc::WrongCase, "case II needs involutions, got " + format_syllable(*spec, s));
    }
    if (a.factor != c.factor || a.factor != f.factor || a == c || a == f || c == f)
        throw Error(Errc::WrongCase, "a, c, f must be distinct elements of one factor");
    require_other_factor(*spec, a, b);
    WitnessFamily w;
    w.case_ = WitnessCase::II;
    w.spec_ = std::move(spec);
    w.a_ = a;
    w.c_ = c;
    w.f_ = f;
    w.b_ = b;
    return w;
}

WitnessFamily WitnessFamily::from_spec(SpecPtr spec, WitnessCase which)
{
    CaseVerdict verdict = classify_product(*spec);
    if (which == WitnessCase::I) {
        const auto* c1 = std::get_if<CaseI>(&verdict.product_case);
        if (!c1)
            throw Error(Errc::WrongCase, "spec is not in case I: " + format_verdict(*spec, verdict));
        Syllable a{c1->factor, c1->element};
        Syllable b = first_nontrivial_outside(*spec, c1->factor);
        return case_one(std::move(spec), a, b);
    }
    const auto* c2 = std::get_if<CaseII>(&verdict.product_case);
    if (!c2)
        throw Error(Errc::WrongCase, "spec is not in case II: " + format_verdict(*spec, verdict));
    auto elems = spec->factor(c2->factor).nontrivial_elements();
    ElementValue fv = 0;
    for (ElementValue x : elems)
        if (x != c2->a && x != c2->c) {
            fv = x;
            break;
        }
    Syllable b = first_nontrivial_outside(*spec, c2->factor);
    return case_two(std::move(spec), {c2->factor, c2->a}, {c2->factor, c2->c}, {c2->factor, fv}, b);
}

WitnessFamily WitnessFamily::canonical_case_one()
{
    auto spec = make_spec({Factor::infinite_cyclic("A"), Factor::cyclic("B", 2)});
    return case_one(spec, {factor_id(0), 1}, {factor_id(1), 1});
}

WitnessFamily WitnessFamily::canonical_case_two()
{
    // Klein four-group as Z2 x Z2 with elements e, a, c, f = ac.
    std::vector<std::string> names{"e", "a", "c", "f"};
    std::vector<std::vector<std::string>> products{
        {"e", "a", "c", "f"},
        {"a", "e", "f", "c"},
        {"c", "f", "e", "a"},
        {"f", "c", "a", "e"},
    };
    auto spec = make_spec({Factor::table("K", names, "e", products), Factor::cyclic("B", 2)});
    return case_two(spec, {factor_id(0), 1}, {factor_id(0), 2}, {factor_id(0), 3}, {factor_id(1), 1});
}

Method WitnessFamily::method() const
{
    if (case_ == WitnessCase::I)
        return Delta1Method{a_};
    return Delta2Method{a_, c_};
}

namespace {

Word build(const WitnessFamily& family, const std::vector<Syllable>& v, const std::vector<Syllable>& w,
           std::int64_t n)
{
    if (n < 1)
        throw Error(Errc::InvalidArgument, "witness index must be at least 1");
    std::vector<Syllable> out;
    for (std::int64_t i = 1; i <= n; ++i) {
        out.insert(out.end(), v.begin(), v.end());
        for (std::int64_t j = 0; j < i; ++j)
            out.insert(out.end(), w.begin(), w.end());
    }
    out.insert(out.end(), v.begin(), v.end());
    return Word::reduced(family.spec(), std::move(out));
}

} // namespace

Word witness_case1(const WitnessFamily& family, std::int64_t n)
{
    if (family.which() != WitnessCase::I)
        throw Error(Errc::WrongCase, "family is not case I");
    Syllable a = family.a();
    Syllable b = family.b();
    return build(family, {b, a}, {b, family.spec()->inverse(a)}, n);
}

Word witness_case2(const WitnessFamily& family, std::int64_t n)
{
    if (family.which() != WitnessCase::II)
        throw Error(Errc::WrongCase, "family is not case II");
    Syllable b = family.b();
    return build(family, {b, family.a(), b, family.c()}, {b, family.f()}, n);
}

Word witness(const WitnessFamily& family, std::int64_t n)
{
    return family.which() == WitnessCase::I ? witness_case1(family, n) : witness_case2(family, n);
}

CountMap expected_stats_case1(std::int64_t n)
{
    CountMap d;
    for (std::int64_t k = 1; k <= n; ++k)
        d[static_cast<std::size_t>(k)] = 1;
    return d;
}

std::vector<WitnessRow> witness_table(const WitnessFamily& family, std::int64_t first,
                                      std::int64_t last)
{
    std::vector<WitnessRow> rows;
    Method method = family.method();
    for (std::int64_t n = first; n <= last; ++n) {
        Word g = witness(family, n);
        LowerBoundCertificate cert = lower_bound(g, method);
        rows.push_back({n, g.length(), cert.delta_value, cert.k_lower});
    }
    return rows;
}

} // namespace palwidth
