#include "palwidth/quasihom.hpp"

#include "palwidth/error.hpp"

#include <algorithm>
#include <set>

namespace palwidth {

namespace {

void check_delta1_anchor(const GroupSpec& spec, Syllable a)
{
    spec.check_syllable(a);
    Order order = spec.factor(a.factor).order(a.value);
    if (order && *order < 3)
        throw Error(Errc::AnchorOrderTooSmall,
                    "anchor " + format_syllable(spec, a) + " has order " + std::to_string(*order) +
                        "; delta1 needs order at least 3");
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den)
{
    if (num >= 0)
        return (num + den - 1) / den;
    return -((-num) / den);
}

} // namespace

std::int64_t delta1(const Word& g, Syllable a)
{
    check_delta1_anchor(g.spec(), a);
    std::int64_t sum = 0;
    for (const auto& [k, t] : t_k_map(g, a))
        sum += (t < 0 ? -t : t) % 2;
    return sum;
}

std::int64_t delta2(const Word& g, Syllable a, Syllable c)
{
    std::int64_t sum = 0;
    for (const auto& [key, t] : t_mn_map(g, a, c))
        if (key.first < key.second)
            sum += t;
    return sum;
}

std::int64_t evaluate(const Word& g, const Method& method)
{
    return std::visit(
        [&](const auto& m) -> std::int64_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, Delta1Method>)
                return delta1(g, m.a);
            else
                return delta2(g, m.a, m.c);
        },
        method);
}

MethodConstants constants(const Method& method)
{
    if (std::holds_alternative<Delta1Method>(method))
        return {2, 9};
    return {0, 8};
}

std::int64_t k_lower_for(const Method& method, std::int64_t delta)
{
    auto [per, defect] = constants(method);
    return std::max<std::int64_t>(1, ceil_div(delta + defect, per + defect));
}

std::string method_name(const Method& method)
{
    return std::holds_alternative<Delta1Method>(method) ? "delta1" : "delta2";
}

std::vector<Syllable> method_anchors(const Method& method)
{
    if (const auto* m = std::get_if<Delta1Method>(&method))
        return {m->a};
    const auto& m = std::get<Delta2Method>(method);
    return {m.a, m.c};
}

LowerBoundCertificate lower_bound(const Word& g, const Method& method)
{
    // Anchor errors take precedence over the empty-word check.
    std::int64_t value = evaluate(g, method);
    if (g.empty())
        throw Error(Errc::EmptyWord, "the identity needs no palindromes");
    std::int64_t k = k_lower_for(method, value);
    auto [per, defect] = constants(method);
    std::string symbol = std::holds_alternative<Delta1Method>(method) ? "Δ₁" : "Δ₂";
    std::string chain = symbol + "(g)=" + std::to_string(value) + " ≤ " +
                        std::to_string(per + defect) + "k−" + std::to_string(defect) +
                        " ⇒ k ≥ " + std::to_string(k);
    return {g, method, value, k, std::move(chain)};
}

LowerBoundCertificate lower_bound_delta1(const Word& g, Syllable a)
{
    return lower_bound(g, Delta1Method{a});
}

LowerBoundCertificate lower_bound_delta2(const Word& g, Syllable a, Syllable c)
{
    return lower_bound(g, Delta2Method{a, c});
}

std::size_t DefectReport::defect_count() const noexcept
{
    return pair_positions.empty() ? k_positions.size() : unordered_pairs;
}

namespace {

template <class Map>
std::vector<typename Map::key_type> additivity_failures(const Map& tu, const Map& tv,
                                                        const Map& tuv)
{
    std::set<typename Map::key_type> keys;
    for (const auto* m : {&tu, &tv, &tuv})
        for (const auto& kv : *m)
            keys.insert(kv.first);
    auto at = [](const Map& m, const auto& key) {
        auto it = m.find(key);
        return it == m.end() ? std::int64_t{0} : it->second;
    };
    std::vector<typename Map::key_type> out;
    for (const auto& key : keys)
        if (at(tuv, key) != at(tu, key) + at(tv, key))
            out.push_back(key);
    return out;
}

} // namespace

DefectReport quasi_defect_report(const Word& u, const Word& v, const Method& method)
{
    Word uv = multiply(u, v);
    DefectReport report;
    if (const auto* m = std::get_if<Delta1Method>(&method)) {
        check_delta1_anchor(u.spec(), m->a);
        report.k_positions = additivity_failures(t_k_map(u, m->a), t_k_map(v, m->a), t_k_map(uv, m->a));
    } else {
        const auto& m2 = std::get<Delta2Method>(method);
        report.pair_positions = additivity_failures(t_mn_map(u, m2.a, m2.c), t_mn_map(v, m2.a, m2.c),
                                                    t_mn_map(uv, m2.a, m2.c));
        report.unordered_pairs = static_cast<std::size_t>(
            std::count_if(report.pair_positions.begin(), report.pair_positions.end(),
                          [](const PairKey& p) { return p.first < p.second; }));
    }
    report.lhs = evaluate(uv, method);
    report.rhs = evaluate(u, method) + evaluate(v, method) + constants(method).defect;
    report.bound_holds = report.lhs <= report.rhs;
    return report;
}

} // namespace palwidth
