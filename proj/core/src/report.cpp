#include "palwidth/report.hpp"

#include <json.hpp>

#include <sstream>

namespace palwidth {

using Json = nlohmann::ordered_json;

namespace {

Json count_map_json(const CountMap& m)
{
    Json out = Json::object();
    for (const auto& [k, v] : m)
        out[std::to_string(k)] = v;
    return out;
}

Json pair_map_json(const PairCountMap& m)
{
    Json out = Json::object();
    for (const auto& [k, v] : m)
        out[std::to_string(k.first) + "," + std::to_string(k.second)] = v;
    return out;
}

std::string count_map_text(const CountMap& m)
{
    std::string out;
    for (const auto& [k, v] : m)
        out += " " + std::to_string(k) + ":" + std::to_string(v);
    return out;
}

Json budget_json(const SearchBudget& b)
{
    Json out;
    out["max_factor_length"] = b.max_factor_length;
    out["max_k"] = b.max_k;
    out["exponent_bound"] = b.exponent_bound;
    return out;
}

std::string dump(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::strict); }

} // namespace

std::string stats_json(const SegmentStatsI& stats)
{
    Json j;
    j["d"] = count_map_json(stats.d);
    j["d_star"] = count_map_json(stats.d_star);
    return dump(j);
}

std::string stats_json(const SegmentStatsII& stats)
{
    Json j;
    j["d"] = pair_map_json(stats.d);
    return dump(j);
}

std::string stats_text(const SegmentStatsI& stats)
{
    return "d:" + count_map_text(stats.d) + "\nd*:" + count_map_text(stats.d_star) +
           "\nt:" + count_map_text(t_k_map(stats)) + "\n";
}

std::string stats_text(const SegmentStatsII& stats)
{
    std::string out = "d:";
    for (const auto& [k, v] : stats.d)
        out += " (" + std::to_string(k.first) + "," + std::to_string(k.second) + "):" + std::to_string(v);
    return out + "\n";
}

std::string certificate_json(const LowerBoundCertificate& cert)
{
    Json j;
    j["word"] = format_word(cert.word);
    j["method"] = method_name(cert.method);
    Json anchors = Json::array();
    for (Syllable s : method_anchors(cert.method))
        anchors.push_back(format_syllable(cert.word.spec(), s));
    j["anchors"] = anchors;
    j["delta"] = cert.delta_value;
    j["k_lower"] = cert.k_lower;
    j["chain"] = cert.chain;
    return dump(j);
}

std::string certificate_text(const LowerBoundCertificate& cert)
{
    return cert.chain + "\n";
}

std::string oracle_json(const Word& g, const OracleResult& result)
{
    Json j;
    j["word"] = format_word(g);
    if (const auto* e = std::get_if<ExactWithinBudget>(&result.verdict)) {
        j["k"] = e->k;
        Json parts = Json::array();
        for (const Word& p : e->factors)
            parts.push_back(format_word(p));
        j["factorization"] = parts;
    } else {
        j["at_least"] = result.k();
    }
    j["budget"] = budget_json(result.budget);
    return dump(j);
}

std::string oracle_text(const Word& g, const OracleResult& result)
{
    std::ostringstream out;
    out << format_word(g) << ": ";
    if (const auto* e = std::get_if<ExactWithinBudget>(&result.verdict)) {
        out << "palindromic length " << e->k;
        for (std::size_t i = 0; i < e->factors.size(); ++i)
            out << (i ? " * " : " = ") << "(" << format_word(e->factors[i]) << ")";
    } else {
        out << "palindromic length at least " << result.k();
    }
    out << " [max_factor_length " << result.budget.max_factor_length << ", max_k " << result.budget.max_k
        << ", exponent_bound " << result.budget.exponent_bound << "]\n";
    return out.str();
}

std::string witness_csv(const std::vector<WitnessRow>& rows)
{
    std::string out = "n,length,delta,k_lower\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + "," + std::to_string(r.length) + "," + std::to_string(r.delta) + "," +
               std::to_string(r.k_lower) + "\n";
    return out;
}

std::string verdict_json(const GroupSpec& spec, const CaseVerdict& verdict)
{
    auto syl = [&](FactorId id, ElementValue x) { return format_syllable(spec, {id, x}); };
    Json j;
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ExceptionalZ2Z2>) {
                j["case"] = "ExceptionalZ2Z2";
            } else if constexpr (std::is_same_v<T, CaseI>) {
                j["case"] = "CaseI";
                j["factor"] = spec.factor(c.factor).name();
                j["element"] = syl(c.factor, c.element);
            } else if constexpr (std::is_same_v<T, CaseII>) {
                j["case"] = "CaseII";
                j["factor"] = spec.factor(c.factor).name();
                j["a"] = syl(c.factor, c.a);
                j["c"] = syl(c.factor, c.c);
            } else {
                j["case"] = "MultiFactor";
                j["pivot"] = spec.factor(c.pivot).name();
            }
        },
        verdict.product_case);
    if (verdict.width)
        j["width"] = *verdict.width;
    else
        j["width"] = "infinite";
    return dump(j);
}

std::string z2z2_json(const Z2Z2Report& report)
{
    Json j;
    j["max_len"] = report.max_len;
    j["words_checked"] = report.words_checked;
    j["max_observed"] = report.max_observed;
    j["max_witness"] = report.max_witness ? Json(format_word(*report.max_witness)) : Json(nullptr);
    j["violations"] = report.violations;
    return dump(j);
}

std::string z2z2_text(const Z2Z2Report& report)
{
    std::ostringstream out;
    out << "checked " << report.words_checked << " words of length <= " << report.max_len
        << "; maximum palindromic length " << report.max_observed;
    if (report.max_witness)
        out << " (first attained by " << format_word(*report.max_witness) << ")";
    out << "; " << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations)
        out << "  " << v << "\n";
    return out.str();
}

std::string crosscheck_row_json(const CrosscheckRow& row)
{
    Json j;
    j["word"] = format_word(row.word);
    j["k_lower"] = row.certificate.k_lower;
    j["delta"] = row.certificate.delta_value;
    if (row.oracle.exact())
        j["k"] = row.oracle.k();
    else
        j["at_least"] = row.oracle.k();
    j["violation"] = row.violation;
    return dump(j);
}

} // namespace palwidth
