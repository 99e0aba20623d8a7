#pragma once

// Text renderings shared by the command-line tool and its tests. JSON
// objects keep keys in the order listed; numeric map keys are rendered as
// decimal strings in ascending numeric order.

#include "palwidth/group.hpp"
#include "palwidth/oracle.hpp"
#include "palwidth/quasihom.hpp"
#include "palwidth/segments.hpp"
#include "palwidth/witnesses.hpp"

#include <string>
#include <vector>

namespace palwidth {

/// {"d":{"0":1,"2":1},"d_star":{"1":1}}
std::string stats_json(const SegmentStatsI& stats);
/// {"d":{"1,3":1}}
std::string stats_json(const SegmentStatsII& stats);
std::string stats_text(const SegmentStatsI& stats);
std::string stats_text(const SegmentStatsII& stats);

/// {"word":...,"method":"delta1","anchors":["A:1"],"delta":14,"k_lower":3,"chain":...}
std::string certificate_json(const LowerBoundCertificate& cert);
std::string certificate_text(const LowerBoundCertificate& cert);

/// {"word":...,"k":2,"factorization":[...],"budget":{...}} or
/// {"word":...,"at_least":5,"budget":{...}}
std::string oracle_json(const Word& g, const OracleResult& result);
std::string oracle_text(const Word& g, const OracleResult& result);

/// Header "n,length,delta,k_lower" followed by one line per row.
std::string witness_csv(const std::vector<WitnessRow>& rows);

std::string verdict_json(const GroupSpec& spec, const CaseVerdict& verdict);

std::string z2z2_json(const Z2Z2Report& report);
std::string z2z2_text(const Z2Z2Report& report);

std::string crosscheck_row_json(const CrosscheckRow& row);

} // namespace palwidth
