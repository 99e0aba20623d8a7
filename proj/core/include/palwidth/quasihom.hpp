#pragma once

// Quasi-homomorphisms built from segment statistics, and the lower bounds on
// palindromic length they certify.
//
//   delta1(g) = sum_k (|t_k(g)| mod 2)        bounded by 2 on palindromes,
//                                              defect 9, so <= 11k - 9 on
//                                              products of k palindromes;
//   delta2(g) = sum_{m<n} t_{m,n}(g)          zero on palindromes, defect 8,
//                                              so <= 8k - 8.

#include "palwidth/segments.hpp"
#include "palwidth/word.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace palwidth {

struct Delta1Method {
    Syllable a;
};

struct Delta2Method {
    Syllable a;
    Syllable c;
};

using Method = std::variant<Delta1Method, Delta2Method>;

/// Throws AnchorOrderTooSmall when `a` has order 2 (or is otherwise not an
/// element of order >= 3, infinite included).
std::int64_t delta1(const Word& g, Syllable a);
/// Throws BadAnchors.
std::int64_t delta2(const Word& g, Syllable a, Syllable c);
std::int64_t evaluate(const Word& g, const Method& method);

/// Per-palindrome bound and additivity defect of each method.
struct MethodConstants {
    std::int64_t per_palindrome; ///< 2 for delta1, 0 for delta2
    std::int64_t defect;         ///< 9 for delta1, 8 for delta2
};
MethodConstants constants(const Method& method);

/// Smallest k >= 1 with delta <= (per_palindrome + defect) * k - defect.
std::int64_t k_lower_for(const Method& method, std::int64_t delta);

struct LowerBoundCertificate {
    Word word;
    Method method;
    std::int64_t delta_value = 0;
    std::int64_t k_lower = 0;
    std::string chain; ///< e.g. "Δ₁(g)=14 ≤ 11k−9 ⇒ k ≥ 3"
};

LowerBoundCertificate lower_bound_delta1(const Word& g, Syllable a);
LowerBoundCertificate lower_bound_delta2(const Word& g, Syllable a, Syllable c);
LowerBoundCertificate lower_bound(const Word& g, const Method& method);

std::string method_name(const Method& method);
std::vector<Syllable> method_anchors(const Method& method);

/// Additivity of t on a pair (u, v): positions where t(uv) != t(u) + t(v)
/// together with both sides of delta(uv) <= delta(u) + delta(v) + defect.
struct DefectReport {
    std::vector<std::size_t> k_positions;  ///< delta1: failing k
    std::vector<PairKey> pair_positions;   ///< delta2: failing ordered (m, n)
    std::size_t unordered_pairs = 0;       ///< delta2: failing pairs with m < n
    std::int64_t lhs = 0;                  ///< delta(uv)
    std::int64_t rhs = 0;                  ///< delta(u) + delta(v) + defect
    bool bound_holds = true;

    /// Failing k (delta1) or failing unordered pairs (delta2).
    std::size_t defect_count() const noexcept;
};

DefectReport quasi_defect_report(const Word& u, const Word& v, const Method& method);

} // namespace palwidth
