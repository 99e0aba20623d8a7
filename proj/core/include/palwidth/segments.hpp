#pragma once

// Segment statistics of reduced words: the subwords strictly between
// consecutive occurrences of an anchor syllable, counted by length
// (d_k, d*_k, t_k) and by the position of a second anchor inside them
// (d_{m,n}, t_{m,n}).

#include "palwidth/word.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace palwidth {

/// Subword strictly between two consecutive occurrences of the anchor,
/// which sit at positions `left` and `right`.
struct Segment {
    std::size_t left = 0;
    std::size_t right = 0;

    std::size_t start() const noexcept { return left + 1; }
    std::size_t length() const noexcept { return right - left - 1; }

    friend bool operator==(const Segment&, const Segment&) = default;
};

using CountMap = std::map<std::size_t, std::int64_t>;
using PairKey = std::pair<std::size_t, std::size_t>;
using PairCountMap = std::map<PairKey, std::int64_t>;

struct SegmentStatsI {
    Syllable anchor;
    CountMap d;      ///< k -> number of anchor-segments of length 2k+1
    CountMap d_star; ///< k -> number of inverse-anchor segments of length 2k+1
};

struct SegmentStatsII {
    Syllable a;
    Syllable c;
    PairCountMap d; ///< (m, n) -> number of a-segments of type (m, n)
};

std::vector<Segment> a_segments(const Word& g, Syllable a);

/// Even-length segments are counted in neither map.
SegmentStatsI stats_case1(const Word& g, Syllable a);

/// Pointwise d - d_star; zero entries omitted.
CountMap t_k_map(const SegmentStatsI& stats);
CountMap t_k_map(const Word& g, Syllable a);

/// Throws BadAnchors unless a != c are nontrivial elements of one factor.
void check_case2_anchors(const GroupSpec& spec, Syllable a, Syllable c);

/// An a-segment with exactly one occurrence of c contributes to bucket
/// (syllables before c, syllables after c); other segments contribute to
/// no bucket.
SegmentStatsII stats_case2(const Word& g, Syllable a, Syllable c);

/// Pointwise d[(m,n)] - d[(n,m)]; zero entries omitted.
PairCountMap t_mn_map(const SegmentStatsII& stats);
PairCountMap t_mn_map(const Word& g, Syllable a, Syllable c);

} // namespace palwidth
