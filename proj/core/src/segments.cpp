#include "palwidth/segments.hpp"

#include "palwidth/error.hpp"

namespace palwidth {

std::vector<Segment> a_segments(const Word& g, Syllable a)
{
    std::vector<Segment> out;
    bool seen = false;
    std::size_t last = 0;
    for (std::size_t i = 0; i < g.length(); ++i) {
        if (g[i] != a)
            continue;
        if (seen)
            out.push_back({last, i});
        seen = true;
        last = i;
    }
    return out;
}

namespace {

void count_odd_segments(const Word& g, Syllable anchor, CountMap& into)
{
    for (const Segment& s : a_segments(g, anchor))
        if (s.length() % 2 == 1)
            ++into[s.length() / 2];
}

} // namespace

SegmentStatsI stats_case1(const Word& g, Syllable a)
{
    SegmentStatsI stats{a, {}, {}};
    count_odd_segments(g, a, stats.d);
    count_odd_segments(g, g.spec().inverse(a), stats.d_star);
    return stats;
}

CountMap t_k_map(const SegmentStatsI& stats)
{
    CountMap t = stats.d;
    for (const auto& [k, count] : stats.d_star)
        t[k] -= count;
    std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
    return t;
}

CountMap t_k_map(const Word& g, Syllable a) { return t_k_map(stats_case1(g, a)); }

void check_case2_anchors(const GroupSpec& spec, Syllable a, Syllable c)
{
    try {
        spec.check_syllable(a);
        spec.check_syllable(c);
    } catch (const Error& e) {
        throw Error(Errc::BadAnchors, e.what());
    }
    if (a == c)
        throw Error(Errc::BadAnchors, "anchors must be distinct");
    if (a.factor != c.factor)
        throw Error(Errc::BadAnchors, "anchors must lie in the same factor");
}

SegmentStatsII stats_case2(const Word& g, Syllable a, Syllable c)
{
    check_case2_anchors(g.spec(), a, c);
    SegmentStatsII stats{a, c, {}};
    for (const Segment& s : a_segments(g, a)) {
        std::size_t hits = 0;
        std::size_t at = 0;
        for (std::size_t i = s.start(); i < s.right; ++i) {
            if (g[i] == c) {
                ++hits;
                at = i;
            }
        }
        if (hits == 1)
            ++stats.d[{at - s.start(), s.right - at - 1}];
    }
    return stats;
}

PairCountMap t_mn_map(const SegmentStatsII& stats)
{
    PairCountMap t;
    for (const auto& [key, count] : stats.d) {
        t[key] += count;
        t[{key.second, key.first}] -= count;
    }
    std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
    return t;
}

PairCountMap t_mn_map(const Word& g, Syllable a, Syllable c)
{
    return t_mn_map(stats_case2(g, a, c));
}

} // namespace palwidth
