#include <gtest/gtest.h>

#include "support.hpp"

using namespace udcount;

namespace {

labeling labels(std::string_view s) {
    std::vector<sign> v;
    for (char c : s) v.push_back(c == '-' ? sign::minus : sign::plus);
    return labeling(std::move(v));
}

// Witness must be a closed walk in the reversed-negative graph through a minus arc.
void expect_sound_witness(const digraph& g, const labeling& lab, const std::vector<arc_id>& w) {
    ASSERT_FALSE(w.empty());
    EXPECT_EQ(lab[w.front()], sign::minus);
    const auto rg = reversed_negative(g, lab);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& a = rg.arcs[w[i]];
        const auto& b = rg.arcs[w[(i + 1) % w.size()]];
        EXPECT_EQ(a.head, b.tail);
    }
}

}  // namespace

TEST(Labeling, MaskAndSize) {
    auto l = labeling::from_mask(4, 0b0101);
    EXPECT_EQ(l[0], sign::minus);
    EXPECT_EQ(l[1], sign::plus);
    EXPECT_EQ(l.size(), 2u);
}

TEST(ReversedNegative, FlipsOnlyMinusArcs) {
    digraph g(3, {{0, 1}, {1, 2}});
    auto rg = reversed_negative(g, labels("+-"));
    EXPECT_EQ(rg.arcs[0].tail, 0u);
    EXPECT_EQ(rg.arcs[1].tail, 2u);
    EXPECT_EQ(rg.arcs[1].head, 1u);
    EXPECT_EQ(rg.arcs[1].label, sign::minus);
}

TEST(Validity, DirectedTriangle) {
    auto g = fixtures::directed_cycle(3);
    EXPECT_TRUE(is_valid(g, labels("+++")).valid);
    EXPECT_TRUE(is_valid(g, labels("+--")).valid);
    auto r = is_valid(g, labels("---"));
    ASSERT_FALSE(r.valid);
    EXPECT_EQ(r.witness.size(), 3u);
    expect_sound_witness(g, labels("---"), r.witness);
}

TEST(Validity, AcyclicDigraphAllLabelingsOfSingleArc) {
    digraph g(2, {{0, 1}});
    EXPECT_TRUE(is_valid(g, labels("+")));
    EXPECT_TRUE(is_valid(g, labels("-")));
}

TEST(Validity, TwoCycle) {
    // One minus arc flips onto its partner; two minus arcs form a minus cycle.
    digraph g(2, {{0, 1}, {1, 0}});
    EXPECT_TRUE(is_valid(g, labels("+-")));
    EXPECT_TRUE(is_valid(g, labels("++")));
    EXPECT_FALSE(is_valid(g, labels("--")));
}

TEST(Validity, FeedbackArcSetNeedNotGiveValidLabeling) {
    // Plus set {0,1,2} is a FAS (drops the triangle), but the chord 2->1 is
    // minus and closes 1 -> 2 -> 0 -> 1 through it once flipped.
    auto g = fixtures::forbidden_cycle();
    const auto lab = labels("+++-");
    EXPECT_TRUE(is_fas(g, plus_arcs(lab)));
    auto r = is_valid(g, lab);
    ASSERT_FALSE(r.valid);
    EXPECT_EQ(r.witness.front(), 3u);
    expect_sound_witness(g, lab, r.witness);
}

TEST(Validity, WitnessesAreSoundAndAgreeWithOracle) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = generate::random(9, seed);
        for (std::uint64_t mask = 0; mask < (1u << g.arc_count()); mask += 7) {
            auto lab = labeling::from_mask(g.arc_count(), mask);
            std::vector<bool> minus(g.arc_count());
            for (std::size_t i = 0; i < minus.size(); ++i) minus[i] = lab[i] == sign::minus;
            oracle::signed_closure c(g, minus);
            auto r = is_valid(g, lab);
            ASSERT_EQ(r.valid, c.valid()) << seed << " " << mask;
            if (!r.valid) expect_sound_witness(g, lab, r.witness);
        }
    }
}

TEST(Negreach, DetectsMinusOnSomePath) {
    // 0 -> 1 -> 2 with the second arc minus: rg has 0->1 (+), 2->1 (-).
    digraph g(4, {{0, 1}, {2, 1}, {0, 3}, {3, 1}});
    auto rg = reversed_negative(g, labels("+-+-"));
    auto r = negreach(rg, 0, 1);
    EXPECT_TRUE(r.reachable);
    EXPECT_FALSE(r.via_negative);  // minus arc 3->1 was flipped to 1->3
    auto r2 = negreach(rg, 0, 3);
    EXPECT_TRUE(r2.reachable);
    EXPECT_TRUE(r2.via_negative);
    EXPECT_FALSE(negreach(rg, 3, 0).reachable);
}

TEST(Classify, SingleArc) {
    digraph g(2, {{0, 1}});
    EXPECT_EQ(classify(g, labels("+"), 0, 1), ss_class::plus_none);
    EXPECT_EQ(classify(g, labels("-"), 0, 1), ss_class::none_minus);
    EXPECT_EQ(classify(g, labels("+"), 1, 0), ss_class::none_plus);
    EXPECT_EQ(classify(g, labels("-"), 1, 0), ss_class::minus_none);
}

TEST(Classify, TwoCycle) {
    digraph g(2, {{0, 1}, {1, 0}});
    EXPECT_EQ(classify(g, labels("++"), 0, 1), ss_class::plus_plus);
    EXPECT_EQ(classify(g, labels("+-"), 0, 1), ss_class::minus_none);
    EXPECT_EQ(classify(g, labels("-+"), 0, 1), ss_class::none_minus);
}

TEST(Classify, Errors) {
    auto g = fixtures::directed_cycle(3);
    EXPECT_THROW(classify(g, labels("+++"), 1, 1), invalid_input);
    EXPECT_THROW(classify(g, labels("---"), 0, 1), invalid_input);
}

TEST(Classify, MatchesOracleOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = generate::random(8, seed);
        for (std::uint64_t mask = 0; mask < (1u << g.arc_count()); ++mask) {
            auto lab = labeling::from_mask(g.arc_count(), mask);
            if (!is_valid(g, lab)) continue;
            std::vector<bool> minus(g.arc_count());
            for (std::size_t i = 0; i < minus.size(); ++i) minus[i] = lab[i] == sign::minus;
            oracle::signed_closure c(g, minus);
            auto k = oracle::class_index(c.status(0, 1), c.status(1, 0));
            ASSERT_TRUE(k);
            EXPECT_EQ(index_of(classify(g, lab, 0, 1)), *k);
        }
    }
}

TEST(Classes, KeysAndStatusPairs) {
    EXPECT_EQ(key(ss_class::plus_plus), "++");
    EXPECT_EQ(key(ss_class::none_minus), "0-");
    EXPECT_FALSE(make_ss_class(path_status::plus, path_status::minus));
    EXPECT_FALSE(make_ss_class(path_status::minus, path_status::minus));
    EXPECT_EQ(make_ss_class(path_status::none, path_status::none), ss_class::none_none);
}

TEST(Schedule, InducedLabeling) {
    // triangle oriented by id order; parts {0},{1,2}
    digraph g(3, {{0, 1}, {1, 2}, {0, 2}});
    auto lab = schedule_to_labeling(g, {{{0}, {1, 2}}});
    EXPECT_EQ(lab, labels("-+-"));
    EXPECT_TRUE(is_valid(g, lab));
}

TEST(Schedule, Errors) {
    digraph g(3, {{0, 1}, {1, 2}});
    EXPECT_THROW(schedule_to_labeling(g, {{{0}, {}, {1, 2}}}), invalid_input);
    EXPECT_THROW(schedule_to_labeling(g, {{{0, 1}, {1, 2}}}), invalid_input);
    EXPECT_THROW(schedule_to_labeling(g, {{{0, 1}}}), invalid_input);
    EXPECT_THROW(schedule_to_labeling(g, {{{0, 1, 2, 3}}}), invalid_input);
}

TEST(Schedule, InducedLabelingsAreExactlyTheValidOnes) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto g = generate::random(6, seed);
        const auto induced = oracle::schedule_labelings(g);
        std::size_t valid = 0;
        for (std::uint64_t mask = 0; mask < (1u << g.arc_count()); ++mask) {
            auto lab = labeling::from_mask(g.arc_count(), mask);
            std::vector<bool> minus(g.arc_count());
            for (std::size_t i = 0; i < minus.size(); ++i) minus[i] = lab[i] == sign::minus;
            const bool v = is_valid(g, lab).valid;
            valid += v;
            EXPECT_EQ(v, induced.count(minus) == 1) << seed << " " << mask;
        }
        EXPECT_EQ(valid, induced.size());
    }
}

TEST(TextFormats, LabelingRoundTrip) {
    auto g = fixtures::forbidden_cycle();
    auto lab = labels("+-+-");
    EXPECT_EQ(parse_labeling(format_labeling(g, lab), g), lab);
    EXPECT_THROW(parse_labeling("0 1 +\n", g), parse_error);
    EXPECT_THROW(parse_labeling("0 1 +\n2 1 +\n2 0 +\n2 1 -\n", g), parse_error);
    EXPECT_THROW(parse_labeling("0 1 x\n1 2 +\n2 0 +\n2 1 -\n", g), parse_error);
}

TEST(TextFormats, Schedule) {
    auto b = parse_schedule("# order\n2\n0 1\n");
    ASSERT_EQ(b.parts.size(), 2u);
    EXPECT_EQ(b.parts[1], (std::vector<vertex_id>{0, 1}));
}
