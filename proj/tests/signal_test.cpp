#include <gtest/gtest.h>

#include "latcheq/signal.hpp"
#include "support.hpp"

using namespace latcheq;
using namespace latcheq::testing;

namespace {

TEST(Time, ParsesDecimalsAndFractionsExactly) {
    EXPECT_EQ(Time::parse("0.5"), Time(1, 2));
    EXPECT_EQ(Time::parse("3"), Time(3));
    EXPECT_EQ(Time::parse("6/4"), Time(3, 2));
    EXPECT_EQ(Time::parse("0.1") + Time::parse("0.2"), Time::parse("0.3"));
    EXPECT_EQ(Time(6, 4).str(), "3/2");
    EXPECT_EQ(Time(3).fraction(), "3/1");
    EXPECT_EQ(Time::parse("123456789012345678901234567890.5").denominator(), 2);
}

TEST(Time, RejectsMalformedAndNegative) {
    for (const char* bad : {"", "-1", "1/0", "1.", ".5", "1/2/3", "a", "1e3", "1.5/2"})
        EXPECT_THROW(Time::parse(bad), std::invalid_argument) << bad;
    EXPECT_THROW(Time(-1, 2), std::invalid_argument);
    EXPECT_THROW(Time(1, 0), std::invalid_argument);
}

TEST(MakeSignal, RejectsDuplicateTime) {
    try {
        sig(Bit::Zero, {{2, 1}, {2, 0}});
        FAIL() << "expected SignalError";
    } catch (const SignalError& e) {
        EXPECT_EQ(e.index(), 1u);
    }
    EXPECT_THROW(sig(Bit::Zero, {{3, 1}, {2, 0}}), SignalError);
}

TEST(MakeSignal, DropsRedundantChanges) {
    const Signal s = sig(Bit::Zero, {{2, 1}, {5, 1}});
    EXPECT_EQ(s.initial(), Bit::Zero);
    ASSERT_EQ(s.changes().size(), 1u);
    EXPECT_EQ(s.changes()[0], (Change{2, Bit::One}));
    EXPECT_EQ(sig(Bit::Zero, {{2, 1}, {5, 0}}), Signal::pulse(2, 5));
    EXPECT_TRUE(signals_equal(sig(Bit::Zero, {{2, 1}, {5, 1}}), Signal::step(2)));
}

TEST(Eval, LeftClosedRightOpen) {
    const Signal s = Signal::pulse(2, 5);
    EXPECT_EQ(eval(s, 2), Bit::One);
    EXPECT_EQ(left_limit(s, 2), Bit::Zero);
    EXPECT_EQ(left_limit(s, 0), Bit::Zero);
    EXPECT_EQ(eval(s, 5), Bit::Zero);
    EXPECT_EQ(left_limit(s, 5), Bit::One);
    EXPECT_EQ(eval(s, Time(9, 2)), Bit::One);
}

TEST(Combine, Examples) {
    EXPECT_EQ(Signal::pulse(1, 5) & Signal::pulse(3, 8), Signal::pulse(3, 5));
    const Signal c = complement(Signal::pulse(2, 5));
    EXPECT_EQ(c, sig(Bit::One, {{2, 0}, {5, 1}}));
    EXPECT_EQ(combine([](Bit a, Bit b) { return a | b; }, Signal::pulse(1, 2), Signal::pulse(2, 3)),
              Signal::pulse(1, 3));
}

TEST(Combine, ProductWithComplementIsZero) {
    Generator gen(11);
    for (int i = 0; i < 200; ++i) {
        const Signal s = gen.signal();
        EXPECT_EQ(s & ~s, zero());
        EXPECT_EQ(s | ~s, one());
    }
}

TEST(RisingEdges, Examples) {
    EXPECT_EQ(rising_edges(Signal::pulse(2, 5) ^ Signal::pulse(7, 8)), (std::vector<Time>{2, 7}));
    EXPECT_TRUE(rising_edges(one()).empty());
    EXPECT_EQ(rising_edges(Signal::step(0)), (std::vector<Time>{0}));
}

TEST(Persistent, Examples) {
    // Frozen from oracle_persistent (see PersistentMatchesOracle).
    const Signal s = Signal::pulse(1, 2) ^ Signal::pulse(3, 10);
    EXPECT_EQ(oracle_persistent(s, 2), Signal::pulse(5, 10));
    EXPECT_EQ(persistent(s, 2), Signal::pulse(5, 10));
    EXPECT_EQ(persistent(one(), 3), one());
    EXPECT_EQ(oracle_persistent(Signal::pulse(1, 2), 2), zero());
    EXPECT_EQ(persistent(Signal::pulse(1, 2), 2), zero());
    EXPECT_EQ(persistent(Signal::until(4), 3), Signal::until(4));
    EXPECT_EQ(persistent(Signal::pulse(1, 3), 2), zero()); // length exactly d
    EXPECT_THROW(persistent(one(), 0), std::invalid_argument);
}

TEST(Persistent, MatchesOracle) {
    Generator gen(5);
    for (int i = 0; i < 150; ++i) {
        const Signal s = gen.signal(8, 10, 4);
        const Time d = Time(gen.uniform(1, 12), gen.uniform(1, 4));
        EXPECT_EQ(persistent(s, d), oracle_persistent(s, d)) << s << " d=" << d;
    }
}

TEST(Persistent, MonotoneInWindowAndBelowOperand) {
    Generator gen(6);
    for (int i = 0; i < 200; ++i) {
        const Signal s = gen.signal();
        Time d1 = Time(gen.uniform(1, 40), gen.uniform(1, 8));
        Time d2 = d1 + Time(gen.uniform(0, 40), gen.uniform(1, 8));
        const Signal p1 = persistent(s, d1);
        const Signal p2 = persistent(s, d2);
        EXPECT_EQ(p1 & ~s, zero());
        EXPECT_EQ(p2 & ~p1, zero());
    }
}

TEST(FirstActivation, Examples) {
    EXPECT_EQ(first_activation(Signal::pulse(2, 5), Signal::pulse(7, 9)), Time(2));
    EXPECT_FALSE(first_activation(zero(), zero()).has_value());
    EXPECT_EQ(first_activation(Signal::step(0), zero()), Time(0));
    EXPECT_EQ(first_activation(zero(), one()), Time(0));
}

TEST(SignalAlgebra, NormalizationIdempotent) {
    Generator gen(1);
    for (int i = 0; i < 200; ++i) {
        const Signal s = gen.signal();
        EXPECT_EQ(Signal::make(s.initial(), s.changes()), s);
        for (std::size_t k = 1; k < s.changes().size(); ++k)
            EXPECT_NE(s.changes()[k - 1].to, s.changes()[k].to);
        if (!s.changes().empty())
            EXPECT_NE(s.changes()[0].to, s.initial());
    }
}

TEST(SignalAlgebra, PointwiseSoundnessOnGrid) {
    Generator gen(2);
    for (int i = 0; i < 200; ++i) {
        const Signal a = gen.signal();
        const Signal b = gen.signal();
        const Signal both[] = {a, b};
        const Signal x = a ^ b;
        const Signal n = a & ~b;
        for (const auto& at : sample_grid(both)) {
            EXPECT_EQ(sample(x, at), sample(a, at) ^ sample(b, at));
            EXPECT_EQ(sample_before(x, at), sample_before(a, at) ^ sample_before(b, at));
            EXPECT_EQ(sample(n, at), sample(a, at) & ~sample(b, at));
            EXPECT_EQ(sample_before(n, at), sample_before(a, at) & ~sample_before(b, at));
        }
    }
}

TEST(SignalAlgebra, DeMorganAndInvolution) {
    Generator gen(3);
    for (int i = 0; i < 200; ++i) {
        const Signal a = gen.signal();
        const Signal b = gen.signal();
        EXPECT_EQ(~~a, a);
        EXPECT_EQ(a & b, ~(~a | ~b));
    }
}

TEST(SignalAlgebra, EdgeSoundness) {
    Generator gen(4);
    for (int i = 0; i < 200; ++i) {
        const Signal s = gen.signal();
        const auto edges = rising_edges(s);
        const Signal only[] = {s};
        for (const auto& at : sample_grid(only)) {
            if (at.is_pre_start())
                continue;
            const bool rising = sample_before(s, at) == Bit::Zero && sample(s, at) == Bit::One;
            EXPECT_EQ(std::find(edges.begin(), edges.end(), at.time()) != edges.end(), rising);
        }
        const auto falls = falling_edges(s);
        for (std::size_t k = 1; k < edges.size(); ++k) {
            const auto n = std::count_if(falls.begin(), falls.end(),
                                         [&](const Time& t) { return edges[k - 1] < t && t < edges[k]; });
            EXPECT_EQ(n, 1);
        }
    }
}

TEST(SampleGrid, CoversPreStartZeroMidpointsAndTail) {
    const Signal s[] = {Signal::pulse(2, 5)};
    const auto grid = sample_grid(s);
    std::vector<std::string> got;
    for (const auto& i : grid)
        got.push_back(i.str());
    EXPECT_EQ(got, (std::vector<std::string>{"0-0", "0", "1", "2", "7/2", "5", "6"}));
    EXPECT_TRUE(std::is_sorted(grid.begin(), grid.end()));
}

} // namespace
