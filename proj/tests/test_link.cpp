#include "braidknot/link.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "support/oracles.hpp"

using braidknot::BraidWord;
using braidknot::Crossing;
using braidknot::LinkDiagram;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

LinkDiagram closure_of(int strands, const std::string& word) {
    return LinkDiagram::braid_closure(BraidWord::parse(strands, word));
}

}  // namespace

TEST_CASE("validation rejects broken structures") {
    CHECK_THROWS_AS(LinkDiagram({Crossing{{1, 2, 3, 4}, 2}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(LinkDiagram({Crossing{{1, 2, 3, 4}, 1}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(LinkDiagram({Crossing{{0, 1, 2, 3}, 1}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(LinkDiagram({}, -1), std::invalid_argument);
    // A valid one-crossing diagram: both strands loop back.
    CHECK_NOTHROW(LinkDiagram({Crossing{{1, 1, 2, 2}, 1}}, 0));
}

TEST_CASE("unlinks and the empty diagram") {
    CHECK(LinkDiagram().is_empty());
    CHECK_THROWS_AS(LinkDiagram().component_count(), std::invalid_argument);
    CHECK(LinkDiagram::unlink(3).component_count() == 3);
    CHECK(LinkDiagram::unlink(0) == LinkDiagram());
    CHECK(LinkDiagram::unlink(2).crossing_count() == 0);
}

TEST_CASE("braid closure produces the pinned records") {
    const auto hopf = closure_of(2, "1 1");
    REQUIRE(hopf.crossing_count() == 2);
    CHECK(hopf.crossings()[0] == Crossing{{1, 3, 4, 2}, 1});
    CHECK(hopf.crossings()[1] == Crossing{{3, 1, 2, 4}, 1});
    CHECK(hopf.free_loops() == 0);
    CHECK(hopf.component_count() == 2);
    CHECK(hopf.writhe() == 2);

    const auto trefoil = closure_of(2, "1 1 1");
    REQUIRE(trefoil.crossing_count() == 3);
    CHECK(trefoil.crossings()[1] == Crossing{{3, 5, 6, 4}, 1});
    CHECK(trefoil.component_count() == 1);

    CHECK(closure_of(3, "").component_count() == 3);
    CHECK(closure_of(3, "") == LinkDiagram::unlink(3));
    const auto lonely = closure_of(3, "1");
    CHECK(lonely.crossing_count() == 1);
    CHECK(lonely.free_loops() == 1);
    CHECK(lonely.component_count() == 2);
}

TEST_CASE("closure component count and writhe match the braid data") {
    std::mt19937 rng(14001);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto w = testsupport::random_word(rng, n, 10);
        const auto d = LinkDiagram::braid_closure(w);
        CHECK(d.component_count() ==
              static_cast<int>(w.to_permutation().cycles().size()));
        CHECK(d.writhe() == w.exponent_sum());
        CHECK(d.crossing_count() == w.length());
    }
}

TEST_CASE("successor chains") {
    const auto hopf = closure_of(2, "1 1");
    CHECK(hopf.successor(1) == 4);
    CHECK(hopf.successor(4) == 1);
    CHECK(hopf.successor(2) == 3);
    CHECK(hopf.successor(3) == 2);
    CHECK_THROWS_AS(hopf.successor(9), std::invalid_argument);

    const auto trefoil = closure_of(2, "1 1 1");
    int arc = 1;
    std::vector<int> seen;
    do {
        seen.push_back(arc);
        arc = trefoil.successor(arc);
    } while (arc != 1);
    CHECK(seen == std::vector<int>{1, 4, 5, 2, 3, 6});
}

TEST_CASE("pd text round-trips bit-exactly") {
    for (const std::string name : {"unknot.pd", "unlink2.pd", "hopf.pd", "k1.pd", "k2.pd"}) {
        const std::string text = slurp(name);
        const auto d = LinkDiagram::from_pd(text);
        CHECK(d.to_pd() == text);
    }
    CHECK(closure_of(2, "1 1").to_pd() == slurp("hopf.pd"));
    CHECK(closure_of(2, "1 1 1").to_pd() == slurp("k1.pd"));
    CHECK(LinkDiagram::unlink(1).to_pd() == "pd 0 1\n");
    CHECK(LinkDiagram::from_pd(slurp("k2.pd")).component_count() == 1);

    std::mt19937 rng(14002);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto d = LinkDiagram::braid_closure(testsupport::random_word(rng, n, 8));
        CHECK(LinkDiagram::from_pd(d.to_pd()) == d);
    }
}

TEST_CASE("pd parsing rejects malformed text") {
    CHECK_THROWS_AS(LinkDiagram::from_pd(""), std::invalid_argument);
    CHECK_THROWS_AS(LinkDiagram::from_pd("pd x 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(LinkDiagram::from_pd("pd 0 0 7\n"), std::invalid_argument);
    CHECK_THROWS_AS(LinkDiagram::from_pd("pd 0 -1\n"), std::invalid_argument);
    CHECK_THROWS_AS(LinkDiagram::from_pd("pd 0 0\ny 1 2\n"), std::invalid_argument);
    // wrong arc count in the header
    CHECK_THROWS_AS(
        LinkDiagram::from_pd("pd 3 0\nx 1 1 2 2 1\ns 1 2\ns 2 1\n"),
        std::invalid_argument);
    // missing successor line
    CHECK_THROWS_AS(LinkDiagram::from_pd("pd 2 0\nx 1 1 2 2 1\ns 1 2\n"),
                    std::invalid_argument);
    // inconsistent successor line
    CHECK_THROWS_AS(
        LinkDiagram::from_pd("pd 2 0\nx 1 1 2 2 1\ns 1 1\ns 2 2\n"),
        std::invalid_argument);
    // arc appearing twice as a head
    CHECK_THROWS_AS(
        LinkDiagram::from_pd("pd 4 0\nx 1 1 2 2 1\nx 1 3 4 2 1\ns 1 2\ns 2 1\ns 3 4\ns 4 3\n"),
        std::invalid_argument);
    // sign outside {1,-1}
    CHECK_THROWS_AS(LinkDiagram::from_pd("pd 2 0\nx 1 1 2 2 3\ns 1 2\ns 2 1\n"),
                    std::invalid_argument);
}

TEST_CASE("switching a crossing") {
    const auto hopf = closure_of(2, "1 1");
    const auto switched = hopf.switch_crossing(0);
    CHECK(switched.crossings()[0] == Crossing{{2, 1, 3, 4}, -1});
    CHECK(switched.crossings()[1] == hopf.crossings()[1]);
    CHECK(switched.writhe() == 0);
    CHECK(switched.component_count() == 2);
    CHECK_THROWS_AS(hopf.switch_crossing(2), std::invalid_argument);

    std::mt19937 rng(14003);
    for (int trial = 0; trial < 60; ++trial) {
        const auto d = LinkDiagram::braid_closure(
            testsupport::random_word(rng, 2 + static_cast<int>(rng() % 3), 8));
        for (std::size_t i = 0; i < d.crossing_count(); ++i) {
            const auto once = d.switch_crossing(i);
            CHECK(once.switch_crossing(i) == d);
            CHECK(once.crossings()[i].sign == -d.crossings()[i].sign);
            CHECK(once.component_count() == d.component_count());
            CHECK(once.arcs() == d.arcs());
            // orientations survive: the strand order along each arc is
            // untouched, only over and under change places
            for (int a : d.arcs()) CHECK(once.successor(a) == d.successor(a));
        }
    }
}

TEST_CASE("mirror equals the all-negative closure") {
    CHECK(closure_of(2, "1 1").mirror() == closure_of(2, "-1 -1"));
    CHECK(closure_of(2, "1 1 1").mirror() == closure_of(2, "-1 -1 -1"));
    const auto k2 = LinkDiagram::from_pd(slurp("k2.pd"));
    CHECK(k2.mirror().mirror() == k2);
    CHECK(k2.mirror().writhe() == -5);
}

TEST_CASE("oriented smoothing") {
    const auto hopf = closure_of(2, "1 1");
    const auto smoothed = hopf.smooth_oriented(0);
    REQUIRE(smoothed.crossing_count() == 1);
    CHECK(smoothed.crossings()[0] == Crossing{{1, 1, 2, 2}, 1});
    CHECK(smoothed.component_count() == 1);
    CHECK(smoothed.free_loops() == 0);

    // Smoothing the lone kink crossing splits the circle in two; this is
    // not the same as flattening the kink away.
    CHECK(smoothed.smooth_oriented(0) == LinkDiagram::unlink(2));

    std::mt19937 rng(14004);
    for (int trial = 0; trial < 60; ++trial) {
        const auto d = LinkDiagram::braid_closure(
            testsupport::random_word(rng, 2 + static_cast<int>(rng() % 3), 8));
        for (std::size_t i = 0; i < d.crossing_count(); ++i) {
            const auto s = d.smooth_oriented(i);
            CHECK(s.crossing_count() == d.crossing_count() - 1);
            // An oriented smoothing splits or merges exactly one pair of
            // components.
            CHECK(std::abs(s.component_count() - d.component_count()) == 1);
        }
    }
}

TEST_CASE("kauffman smoothings") {
    const auto hopf = closure_of(2, "1 1");

    // The a-smoothing respects orientations at positive crossings, the
    // b-smoothing at negative ones.
    std::mt19937 rng(14005);
    for (int trial = 0; trial < 60; ++trial) {
        const auto d = LinkDiagram::braid_closure(
            testsupport::random_word(rng, 2 + static_cast<int>(rng() % 3), 8));
        for (std::size_t i = 0; i < d.crossing_count(); ++i) {
            const auto compatible = d.crossings()[i].sign > 0
                                        ? LinkDiagram::Smoothing::a
                                        : LinkDiagram::Smoothing::b;
            CHECK(d.smooth_kauffman(i, compatible) == d.smooth_oriented(i));
            // The other smoothing reverses strands but must stay valid.
            const auto other = d.crossings()[i].sign > 0 ? LinkDiagram::Smoothing::b
                                                         : LinkDiagram::Smoothing::a;
            CHECK_NOTHROW(d.smooth_kauffman(i, other));
            CHECK(d.smooth_kauffman(i, other).crossing_count() ==
                  d.crossing_count() - 1);
        }
    }

    // Full cascades over the hopf link: loop counts 2,1,1,2.
    std::vector<int> loops;
    for (const auto& state :
         {std::pair{LinkDiagram::Smoothing::a, LinkDiagram::Smoothing::a},
          std::pair{LinkDiagram::Smoothing::a, LinkDiagram::Smoothing::b},
          std::pair{LinkDiagram::Smoothing::b, LinkDiagram::Smoothing::a},
          std::pair{LinkDiagram::Smoothing::b, LinkDiagram::Smoothing::b}}) {
        auto d = hopf.smooth_kauffman(0, state.first).smooth_kauffman(0, state.second);
        CHECK(d.crossing_count() == 0);
        loops.push_back(d.free_loops());
    }
    CHECK(loops == std::vector<int>{2, 1, 1, 2});
}

TEST_CASE("kink and overpass removal") {
    CHECK(closure_of(2, "1").simplify_r1_r2() == LinkDiagram::unlink(1));
    CHECK(closure_of(2, "1 -1").simplify_r1_r2() == LinkDiagram::unlink(2));
    CHECK(closure_of(2, "-1").simplify_r1_r2() == LinkDiagram::unlink(1));
    CHECK(closure_of(2, "1 1").simplify_r1_r2() == closure_of(2, "1 1"));
    CHECK(closure_of(2, "1 1 1").simplify_r1_r2() == closure_of(2, "1 1 1"));

    // A stabilized trefoil loses its extra crossing and nothing else.
    const auto stab = closure_of(3, "1 1 1 2").simplify_r1_r2();
    CHECK(stab.crossing_count() == 3);
    CHECK(testsupport::canonical_encoding(stab) ==
          testsupport::canonical_encoding(closure_of(2, "1 1 1")));

    std::mt19937 rng(14006);
    for (int trial = 0; trial < 80; ++trial) {
        const auto d = LinkDiagram::braid_closure(
            testsupport::random_word(rng, 2 + static_cast<int>(rng() % 4), 9));
        const auto s = d.simplify_r1_r2();
        CHECK(s.crossing_count() <= d.crossing_count());
        CHECK(s.simplify_r1_r2() == s);
        if (!d.is_empty()) {
            CHECK(s.component_count() == d.component_count());
        }
    }
}

TEST_CASE("disjoint union") {
    const auto hopf = closure_of(2, "1 1");
    const auto both = hopf.disjoint_union(hopf);
    CHECK(both.crossing_count() == 4);
    CHECK(both.component_count() == 4);
    CHECK(both.writhe() == 4);
    CHECK(hopf.disjoint_union(LinkDiagram::unlink(2)).component_count() == 4);
    CHECK(LinkDiagram::unlink(1).disjoint_union(hopf).component_count() == 3);
}

TEST_CASE("connected sum") {
    const auto trefoil = closure_of(2, "1 1 1");
    const auto granny = trefoil.connected_sum(1, trefoil, 1);
    CHECK(granny.crossing_count() == 6);
    CHECK(granny.component_count() == 1);
    CHECK(granny.writhe() == 6);

    const auto hopf = closure_of(2, "1 1");
    const auto sum = trefoil.connected_sum(2, hopf, 3);
    CHECK(sum.crossing_count() == 5);
    CHECK(sum.component_count() == 2);

    CHECK_THROWS_AS(trefoil.connected_sum(9, hopf, 1), std::invalid_argument);
    CHECK_THROWS_AS(trefoil.connected_sum(1, hopf, 9), std::invalid_argument);

    // Summing with a one-crossing circle is undone by the cleanup pass.
    const auto kinked = closure_of(2, "1");
    const auto padded = trefoil.connected_sum(1, kinked, 1).simplify_r1_r2();
    CHECK(testsupport::canonical_encoding(padded) ==
          testsupport::canonical_encoding(trefoil));

    std::mt19937 rng(14007);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = LinkDiagram::braid_closure(
            testsupport::random_word(rng, 2 + static_cast<int>(rng() % 3), 6));
        const auto b = LinkDiagram::braid_closure(
            testsupport::random_word(rng, 2 + static_cast<int>(rng() % 3), 6));
        if (a.crossing_count() == 0 || b.crossing_count() == 0) continue;
        const int arc_a = a.arcs()[rng() % a.arcs().size()];
        const int arc_b = b.arcs()[rng() % b.arcs().size()];
        const auto s = a.connected_sum(arc_a, b, arc_b);
        CHECK(s.component_count() == a.component_count() + b.component_count() - 1);
        CHECK(s.writhe() == a.writhe() + b.writhe());
        CHECK(s.crossing_count() == a.crossing_count() + b.crossing_count());
    }
}

TEST_CASE("walk order bad crossings") {
    // All-positive closures walked from arc 1 meet their first crossing
    // on the under side.
    const auto trefoil = closure_of(2, "1 1 1");
    const auto bad = braidknot::descending_walk_bad_crossings(trefoil);
    REQUIRE(!bad.empty());
    CHECK(bad.front() == 0);

    // A descending diagram: switch every bad crossing as reported.
    auto d = closure_of(3, "1 2 1 2");
    while (true) {
        const auto bads = braidknot::descending_walk_bad_crossings(d);
        if (bads.empty()) break;
        d = d.switch_crossing(bads.front());
    }
    CHECK(braidknot::descending_walk_bad_crossings(d).empty());
    CHECK(d.component_count() == d.component_count());  // still walkable

    std::mt19937 rng(14008);
    for (int trial = 0; trial < 60; ++trial) {
        const auto c = LinkDiagram::braid_closure(
            testsupport::random_word(rng, 2 + static_cast<int>(rng() % 3), 8));
        const auto bads = braidknot::descending_walk_bad_crossings(c);
        CHECK(bads.size() <= c.crossing_count());
        if (!bads.empty()) {
            // Switching the first bad crossing strictly shrinks the list.
            const auto fewer =
                braidknot::descending_walk_bad_crossings(c.switch_crossing(bads.front()));
            CHECK(fewer.size() < bads.size());
            for (auto idx : fewer) {
                CHECK(std::find(bads.begin(), bads.end(), idx) != bads.end());
            }
        }
    }
}
