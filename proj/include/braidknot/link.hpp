#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "braidknot/braid.hpp"

namespace braidknot {

// One crossing of an oriented link diagram. The four incident arc ids sit
// in slots numbered counterclockwise starting from the incoming
// under-arc:
//   slot 0: under-arc entering;  slot 2: under-arc leaving.
//   sign +1: over-arc enters slot 3 and leaves through slot 1;
//   sign -1: over-arc enters slot 1 and leaves through slot 3.
struct Crossing {
    std::array<int, 4> arcs;
    int sign;  // +1 or -1

    bool operator==(const Crossing& other) const = default;
};

// An oriented link diagram: crossings plus crossing-free circles. Arcs
// are the strand segments between under-passages; each arc id occurs
// exactly twice, once leaving a crossing and once entering one.
class LinkDiagram {
public:
    LinkDiagram() = default;  // no crossings, no circles

    // Validates the arc/slot structure.
    LinkDiagram(std::vector<Crossing> crossings, int free_loops);

    static LinkDiagram unlink(int circles);

    // Closure of a braid word: position p of the braid becomes a strand
    // running top to bottom, and each position is joined back around.
    // Letter +i gives a positive crossing between positions i and i+1
    // with position i entering on the under side; letter -i the negative
    // one with position i+1 entering under.
    static LinkDiagram braid_closure(const BraidWord& word);

    // Round-trips with to_pd(); rejects malformed text with a message
    // naming the offending line.
    static LinkDiagram from_pd(const std::string& text);
    std::string to_pd() const;

    const std::vector<Crossing>& crossings() const { return crossings_; }
    std::size_t crossing_count() const { return crossings_.size(); }
    int free_loops() const { return free_loops_; }
    bool is_empty() const { return crossings_.empty() && free_loops_ == 0; }

    bool operator==(const LinkDiagram& other) const = default;

    // Sorted ids of all arcs appearing at crossings.
    std::vector<int> arcs() const;

    // Next arc downstream of `arc` (the arc a strand continues into after
    // its next under-passage).
    int successor(int arc) const;

    // Number of closed strands; errors on the empty diagram.
    int component_count() const;

    long long writhe() const;  // sum of crossing signs

    // Exchanges over and under at one crossing; arcs are unchanged, the
    // slots rotate so the incoming under-arc is again slot 0.
    LinkDiagram switch_crossing(std::size_t index) const;

    // Replaces one crossing by the smoothing that respects orientations
    // (each incoming arc joined to the outgoing arc on its side).
    LinkDiagram smooth_oriented(std::size_t index) const;

    enum class Smoothing { a, b };

    // Replaces one crossing by one of the two orientation-agnostic
    // smoothings: `a` joins slot 0 to slot 1 and slot 2 to slot 3, `b`
    // joins slot 0 to slot 3 and slot 1 to slot 2. Strands the smoothing
    // leaves inconsistent are re-oriented, so the result is again a valid
    // oriented diagram.
    LinkDiagram smooth_kauffman(std::size_t index, Smoothing kind) const;

    // Removes kinks (one arc filling two cyclically adjacent slots of a
    // crossing) and parallel two-crossing overpasses (one strand crossing
    // over another twice in a row) until none remain.
    LinkDiagram simplify_r1_r2() const;

    LinkDiagram mirror() const;  // switches every crossing

    LinkDiagram disjoint_union(const LinkDiagram& other) const;

    // Splices this diagram's `arc_here` with `other`'s `arc_there`: each
    // arc is cut and the loose ends are joined across, merging one
    // component of each diagram into one.
    LinkDiagram connected_sum(int arc_here, const LinkDiagram& other,
                              int arc_there) const;

private:
    void validate() const;

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
};

// Indices of the crossings first reached on their under side when
// walking every component from its smallest arc id (components ordered
// by smallest arc id), in walk order.
std::vector<std::size_t> descending_walk_bad_crossings(const LinkDiagram& diagram);

}  // namespace braidknot
