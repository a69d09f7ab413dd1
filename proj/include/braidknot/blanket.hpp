#pragma once

#include <string>
#include <vector>

#include "braidknot/braid.hpp"
#include "braidknot/invariants.hpp"
#include "braidknot/permutation.hpp"

namespace braidknot {

// One repeating pattern of the blanket: the braid word of a single
// repetition plus how often that repetition occurs across (copies) and
// down (vertical_repetitions) the fabric.
struct PatternSpec {
    char name;  // 'A', 'B', or 'C'
    BraidWord word;
    int strands_per_copy;
    int copies;
    int vertical_repetitions;
    int crossings_per_repetition;

    int total_strands() const { return strands_per_copy * copies; }
    long long total_crossings() const {
        return static_cast<long long>(copies) * vertical_repetitions *
               crossings_per_repetition;
    }
};

// The braid word of a single repetition of the named pattern.
BraidWord pattern_braid(char name);

// Variant of pattern C with the last crossing flipped over; it gains
// the left-right flip symmetry that pattern C itself lacks. Not part of
// the blanket — kept for comparison output only.
BraidWord pattern_c_variant();

PatternSpec pattern_spec(char name);

// Left-to-right column layout of the blanket.
std::vector<char> blanket_scheme();

// Accepts exactly the layout the blanket uses; anything else throws.
void validate_scheme(const std::vector<char>& scheme);

// The whole blanket as one braid word: each column of the scheme
// contributes its pattern word raised to that pattern's vertical
// repetition count, and the columns are composed side by side.
BraidWord blanket_braid();

// Everything the report records about one pattern.
struct PatternFacts {
    PatternSpec spec;
    Permutation permutation;  // strand permutation of one repetition
    long long order;
    bool flip_symmetric;
    LinkInvariants closure;  // invariants of the closed pattern word
};

struct BlanketReport {
    std::vector<PatternFacts> patterns;  // A, B, C in that order
    std::vector<char> scheme;
    int total_strands = 0;
    long long total_crossings = 0;
    bool is_pure = false;
    CrossingCertificate certificate{false, 0, "", ""};
    bool c_variant_flip_symmetric = false;
    std::string balance_note;
};

// Computes the full report. The purity answer is derived twice — from
// the assembled word's permutation and from the side-by-side product of
// the per-pattern permutation powers — and the routes must agree.
BlanketReport blanket_report();

std::string report_text(const BlanketReport& report);
std::string report_json(const BlanketReport& report);

}  // namespace braidknot
