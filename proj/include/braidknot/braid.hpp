#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidknot/permutation.hpp"

namespace braidknot {

// A word in the braid group on `strands()` strands. Letter +i is the
// positive crossing of strands i and i+1 (strand i passes under), letter
// -i its inverse; letters satisfy 1 <= |letter| <= strands()-1.
class BraidWord {
public:
    explicit BraidWord(int strands, std::vector<int> letters = {});

    // Space-separated signed indices, e.g. "1 -2 1"; empty text is the
    // empty word.
    static BraidWord parse(int strands, const std::string& text);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }

    bool operator==(const BraidWord& other) const = default;

    BraidWord concat(const BraidWord& other) const;  // same strand count
    BraidWord power(long long k) const;              // k >= 0
    BraidWord inverse() const;

    // Side-by-side product: `other`'s strands are renumbered to start
    // after this word's strands.
    BraidWord parallel(const BraidWord& other) const;

    // Cancels all adjacent inverse pairs (to a fixed point).
    BraidWord free_reduce() const;

    enum class RewriteRule { yang_baxter, far_commute };

    // Applies one relation at position `pos` (0-based):
    //  - yang_baxter rewrites letters (x, y, x) -> (y, x, y) when x and y
    //    have the same sign and adjacent indices;
    //  - far_commute swaps letters whose indices differ by more than 1.
    // Errors when the rule does not apply at `pos`.
    BraidWord relation_rewrite(std::size_t pos, RewriteRule rule) const;

    // The symmetry i -> strands()-i applied to every letter index.
    BraidWord flip() const;

    // Rotates the word k positions to the left (k may be negative).
    BraidWord cyclic_shift(long long k) const;

    // Strand permutation read off the word: the strand starting at
    // position i ends at position image_of(i).
    Permutation to_permutation() const;

    bool is_pure() const;  // trivial strand permutation
    long long exponent_sum() const;

    std::string to_string() const;  // letters joined by single spaces

private:
    int strands_;
    std::vector<int> letters_;
};

// Syntactic sign pattern of a word, judged as written (no rewriting).
struct BraidClass {
    enum class Kind { positive, alternating, homogeneous, non_homogeneous };

    Kind kind;
    // index_signs[i-1] is +1 or -1 when generator index i appears with
    // that constant sign, 0 when index i is unused; empty for
    // non-homogeneous words.
    std::vector<int> index_signs;

    std::string to_string() const;  // e.g. "homogeneous (+1,-1,-1)"
};

// Precedence: positive, else alternating, else homogeneous, else
// non-homogeneous. Alternating means every used index carries sign + at
// odd indices and - at even ones.
BraidClass classify(const BraidWord& word);

// Crossing-number estimate for the closure of a word. For word classes
// where the written length is known to realize the minimum, the value is
// certified and cites the source of that fact; otherwise only the
// permutation lower bound is reported.
struct CrossingCertificate {
    bool certified;
    long long value;
    std::string basis;     // class name when certified, empty otherwise
    std::string citation;  // empty when not certified

    std::string to_string() const;  // "certified 2 (alternating: Turaev 1988)"
};

CrossingCertificate crossing_number_certificate(const BraidWord& word);

// Removes one strand when the top generator index appears exactly once:
// the word is rotated so that letter sits last, the letter is dropped,
// and the strand count decreases. Empty result when the move is not
// available.
std::optional<BraidWord> destabilize(const BraidWord& word);

// Greedy closure-preserving shrink: free and cyclic cancellation, then
// strand removal, retrying after the flip symmetry when stuck. The flip
// is undone when it does not lead to a removal.
BraidWord markov_simplify(const BraidWord& word);

// Fixed point of left-to-right passes that swap far commuting neighbors
// into ascending index order; a cheap syntactic normal form.
BraidWord far_commute_normalize(const BraidWord& word);

// Whether the word equals its flip up to far commutation.
bool flip_symmetric(const BraidWord& word);

}  // namespace braidknot
