#pragma once

#include <string>
#include <vector>

namespace braidknot {

// Permutation of {1,...,n} in one-line notation: images[i-1] is the image of i.
// Composition is left-to-right: (a * b) sends i to b(a(i)).
class Permutation {
public:
    // Identity on {1,...,n}.
    explicit Permutation(int n);

    // One-line notation; must be a bijection of {1,...,n}.
    explicit Permutation(std::vector<int> images);

    // Accepts the canonical form "(3,1,2)"; spaces around entries are tolerated.
    static Permutation parse(const std::string& text);

    int degree() const { return static_cast<int>(images_.size()); }
    int image_of(int i) const;
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    bool operator==(const Permutation& other) const = default;

    Permutation compose(const Permutation& other) const;  // this, then other
    Permutation inverse() const;
    Permutation power(long long k) const;  // k may be negative

    // Places `other` on {n+1,...,n+m}, fixing nothing else.
    Permutation parallel(const Permutation& other) const;

    // Least k > 0 with p^k = identity (lcm of cycle lengths).
    long long order() const;

    // Cycles each starting at their smallest element, listed by smallest
    // element; fixed points appear as singletons.
    std::vector<std::vector<int>> cycles() const;

    // Writes the permutation as a product of adjacent transpositions
    // (i i+1), read left to right; the result has minimal length.
    std::vector<int> transposition_factorization() const;

    // Number of pairs i < j with image_of(i) > image_of(j); equals the
    // minimal number of adjacent transpositions needed.
    long long inversion_count() const;

    std::string to_string() const;  // "(3,1,2)"

private:
    std::vector<int> images_;
};

}  // namespace braidknot
