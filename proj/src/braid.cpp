#include "braidknot/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidknot {

namespace {

int letter_sign(int letter) { return letter > 0 ? 1 : -1; }

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) {
        throw std::invalid_argument("braid needs at least 1 strand, got " +
                                    std::to_string(strands_));
    }
    for (int l : letters_) {
        if (l == 0) throw std::invalid_argument("braid letter must be nonzero");
        if (std::abs(l) > strands_ - 1) {
            throw std::invalid_argument("letter " + std::to_string(l) +
                                        " out of range for " + std::to_string(strands_) +
                                        " strands");
        }
    }
}

BraidWord BraidWord::parse(int strands, const std::string& text) {
    std::vector<int> letters;
    std::istringstream ss(text);
    std::string token;
    while (ss >> token) {
        int value = 0;
        const auto [ptr, ec] =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad braid letter '" + token + "'");
        }
        letters.push_back(value);
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::concat(const BraidWord& other) const {
    if (strands_ != other.strands_) {
        throw std::invalid_argument("cannot concatenate words on " +
                                    std::to_string(strands_) + " and " +
                                    std::to_string(other.strands_) + " strands");
    }
    std::vector<int> letters = letters_;
    letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
    return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::power(long long k) const {
    if (k < 0) throw std::invalid_argument("negative braid power");
    std::vector<int> letters;
    letters.reserve(letters_.size() * static_cast<std::size_t>(k));
    for (long long rep = 0; rep < k; ++rep) {
        letters.insert(letters.end(), letters_.begin(), letters_.end());
    }
    return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::inverse() const {
    std::vector<int> letters(letters_.rbegin(), letters_.rend());
    for (int& l : letters) l = -l;
    return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::parallel(const BraidWord& other) const {
    std::vector<int> letters = letters_;
    for (int l : other.letters_) {
        letters.push_back(l > 0 ? l + strands_ : l - strands_);
    }
    return BraidWord(strands_ + other.strands_, std::move(letters));
}

BraidWord BraidWord::free_reduce() const {
    std::vector<int> stack;
    for (int l : letters_) {
        if (!stack.empty() && stack.back() == -l) {
            stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    return BraidWord(strands_, std::move(stack));
}

BraidWord BraidWord::relation_rewrite(std::size_t pos, RewriteRule rule) const {
    std::vector<int> letters = letters_;
    if (rule == RewriteRule::yang_baxter) {
        if (pos + 3 > letters.size()) {
            throw std::invalid_argument("no room for a three-letter rewrite at position " +
                                        std::to_string(pos));
        }
        const int x = letters[pos], y = letters[pos + 1], z = letters[pos + 2];
        const bool applies = x == z && letter_sign(x) == letter_sign(y) &&
                             std::abs(std::abs(x) - std::abs(y)) == 1;
        if (!applies) {
            throw std::invalid_argument("letters at position " + std::to_string(pos) +
                                        " do not match the (x,y,x) -> (y,x,y) pattern");
        }
        letters[pos] = y;
        letters[pos + 1] = x;
        letters[pos + 2] = y;
    } else {
        if (pos + 2 > letters.size()) {
            throw std::invalid_argument("no room for a two-letter rewrite at position " +
                                        std::to_string(pos));
        }
        const int a = letters[pos], b = letters[pos + 1];
        if (std::abs(std::abs(a) - std::abs(b)) <= 1) {
            throw std::invalid_argument("letters at position " + std::to_string(pos) +
                                        " act on overlapping strand pairs");
        }
        std::swap(letters[pos], letters[pos + 1]);
    }
    return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::flip() const {
    std::vector<int> letters = letters_;
    for (int& l : letters) {
        l = l > 0 ? strands_ - l : -(strands_ + l);
    }
    return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::cyclic_shift(long long k) const {
    if (letters_.empty()) return *this;
    std::vector<int> letters = letters_;
    const long long len = static_cast<long long>(letters.size());
    const long long offset = ((k % len) + len) % len;
    std::rotate(letters.begin(), letters.begin() + offset, letters.end());
    return BraidWord(strands_, std::move(letters));
}

Permutation BraidWord::to_permutation() const {
    // pos[p] = strand currently at position p; a letter swaps two
    // neighboring positions. Reading the final placement back gives
    // where each strand ends.
    std::vector<int> pos(strands_ + 1);
    std::iota(pos.begin(), pos.end(), 0);
    for (int l : letters_) {
        const int i = std::abs(l);
        std::swap(pos[i], pos[i + 1]);
    }
    std::vector<int> images(strands_);
    for (int p = 1; p <= strands_; ++p) {
        images[pos[p] - 1] = p;
    }
    return Permutation(std::move(images));
}

bool BraidWord::is_pure() const { return to_permutation().is_identity(); }

long long BraidWord::exponent_sum() const {
    long long sum = 0;
    for (int l : letters_) sum += letter_sign(l);
    return sum;
}

std::string BraidWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(letters_[i]);
    }
    return out;
}

BraidClass classify(const BraidWord& word) {
    std::vector<int> signs(word.strands() - 1, 0);
    for (int l : word.letters()) {
        const int idx = std::abs(l) - 1;
        const int s = letter_sign(l);
        if (signs[idx] == 0) {
            signs[idx] = s;
        } else if (signs[idx] != s) {
            return BraidClass{BraidClass::Kind::non_homogeneous, {}};
        }
    }
    bool all_positive = true;
    bool alternating = true;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == 0) continue;
        if (signs[i] != 1) all_positive = false;
        const int wanted = (i + 1) % 2 == 1 ? 1 : -1;
        if (signs[i] != wanted) alternating = false;
    }
    auto kind = all_positive  ? BraidClass::Kind::positive
                : alternating ? BraidClass::Kind::alternating
                              : BraidClass::Kind::homogeneous;
    return BraidClass{kind, std::move(signs)};
}

std::string BraidClass::to_string() const {
    std::string name;
    switch (kind) {
        case Kind::positive: name = "positive"; break;
        case Kind::alternating: name = "alternating"; break;
        case Kind::homogeneous: name = "homogeneous"; break;
        case Kind::non_homogeneous: return "non-homogeneous";
    }
    name += " (";
    for (std::size_t i = 0; i < index_signs.size(); ++i) {
        if (i > 0) name += ',';
        if (index_signs[i] > 0) {
            name += "+1";
        } else if (index_signs[i] < 0) {
            name += "-1";
        } else {
            name += '0';
        }
    }
    name += ')';
    return name;
}

CrossingCertificate crossing_number_certificate(const BraidWord& word) {
    const BraidClass cls = classify(word);
    if (cls.kind == BraidClass::Kind::non_homogeneous) {
        return CrossingCertificate{false, word.to_permutation().inversion_count(), "", ""};
    }
    std::string basis, citation;
    switch (cls.kind) {
        case BraidClass::Kind::positive:
            basis = "positive";
            citation = "Alekseev-Mamedov 2019";
            break;
        case BraidClass::Kind::alternating:
            basis = "alternating";
            citation = "Turaev 1988";
            break;
        default:
            basis = "homogeneous";
            citation = "Alekseev-Mamedov 2019";
            break;
    }
    return CrossingCertificate{true, static_cast<long long>(word.length()),
                               std::move(basis), std::move(citation)};
}

std::string CrossingCertificate::to_string() const {
    if (certified) {
        return "certified " + std::to_string(value) + " (" + basis + ": " + citation + ")";
    }
    return "lower-bound " + std::to_string(value);
}

std::optional<BraidWord> destabilize(const BraidWord& word) {
    const int n = word.strands();
    if (n < 2) return std::nullopt;
    const int top = n - 1;
    std::size_t count = 0, where = 0;
    for (std::size_t i = 0; i < word.letters().size(); ++i) {
        if (std::abs(word.letters()[i]) == top) {
            ++count;
            where = i;
        }
    }
    if (count != 1) return std::nullopt;
    auto rotated = word.cyclic_shift(static_cast<long long>(where) + 1).letters();
    rotated.pop_back();
    return BraidWord(n - 1, std::move(rotated));
}

namespace {

// Free reduction plus cancellation of inverse pairs across the cyclic
// seam; both only shrink the word.
BraidWord cyclic_reduce(BraidWord word) {
    word = word.free_reduce();
    while (word.length() >= 2 && word.letters().front() == -word.letters().back()) {
        auto letters = word.letters();
        letters.erase(letters.begin());
        letters.pop_back();
        word = BraidWord(word.strands(), std::move(letters)).free_reduce();
    }
    return word;
}

}  // namespace

BraidWord markov_simplify(const BraidWord& word) {
    BraidWord current = word;
    while (true) {
        current = cyclic_reduce(current);
        if (auto shrunk = destabilize(current)) {
            current = *shrunk;
            continue;
        }
        BraidWord flipped = cyclic_reduce(current.flip());
        if (auto shrunk = destabilize(flipped)) {
            current = *shrunk;
            continue;
        }
        return current;
    }
}

BraidWord far_commute_normalize(const BraidWord& word) {
    std::vector<int> letters = word.letters();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
            const int a = std::abs(letters[i]), b = std::abs(letters[i + 1]);
            if (std::abs(a - b) > 1 && a > b) {
                std::swap(letters[i], letters[i + 1]);
                changed = true;
            }
        }
    }
    return BraidWord(word.strands(), std::move(letters));
}

bool flip_symmetric(const BraidWord& word) {
    return far_commute_normalize(word) == far_commute_normalize(word.flip());
}

}  // namespace braidknot
