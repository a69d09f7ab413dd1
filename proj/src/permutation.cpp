#include "braidknot/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidknot {

Permutation::Permutation(int n) {
    if (n < 1) {
        throw std::invalid_argument("permutation degree must be at least 1, got " +
                                    std::to_string(n));
    }
    images_.resize(n);
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) {
        throw std::invalid_argument("permutation needs at least one entry");
    }
    const int n = degree();
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("permutation entry " + std::to_string(v) +
                                        " outside 1.." + std::to_string(n));
        }
        if (seen[v]) {
            throw std::invalid_argument("permutation entry " + std::to_string(v) +
                                        " repeated");
        }
        seen[v] = true;
    }
}

Permutation Permutation::parse(const std::string& text) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad permutation '" + text + "': " + why);
    };
    std::string body = text;
    // trim outer whitespace
    const auto first = body.find_first_not_of(" \t");
    const auto last = body.find_last_not_of(" \t");
    if (first == std::string::npos) fail("empty");
    body = body.substr(first, last - first + 1);
    if (body.size() < 3 || body.front() != '(' || body.back() != ')') {
        fail("expected parenthesized comma-separated entries like (3,1,2)");
    }
    body = body.substr(1, body.size() - 2);
    std::vector<int> images;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::stringstream entry(item);
        int v = 0;
        if (!(entry >> v)) fail("entry '" + item + "' is not an integer");
        std::string rest;
        if (entry >> rest) fail("entry '" + item + "' has trailing text");
        images.push_back(v);
    }
    if (images.empty()) fail("no entries");
    return Permutation(std::move(images));
}

int Permutation::image_of(int i) const {
    if (i < 1 || i > degree()) {
        throw std::invalid_argument("point " + std::to_string(i) + " outside 1.." +
                                    std::to_string(degree()));
    }
    return images_[i - 1];
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i) {
        if (images_[i - 1] != i) return false;
    }
    return true;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree()) {
        throw std::invalid_argument("cannot compose permutations of degrees " +
                                    std::to_string(degree()) + " and " +
                                    std::to_string(other.degree()));
    }
    std::vector<int> result(degree());
    for (int i = 1; i <= degree(); ++i) {
        result[i - 1] = other.images_[images_[i - 1] - 1];
    }
    return Permutation(std::move(result));
}

Permutation Permutation::inverse() const {
    std::vector<int> result(degree());
    for (int i = 1; i <= degree(); ++i) {
        result[images_[i - 1] - 1] = i;
    }
    return Permutation(std::move(result));
}

Permutation Permutation::power(long long k) const {
    Permutation base = k >= 0 ? *this : inverse();
    long long e = k >= 0 ? k : -k;
    Permutation acc(degree());
    while (e > 0) {
        if (e & 1) acc = acc.compose(base);
        base = base.compose(base);
        e >>= 1;
    }
    return acc;
}

Permutation Permutation::parallel(const Permutation& other) const {
    const int n = degree();
    std::vector<int> result = images_;
    result.reserve(n + other.degree());
    for (int v : other.images_) result.push_back(v + n);
    return Permutation(std::move(result));
}

long long Permutation::order() const {
    long long result = 1;
    for (const auto& cycle : cycles()) {
        result = std::lcm(result, static_cast<long long>(cycle.size()));
    }
    return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> result;
    std::vector<bool> visited(degree() + 1, false);
    for (int start = 1; start <= degree(); ++start) {
        if (visited[start]) continue;
        std::vector<int> cycle;
        int cur = start;
        while (!visited[cur]) {
            visited[cur] = true;
            cycle.push_back(cur);
            cur = images_[cur - 1];
        }
        result.push_back(std::move(cycle));
    }
    return result;
}

std::vector<int> Permutation::transposition_factorization() const {
    // Selection sort: move each value into place with adjacent swaps,
    // recording swap positions; the recorded sequence, applied left to
    // right, rebuilds the permutation with inversion_count() many factors.
    std::vector<int> line = images_;
    std::vector<int> factors;
    const int n = degree();
    for (int v = 1; v <= n; ++v) {
        int pos = v - 1;
        while (line[pos] != v) ++pos;
        for (; pos > v - 1; --pos) {
            std::swap(line[pos], line[pos - 1]);
            factors.push_back(pos);
        }
    }
    return factors;
}

long long Permutation::inversion_count() const {
    long long count = 0;
    const int n = degree();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (images_[i] > images_[j]) ++count;
        }
    }
    return count;
}

std::string Permutation::to_string() const {
    std::string out = "(";
    for (int i = 0; i < degree(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(images_[i]);
    }
    out += ')';
    return out;
}

}  // namespace braidknot
