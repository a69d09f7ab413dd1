#include "braidknot/invariants.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace braidknot {

namespace {

void check_cap(const LinkDiagram& d, std::size_t cap) {
    if (d.crossing_count() > cap) {
        throw std::invalid_argument("diagram has " + std::to_string(d.crossing_count()) +
                                    " crossings, above the cap of " + std::to_string(cap));
    }
}

void check_not_empty(const LinkDiagram& d) {
    if (d.is_empty()) {
        throw std::invalid_argument("empty diagram has no invariants");
    }
}

LaurentPoly conway_rec(const LinkDiagram& diagram) {
    const LinkDiagram d = diagram.simplify_r1_r2();
    if (d.crossing_count() == 0) {
        return d.free_loops() == 1 ? LaurentPoly::constant("z", 1)
                                   : LaurentPoly::zero("z");
    }
    const auto bad = descending_walk_bad_crossings(d);
    if (bad.empty()) {
        // Descending diagrams are unlinks; only the unknot contributes.
        return d.component_count() == 1 ? LaurentPoly::constant("z", 1)
                                        : LaurentPoly::zero("z");
    }
    const std::size_t site = bad.front();
    const auto switched = conway_rec(d.switch_crossing(site));
    const auto smoothed = conway_rec(d.smooth_oriented(site));
    const auto z = LaurentPoly::monomial("z", 1);
    return d.crossings()[site].sign > 0 ? switched + z * smoothed
                                        : switched - z * smoothed;
}

// Minimal union-find over arc ids for counting state loops.
class LoopCounter {
public:
    explicit LoopCounter(const std::vector<int>& arcs) {
        for (int a : arcs) parent_[a] = a;
    }

    int find(int a) {
        while (parent_.at(a) != a) {
            parent_[a] = parent_.at(parent_.at(a));
            a = parent_.at(a);
        }
        return a;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[a] = b;
    }

    int classes() {
        std::set<int> roots;
        for (const auto& [a, p] : parent_) {
            (void)p;
            roots.insert(find(a));
        }
        return static_cast<int>(roots.size());
    }

private:
    std::map<int, int> parent_;
};

}  // namespace

SkeinTriple skein_triple(const LinkDiagram& diagram, std::size_t index) {
    if (index >= diagram.crossing_count()) {
        throw std::invalid_argument("crossing index " + std::to_string(index) +
                                    " out of range");
    }
    const auto switched = diagram.switch_crossing(index);
    const auto smoothed = diagram.smooth_oriented(index);
    if (diagram.crossings()[index].sign > 0) {
        return SkeinTriple{diagram, switched, smoothed, index};
    }
    return SkeinTriple{switched, diagram, smoothed, index};
}

LaurentPoly conway_polynomial(const LinkDiagram& diagram, std::size_t crossing_cap) {
    check_not_empty(diagram);
    check_cap(diagram, crossing_cap);
    return conway_rec(diagram);
}

LaurentPoly kauffman_bracket(const LinkDiagram& diagram, std::size_t crossing_cap) {
    check_not_empty(diagram);
    check_cap(diagram, crossing_cap);
    const std::size_t c = diagram.crossing_count();
    if (c > 30) {
        throw std::invalid_argument("state sum over 2^" + std::to_string(c) +
                                    " smoothings is not feasible");
    }
    const auto delta = LaurentPoly::parse("-A^2 - A^-2", "A");
    if (c == 0) {
        return delta.pow(diagram.free_loops() - 1);
    }

    const auto arcs = diagram.arcs();
    std::vector<LaurentPoly> delta_pow{LaurentPoly::constant("A", 1)};
    LaurentPoly total("A");
    for (std::uint32_t state = 0; state < (std::uint32_t{1} << c); ++state) {
        LoopCounter loops(arcs);
        int a_count = 0;
        for (std::size_t k = 0; k < c; ++k) {
            const auto& x = diagram.crossings()[k];
            if ((state >> k & 1u) == 0) {
                ++a_count;
                loops.unite(x.arcs[0], x.arcs[1]);
                loops.unite(x.arcs[2], x.arcs[3]);
            } else {
                loops.unite(x.arcs[0], x.arcs[3]);
                loops.unite(x.arcs[1], x.arcs[2]);
            }
        }
        const int circles = loops.classes() + diagram.free_loops();
        while (static_cast<int>(delta_pow.size()) < circles) {
            delta_pow.push_back(delta_pow.back() * delta);
        }
        const long long exponent = 2LL * a_count - static_cast<long long>(c);
        total += LaurentPoly::monomial("A", exponent) * delta_pow[circles - 1];
    }
    return total;
}

LaurentPoly jones_polynomial(const LinkDiagram& diagram, std::size_t crossing_cap) {
    const auto bracket = kauffman_bracket(diagram, crossing_cap);
    const long long w = diagram.writhe();
    // (-A)^(-3w) times the bracket, then A -> q^(-1/2).
    const auto normalized =
        bracket * LaurentPoly::monomial("A", -3 * w, (w % 2 == 0) ? 1 : -1);
    return normalized.rescale_exponents(-1, 2, "q");
}

LinkInvariants invariants_of_braid(const BraidWord& word, std::size_t crossing_cap) {
    const BraidWord reduced = markov_simplify(word);
    const LinkDiagram diagram = LinkDiagram::braid_closure(reduced).simplify_r1_r2();
    LinkInvariants out;
    out.components = diagram.component_count();
    out.conway = conway_polynomial(diagram, crossing_cap);
    out.jones = jones_polynomial(diagram, crossing_cap);
    out.exponent_sum = word.exponent_sum();
    return out;
}

LinkInvariants invariants_of_diagram(const LinkDiagram& diagram, std::size_t crossing_cap) {
    check_not_empty(diagram);
    LinkInvariants out;
    out.components = diagram.component_count();
    out.conway = conway_polynomial(diagram, crossing_cap);
    out.jones = jones_polynomial(diagram, crossing_cap);
    out.exponent_sum = diagram.writhe();
    return out;
}

}  // namespace braidknot
