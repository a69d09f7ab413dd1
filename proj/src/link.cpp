#include "braidknot/link.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidknot {

namespace {

int over_in_slot(int sign) { return sign > 0 ? 3 : 1; }
int over_out_slot(int sign) { return sign > 0 ? 1 : 3; }

// Union-find over arc ids whose representative is the smallest id in the
// class, so relabeling after a splice is deterministic.
class ArcUnion {
public:
    void add(int a) { parent_.emplace(a, a); }

    int find(int a) {
        int root = a;
        while (parent_.at(root) != root) root = parent_.at(root);
        while (parent_.at(a) != root) {
            const int next = parent_.at(a);
            parent_[a] = root;
            a = next;
        }
        return root;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) {
            parent_[b] = a;
        } else {
            parent_[a] = b;
        }
    }

private:
    std::map<int, int> parent_;
};

ArcUnion arc_union_of(const LinkDiagram& d) {
    ArcUnion u;
    for (int a : d.arcs()) u.add(a);
    return u;
}

// Removes the crossings in `removed`, gluing arcs together along `joins`
// (pairs of arcs that become one strand segment). Joined classes left
// with no crossing become crossing-free circles.
LinkDiagram splice(const LinkDiagram& d, const std::set<std::size_t>& removed,
                   const std::vector<std::pair<int, int>>& joins) {
    ArcUnion merged = arc_union_of(d);
    for (const auto& [u, v] : joins) merged.unite(u, v);

    std::vector<Crossing> kept;
    std::set<int> kept_arcs;
    for (std::size_t i = 0; i < d.crossings().size(); ++i) {
        if (removed.count(i)) continue;
        Crossing c = d.crossings()[i];
        for (int& a : c.arcs) {
            a = merged.find(a);
            kept_arcs.insert(a);
        }
        kept.push_back(c);
    }

    std::set<int> vanished;
    for (const auto& [u, v] : joins) {
        for (int end : {u, v}) {
            const int rep = merged.find(end);
            if (!kept_arcs.count(rep)) vanished.insert(rep);
        }
    }
    return LinkDiagram(std::move(kept),
                       d.free_loops() + static_cast<int>(vanished.size()));
}

// The two arcs straightened out when a crossing is deleted outright.
std::vector<std::pair<int, int>> flatten_joins(const Crossing& c) {
    return {{c.arcs[0], c.arcs[2]}, {c.arcs[1], c.arcs[3]}};
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    validate();
}

void LinkDiagram::validate() const {
    if (free_loops_ < 0) {
        throw std::invalid_argument("negative circle count " +
                                    std::to_string(free_loops_));
    }
    std::map<int, int> heads, tails;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        const Crossing& c = crossings_[i];
        if (c.sign != 1 && c.sign != -1) {
            throw std::invalid_argument("crossing " + std::to_string(i) +
                                        " has sign " + std::to_string(c.sign));
        }
        for (int a : c.arcs) {
            if (a <= 0) {
                throw std::invalid_argument("crossing " + std::to_string(i) +
                                            " uses non-positive arc id " +
                                            std::to_string(a));
            }
        }
        ++heads[c.arcs[0]];
        ++heads[c.arcs[over_in_slot(c.sign)]];
        ++tails[c.arcs[2]];
        ++tails[c.arcs[over_out_slot(c.sign)]];
    }
    for (const auto& [arc, n] : heads) {
        if (n != 1 || tails[arc] != 1) {
            throw std::invalid_argument("arc " + std::to_string(arc) +
                                        " enters " + std::to_string(n) +
                                        " crossings and leaves " +
                                        std::to_string(tails[arc]));
        }
    }
    for (const auto& [arc, n] : tails) {
        if (heads.find(arc) == heads.end()) {
            throw std::invalid_argument("arc " + std::to_string(arc) +
                                        " leaves a crossing but never enters one");
        }
        (void)n;
    }
}

LinkDiagram LinkDiagram::unlink(int circles) {
    return LinkDiagram({}, circles);
}

LinkDiagram LinkDiagram::braid_closure(const BraidWord& word) {
    const int n = word.strands();
    std::vector<int> current(n + 1);
    for (int p = 1; p <= n; ++p) current[p] = p;
    int next_id = n + 1;

    std::vector<Crossing> crossings;
    ArcUnion merged;
    for (int p = 1; p <= n; ++p) merged.add(p);
    for (int l : word.letters()) {
        const int i = l > 0 ? l : -l;
        const int below_i = next_id++;
        const int below_j = next_id++;
        merged.add(below_i);
        merged.add(below_j);
        if (l > 0) {
            crossings.push_back(Crossing{{current[i], below_i, below_j, current[i + 1]}, 1});
        } else {
            crossings.push_back(Crossing{{current[i + 1], current[i], below_i, below_j}, -1});
        }
        current[i] = below_i;
        current[i + 1] = below_j;
    }
    for (int p = 1; p <= n; ++p) merged.unite(current[p], p);

    std::set<int> used;
    for (Crossing& c : crossings) {
        for (int& a : c.arcs) {
            a = merged.find(a);
            used.insert(a);
        }
    }
    int free_loops = 0;
    for (int p = 1; p <= n; ++p) {
        if (merged.find(p) == p && !used.count(p)) ++free_loops;
    }

    // Compact arc ids to 1..m in increasing order of the old ids.
    std::map<int, int> compact;
    for (int a : used) compact.emplace(a, static_cast<int>(compact.size()) + 1);
    for (Crossing& c : crossings) {
        for (int& a : c.arcs) a = compact.at(a);
    }
    return LinkDiagram(std::move(crossings), free_loops);
}

std::vector<int> LinkDiagram::arcs() const {
    std::set<int> ids;
    for (const Crossing& c : crossings_) ids.insert(c.arcs.begin(), c.arcs.end());
    return {ids.begin(), ids.end()};
}

int LinkDiagram::successor(int arc) const {
    for (const Crossing& c : crossings_) {
        if (c.arcs[0] == arc) return c.arcs[2];
        if (c.arcs[over_in_slot(c.sign)] == arc) return c.arcs[over_out_slot(c.sign)];
    }
    throw std::invalid_argument("no arc " + std::to_string(arc) + " in the diagram");
}

int LinkDiagram::component_count() const {
    if (is_empty()) {
        throw std::invalid_argument("empty diagram has no components");
    }
    std::map<int, int> next;
    for (const Crossing& c : crossings_) {
        next[c.arcs[0]] = c.arcs[2];
        next[c.arcs[over_in_slot(c.sign)]] = c.arcs[over_out_slot(c.sign)];
    }
    std::set<int> visited;
    int cycles = 0;
    for (const auto& [start, ignored] : next) {
        (void)ignored;
        if (visited.count(start)) continue;
        ++cycles;
        int arc = start;
        while (!visited.count(arc)) {
            visited.insert(arc);
            arc = next.at(arc);
        }
    }
    return cycles + free_loops_;
}

long long LinkDiagram::writhe() const {
    long long sum = 0;
    for (const Crossing& c : crossings_) sum += c.sign;
    return sum;
}

LinkDiagram LinkDiagram::switch_crossing(std::size_t index) const {
    if (index >= crossings_.size()) {
        throw std::invalid_argument("crossing index " + std::to_string(index) +
                                    " out of range");
    }
    std::vector<Crossing> crossings = crossings_;
    const auto& a = crossings_[index].arcs;
    if (crossings_[index].sign > 0) {
        crossings[index] = Crossing{{a[3], a[0], a[1], a[2]}, -1};
    } else {
        crossings[index] = Crossing{{a[1], a[2], a[3], a[0]}, 1};
    }
    return LinkDiagram(std::move(crossings), free_loops_);
}

LinkDiagram LinkDiagram::smooth_oriented(std::size_t index) const {
    if (index >= crossings_.size()) {
        throw std::invalid_argument("crossing index " + std::to_string(index) +
                                    " out of range");
    }
    const Crossing& c = crossings_[index];
    std::vector<std::pair<int, int>> joins;
    if (c.sign > 0) {
        joins = {{c.arcs[0], c.arcs[1]}, {c.arcs[3], c.arcs[2]}};
    } else {
        joins = {{c.arcs[0], c.arcs[3]}, {c.arcs[1], c.arcs[2]}};
    }
    return splice(*this, {index}, joins);
}

LinkDiagram LinkDiagram::smooth_kauffman(std::size_t index, Smoothing kind) const {
    if (index >= crossings_.size()) {
        throw std::invalid_argument("crossing index " + std::to_string(index) +
                                    " out of range");
    }
    // Occurrence table: each arc sits at exactly two (crossing, slot) ports.
    std::map<int, std::vector<std::pair<std::size_t, int>>> ports;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        for (int s = 0; s < 4; ++s) ports[crossings_[i].arcs[s]].push_back({i, s});
    }
    auto is_in_port = [&](std::size_t ci, int s) {
        return s == 0 || s == over_in_slot(crossings_[ci].sign);
    };
    auto head_port = [&](int arc) {
        for (const auto& [ci, s] : ports.at(arc)) {
            if (is_in_port(ci, s)) return std::pair<std::size_t, int>{ci, s};
        }
        throw std::invalid_argument("arc " + std::to_string(arc) + " has no head");
    };
    auto tail_port = [&](int arc) {
        for (const auto& [ci, s] : ports.at(arc)) {
            if (!is_in_port(ci, s)) return std::pair<std::size_t, int>{ci, s};
        }
        throw std::invalid_argument("arc " + std::to_string(arc) + " has no tail");
    };
    // Slot pairing created by the smoothing at the removed crossing.
    auto partner = [&](int s) { return kind == Smoothing::a ? (s ^ 1) : (s ^ 3); };

    ArcUnion merged = arc_union_of(*this);
    std::map<std::size_t, bool> under_forward;  // under passage still runs slot 0 -> 2
    std::map<std::size_t, int> over_entry;      // slot (1 or 3) where over now enters
    std::set<int> visited;
    int free_loops = free_loops_;

    for (int start : arcs()) {
        if (visited.count(start)) continue;
        bool met_kept = false;
        int arc = start;
        bool forward = true;  // traveling toward the arc's old head
        do {
            visited.insert(arc);
            const auto [ci, slot] = forward ? head_port(arc) : tail_port(arc);
            std::size_t next_ci;
            int next_slot;
            if (ci == index) {
                next_ci = index;
                next_slot = partner(slot);
                merged.unite(arc, crossings_[index].arcs[next_slot]);
            } else {
                met_kept = true;
                next_ci = ci;
                next_slot = (slot + 2) % 4;
                if (slot % 2 == 0) {
                    under_forward[ci] = slot == 0;
                } else {
                    over_entry[ci] = slot;
                }
            }
            // Leaving through (next_ci, next_slot): travel toward the next
            // arc's other port, which is forward exactly when the port
            // being left is the arc's tail.
            forward = !is_in_port(next_ci, next_slot);
            arc = crossings_[next_ci].arcs[next_slot];
        } while (arc != start);
        if (!met_kept) ++free_loops;
    }

    std::vector<Crossing> rebuilt;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        if (i == index) continue;
        const Crossing& c = crossings_[i];
        std::array<int, 4> a;
        for (int s = 0; s < 4; ++s) a[s] = merged.find(c.arcs[s]);
        const bool u_fwd = under_forward.at(i);
        const int entry = over_entry.at(i);
        if (u_fwd) {
            rebuilt.push_back(Crossing{a, entry == 3 ? 1 : -1});
        } else {
            rebuilt.push_back(Crossing{{a[2], a[3], a[0], a[1]}, entry == 3 ? -1 : 1});
        }
    }
    return LinkDiagram(std::move(rebuilt), free_loops);
}

LinkDiagram LinkDiagram::simplify_r1_r2() const {
    LinkDiagram d = *this;
    while (true) {
        bool changed = false;

        // Kinks: one arc filling two cyclically adjacent slots.
        for (std::size_t i = 0; i < d.crossings_.size() && !changed; ++i) {
            const Crossing& c = d.crossings_[i];
            for (int s = 0; s < 4; ++s) {
                if (c.arcs[s] == c.arcs[(s + 1) % 4]) {
                    d = splice(d, {i}, flatten_joins(c));
                    changed = true;
                    break;
                }
            }
        }
        if (changed) continue;

        // Parallel overpasses: arcs x and y run side by side between
        // crossings i and j, with the same strand on top both times.
        for (std::size_t i = 0; i < d.crossings_.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < d.crossings_.size() && !changed; ++j) {
                const Crossing& ci = d.crossings_[i];
                const Crossing& cj = d.crossings_[j];
                for (int si = 0; si < 4 && !changed; ++si) {
                    for (int sj = 0; sj < 4 && !changed; ++sj) {
                        if (ci.arcs[si] != cj.arcs[sj]) continue;
                        const int x = ci.arcs[si];
                        for (int ti = 0; ti < 4 && !changed; ++ti) {
                            for (int tj = 0; tj < 4 && !changed; ++tj) {
                                const int y = ci.arcs[ti];
                                if (y == x || y != cj.arcs[tj]) continue;
                                // The two strands must bound a face: the
                                // slots advance around one crossing and
                                // retreat around the other.
                                const bool face =
                                    (tj == (sj + 3) % 4 && si == (ti + 3) % 4) ||
                                    (tj == (sj + 1) % 4 && si == (ti + 1) % 4);
                                if (!face) continue;
                                const bool x_under = si % 2 == 0 && sj % 2 == 0;
                                const bool x_over = si % 2 == 1 && sj % 2 == 1;
                                const bool y_under = ti % 2 == 0 && tj % 2 == 0;
                                const bool y_over = ti % 2 == 1 && tj % 2 == 1;
                                if (!((x_under && y_over) || (x_over && y_under))) continue;
                                auto joins = flatten_joins(ci);
                                const auto more = flatten_joins(cj);
                                joins.insert(joins.end(), more.begin(), more.end());
                                d = splice(d, {i, j}, joins);
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
        if (!changed) return d;
    }
}

LinkDiagram LinkDiagram::mirror() const {
    std::vector<Crossing> crossings;
    crossings.reserve(crossings_.size());
    for (const Crossing& c : crossings_) {
        const auto& a = c.arcs;
        if (c.sign > 0) {
            crossings.push_back(Crossing{{a[3], a[0], a[1], a[2]}, -1});
        } else {
            crossings.push_back(Crossing{{a[1], a[2], a[3], a[0]}, 1});
        }
    }
    return LinkDiagram(std::move(crossings), free_loops_);
}

LinkDiagram LinkDiagram::disjoint_union(const LinkDiagram& other) const {
    const auto own = arcs();
    const int offset = own.empty() ? 0 : own.back();
    std::vector<Crossing> crossings = crossings_;
    for (Crossing c : other.crossings_) {
        for (int& a : c.arcs) a += offset;
        crossings.push_back(c);
    }
    return LinkDiagram(std::move(crossings), free_loops_ + other.free_loops_);
}

LinkDiagram LinkDiagram::connected_sum(int arc_here, const LinkDiagram& other,
                                       int arc_there) const {
    const auto own = arcs();
    if (!std::binary_search(own.begin(), own.end(), arc_here)) {
        throw std::invalid_argument("no arc " + std::to_string(arc_here) +
                                    " in the left diagram");
    }
    const auto theirs = other.arcs();
    if (!std::binary_search(theirs.begin(), theirs.end(), arc_there)) {
        throw std::invalid_argument("no arc " + std::to_string(arc_there) +
                                    " in the right diagram");
    }
    const int offset = own.empty() ? 0 : own.back();
    std::vector<Crossing> crossings = crossings_;
    for (Crossing c : other.crossings_) {
        for (int& a : c.arcs) a += offset;
        crossings.push_back(c);
    }
    const int shifted = arc_there + offset;
    // Cut both arcs and reconnect across: each arc keeps its tail but
    // flows into the other's head.
    auto swap_heads = [&](int from, int to) {
        for (Crossing& c : crossings) {
            if (c.arcs[0] == from) {
                c.arcs[0] = to;
                return;
            }
            const int oi = over_in_slot(c.sign);
            if (c.arcs[oi] == from) {
                c.arcs[oi] = to;
                return;
            }
        }
        throw std::invalid_argument("arc " + std::to_string(from) + " has no head");
    };
    swap_heads(arc_here, -1);  // placeholder to avoid clashing mid-swap
    swap_heads(shifted, arc_here);
    for (Crossing& c : crossings) {
        for (int& a : c.arcs) {
            if (a == -1) a = shifted;
        }
    }
    return LinkDiagram(std::move(crossings), free_loops_ + other.free_loops_);
}

std::string LinkDiagram::to_pd() const {
    std::ostringstream out;
    const auto ids = arcs();
    out << "pd " << ids.size() << ' ' << free_loops_ << '\n';
    for (const Crossing& c : crossings_) {
        out << "x " << c.arcs[0] << ' ' << c.arcs[1] << ' ' << c.arcs[2] << ' '
            << c.arcs[3] << ' ' << c.sign << '\n';
    }
    for (int a : ids) {
        out << "s " << a << ' ' << successor(a) << '\n';
    }
    return out.str();
}

LinkDiagram LinkDiagram::from_pd(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument("bad diagram text, line " +
                                    std::to_string(lineno) + ": " + why);
    };

    if (!std::getline(in, line)) fail("missing header");
    ++lineno;
    std::istringstream header(line);
    std::string tag;
    long long arc_count = -1, loops = -1;
    if (!(header >> tag >> arc_count >> loops) || tag != "pd") {
        fail("expected 'pd <arc-count> <free-loops>', got '" + line + "'");
    }
    std::string extra;
    if (header >> extra) fail("trailing text '" + extra + "' in header");
    if (arc_count < 0 || loops < 0) fail("negative count in header");

    std::vector<Crossing> crossings;
    std::map<int, int> successors;
    bool seen_successor = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(line);
        if (!(fields >> tag)) fail("blank line");
        if (tag == "x") {
            if (seen_successor) fail("crossing line after successor lines");
            Crossing c{};
            if (!(fields >> c.arcs[0] >> c.arcs[1] >> c.arcs[2] >> c.arcs[3] >> c.sign)) {
                fail("expected 'x <a> <a> <a> <a> <sign>', got '" + line + "'");
            }
            if (fields >> extra) fail("trailing text '" + extra + "'");
            crossings.push_back(c);
        } else if (tag == "s") {
            seen_successor = true;
            int arc = 0, next = 0;
            if (!(fields >> arc >> next)) {
                fail("expected 's <arc> <next-arc>', got '" + line + "'");
            }
            if (fields >> extra) fail("trailing text '" + extra + "'");
            if (!successors.emplace(arc, next).second) {
                fail("duplicate successor line for arc " + std::to_string(arc));
            }
        } else {
            fail("unknown record '" + tag + "'");
        }
    }

    LinkDiagram result(std::move(crossings), static_cast<int>(loops));
    const auto ids = result.arcs();
    lineno = 1;
    if (static_cast<long long>(ids.size()) != arc_count) {
        fail("header claims " + std::to_string(arc_count) + " arcs but crossings use " +
             std::to_string(ids.size()));
    }
    lineno = 0;
    for (int a : ids) {
        auto it = successors.find(a);
        if (it == successors.end()) {
            throw std::invalid_argument("bad diagram text: missing successor line for arc " +
                                        std::to_string(a));
        }
        if (it->second != result.successor(a)) {
            throw std::invalid_argument(
                "bad diagram text: successor line for arc " + std::to_string(a) +
                " says " + std::to_string(it->second) + " but the crossings give " +
                std::to_string(result.successor(a)));
        }
    }
    if (successors.size() != ids.size()) {
        throw std::invalid_argument("bad diagram text: successor lines for unknown arcs");
    }
    return result;
}

std::vector<std::size_t> descending_walk_bad_crossings(const LinkDiagram& diagram) {
    std::map<int, std::pair<std::size_t, int>> head;
    for (std::size_t i = 0; i < diagram.crossings().size(); ++i) {
        const Crossing& c = diagram.crossings()[i];
        head[c.arcs[0]] = {i, 0};
        head[c.arcs[over_in_slot(c.sign)]] = {i, over_in_slot(c.sign)};
    }
    std::set<int> visited;
    std::set<std::size_t> met;
    std::vector<std::size_t> bad;
    for (int start : diagram.arcs()) {
        if (visited.count(start)) continue;
        int arc = start;
        do {
            visited.insert(arc);
            const auto [ci, slot] = head.at(arc);
            const Crossing& c = diagram.crossings()[ci];
            if (met.insert(ci).second && slot == 0) bad.push_back(ci);
            arc = slot == 0 ? c.arcs[2] : c.arcs[over_out_slot(c.sign)];
        } while (arc != start);
    }
    return bad;
}

}  // namespace braidknot
