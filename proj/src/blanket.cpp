#include "braidknot/blanket.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace braidknot {

namespace {

const std::vector<char> kScheme = {'A', 'B', 'A', 'C', 'C', 'C', 'A', 'B', 'A'};

std::string bool_text(bool value) { return value ? "true" : "false"; }

// Left-aligned columns, two spaces between them, no trailing padding.
std::string format_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out.append(widths[i - 1] - row[i - 1].size() + 2, ' ');
            }
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

long long coefficient_as_int64(const BigInt& value) {
    if (value > std::numeric_limits<long long>::max() ||
        value < std::numeric_limits<long long>::min()) {
        throw std::overflow_error("coefficient does not fit a 64-bit JSON number");
    }
    return value.convert_to<long long>();
}

// [[exponent, coefficient], ...] with exponents descending.
nlohmann::json poly_terms(const LaurentPoly& poly) {
    auto arr = nlohmann::json::array();
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        arr.push_back({it->first, coefficient_as_int64(it->second)});
    }
    return arr;
}

BraidWord column_braid(char name) {
    const auto spec = pattern_spec(name);
    return spec.word.power(spec.vertical_repetitions);
}

}  // namespace

BraidWord pattern_braid(char name) {
    switch (name) {
        case 'A':
            return BraidWord::parse(3, "1 -2");
        case 'B':
            return BraidWord::parse(6, "-1 -1 -1 -3 -3 -5 -5 -5 2 4");
        case 'C':
            return BraidWord::parse(4, "-2 -2 1 -3");
        default:
            throw std::invalid_argument(std::string("unknown pattern name '") +
                                        name + "' (expected A, B, or C)");
    }
}

BraidWord pattern_c_variant() { return BraidWord::parse(4, "-2 -2 1 3"); }

PatternSpec pattern_spec(char name) {
    switch (name) {
        case 'A':
            return {'A', pattern_braid('A'), 3, 4, 36, 2};
        case 'B':
            return {'B', pattern_braid('B'), 6, 2, 18, 10};
        case 'C':
            return {'C', pattern_braid('C'), 4, 3, 30, 4};
        default:
            throw std::invalid_argument(std::string("unknown pattern name '") +
                                        name + "' (expected A, B, or C)");
    }
}

std::vector<char> blanket_scheme() { return kScheme; }

void validate_scheme(const std::vector<char>& scheme) {
    for (char name : scheme) {
        pattern_spec(name);  // rejects unknown names with a better message
    }
    if (scheme != kScheme) {
        throw std::invalid_argument(
            "unsupported column scheme: the blanket uses A B A C C C A B A");
    }
}

BraidWord blanket_braid() {
    const auto scheme = blanket_scheme();
    validate_scheme(scheme);
    std::optional<BraidWord> braid;
    for (char name : scheme) {
        auto column = column_braid(name);
        braid = braid ? braid->parallel(column) : std::move(column);
    }
    return *braid;
}

BlanketReport blanket_report() {
    BlanketReport report;
    report.scheme = blanket_scheme();
    for (char name : {'A', 'B', 'C'}) {
        auto spec = pattern_spec(name);
        auto permutation = spec.word.to_permutation();
        const auto order = permutation.order();
        const bool symmetric = flip_symmetric(spec.word);
        auto closure = invariants_of_braid(spec.word);
        report.total_strands += spec.total_strands();
        report.total_crossings += spec.total_crossings();
        report.patterns.push_back({std::move(spec), std::move(permutation), order,
                                   symmetric, std::move(closure)});
    }

    const auto braid = blanket_braid();
    if (braid.strands() != report.total_strands ||
        static_cast<long long>(braid.length()) != report.total_crossings) {
        throw std::logic_error("assembled braid disagrees with the pattern totals");
    }

    // Purity, twice: read off the full word, and assemble the
    // per-pattern permutation powers side by side.
    const auto direct = braid.to_permutation();
    std::optional<Permutation> assembled;
    for (char name : report.scheme) {
        const auto spec = pattern_spec(name);
        auto piece = spec.word.to_permutation().power(spec.vertical_repetitions);
        assembled = assembled ? assembled->parallel(piece) : std::move(piece);
    }
    if (!(direct == *assembled)) {
        throw std::logic_error("the two purity computations disagree");
    }
    report.is_pure = direct.is_identity();

    report.certificate = crossing_number_certificate(braid);
    report.c_variant_flip_symmetric = flip_symmetric(pattern_c_variant());
    report.balance_note =
        "a fifth copy of pattern A would bring it to 360 crossings like B and C, "
        "but five A, three B, and four C columns cannot be arranged with the "
        "scheme's 180-degree rotational symmetry";
    return report;
}

std::string report_text(const BlanketReport& report) {
    std::string out;
    out += "blanket braid: " + std::to_string(report.total_strands) + " strands, " +
           std::to_string(report.total_crossings) + " crossings\n";
    out += "pure: " + bool_text(report.is_pure) + "\n";
    out += "crossing certificate: " + report.certificate.to_string() + "\n";
    out += "scheme:";
    for (char name : report.scheme) {
        out += ' ';
        out += name;
    }
    out += "\n\n";

    std::vector<std::vector<std::string>> stats = {{"pattern", "word", "strands/copy",
                                                    "copies", "strands", "repetitions",
                                                    "crossings/rep", "crossings"}};
    for (const auto& p : report.patterns) {
        stats.push_back({std::string(1, p.spec.name), p.spec.word.to_string(),
                         std::to_string(p.spec.strands_per_copy),
                         std::to_string(p.spec.copies),
                         std::to_string(p.spec.total_strands()),
                         std::to_string(p.spec.vertical_repetitions),
                         std::to_string(p.spec.crossings_per_repetition),
                         std::to_string(p.spec.total_crossings())});
    }
    out += format_table(stats);
    out += '\n';

    std::vector<std::vector<std::string>> symmetry = {
        {"pattern", "permutation", "order", "flip-symmetric"}};
    for (const auto& p : report.patterns) {
        symmetry.push_back({std::string(1, p.spec.name), p.permutation.to_string(),
                            std::to_string(p.order), bool_text(p.flip_symmetric)});
    }
    out += format_table(symmetry);
    out += "variant C' (" + pattern_c_variant().to_string() +
           "): flip-symmetric " + bool_text(report.c_variant_flip_symmetric) + "\n\n";

    std::vector<std::vector<std::string>> closures = {
        {"closure", "components", "conway", "jones", "exponent-sum"}};
    for (const auto& p : report.patterns) {
        closures.push_back({std::string(1, p.spec.name),
                            std::to_string(p.closure.components),
                            p.closure.conway.to_string(), p.closure.jones.to_string(),
                            std::to_string(p.closure.exponent_sum)});
    }
    out += format_table(closures);
    out += '\n';

    out += "note: " + report.balance_note + "\n";
    return out;
}

std::string report_json(const BlanketReport& report) {
    nlohmann::json j;
    j["total_strands"] = report.total_strands;
    j["total_crossings"] = report.total_crossings;
    j["is_pure"] = report.is_pure;
    j["certificate"] = report.certificate.to_string();
    auto scheme = nlohmann::json::array();
    for (char name : report.scheme) {
        scheme.push_back(std::string(1, name));
    }
    j["scheme"] = std::move(scheme);
    auto patterns = nlohmann::json::array();
    for (const auto& p : report.patterns) {
        nlohmann::json entry;
        entry["name"] = std::string(1, p.spec.name);
        entry["word"] = p.spec.word.to_string();
        entry["strands_per_copy"] = p.spec.strands_per_copy;
        entry["copies"] = p.spec.copies;
        entry["total_strands"] = p.spec.total_strands();
        entry["repetitions"] = p.spec.vertical_repetitions;
        entry["crossings_per_repetition"] = p.spec.crossings_per_repetition;
        entry["total_crossings"] = p.spec.total_crossings();
        entry["permutation"] = p.permutation.to_string();
        entry["order"] = p.order;
        entry["flip_symmetric"] = p.flip_symmetric;
        entry["closure"] = {{"components", p.closure.components},
                            {"conway", poly_terms(p.closure.conway)},
                            {"jones", poly_terms(p.closure.jones)},
                            {"exponent_sum", p.closure.exponent_sum}};
        patterns.push_back(std::move(entry));
    }
    j["patterns"] = std::move(patterns);
    j["c_variant"] = {{"word", pattern_c_variant().to_string()},
                      {"flip_symmetric", report.c_variant_flip_symmetric}};
    j["note"] = report.balance_note;
    return j.dump();
}

}  // namespace braidknot
