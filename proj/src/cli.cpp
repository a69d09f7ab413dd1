#include "braidknot/cli.hpp"

#include <fstream>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidknot/blanket.hpp"
#include "braidknot/braid.hpp"
#include "braidknot/invariants.hpp"
#include "braidknot/link.hpp"
#include "braidknot/permutation.hpp"
#include "json.hpp"

namespace braidknot {

namespace {

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

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) {
        throw std::invalid_argument("cannot read file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::string cycles_text(const Permutation& p) {
    std::string out;
    for (const auto& cycle : p.cycles()) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    return out;
}

std::string joined(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

struct WordArgs {
    int strands = 0;
    std::string word;
};

// Adds the common strand-count flag and word positional.
WordArgs* add_word_options(CLI::App* cmd, std::vector<std::unique_ptr<WordArgs>>& store) {
    store.push_back(std::make_unique<WordArgs>());
    auto* args = store.back().get();
    cmd->add_option("-n,--strands", args->strands, "number of strands")->required();
    cmd->add_option("word", args->word,
                    "braid word as space-separated signed generator indices")
        ->required();
    return args;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"braid words, link diagrams, and their polynomial invariants"};
    app.name("braidknot");
    app.require_subcommand(1);
    std::vector<std::unique_ptr<WordArgs>> word_store;

    // ---- perm ----
    auto* perm = app.add_subcommand("perm", "permutation arithmetic");
    perm->require_subcommand(1);

    struct {
        std::string first, second;
    } compose_args;
    auto* compose = perm->add_subcommand("compose",
                                         "compose two permutations left to right");
    compose->add_option("first", compose_args.first, "permutation applied first")
        ->required();
    compose->add_option("second", compose_args.second, "permutation applied second")
        ->required();
    compose->callback([&] {
        out << Permutation::parse(compose_args.first)
                   .compose(Permutation::parse(compose_args.second))
                   .to_string()
            << "\n";
    });

    std::string inverse_arg;
    auto* inverse = perm->add_subcommand("inverse", "invert a permutation");
    inverse->add_option("permutation", inverse_arg, "permutation to invert")->required();
    inverse->callback(
        [&] { out << Permutation::parse(inverse_arg).inverse().to_string() << "\n"; });

    std::string order_arg;
    auto* order = perm->add_subcommand("order", "order of a permutation");
    order->add_option("permutation", order_arg, "permutation")->required();
    order->callback([&] { out << Permutation::parse(order_arg).order() << "\n"; });

    std::string cycles_arg;
    auto* cycles = perm->add_subcommand("cycles", "cycle decomposition");
    cycles->add_option("permutation", cycles_arg, "permutation")->required();
    cycles->callback([&] { out << cycles_text(Permutation::parse(cycles_arg)) << "\n"; });

    std::string factor_arg;
    auto* factor = perm->add_subcommand(
        "factor", "write as a minimal product of adjacent transpositions");
    factor->add_option("permutation", factor_arg, "permutation")->required();
    factor->callback([&] {
        out << joined(Permutation::parse(factor_arg).transposition_factorization())
            << "\n";
    });

    // ---- braid ----
    auto* braid = app.add_subcommand("braid", "braid word operations");
    braid->require_subcommand(1);

    auto* braid_perm_args = add_word_options(
        braid->add_subcommand("perm", "strand permutation of a word"), word_store);
    braid->get_subcommand("perm")->callback([&, braid_perm_args] {
        out << BraidWord::parse(braid_perm_args->strands, braid_perm_args->word)
                   .to_permutation()
                   .to_string()
            << "\n";
    });

    auto* pure_args = add_word_options(
        braid->add_subcommand("pure", "whether the strand permutation is trivial"),
        word_store);
    braid->get_subcommand("pure")->callback([&, pure_args] {
        out << (BraidWord::parse(pure_args->strands, pure_args->word).is_pure()
                    ? "true"
                    : "false")
            << "\n";
    });

    auto* classify_args = add_word_options(
        braid->add_subcommand("classify", "sign pattern of the word"), word_store);
    braid->get_subcommand("classify")->callback([&, classify_args] {
        out << classify(BraidWord::parse(classify_args->strands, classify_args->word))
                   .to_string()
            << "\n";
    });

    auto* crossings_args = add_word_options(
        braid->add_subcommand("crossings", "crossing-number certificate"), word_store);
    braid->get_subcommand("crossings")->callback([&, crossings_args] {
        out << crossing_number_certificate(
                   BraidWord::parse(crossings_args->strands, crossings_args->word))
                   .to_string()
            << "\n";
    });

    auto* simplify_args = add_word_options(
        braid->add_subcommand("simplify", "closure-preserving shrink of the word"),
        word_store);
    braid->get_subcommand("simplify")->callback([&, simplify_args] {
        const auto shrunk = markov_simplify(
            BraidWord::parse(simplify_args->strands, simplify_args->word));
        out << "n=" << shrunk.strands() << " \"" << shrunk.to_string() << "\"\n";
    });

    auto* reduce_args = add_word_options(
        braid->add_subcommand("reduce", "cancel adjacent inverse letters"), word_store);
    braid->get_subcommand("reduce")->callback([&, reduce_args] {
        out << BraidWord::parse(reduce_args->strands, reduce_args->word)
                   .free_reduce()
                   .to_string()
            << "\n";
    });

    // ---- closure ----
    auto* closure = app.add_subcommand("closure", "close a braid word into a diagram");
    auto* closure_args = add_word_options(closure, word_store);
    closure->callback([&, closure_args] {
        out << LinkDiagram::braid_closure(
                   BraidWord::parse(closure_args->strands, closure_args->word))
                   .to_pd();
    });

    // ---- invariants ----
    auto* invariants = app.add_subcommand(
        "invariants", "components, Conway and Jones polynomials, signed crossing count");
    struct {
        int strands = 0;
        std::string word;
        std::string pd_path;
        bool json = false;
        std::size_t cap = default_crossing_cap;
    } inv;
    auto* inv_n = invariants->add_option("-n,--strands", inv.strands,
                                         "number of strands of the braid word");
    auto* inv_word = invariants->add_option(
        "word", inv.word, "braid word as space-separated signed generator indices");
    auto* inv_pd = invariants->add_option("--pd", inv.pd_path,
                                          "read the diagram from a PD-code file");
    invariants->add_flag("--json", inv.json, "emit JSON instead of plain text");
    invariants->add_option("--max-crossings", inv.cap,
                           "largest diagram the computation will accept");
    invariants->callback([&] {
        const bool braid_mode = inv_n->count() > 0 || inv_word->count() > 0;
        const bool pd_mode = inv_pd->count() > 0;
        if (braid_mode == pd_mode) {
            throw std::invalid_argument(
                "provide either -n <strands> with a braid word, or --pd <file>");
        }
        LinkInvariants result{};
        if (braid_mode) {
            if (inv_n->count() == 0 || inv_word->count() == 0) {
                throw std::invalid_argument(
                    "braid input needs both -n <strands> and a word");
            }
            try {
                result = invariants_of_braid(BraidWord::parse(inv.strands, inv.word),
                                             inv.cap);
            } catch (const std::invalid_argument& e) {
                const std::string what = e.what();
                if (what.find("above the cap") != std::string::npos) {
                    throw std::invalid_argument(
                        what +
                        "; analyze the repeating pattern words individually (see the "
                        "blanket command) or raise --max-crossings");
                }
                throw;
            }
        } else {
            result = invariants_of_diagram(LinkDiagram::from_pd(read_file(inv.pd_path)),
                                           inv.cap);
        }
        const char* sum_label = braid_mode ? "exponent-sum" : "writhe";
        if (inv.json) {
            nlohmann::json j;
            j["components"] = result.components;
            j["conway"] = poly_terms(result.conway);
            j["jones"] = poly_terms(result.jones);
            j[braid_mode ? "exponent_sum" : "writhe"] = result.exponent_sum;
            out << j.dump() << "\n";
        } else {
            out << "components " << result.components << "\n"
                << "conway " << result.conway.to_string() << "\n"
                << "jones " << result.jones.to_string() << "\n"
                << sum_label << " " << result.exponent_sum << "\n";
        }
    });

    // ---- blanket ----
    auto* blanket = app.add_subcommand("blanket", "full report on the blanket braid");
    bool blanket_json = false;
    blanket->add_flag("--json", blanket_json, "emit JSON instead of plain text");
    blanket->callback([&] {
        const auto report = blanket_report();
        if (blanket_json) {
            out << report_json(report) << "\n";
        } else {
            out << report_text(report);
        }
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace braidknot
