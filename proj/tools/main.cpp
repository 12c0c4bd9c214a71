// Command-line front end: parse braid or diagram input, run the invariant
// engine, and emit machine-readable JSON on stdout.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "milnor/braid.hpp"
#include "milnor/classify.hpp"
#include "milnor/diagram.hpp"
#include "milnor/errors.hpp"
#include "milnor/invariants.hpp"
#include "milnor/json_io.hpp"

namespace {

using milnor::Json;

milnor::Sequence parse_sequence(const std::string& text) {
    milnor::Sequence seq;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            const std::string tok = text.substr(pos, next - pos);
            try {
                seq.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw milnor::ParseError("bad sequence entry '" + tok + "'", pos);
            }
            pos = next + 1;
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] < '1' || text[i] > '9') {
                throw milnor::ParseError("sequence digits must be 1..9; use commas otherwise", i);
            }
            seq.push_back(text[i] - '0');
        }
    }
    if (seq.empty()) throw milnor::ParseError("empty sequence", 0);
    return seq;
}

milnor::StringLinkDiagram load_diagram(const std::string& braid, const std::string& path) {
    if (!braid.empty()) return milnor::braid_to_diagram(milnor::parse_braid(braid));
    std::ifstream in(path);
    if (!in) throw milnor::PreconditionError("cannot open diagram file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw milnor::ParseError(std::string("bad diagram JSON: ") + e.what(), 0);
    }
    return milnor::diagram_from_json(j);
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

void add_input_options(CLI::App* cmd, std::string& braid, std::string& path) {
    auto* group = cmd->add_option_group("input", "diagram input");
    group->add_option("--braid", braid, "braid word, e.g. \"m=2: s1^4\"");
    group->add_option("--diagram", path, "path to a diagram JSON file");
    group->require_option(1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Milnor invariants of string links and their classification "
                 "up to 2n-moves and link-homotopy"};
    app.require_subcommand(1);
    app.add_flag("--json", "emit machine-readable JSON (always on; kept for stability)");

    if (const char* dir = std::getenv("MILNOR_CACHE_DIR"); dir && *dir) {
        milnor::set_generator_matrix_cache_dir(std::string(dir));
    }

    std::string braid;
    std::string diagram_path;
    std::string seq_text;
    std::string braid_a;
    std::string braid_b;
    std::int64_t n = 1;
    int m = 0;
    int max_len = 2;
    int threads = 1;
    bool non_repeated = false;
    bool want_order = false;
    bool want_enumerate = false;

    auto* mu_cmd = app.add_subcommand("mu", "one Milnor invariant of a diagram");
    add_input_options(mu_cmd, braid, diagram_path);
    mu_cmd->add_option("--seq", seq_text, "index sequence, e.g. 112 or 1,1,2")->required();

    auto* table_cmd = app.add_subcommand("table", "table of Milnor invariants");
    add_input_options(table_cmd, braid, diagram_path);
    table_cmd->add_option("--max-len", max_len, "maximum sequence length")->required();
    table_cmd->add_flag("--non-repeated", non_repeated, "restrict to non-repeated sequences");
    table_cmd->add_option("--threads", threads, "worker threads (results are identical)")
        ->default_val(1);

    auto* classify_cmd =
        app.add_subcommand("classify", "decide equivalence up to 2n-moves and link-homotopy");
    classify_cmd->add_option("--n", n, "modulus n >= 1")->required();
    classify_cmd->add_option("--a", braid_a, "first braid word")->required();
    classify_cmd->add_option("--b", braid_b, "second braid word")->required();

    auto* canonical_cmd = app.add_subcommand("canonical", "canonical form of a diagram");
    canonical_cmd->add_option("--n", n, "modulus n >= 1")->required();
    add_input_options(canonical_cmd, braid, diagram_path);

    auto* group_cmd = app.add_subcommand("group", "the group of equivalence classes");
    group_cmd->add_option("--m", m, "component count")->required();
    group_cmd->add_option("--n", n, "modulus n >= 1")->required();
    group_cmd->add_flag("--order", want_order, "report the group order (default)");
    group_cmd->add_flag("--enumerate", want_enumerate,
                        "list all classes (only when the order is at most 10^4)");

    auto* trivial_cmd =
        app.add_subcommand("link-trivial", "is the closure trivial up to 2n-moves + link-homotopy");
    trivial_cmd->add_option("--n", n, "modulus n >= 1")->required();
    add_input_options(trivial_cmd, braid, diagram_path);

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }

        if (*mu_cmd) {
            const milnor::StringLinkDiagram d = load_diagram(braid, diagram_path);
            const milnor::Sequence seq = parse_sequence(seq_text);
            Json j;
            j["mu"] = milnor::mu(d, seq).str();
            emit(j);
        } else if (*table_cmd) {
            const milnor::StringLinkDiagram d = load_diagram(braid, diagram_path);
            emit(milnor::table_to_json(milnor::mu_table(d, max_len, non_repeated, threads)));
        } else if (*classify_cmd) {
            const auto a = milnor::braid_to_diagram(milnor::parse_braid(braid_a));
            const auto b = milnor::braid_to_diagram(milnor::parse_braid(braid_b));
            const milnor::EquivalenceResult r = milnor::equivalent_2n_lh(a, b, n);
            Json j;
            j["equivalent"] = r.equivalent;
            if (r.witness) j["witness"] = *r.witness;
            emit(j);
        } else if (*canonical_cmd) {
            const milnor::StringLinkDiagram d = load_diagram(braid, diagram_path);
            emit(milnor::form_to_json(milnor::canonical_form(d, n)));
        } else if (*group_cmd) {
            const milnor::Int order = milnor::group_order(m, n);
            Json j;
            j["order"] = order.str();
            j["s_m"] = milnor::s_value(m).convert_to<std::int64_t>();
            if (want_enumerate) {
                if (order > 10'000) {
                    throw milnor::PreconditionError(
                        "enumeration is limited to groups of order at most 10^4");
                }
                Json elements = Json::array();
                milnor::CanonicalForm f = milnor::identity_form(m, n);
                for (;;) {
                    elements.push_back(milnor::form_to_json(f));
                    if (f.exponents.empty()) break;
                    std::size_t i = 0;
                    while (i < f.exponents.size()) {
                        if (++f.exponents[i] < n) break;
                        f.exponents[i] = 0;
                        ++i;
                    }
                    if (i == f.exponents.size()) break;
                }
                j["elements"] = std::move(elements);
            }
            emit(j);
        } else if (*trivial_cmd) {
            const milnor::StringLinkDiagram d = load_diagram(braid, diagram_path);
            const milnor::TrivialityReport r = milnor::link_trivial_2n_lh(d, n);
            Json j;
            j["trivial"] = r.trivial;
            Json failures = Json::array();
            for (const auto& f : r.failures) {
                Json fj;
                fj["sequence"] = f.sequence;
                fj["delta_n"] = f.delta_n.str();
                fj["mu_bar"] = f.mu_bar.str();
                failures.push_back(std::move(fj));
            }
            j["failures"] = std::move(failures);
            emit(j);
        }
        return 0;
    } catch (const milnor::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const milnor::InternalInconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 4;
    } catch (const milnor::HypothesisViolationError& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return 3;
    } catch (const milnor::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
