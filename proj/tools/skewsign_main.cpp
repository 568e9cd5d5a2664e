#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "skewsign/errors.hpp"
#include "skewsign/json_report.hpp"
#include "skewsign/subdigraphs.hpp"
#include "skewsign/wdg_io.hpp"

namespace {

using namespace skewsign;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // analysis ran and answered "no"
constexpr int kExitUsage = 2;     // bad invocation, parse failure, cap hit

struct Options {
    std::string file;
    std::optional<long long> seed;
    std::string signing = "none";
    int cap = kDefaultSigningCap;
    int max_len = 0;  // 0 means the vertex count
    bool expect_invariant = false;
};

class Timer {
public:
    double elapsed_ms() const {
        auto delta = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(delta).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const std::string& command, const WeightedDigraph& d, const Options& opt,
          ordered_json result, const Timer& timer) {
    std::cout << make_report(command, input_digest(d), opt.seed, std::move(result),
                             timer.elapsed_ms())
                     .dump(2)
              << "\n";
}

int cmd_validate(const Options& opt) {
    Timer timer;
    WeightedDigraph d = parse_wdg_file(opt.file);
    ValidationReport report = validate_pwls(d);
    emit("validate", d, opt, validation_json(report), timer);
    return report.ok ? kExitOk : kExitNegative;
}

RationalMatrix signed_matrix(const WeightedDigraph& d, const std::string& spec) {
    if (spec == "none") return to_matrix(d);
    if (!d.is_pwls()) throw std::invalid_argument("signing requires a pwls digraph");
    if (spec == "all-plus") return apply_signing(d, SkewSigning::all_plus(d));
    if (spec.rfind("bits:", 0) == 0)
        return apply_signing(d, SkewSigning::from_bits(d, spec.substr(5)));
    throw std::invalid_argument("bad signing spec '" + spec +
                                "' (use all-plus, bits:<01-string>, or none)");
}

int cmd_charpoly(const Options& opt) {
    Timer timer;
    WeightedDigraph d = parse_wdg_file(opt.file);
    CharPolynomial p = char_poly(signed_matrix(d, opt.signing));
    emit("charpoly", d, opt, poly_json(p), timer);
    return kExitOk;
}

int cmd_decide(const Options& opt) {
    Timer timer;
    WeightedDigraph d = parse_wdg_file(opt.file);
    InvarianceVerdict verdict = decide_invariance(d);
    emit("decide", d, opt, verdict_json(verdict), timer);
    return verdict.invariant || !opt.expect_invariant ? kExitOk : kExitNegative;
}

int cmd_brute(const Options& opt) {
    Timer timer;
    WeightedDigraph d = parse_wdg_file(opt.file);
    BruteForceReport report = brute_force_invariance(d, opt.cap);
    emit("brute", d, opt, brute_json(report), timer);
    return report.invariant || !opt.expect_invariant ? kExitOk : kExitNegative;
}

int cmd_cycles(const Options& opt) {
    Timer timer;
    WeightedDigraph d = parse_wdg_file(opt.file);
    int max_len = opt.max_len > 0 ? opt.max_len : std::max(1, d.vertex_count());
    ordered_json cycles = ordered_json::array();
    for (const Cycle& c : enumerate_cycles(d, max_len)) cycles.push_back(cycle_json(c));
    ordered_json result{{"count", cycles.size()}, {"cycles", std::move(cycles)}};
    emit("cycles", d, opt, std::move(result), timer);
    return kExitOk;
}

int cmd_symmetry(const Options& opt) {
    Timer timer;
    WeightedDigraph d = parse_wdg_file(opt.file);
    int q = opt.max_len > 0 ? opt.max_len : d.vertex_count();
    SymmetryVerdict verdict = cycle_symmetry_up_to(d, std::max(q, 2));
    emit("symmetry", d, opt, symmetry_json(verdict), timer);
    return verdict.is_cycle_symmetric ? kExitOk : kExitNegative;
}

int cmd_invariant_poly(const Options& opt) {
    Timer timer;
    WeightedDigraph d = parse_wdg_file(opt.file);
    CharPolynomial p = invariant_char_poly(d);
    emit("invariant-poly", d, opt, poly_json(p), timer);
    return kExitOk;
}

int cmd_from_graph(const Options& opt) {
    WeightedDigraph d = parse_edge_list_file(opt.file);
    std::cout << serialize_wdg(d);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew-signing invariance analyzer for positive weighted loopless symmetric digraphs"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--seed", opt.seed, "Seed echoed into the report")->expected(1);

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", opt.file, "Input file")->required();
    };

    CLI::App* validate = app.add_subcommand("validate", "Check the pwls conditions");
    add_file(validate);

    CLI::App* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial");
    add_file(charpoly);
    charpoly->add_option("--signing", opt.signing,
                         "all-plus, bits:<01-string>, or none (raw weights)");

    CLI::App* decide = app.add_subcommand("decide", "Decide skew-signing invariance");
    add_file(decide);
    decide->add_flag("--expect-invariant", opt.expect_invariant,
                     "Exit 1 unless the digraph is invariant");

    CLI::App* brute = app.add_subcommand("brute", "Try every skew-signing");
    add_file(brute);
    brute->add_option("--cap", opt.cap, "Largest digon count to enumerate")
        ->envname("SKEWSPEC_CAP");
    brute->add_flag("--expect-invariant", opt.expect_invariant,
                    "Exit 1 unless the digraph is invariant");

    CLI::App* cycles = app.add_subcommand("cycles", "List simple directed cycles");
    add_file(cycles);
    cycles->add_option("--max-len", opt.max_len, "Longest cycle length (default: all)");

    CLI::App* symmetry = app.add_subcommand("symmetry", "Cycle-symmetry check with certificate");
    add_file(symmetry);
    symmetry->add_option("--max-len", opt.max_len, "Length bound q (default: vertex count)");

    CLI::App* invariant_poly =
        app.add_subcommand("invariant-poly", "Common polynomial of an invariant digraph");
    add_file(invariant_poly);

    CLI::App* from_graph =
        app.add_subcommand("from-graph", "Unit-weight digraph from an undirected edge list");
    add_file(from_graph);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (charpoly->parsed()) return cmd_charpoly(opt);
        if (decide->parsed()) return cmd_decide(opt);
        if (brute->parsed()) return cmd_brute(opt);
        if (cycles->parsed()) return cmd_cycles(opt);
        if (symmetry->parsed()) return cmd_symmetry(opt);
        if (invariant_poly->parsed()) return cmd_invariant_poly(opt);
        if (from_graph->parsed()) return cmd_from_graph(opt);
    } catch (const NotInvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const ParseError& e) {
        std::cerr << "error: " << opt.file << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
