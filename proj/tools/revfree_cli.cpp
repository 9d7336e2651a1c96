// Command-line front end for the revfree library.
//
// Exit codes: 0 success or property verified, 1 property refuted (witness on
// stdout), 2 usage, input or precondition error, 3 internal invariant failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "revfree/revfree.hpp"

namespace {

using revfree::json;

constexpr int exit_ok = 0;
constexpr int exit_refuted = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

/// Input file (or "-" for stdin) could not be read or parsed.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw input_error("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << text << '\n';
}

void write_json(const json& j, const std::string& path) { write_text(j.dump(2), path); }

struct Options {
    std::string in;
    std::string out;
    std::string trace;
    std::uint32_t q = 2;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t limit = 0;
    std::size_t sample = 0;
    std::uint64_t seed = 0;
    std::uint64_t size = 1;
    std::uint64_t fkk = 1;
    double threshold = 10.0;
    std::string mode;
    bool csv = false;
};

int run(int argc, char** argv) {
    CLI::App app{"Reverse-free codes: constructions, verification, exact values and shrinking"};
    app.require_subcommand(1);
    Options o;
    int status = exit_ok;

    // plane
    auto* plane = app.add_subcommand("plane", "Projective planes over GF(q)");
    plane->require_subcommand(1);
    auto* plane_build = plane->add_subcommand("build", "Build PG(2,q) as plane JSON");
    plane_build->add_option("--q", o.q, "Plane order (prime power, exponent <= 4)")->required();
    plane_build->add_option("--out", o.out, "Output file (default stdout)");
    plane_build->callback([&] {
        write_json(revfree::plane_to_json(revfree::plane_build(revfree::GaloisField::of_order(o.q))), o.out);
    });
    auto* plane_verify = plane->add_subcommand("verify", "Check the plane axioms");
    plane_verify->add_option("--in", o.in, "Plane JSON")->required();
    plane_verify->callback([&] {
        const auto report = revfree::plane_verify(revfree::plane_from_json(read_json(o.in)));
        write_json(revfree::plane_report_to_json(report), "");
        status = report.all_passed() ? exit_ok : exit_refuted;
    });
    auto* plane_inc = plane->add_subcommand("incidence", "Incidence matrix of a plane as matrix JSON");
    plane_inc->add_option("--in", o.in, "Plane JSON")->required();
    plane_inc->add_option("--out", o.out, "Output file (default stdout)");
    plane_inc->callback([&] {
        write_json(revfree::matrix_to_json(revfree::incidence_matrix(revfree::plane_from_json(read_json(o.in)))),
                   o.out);
    });

    // construct
    auto* construct = app.add_subcommand("construct", "Build reverse-free codes");
    construct->require_subcommand(1);
    auto* plane_code = construct->add_subcommand("plane-code", "Permutations inside the PG(2,q) incidence matrix");
    plane_code->add_option("--q", o.q, "Plane order")->required();
    auto* limit_opt = plane_code->add_option("--limit", o.limit, "Stop after this many permutations");
    auto* sample_opt = plane_code->add_option("--sample", o.sample, "Sample this many random permutations");
    plane_code->add_option("--seed", o.seed, "Sampler seed")->needs(sample_opt);
    limit_opt->excludes(sample_opt);
    plane_code->add_option("--out", o.out, "Output file (default stdout)");
    plane_code->callback([&] {
        const auto a = revfree::incidence_matrix(revfree::plane_build(revfree::GaloisField::of_order(o.q)));
        if (*sample_opt) {
            auto result = revfree::sample_plane_permutations(a, o.sample, o.seed);
            if (!result.complete)
                std::cerr << "warning: attempt budget exhausted after " << result.attempts << " attempts with "
                          << result.code.size() << " of " << o.sample << " permutations\n";
            write_json(revfree::code_to_json(result.code), o.out);
        } else {
            std::optional<std::size_t> limit;
            if (*limit_opt) limit = o.limit;
            write_json(revfree::code_to_json(revfree::plane_permutation_code(a, limit)), o.out);
        }
    });
    auto* pad = construct->add_subcommand("pad", "Append n'+1..n to every permutation");
    pad->add_option("--in", o.in, "Permutation code JSON")->required();
    pad->add_option("--n", o.n, "Target length")->required();
    pad->add_option("--out", o.out, "Output file (default stdout)");
    pad->callback([&] { write_json(revfree::code_to_json(revfree::pad_code(revfree::code_from_json(read_json(o.in)), o.n)), o.out); });
    auto* lift = construct->add_subcommand("lift", "Lift a k-permutation code to [n]_(k) via residues mod k");
    lift->add_option("--in", o.in, "Permutation code JSON")->required();
    lift->add_option("--n", o.n, "Alphabet size")->required();
    auto* lift_limit = lift->add_option("--limit", o.limit, "Stop after this many words");
    lift->add_option("--out", o.out, "Output file (default stdout)");
    lift->callback([&] {
        std::optional<std::size_t> limit;
        if (*lift_limit) limit = o.limit;
        write_json(revfree::code_to_json(revfree::lift_code(revfree::code_from_json(read_json(o.in)), o.n, limit)),
                   o.out);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Check code properties");
    verify->require_subcommand(1);
    auto* verify_rf = verify->add_subcommand("reverse-free", "No two words have a reverse");
    verify_rf->add_option("--in", o.in, "Code JSON")->required();
    verify_rf->callback([&] {
        const auto code = revfree::code_from_json(read_json(o.in));
        const auto result = revfree::verify_reverse_free(code);
        write_json(revfree::verify_to_json(code, result), "");
        status = result.holds ? exit_ok : exit_refuted;
    });
    auto* verify_ff = verify->add_subcommand("full-of-flips", "Every two words have a reverse");
    verify_ff->add_option("--in", o.in, "Code JSON")->required();
    verify_ff->callback([&] {
        const auto code = revfree::code_from_json(read_json(o.in));
        const auto result = revfree::verify_full_of_flips(code);
        write_json(revfree::verify_to_json(code, result), "");
        status = result.holds ? exit_ok : exit_refuted;
    });

    // matrix
    auto* matrix = app.add_subcommand("matrix", "0/1 matrix statistics");
    matrix->require_subcommand(1);
    auto* count_s = matrix->add_subcommand("count-s", "Count 2x2 all-ones occurrences");
    count_s->add_option("--in", o.in, "Matrix JSON")->required();
    count_s->callback([&] {
        write_json(revfree::s_count_to_json(revfree::count_s(revfree::matrix_from_json(read_json(o.in)))), "");
    });
    auto* perm = matrix->add_subcommand("permanent", "Exact permanent (Ryser)");
    perm->add_option("--in", o.in, "Matrix JSON")->required();
    perm->callback([&] {
        const auto value = revfree::permanent(revfree::matrix_from_json(read_json(o.in)));
        write_json(json{{"permanent", value.str()}}, "");
    });

    // exact
    auto* exact = app.add_subcommand("exact", "Exact F, F-bar, G, G-bar at small n, k");
    exact->add_option("--n", o.n, "Alphabet size")->required();
    exact->add_option("--k", o.k, "Word length")->required();
    exact->add_option("--mode", o.mode, "F | Fbar | G | Gbar")
        ->required()
        ->check(CLI::IsMember({"F", "Fbar", "G", "Gbar"}));
    exact->callback([&] {
        const bool rf = o.mode == "F" || o.mode == "G";
        const bool flips = o.mode == "G" || o.mode == "Gbar";
        const auto result =
            flips ? revfree::max_full_of_flips(o.n, o.k, rf) : revfree::max_reverse_free(o.n, o.k, rf);
        write_json(revfree::exact_to_json(o.n, o.k, o.mode, result), "");
    });

    // shrink
    auto* shrink = app.add_subcommand("shrink", "Density-shrinking procedure on a reverse-free code");
    shrink->require_subcommand(1);
    auto* shrink_run = shrink->add_subcommand("run", "Run the procedure and emit its trace");
    shrink_run->add_option("--in", o.in, "Reverse-free code JSON")->required();
    shrink_run->add_option("--threshold", o.threshold, "Stop once the density falls below this");
    shrink_run->add_option("--trace", o.trace, "Write the full trace JSON here");
    shrink_run->callback([&] {
        const auto code = revfree::code_from_json(read_json(o.in));
        try {
            const auto trace = revfree::run_shrink(code, o.threshold);
            json full = revfree::trace_to_json(trace);
            if (o.trace.empty()) {
                write_json(full, "");
            } else {
                write_json(full, o.trace);
                full.erase("steps");
                full["step_count"] = trace.steps.size();
                write_json(full, "");
            }
        } catch (const revfree::not_reverse_free_error& e) {
            write_json(revfree::verify_to_json(code, {false, e.witness()}), "");
            throw;
        }
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Exponent and bound table");
    bounds->require_subcommand(1);
    auto* table = bounds->add_subcommand("table", "Bounds for a constructed code size");
    table->add_option("--n", o.n, "Alphabet size")->required();
    table->add_option("--k", o.k, "Word length")->required();
    table->add_option("--size", o.size, "Constructed code size")->required();
    table->add_option("--fkk", o.fkk, "Known lower bound on F(k,k) for the lift combinator");
    table->add_flag("--csv", o.csv, "Emit a CSV header and row");
    table->callback([&] {
        const auto report = revfree::bound_table(o.n, o.k, o.size, o.fkk);
        if (o.csv)
            write_text(revfree::bounds_csv_header() + "\n" + revfree::bounds_csv_row(report), "");
        else
            write_json(revfree::bounds_to_json(report), "");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const revfree::not_reverse_free_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const revfree::invariant_violation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const revfree::capacity_error& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return exit_usage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad JSON value: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
