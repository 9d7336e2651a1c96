// Acceptance suite: one PASS/FAIL line per criterion, with wall time against
// its budget. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "revfree/revfree.hpp"

using namespace revfree;

namespace {

// Collects failed checks for one criterion; the first few are printed.
struct Checker {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<void(Checker&)> body;
};

Code fano_code() { return plane_permutation_code(incidence_matrix(plane_build(GaloisField::of_order(2)))); }

bool both_verifiers_agree_true(const Code& c) {
    return verify_reverse_free_pairwise(c).holds && verify_reverse_free_signatures(c).holds;
}

void plane_axioms(Checker& ck) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const auto p = plane_build(GaloisField::of_order(q));
        const auto report = plane_verify(p);
        const std::string tag = "q=" + std::to_string(q) + ": ";
        for (const auto& c : report.checks) ck.expect(c.passed, tag + c.axiom + " failed: " + c.counterexample);
        const std::size_t expected = std::size_t{q} * q + q + 1;
        ck.expect(p.point_count == expected && p.lines.size() == expected, tag + "wrong point or line count");
        for (const auto& line : p.lines) ck.expect(line.size() == q + 1u, tag + "line of wrong size");
    }
}

void permanent_oracle(Checker& ck) {
    const auto a = incidence_matrix(plane_build(GaloisField::of_order(2)));
    const BigInt ryser = permanent(a);
    const std::uint64_t brute = oracle::brute_permanent(a);
    const std::size_t enumerated = plane_permutation_code(a).size();
    const double lower = regular_permanent_lower_bound(7, 3);
    std::cout << "    Ryser " << ryser << ", brute force " << brute << ", enumeration " << enumerated
              << ", regular lower bound " << lower << '\n';
    ck.expect(ryser == BigInt(brute), "Ryser disagrees with brute force");
    ck.expect(BigInt(enumerated) == ryser, "enumeration count disagrees with the permanent");
    ck.expect(brute == 24, "Fano permanent is not 24");
    ck.expect(std::abs(lower - 13.39) < 0.01, "regular lower bound is not about 13.39");
    ck.expect(static_cast<double>(brute) > lower, "permanent does not exceed the regular lower bound");
}

void construction_soundness(Checker& ck) {
    const auto fano = fano_code();
    const auto padded = pad_code(fano, 10);
    const auto lifted = lift_code(fano, 14);
    std::cout << "    sizes: fano " << fano.size() << ", padded " << padded.size() << ", lifted " << lifted.size()
              << '\n';
    ck.expect(fano.size() == 24, "Fano code does not have 24 words");
    ck.expect(lifted.size() == 3072, "lifted code does not have 3072 words");
    ck.expect(both_verifiers_agree_true(fano), "Fano code fails a verifier");
    ck.expect(both_verifiers_agree_true(padded), "padded code fails a verifier");
    ck.expect(both_verifiers_agree_true(lifted), "lifted code fails a verifier");
}

void exact_values(Checker& ck) {
    auto f = [](std::size_t n, std::size_t k) { return max_reverse_free(n, k, true).value; };
    auto g = [](std::size_t n, std::size_t k) { return max_full_of_flips(n, k, true).value; };
    ck.expect(f(2, 2) == 1, "F(2,2) != 1");
    ck.expect(f(3, 3) == 3, "F(3,3) != 3");
    ck.expect(g(3, 3) == 2, "G(3,3) != 2");
    ck.expect(f(3, 3) * g(3, 3) == 6, "G(3,3) F(3,3) != 3!");
    for (std::size_t n = 3; n <= 6; ++n) ck.expect(f(n, 2) == n * (n - 1) / 2, "F(" + std::to_string(n) + ",2) wrong");
    ck.expect(max_reverse_free(2, 2, false).value == 3, "Fbar(2,2) != 3");

    std::size_t instances = 0;
    for (std::size_t n = 1; n <= 20; ++n)
        for (std::size_t k = 1; k <= 5; ++k)
            for (bool rf : {true, false}) {
                if (rf && k > n) continue;
                if (word_space_size(n, k, rf) > max_oracle_vertices) continue;
                const auto cg = build_conflict_graph(n, k, rf);
                const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + (rf ? " rf" : "");
                ck.expect(max_independent_set(cg.graph).size() == naive_subset_oracle(cg.graph, SubsetMode::independent),
                          tag + ": independent set disagrees with oracle");
                ck.expect(max_clique(cg.graph).size() == naive_subset_oracle(cg.graph, SubsetMode::clique),
                          tag + ": clique disagrees with oracle");
                ++instances;
            }
    std::cout << "    solver checked against the subset oracle on " << instances << " instances\n";
}

void s_counting(Checker& ck) {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    std::uniform_real_distribution<double> dens(0.05, 0.95);
    for (int t = 0; t < 200; ++t) {
        const auto m = oracle::random_matrix(rng, dim(rng), dim(rng), dens(rng));
        ck.expect(count_s(m).exact_count == oracle::naive_s_count(m), "S-count disagrees with the quadruple loop");
    }
    int checked = 0;
    while (checked < 1000) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 16)(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(k, 40)(rng);
        const auto m = oracle::random_matrix(rng, k, n, std::uniform_real_distribution<double>(0.2, 1.0)(rng));
        const auto r = count_s(m);
        if (!r.analytic_bound.premises_hold) continue;
        ++checked;
        ck.expect(static_cast<double>(oracle::naive_s_count(m)) >= r.analytic_bound.value,
                  "S-count below the lemma bound");
    }
    ck.expect(count_s(incidence_matrix(plane_build(GaloisField::of_order(2)))).exact_count == 0,
              "Fano incidence contains S");
}

// Minimal structural schema for trace JSON.
void validate_trace_schema(Checker& ck, const json& t) {
    auto has = [&](const json& obj, const char* key, json::value_t type) {
        const bool ok = obj.contains(key) &&
                        (obj[key].type() == type ||
                         (type == json::value_t::number_float && obj[key].is_number()) ||
                         (type == json::value_t::number_unsigned && obj[key].is_number_integer()));
        ck.expect(ok, std::string("trace schema: bad or missing \"") + key + "\"");
    };
    using vt = json::value_t;
    has(t, "steps", vt::array);
    has(t, "phase_starts", vt::array);
    for (const char* key : {"heavy_count", "initial_size", "final_size"}) has(t, key, vt::number_unsigned);
    for (const char* key : {"final_density", "threshold", "log2_size_bound_combined"}) has(t, key, vt::number_float);
    ck.expect(t.contains("log2_size_bound_trivial") &&
                  (t["log2_size_bound_trivial"].is_null() || t["log2_size_bound_trivial"].is_number()),
              "trace schema: bad log2_size_bound_trivial");
    if (!t.contains("steps") || !t["steps"].is_array()) return;
    for (const json& s : t["steps"]) {
        ck.expect(s.contains("kind") && (s["kind"] == "light" || s["kind"] == "heavy"), "trace schema: bad kind");
        ck.expect(s.contains("entry") && s["entry"].is_array() && s["entry"].size() == 2, "trace schema: bad entry");
        for (const char* key : {"size_before", "size_after", "weight_before", "weight_after", "emptiness",
                                "emptiness_after", "phase"})
            has(s, key, vt::number_unsigned);
        has(s, "density", vt::number_float);
        has(s, "premise_ok", vt::boolean);
        if (s.value("kind", "") == "heavy") {
            has(s, "avoided_count", vt::number_unsigned);
            has(s, "required_avoided", vt::number_float);
        }
    }
}

// Replays a trace step by step on a fresh copy of the code and re-derives
// each inequality without the library's shrink helpers.
void replay_trace(Checker& ck, const Code& start, const ShrinkTrace& trace) {
    const std::size_t n = start.n();
    std::vector<Word> words = start.words();
    auto overall = [&](const std::vector<Word>& ws) {
        BinaryMatrix a(start.k(), n);
        for (const Word& w : ws)
            for (std::size_t i = 0; i < w.size(); ++i) a.set(i, w[i]);
        return a;
    };
    auto emptiness = [](const BinaryMatrix& a) {
        std::size_t z = 0;
        for (std::size_t r = 0; r < a.rows(); ++r) z += a.row_weight(r) <= 1;
        return z;
    };
    for (std::size_t idx = 0; idx < trace.steps.size(); ++idx) {
        const StepRecord& s = trace.steps[idx];
        const std::string tag = "step " + std::to_string(idx + 1) + ": ";
        const BinaryMatrix before = overall(words);
        const Entry e = s.entry;
        std::vector<Word> next;
        for (const Word& w : words)
            if ((w[e.row] == e.col) == (s.kind == StepKind::heavy)) next.push_back(w);
        const BinaryMatrix after = overall(next);
        ck.expect(next.size() == s.size_after && after.weight() == s.weight_after, tag + "trace disagrees with replay");
        if (s.kind == StepKind::light) {
            ck.expect(next.size() * n >= (n - 1) * words.size(), tag + "light step kept too few words");
            ck.expect(after.weight() + 1 <= before.weight(), tag + "light step did not drop the weight");
            ck.expect(emptiness(after) >= emptiness(before), tag + "light step lowered the emptiness");
        } else {
            // Avoided partners of the chosen entry, by definition.
            for (const Entry& f : before.ones()) {
                if (f.row == e.row || f.col == e.col) continue;
                bool together = false;
                for (const Word& w : words) together |= w[e.row] == e.col && w[f.row] == f.col;
                if (!together) ck.expect(!after.get(f.row, f.col), tag + "avoided partner survived a heavy step");
            }
            ck.expect(after.row_weight(e.row) == 1, tag + "chosen row is not a single-1 row");
        }
        words = std::move(next);
    }
    ck.expect(words.size() == trace.final_size, "final size disagrees with replay");
}

void shrink_procedure(Checker& ck) {
    const auto lifted = lift_code(fano_code(), 14);
    for (double threshold : {10.0, 0.0}) {
        const auto trace = run_shrink(lifted, threshold);
        std::size_t light = 0;
        for (const auto& s : trace.steps) light += s.kind == StepKind::light;
        std::cout << "    threshold " << threshold << ": initial density "
                  << ShrinkState(lifted).density() << ", " << light << " light and " << trace.heavy_count
                  << " heavy steps, final size " << trace.final_size << '\n';
        ck.expect(trace.heavy_count <= lifted.k(), "heavy_count exceeds k");
        replay_trace(ck, lifted, trace);
        validate_trace_schema(ck, trace_to_json(trace));
    }
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    status = pclose(pipe);
    return out;
}

void scale_probe(Checker& ck) {
    int status = 0;
    const std::string out =
        capture(std::string("\"") + REVFREE_CLI_PATH + "\" construct plane-code --q 7 --sample 200", status);
    ck.expect(status == 0, "CLI exited with status " + std::to_string(status));
    if (status != 0) return;
    const Code code = code_from_json(json::parse(out));
    std::set<Word> distinct(code.words().begin(), code.words().end());
    ck.expect(code.size() == 200 && distinct.size() == 200, "expected 200 distinct words");
    ck.expect(code.n() == 57 && code.is_permutation_code(), "words are not 57-permutations");
    ck.expect(both_verifiers_agree_true(code), "sampled code fails a verifier");
    const auto report = bound_table(code.n(), code.k(), code.size());
    std::cout << "    exponent_achieved " << report.exponent_achieved << " (reference "
              << report.reference_exponent << ")\n";
    ck.expect(report.exponent_achieved > 1.0, "exponent_achieved <= 1");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "plane axioms for q in {2,3,4,5,7,8,9}", 10, plane_axioms},
        {2, "Fano permanent: Ryser = brute force = enumeration > regular bound", 1, permanent_oracle},
        {3, "Fano, padded and lifted codes are reverse-free (both verifiers)", 30, construction_soundness},
        {4, "exact F, Fbar, G values and solver/oracle agreement", 60, exact_values},
        {5, "S-counting against the naive count and the lemma bound", 30, s_counting},
        {6, "shrink procedure on the lifted Fano code", 120, shrink_procedure},
        {7, "scale probe: 200 sampled permutations inside PG(2,7)", 120, scale_probe},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Checker ck;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(ck);
        } catch (const std::exception& e) {
            ck.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds)
            ck.failures.push_back("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds));
        const bool pass = ck.failures.empty();
        failed += pass ? 0 : 1;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << secs << " s, budget "
             << c.budget_seconds << " s)";
        std::cout << line.str() << std::endl;
        for (std::size_t i = 0; i < ck.failures.size() && i < 5; ++i) std::cout << "    " << ck.failures[i] << '\n';
        if (ck.failures.size() > 5) std::cout << "    ... " << ck.failures.size() - 5 << " more\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed;
}
