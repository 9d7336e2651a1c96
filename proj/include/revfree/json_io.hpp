#pragma once

// JSON and CSV encodings. Every index and letter is 1-based on the wire;
// field elements in plane coordinates are the packed integers 0..q-1.

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "revfree/binary_matrix.hpp"
#include "revfree/code.hpp"
#include "revfree/constructions.hpp"
#include "revfree/exact.hpp"
#include "revfree/pattern.hpp"
#include "revfree/projective_plane.hpp"
#include "revfree/shrink.hpp"

namespace revfree {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
    require(j.is_object(), "expected a JSON object");
    auto it = j.find(key);
    require(it != j.end(), std::string("missing key \"") + key + "\"");
    return *it;
}

inline std::size_t positive(const json& j, const char* key) {
    const json& v = field(j, key);
    require(v.is_number_integer() && v.get<std::int64_t>() >= 1,
            std::string("\"") + key + "\" must be a positive integer");
    return v.get<std::size_t>();
}

}  // namespace detail

// ---- matrices: {"rows": k, "cols": n, "ones": [[r, c], ...]}

inline json matrix_to_json(const BinaryMatrix& m) {
    json ones = json::array();
    for (const Entry& e : m.ones()) ones.push_back({e.row + 1, e.col + 1});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"ones", std::move(ones)}};
}

inline BinaryMatrix matrix_from_json(const json& j) {
    BinaryMatrix m(detail::positive(j, "rows"), detail::positive(j, "cols"));
    const json& ones = detail::field(j, "ones");
    detail::require(ones.is_array(), "\"ones\" must be an array");
    for (const json& e : ones) {
        detail::require(e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer(),
                        "each entry of \"ones\" must be a [row, col] pair");
        const auto r = e[0].get<std::int64_t>();
        const auto c = e[1].get<std::int64_t>();
        detail::require(r >= 1 && c >= 1 && static_cast<std::size_t>(r) <= m.rows() &&
                            static_cast<std::size_t>(c) <= m.cols(),
                        "entry [" + std::to_string(r) + "," + std::to_string(c) + "] outside the matrix");
        m.set(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1));
    }
    return m;
}

// ---- planes: {"order": r, "points": [[a, b, c], ...], "lines": [[j1, j2, ...], ...]}

inline json plane_to_json(const ProjectivePlane& p) {
    json points = json::array();
    for (const auto& x : p.points) points.push_back({x[0], x[1], x[2]});
    json lines = json::array();
    for (const auto& l : p.lines) {
        json line = json::array();
        for (std::size_t i : l) line.push_back(i + 1);
        lines.push_back(std::move(line));
    }
    return {{"order", p.order}, {"points", std::move(points)}, {"lines", std::move(lines)}};
}

/// Without coordinates the point count is taken from the largest index used.
inline ProjectivePlane plane_from_json(const json& j) {
    ProjectivePlane p;
    p.order = detail::positive(j, "order");
    const json& points = detail::field(j, "points");
    detail::require(points.is_array(), "\"points\" must be an array");
    for (const json& x : points) {
        detail::require(x.is_array() && x.size() == 3, "each point must be a coordinate triple");
        p.points.push_back({x[0].get<std::uint32_t>(), x[1].get<std::uint32_t>(), x[2].get<std::uint32_t>()});
    }
    p.point_count = p.points.size();
    const json& lines = detail::field(j, "lines");
    detail::require(lines.is_array(), "\"lines\" must be an array");
    std::size_t top = 0;
    for (const json& l : lines) {
        detail::require(l.is_array(), "each line must be an array of point indices");
        std::vector<std::size_t> line;
        for (const json& i : l) {
            detail::require(i.is_number_integer() && i.get<std::int64_t>() >= 1, "point indices are 1-based");
            line.push_back(i.get<std::size_t>() - 1);
            top = std::max(top, line.back() + 1);
        }
        p.lines.push_back(std::move(line));
    }
    if (p.points.empty()) p.point_count = top;
    return p;
}

inline json plane_report_to_json(const PlaneReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json item{{"axiom", c.axiom}, {"passed", c.passed}};
        if (!c.passed) item["counterexample"] = c.counterexample;
        checks.push_back(std::move(item));
    }
    return {{"passed", r.all_passed()}, {"checks", std::move(checks)}};
}

// ---- codes: {"n": n, "k": k, "repetition_free": bool, "words": [[w1..wk], ...]}

inline json code_to_json(const Code& c) {
    json words = json::array();
    for (const Word& w : c.words()) words.push_back(w.to_one_based());
    return {{"n", c.n()}, {"k", c.k()}, {"repetition_free", c.repetition_free()}, {"words", std::move(words)}};
}

inline Code code_from_json(const json& j) {
    const json& rf = detail::field(j, "repetition_free");
    detail::require(rf.is_boolean(), "\"repetition_free\" must be a boolean");
    Code c(detail::positive(j, "n"), detail::positive(j, "k"), rf.get<bool>());
    const json& words = detail::field(j, "words");
    detail::require(words.is_array(), "\"words\" must be an array");
    for (const json& w : words) {
        detail::require(w.is_array(), "each word must be an array of letters");
        std::vector<Letter> letters;
        for (const json& l : w) {
            detail::require(l.is_number_integer() && l.get<std::int64_t>() >= 1, "letters are positive integers");
            letters.push_back(l.get<Letter>());
        }
        c.add(Word::from_one_based(letters));
    }
    return c;
}

inline json position_pair_to_json(const PositionPair& p) { return {p.first + 1, p.second + 1}; }

inline json verify_to_json(const Code& c, const VerifyResult& r) {
    json out{{"holds", r.holds}, {"size", c.size()}};
    if (r.witness) {
        const auto& w = *r.witness;
        out["witness"] = {{"words", {c[w.first_word].to_one_based(), c[w.second_word].to_one_based()}},
                          {"word_indices", {w.first_word + 1, w.second_word + 1}}};
        if (w.positions) out["witness"]["positions"] = position_pair_to_json(*w.positions);
    }
    return out;
}

inline json s_count_to_json(const SCountReport& r) {
    return {{"exact_count", r.exact_count},
            {"row_pair_count", r.row_pair_count},
            {"density_m", r.density_m},
            {"analytic_bound", r.analytic_bound.value},
            {"premises_hold", r.analytic_bound.premises_hold}};
}

// ---- shrink traces

inline const char* to_string(StepKind k) { return k == StepKind::light ? "light" : "heavy"; }

inline json trace_to_json(const ShrinkTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        json step{{"kind", to_string(s.kind)},
                  {"entry", {s.entry.row + 1, s.entry.col + 1}},
                  {"size_before", s.size_before},
                  {"size_after", s.size_after},
                  {"weight_before", s.weight_before},
                  {"weight_after", s.weight_after},
                  {"density", s.density},
                  {"emptiness", s.emptiness_before},
                  {"emptiness_after", s.emptiness_after},
                  {"phase", s.phase},
                  {"premise_ok", s.premise_ok}};
        if (s.kind == StepKind::heavy) {
            step["avoided_count"] = s.avoided_count;
            step["required_avoided"] = s.required_avoided;
        }
        steps.push_back(std::move(step));
    }
    json out{{"steps", std::move(steps)},
             {"heavy_count", t.heavy_count},
             {"phase_starts", t.phase_starts},
             {"initial_size", t.initial_size},
             {"final_size", t.final_size},
             {"final_density", t.final_density},
             {"threshold", t.threshold},
             {"log2_size_bound_combined", t.log2_size_bound_combined}};
    out["log2_size_bound_trivial"] = t.log2_size_bound_trivial ? json(*t.log2_size_bound_trivial) : json(nullptr);
    return out;
}

// ---- exact values: {"n":, "k":, "mode":, "value":, "witness": [...]}

inline json exact_to_json(std::size_t n, std::size_t k, const std::string& mode, const ExactResult& r) {
    json witness = json::array();
    for (const Word& w : r.witness.words()) witness.push_back(w.to_one_based());
    return {{"n", n}, {"k", k}, {"mode", mode}, {"value", r.value}, {"witness", std::move(witness)}};
}

// ---- bounds: CSV row

inline std::string bounds_csv_header() {
    return "n,k,size,exponent_achieved,reference_exponent,log2_lower_combinator,log2_upper_trivial,"
           "log2_upper_shrink";
}

inline std::string bounds_csv_row(const BoundsReport& b) {
    std::ostringstream os;
    os << std::setprecision(10) << b.n << ',' << b.k << ',' << b.size << ',' << b.exponent_achieved << ','
       << b.reference_exponent << ',' << b.log2_lower_combinator << ',' << b.log2_upper_trivial << ','
       << b.log2_upper_shrink;
    return os.str();
}

inline json bounds_to_json(const BoundsReport& b) {
    return {{"n", b.n},
            {"k", b.k},
            {"size", b.size},
            {"exponent_achieved", b.exponent_achieved},
            {"reference_exponent", b.reference_exponent},
            {"log2_lower_combinator", b.log2_lower_combinator},
            {"log2_upper_trivial", b.log2_upper_trivial},
            {"log2_upper_shrink", b.log2_upper_shrink}};
}

}  // namespace revfree
