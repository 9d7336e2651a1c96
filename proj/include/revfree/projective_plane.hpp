#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revfree/binary_matrix.hpp"
#include "revfree/field.hpp"

namespace revfree {

/// Homogeneous coordinates over GF(q), first nonzero coordinate equal to 1.
using ProjectivePoint = std::array<std::uint32_t, 3>;

/**
 * Finite projective plane as a point/line incidence structure.
 *
 * `lines[i]` lists the (0-based) point indices on line i in ascending order.
 * `points` carries coordinates when the plane came from a field; it may be
 * empty for planes assembled by hand.
 */
struct ProjectivePlane {
    std::size_t order = 0;
    std::vector<ProjectivePoint> points;
    std::vector<std::vector<std::size_t>> lines;
    std::size_t point_count = 0;

    friend bool operator==(const ProjectivePlane&, const ProjectivePlane&) = default;
};

/// All normalized triples over GF(q), lexicographically sorted.
inline std::vector<ProjectivePoint> normalized_triples(std::uint32_t q) {
    std::vector<ProjectivePoint> out;
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            for (std::uint32_t c = 0; c < q; ++c) {
                const std::uint32_t lead = a != 0 ? a : (b != 0 ? b : c);
                if (lead == 1) out.push_back({a, b, c});
            }
    return out;  // generated in lexicographic order already
}

/// PG(2, q): points are normalized triples; line i is the set of points
/// orthogonal to the i-th normalized triple.
inline ProjectivePlane plane_build(const GaloisField& field) {
    const std::uint32_t q = field.order();
    ProjectivePlane plane;
    plane.order = q;
    plane.points = normalized_triples(q);
    plane.point_count = plane.points.size();
    plane.lines.reserve(plane.points.size());
    for (const auto& l : plane.points) {
        std::vector<std::size_t> line;
        for (std::size_t i = 0; i < plane.points.size(); ++i) {
            const auto& x = plane.points[i];
            const std::uint32_t dot =
                field.add(field.add(field.mul(x[0], l[0]), field.mul(x[1], l[1])), field.mul(x[2], l[2]));
            if (dot == 0) line.push_back(i);
        }
        plane.lines.push_back(std::move(line));
    }
    return plane;
}

/// Dual plane: lines become points and vice versa. Coordinates carry over
/// because plane_build indexes lines by the same normalized triples.
inline ProjectivePlane plane_dual(const ProjectivePlane& plane) {
    ProjectivePlane dual;
    dual.order = plane.order;
    dual.point_count = plane.lines.size();
    if (plane.points.size() == plane.lines.size()) dual.points = plane.points;
    dual.lines.assign(plane.point_count, {});
    for (std::size_t i = 0; i < plane.lines.size(); ++i)
        for (std::size_t p : plane.lines[i])
            if (p < plane.point_count) dual.lines[p].push_back(i);
    return dual;
}

/// Rows are lines, columns are points.
inline BinaryMatrix incidence_matrix(const ProjectivePlane& plane) {
    BinaryMatrix a(plane.lines.size(), plane.point_count);
    for (std::size_t i = 0; i < plane.lines.size(); ++i)
        for (std::size_t p : plane.lines[i]) a.set(i, p);
    return a;
}

/// Plane whose lines are the rows of `a` and whose points are its columns.
inline ProjectivePlane plane_from_incidence(const BinaryMatrix& a, std::size_t order) {
    ProjectivePlane plane;
    plane.order = order;
    plane.point_count = a.cols();
    for (std::size_t r = 0; r < a.rows(); ++r) plane.lines.push_back(a.row_support(r));
    return plane;
}

struct AxiomCheck {
    std::string axiom;  // "well-formed", "P0" ... "P5"
    bool passed = true;
    std::string counterexample;  // empty when passed
};

struct PlaneReport {
    std::vector<AxiomCheck> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
    }

    const AxiomCheck& operator[](const std::string& axiom) const {
        for (const auto& c : checks)
            if (c.axiom == axiom) return c;
        throw precondition_error("no axiom named " + axiom);
    }
};

namespace detail {

inline std::string join_indices(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
    return s + "}";
}

// Searches for four points with no line holding three of them. Returns 0-based indices.
inline std::optional<std::array<std::size_t, 4>> find_frame(const std::vector<std::vector<std::uint8_t>>& on_line,
                                                           std::size_t points, std::size_t lines,
                                                           std::optional<std::array<std::size_t, 4>> preferred) {
    auto is_frame = [&](const std::array<std::size_t, 4>& f) {
        for (std::size_t l = 0; l < lines; ++l) {
            int hits = 0;
            for (std::size_t x : f) hits += on_line[l][x];
            if (hits > 2) return false;
        }
        return true;
    };
    if (preferred && is_frame(*preferred)) return preferred;

    std::vector<int> hits(lines, 0);
    std::array<std::size_t, 4> chosen{};
    // Depth-first over increasing 4-tuples, pruning once a line collects three chosen points.
    auto search = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
        if (depth == 4) return true;
        for (std::size_t x = start; x < points; ++x) {
            bool ok = true;
            for (std::size_t l = 0; l < lines; ++l) {
                hits[l] += on_line[l][x];
                if (hits[l] > 2) ok = false;
            }
            chosen[depth] = x;
            if (ok && self(self, depth + 1, x + 1)) return true;
            for (std::size_t l = 0; l < lines; ++l) hits[l] -= on_line[l][x];
        }
        return false;
    };
    if (search(search, 0, 0)) return chosen;
    return std::nullopt;
}

}  // namespace detail

/**
 * Checks the plane axioms exhaustively.
 *
 *   P0  some 4 points meet every line in at most 2 points
 *   P1  any two lines meet in exactly one point
 *   P2  any two points lie on exactly one common line
 *   P3  every line has order+1 points
 *   P4  every point lies on order+1 lines
 *   P5  #points = #lines = order^2 + order + 1
 *
 * Counterexamples use 1-based indices. A "well-formed" entry comes first and
 * covers out-of-range or repeated point indices; when it fails the axiom
 * checks are skipped and reported as failed.
 */
inline PlaneReport plane_verify(const ProjectivePlane& plane) {
    PlaneReport report;
    const std::size_t v = plane.point_count;
    const std::size_t b = plane.lines.size();
    const std::size_t r = plane.order;

    AxiomCheck shape{"well-formed", true, ""};
    for (std::size_t i = 0; i < b && shape.passed; ++i) {
        const auto& line = plane.lines[i];
        for (std::size_t j = 0; j < line.size(); ++j) {
            if (line[j] >= v || (j > 0 && line[j] <= line[j - 1])) {
                shape = {"well-formed", false,
                         "line " + std::to_string(i + 1) + " is not a strictly increasing list of valid points"};
                break;
            }
        }
    }
    if (!plane.points.empty() && plane.points.size() != v)
        shape = {"well-formed", false, "coordinate list length differs from point count"};
    report.checks.push_back(shape);
    if (!shape.passed) {
        for (const char* name : {"P0", "P1", "P2", "P3", "P4", "P5"})
            report.checks.push_back({name, false, "skipped: plane is not well-formed"});
        return report;
    }

    std::vector<std::vector<std::uint8_t>> on_line(b, std::vector<std::uint8_t>(v, 0));
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t p : plane.lines[i]) on_line[i][p] = 1;

    // P0
    {
        std::optional<std::array<std::size_t, 4>> standard;
        if (!plane.points.empty()) {
            const std::array<ProjectivePoint, 4> frame{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};
            std::array<std::size_t, 4> idx{};
            bool found = true;
            for (std::size_t f = 0; f < 4 && found; ++f) {
                auto it = std::find(plane.points.begin(), plane.points.end(), frame[f]);
                if (it == plane.points.end())
                    found = false;
                else
                    idx[f] = static_cast<std::size_t>(it - plane.points.begin());
            }
            if (found) standard = idx;
        }
        const auto frame = detail::find_frame(on_line, v, b, standard);
        report.checks.push_back(
            {"P0", frame.has_value(), frame ? "" : "every 4 points have 3 on a common line"});
    }

    // P1
    {
        AxiomCheck c{"P1", true, ""};
        for (std::size_t i = 0; i < b && c.passed; ++i)
            for (std::size_t j = i + 1; j < b; ++j) {
                std::size_t shared = 0;
                for (std::size_t p = 0; p < v; ++p) shared += on_line[i][p] & on_line[j][p];
                if (shared != 1) {
                    c.passed = false;
                    c.counterexample = "lines " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                       " meet in " + std::to_string(shared) + " points";
                    break;
                }
            }
        report.checks.push_back(c);
    }

    // P2
    {
        AxiomCheck c{"P2", true, ""};
        for (std::size_t x = 0; x < v && c.passed; ++x)
            for (std::size_t y = x + 1; y < v; ++y) {
                std::size_t common = 0;
                for (std::size_t l = 0; l < b; ++l) common += on_line[l][x] & on_line[l][y];
                if (common != 1) {
                    c.passed = false;
                    c.counterexample = "points " + std::to_string(x + 1) + " and " + std::to_string(y + 1) +
                                       " share " + std::to_string(common) + " lines";
                    break;
                }
            }
        report.checks.push_back(c);
    }

    // P3
    {
        AxiomCheck c{"P3", true, ""};
        for (std::size_t i = 0; i < b; ++i)
            if (plane.lines[i].size() != r + 1) {
                c.passed = false;
                c.counterexample = "line " + std::to_string(i + 1) + " " + detail::join_indices(plane.lines[i]) +
                                   " has " + std::to_string(plane.lines[i].size()) + " points, expected " +
                                   std::to_string(r + 1);
                break;
            }
        report.checks.push_back(c);
    }

    // P4
    {
        AxiomCheck c{"P4", true, ""};
        for (std::size_t x = 0; x < v; ++x) {
            std::size_t degree = 0;
            for (std::size_t l = 0; l < b; ++l) degree += on_line[l][x];
            if (degree != r + 1) {
                c.passed = false;
                c.counterexample = "point " + std::to_string(x + 1) + " lies on " + std::to_string(degree) +
                                   " lines, expected " + std::to_string(r + 1);
                break;
            }
        }
        report.checks.push_back(c);
    }

    // P5
    {
        const std::size_t expected = r * r + r + 1;
        AxiomCheck c{"P5", v == expected && b == expected, ""};
        if (!c.passed)
            c.counterexample = std::to_string(v) + " points and " + std::to_string(b) + " lines, expected " +
                               std::to_string(expected) + " of each";
        report.checks.push_back(c);
    }
    return report;
}

}  // namespace revfree
