#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "revfree/code.hpp"
#include "revfree/error.hpp"

namespace revfree {

/// Simple undirected graph with bitset adjacency rows.
class BitGraph {
public:
    explicit BitGraph(std::size_t vertices)
        : n_(vertices), stride_((vertices + 63) / 64), adj_(vertices * stride_, 0) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t stride() const noexcept { return stride_; }

    void add_edge(std::size_t u, std::size_t v) {
        detail::require(u != v, "self-loops are not allowed");
        adj_[u * stride_ + v / 64] |= std::uint64_t{1} << (v % 64);
        adj_[v * stride_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    bool has_edge(std::size_t u, std::size_t v) const {
        return (adj_[u * stride_ + v / 64] >> (v % 64)) & 1U;
    }

    const std::uint64_t* row(std::size_t u) const { return adj_.data() + u * stride_; }

    std::size_t degree(std::size_t u) const {
        std::size_t d = 0;
        for (std::size_t i = 0; i < stride_; ++i) d += static_cast<std::size_t>(std::popcount(row(u)[i]));
        return d;
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (std::size_t u = 0; u < n_; ++u) total += degree(u);
        return total / 2;
    }

    BitGraph complement() const {
        BitGraph g(n_);
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) g.add_edge(u, v);
        return g;
    }

private:
    std::size_t n_;
    std::size_t stride_;
    std::vector<std::uint64_t> adj_;
};

/// Maximum clique by branch and bound with greedy-coloring bounds.
///
/// Vertices are renumbered by degree (highest first, ties by index) and the
/// candidate set is colored greedily in that order at every node; a branch is
/// cut when the clique size plus the color count cannot beat the incumbent.
/// Returns the clique as ascending original vertex indices.
inline std::vector<std::size_t> max_clique(const BitGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return {};

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

    // Adjacency in the new numbering.
    BitGraph h(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (g.has_edge(order[a], order[b])) h.add_edge(a, b);

    const std::size_t stride = h.stride();
    using Set = std::vector<std::uint64_t>;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;

    auto expand = [&](auto&& self, Set candidates) -> void {
        // Greedy coloring: vertices in ascending order, color classes as independent sets.
        std::vector<std::size_t> verts;
        std::vector<std::size_t> colors;
        Set uncolored = candidates;
        std::size_t color = 0;
        while (std::any_of(uncolored.begin(), uncolored.end(), [](std::uint64_t w) { return w != 0; })) {
            ++color;
            Set q = uncolored;
            for (std::size_t wi = 0; wi < stride; ++wi) {
                while (q[wi]) {
                    const std::size_t v = wi * 64 + static_cast<std::size_t>(std::countr_zero(q[wi]));
                    q[wi] &= q[wi] - 1;
                    uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                    const std::uint64_t* nv = h.row(v);
                    for (std::size_t j = 0; j < stride; ++j) q[j] &= ~nv[j];
                    verts.push_back(v);
                    colors.push_back(color);
                }
            }
        }
        for (std::size_t idx = verts.size(); idx-- > 0;) {
            if (current.size() + colors[idx] <= best.size()) return;
            const std::size_t v = verts[idx];
            current.push_back(v);
            Set next(stride);
            bool any = false;
            const std::uint64_t* nv = h.row(v);
            for (std::size_t j = 0; j < stride; ++j) {
                next[j] = candidates[j] & nv[j];
                any = any || next[j] != 0;
            }
            if (any)
                self(self, std::move(next));
            else if (current.size() > best.size())
                best = current;
            current.pop_back();
            candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    };

    Set all(stride, 0);
    for (std::size_t v = 0; v < n; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    expand(expand, all);

    std::vector<std::size_t> out;
    for (std::size_t v : best) out.push_back(order[v]);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::size_t> max_independent_set(const BitGraph& g) { return max_clique(g.complement()); }

enum class SubsetMode { independent, clique };

inline constexpr std::size_t max_oracle_vertices = 20;

/// Exhaustive optimum over all 2^V vertex subsets (V <= 20).
inline std::size_t naive_subset_oracle(const BitGraph& g, SubsetMode mode) {
    const std::size_t n = g.vertex_count();
    if (n > max_oracle_vertices)
        throw capacity_error("naive_subset_oracle: " + std::to_string(n) + " vertices exceeds limit " +
                             std::to_string(max_oracle_vertices));
    std::vector<std::uint32_t> nbr(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v)) nbr[u] |= std::uint32_t{1} << v;

    std::size_t best = 0;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            if (!((mask >> v) & 1U)) continue;
            const std::uint32_t others = mask & ~(std::uint32_t{1} << v);
            ok = mode == SubsetMode::clique ? (others & ~nbr[v]) == 0 : (others & nbr[v]) == 0;
        }
        if (ok) best = size;
    }
    return best;
}

inline constexpr std::size_t max_conflict_vertices = 10000;

/// Number of words in [n]_(k) (repetition-free) or [n]^k, saturating above the capacity guard.
inline std::size_t word_space_size(std::size_t n, std::size_t k, bool repetition_free) {
    if (repetition_free && k > n) return 0;
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        count *= repetition_free ? n - i : n;
        if (count > max_conflict_vertices) return max_conflict_vertices + 1;
    }
    return count;
}

/// All words of [n]_(k) or [n]^k in lexicographic order.
inline std::vector<Word> all_words(std::size_t n, std::size_t k, bool repetition_free) {
    std::vector<Word> out;
    std::vector<Letter> letters(k, 0);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == k) {
            out.emplace_back(letters);
            return;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (repetition_free && used[c]) continue;
            used[c] = 1;
            letters[pos] = static_cast<Letter>(c);
            self(self, pos + 1);
            used[c] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

/// Words as vertices, an edge wherever two words have a reverse.
struct ConflictGraph {
    std::size_t n = 0;
    std::size_t k = 0;
    bool repetition_free = true;
    std::vector<Word> vertices;
    BitGraph graph{0};
};

inline ConflictGraph build_conflict_graph(std::size_t n, std::size_t k, bool repetition_free) {
    detail::require(n >= 1 && k >= 1, "conflict graph needs n >= 1 and k >= 1");
    detail::require(!repetition_free || k <= n, "repetition-free words need k <= n");
    const std::size_t count = word_space_size(n, k, repetition_free);
    if (count > max_conflict_vertices)
        throw capacity_error("conflict graph for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                             " exceeds the " + std::to_string(max_conflict_vertices) + "-vertex limit");
    ConflictGraph cg{n, k, repetition_free, all_words(n, k, repetition_free), BitGraph(count)};
    for (std::size_t a = 0; a < count; ++a) {
        const ReverseIndex index(cg.vertices[a]);
        for (std::size_t b = a + 1; b < count; ++b)
            if (find_reverse(index, cg.vertices[a], cg.vertices[b])) cg.graph.add_edge(a, b);
    }
    return cg;
}

struct ExactResult {
    std::size_t value = 0;
    Code witness;
};

namespace detail {

inline ExactResult to_result(const ConflictGraph& cg, const std::vector<std::size_t>& chosen) {
    Code code(cg.n, cg.k, cg.repetition_free);
    for (std::size_t v : chosen) code.add(cg.vertices[v]);
    return {chosen.size(), std::move(code)};
}

}  // namespace detail

/// F(n,k) (repetition-free) or F-bar(n,k): largest reverse-free code.
inline ExactResult max_reverse_free(std::size_t n, std::size_t k, bool repetition_free) {
    const ConflictGraph cg = build_conflict_graph(n, k, repetition_free);
    return detail::to_result(cg, max_independent_set(cg.graph));
}

/// G(n,k) (repetition-free) or G-bar(n,k): largest code full of flips.
inline ExactResult max_full_of_flips(std::size_t n, std::size_t k, bool repetition_free) {
    const ConflictGraph cg = build_conflict_graph(n, k, repetition_free);
    return detail::to_result(cg, max_clique(cg.graph));
}

}  // namespace revfree
