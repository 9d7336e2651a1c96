#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "revfree/binary_matrix.hpp"

namespace revfree {

/// Rows and columns of B (0-based, increasing) under which Q is dominated.
struct ContainmentWitness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    friend bool operator==(const ContainmentWitness&, const ContainmentWitness&) = default;
};

namespace detail {

// Advances `idx` (strictly increasing, values < n) to the next combination.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/**
 * Searches B for a submatrix that dominates Q entrywise.
 *
 * Row subsets are scanned in lexicographic order; for each one the column
 * witness is chosen greedily (earliest usable column per pattern column),
 * which yields the lexicographically smallest witness overall. Intended for
 * small patterns: cost grows as C(B.rows, Q.rows).
 */
inline std::optional<ContainmentWitness> contains(const BinaryMatrix& big, const BinaryMatrix& pattern) {
    detail::require(pattern.rows() <= big.rows() && pattern.cols() <= big.cols(),
                    "pattern larger than matrix in contains()");
    const std::size_t qr = pattern.rows();
    const std::size_t qc = pattern.cols();

    std::vector<std::size_t> rows(qr);
    for (std::size_t i = 0; i < qr; ++i) rows[i] = i;
    do {
        ContainmentWitness w{rows, {}};
        std::size_t col = 0;
        for (std::size_t j = 0; j < qc && col < big.cols(); ++j) {
            for (; col < big.cols(); ++col) {
                bool usable = true;
                for (std::size_t i = 0; i < qr && usable; ++i)
                    if (pattern.get(i, j) && !big.get(rows[i], col)) usable = false;
                if (usable) break;
            }
            if (col == big.cols()) break;
            w.cols.push_back(col++);
        }
        if (w.cols.size() == qc) return w;
    } while (detail::next_combination(rows, big.rows()));
    return std::nullopt;
}

/// Lower-bound value for the number of S-occurrences plus whether the
/// hypotheses under which it is guaranteed are met.
struct LemmaBound {
    double value = 0.0;
    bool premises_hold = false;
};

/**
 * n^2 (m^2 - 1)^2 / 4 - m^3 n sqrt(k), evaluated unconditionally.
 *
 * The guarantee (every k x n matrix with at least m n sqrt(k) ones has that
 * many S-occurrences) needs n >= k >= 1 and 1 <= m <= sqrt(k); `premises_hold`
 * reports exactly that.
 */
inline LemmaBound lemma_bound(std::size_t n, std::size_t k, double m) {
    const double nn = static_cast<double>(n);
    const double root_k = std::sqrt(static_cast<double>(k));
    const double sq = m * m - 1.0;
    LemmaBound b;
    b.value = nn * nn * sq * sq / 4.0 - m * m * m * nn * root_k;
    // Small slack so that m computed as weight/(n sqrt k) at the boundary counts as in range.
    constexpr double eps = 1e-12;
    b.premises_hold = n >= k && k >= 1 && m >= 1.0 - eps && m <= root_k + eps;
    return b;
}

struct SCountReport {
    std::uint64_t exact_count = 0;     // S-occurrences: sum over column pairs of C(r_ij, 2)
    std::uint64_t row_pair_count = 0;  // sum over rows of C(d_i, 2)
    double density_m = 0.0;            // weight / (cols sqrt(rows))
    LemmaBound analytic_bound;
};

/// Counts occurrences of the 2x2 all-ones pattern via column-pair
/// intersections (AND + popcount over the transposed bit rows).
inline SCountReport count_s(const BinaryMatrix& a) {
    const BinaryMatrix columns = a.transpose();
    SCountReport report;
    for (std::size_t i = 0; i < columns.rows(); ++i) {
        const auto ci = columns.row_words(i);
        for (std::size_t j = i + 1; j < columns.rows(); ++j) {
            const auto cj = columns.row_words(j);
            std::uint64_t shared = 0;
            for (std::size_t w = 0; w < ci.size(); ++w)
                shared += static_cast<std::uint64_t>(std::popcount(ci[w] & cj[w]));
            report.exact_count += shared * (shared - (shared ? 1 : 0)) / 2;
        }
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const std::uint64_t d = a.row_weight(r);
        report.row_pair_count += d * (d - (d ? 1 : 0)) / 2;
    }
    report.density_m = static_cast<double>(a.weight()) /
                       (static_cast<double>(a.cols()) * std::sqrt(static_cast<double>(a.rows())));
    report.analytic_bound = lemma_bound(a.cols(), a.rows(), report.density_m);
    return report;
}

}  // namespace revfree
