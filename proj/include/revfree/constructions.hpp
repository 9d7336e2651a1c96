#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "revfree/binary_matrix.hpp"
#include "revfree/code.hpp"
#include "revfree/field.hpp"
#include "revfree/pattern.hpp"

namespace revfree {

/// Raised when a plane-code construction is handed a matrix containing S.
class contains_s_error : public precondition_error {
public:
    explicit contains_s_error(ContainmentWitness w)
        : precondition_error("matrix contains the 2x2 all-ones pattern at rows " + std::to_string(w.rows[0] + 1) +
                             "," + std::to_string(w.rows[1] + 1) + " and columns " +
                             std::to_string(w.cols[0] + 1) + "," + std::to_string(w.cols[1] + 1)),
          witness_(std::move(w)) {}

    const ContainmentWitness& witness() const noexcept { return witness_; }

private:
    ContainmentWitness witness_;
};

/// Largest prime power q with q^2 + q + 1 <= n; nullopt when n < 7.
inline std::optional<std::uint32_t> largest_plane_order(std::uint64_t n) {
    if (n < 7) return std::nullopt;
    auto q = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (q * q + q + 1 > n) --q;
    for (; q >= 2; --q)
        if (as_prime_power(q)) return static_cast<std::uint32_t>(q);
    return std::nullopt;
}

namespace detail {

inline void check_plane_matrix(const BinaryMatrix& a) {
    require(a.is_square(), "plane permutation codes need a square matrix");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        require(a.row_weight(i) > 0, "row " + std::to_string(i + 1) + " is empty");
        require(a.col_weight(i) > 0, "column " + std::to_string(i + 1) + " is empty");
    }
    if (auto w = contains(a, s_pattern())) throw contains_s_error(*w);
}

}  // namespace detail

/**
 * Words of the permutation matrices dominated by `a`, which must be S-free.
 * Backtracking visits rows in order and candidate columns ascending, so a
 * limited run returns a prefix of the full enumeration. Any two permutation
 * matrices inside an S-free matrix are reverse-free.
 */
inline Code plane_permutation_code(const BinaryMatrix& a, std::optional<std::size_t> limit = std::nullopt) {
    detail::check_plane_matrix(a);
    const std::size_t n = a.rows();
    Code code(n, n, true);
    if (limit && *limit == 0) return code;

    std::vector<std::vector<std::size_t>> candidates(n);
    for (std::size_t r = 0; r < n; ++r) candidates[r] = a.row_support(r);
    std::vector<std::uint64_t> used((n + 63) / 64, 0);
    std::vector<Letter> letters(n);

    auto descend = [&](auto&& self, std::size_t row) -> bool {
        if (row == n) {
            code.add(Word(letters));
            return limit && code.size() >= *limit;
        }
        for (std::size_t c : candidates[row]) {
            const std::uint64_t bit = std::uint64_t{1} << (c % 64);
            if (used[c / 64] & bit) continue;
            used[c / 64] |= bit;
            letters[row] = static_cast<Letter>(c);
            const bool stop = self(self, row + 1);
            used[c / 64] &= ~bit;
            if (stop) return true;
        }
        return false;
    };
    descend(descend, 0);
    return code;
}

struct SampleResult {
    Code code;
    bool complete = true;  // false when the attempt budget ran out first
    std::size_t attempts = 0;
};

/**
 * Randomized matchings inside an S-free square matrix: each attempt draws a
 * fresh random row order, repeatedly matches the unmatched row with the
 * fewest free columns (ties in that order) to a uniformly random free column,
 * and restarts on a dead end. Duplicates are dropped. Stops after `count`
 * distinct words or 100 * count attempts. Deterministic for a given seed.
 */
inline SampleResult sample_plane_permutations(const BinaryMatrix& a, std::size_t count, std::uint64_t seed) {
    detail::check_plane_matrix(a);
    const std::size_t n = a.rows();
    SampleResult result{Code(n, n, true), true, 0};
    if (count == 0) return result;

    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::size_t>> candidates(n);
    for (std::size_t r = 0; r < n; ++r) candidates[r] = a.row_support(r);
    std::vector<std::size_t> order(n);
    std::vector<char> used(n);
    std::vector<char> done(n);
    std::vector<Letter> letters(n);
    std::vector<std::size_t> free_cols;
    const std::size_t budget = 100 * count;

    while (result.code.size() < count && result.attempts < budget) {
        ++result.attempts;
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        std::fill(used.begin(), used.end(), 0);
        std::fill(done.begin(), done.end(), 0);
        bool dead_end = false;
        for (std::size_t step = 0; step < n; ++step) {
            // Most constrained unmatched row next; the shuffled order breaks ties.
            std::size_t row = n;
            std::size_t fewest = n + 1;
            for (std::size_t r : order) {
                if (done[r]) continue;
                std::size_t free_count = 0;
                for (std::size_t c : candidates[r]) free_count += used[c] ? 0 : 1;
                if (free_count < fewest) {
                    fewest = free_count;
                    row = r;
                }
            }
            free_cols.clear();
            for (std::size_t c : candidates[row])
                if (!used[c]) free_cols.push_back(c);
            if (free_cols.empty()) {
                dead_end = true;
                break;
            }
            std::uniform_int_distribution<std::size_t> pick(0, free_cols.size() - 1);
            const std::size_t c = free_cols[pick(rng)];
            used[c] = 1;
            done[row] = 1;
            letters[row] = static_cast<Letter>(c);
        }
        if (!dead_end) result.code.insert(Word(letters));
    }
    result.complete = result.code.size() >= count;
    return result;
}

/// Appends (n'+1, ..., n) to every n'-permutation of `code`.
inline Code pad_code(const Code& code, std::size_t n) {
    detail::require(code.is_permutation_code(), "pad_code needs a permutation code (repetition-free, n = k)");
    const std::size_t base = code.n();
    detail::require(n >= base, "pad_code target n = " + std::to_string(n) + " is below n' = " + std::to_string(base));
    Code out(n, n, true);
    for (const Word& w : code.words()) {
        std::vector<Letter> letters = w.letters();
        for (std::size_t c = base; c < n; ++c) letters.push_back(static_cast<Letter>(c));
        out.add(Word(std::move(letters)));
    }
    return out;
}

/// Residue of a 1-based letter c modulo k (letter k has residue 0).
inline std::size_t residue(std::size_t one_based_letter, std::size_t k) { return one_based_letter % k; }

/// Letters of [n] (1-based values) in residue class `rho` modulo k, ascending.
inline std::vector<std::size_t> residue_class(std::size_t rho, std::size_t k, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t c = (rho == 0 ? k : rho); c <= n; c += k) out.push_back(c);
    return out;
}

/// Coordinatewise mod-k image of a word, read back as a k-permutation word
/// (residue 0 denotes letter k).
inline Word compression(const Word& u, std::size_t k) {
    std::vector<Letter> letters;
    letters.reserve(u.size());
    for (Letter l : u.letters()) {
        const std::size_t rho = residue(l + 1, k);
        letters.push_back(static_cast<Letter>((rho == 0 ? k : rho) - 1));
    }
    return Word(std::move(letters));
}

/// Full size of lift_code(perms, n): sum over words of the product of class sizes.
inline std::uint64_t lift_size(const Code& perms, std::size_t n) {
    const std::size_t k = perms.k();
    std::uint64_t total = 0;
    for (const Word& w : perms.words()) {
        std::uint64_t prod = 1;
        for (Letter l : w.letters()) prod *= residue_class(residue(l + 1, k), k, n).size();
        total += prod;
    }
    return total;
}

/**
 * Every word of [n]_(k) whose compression lies in `perms`. Words are emitted
 * per source permutation in lexicographic order of the representatives.
 */
inline Code lift_code(const Code& perms, std::size_t n, std::optional<std::size_t> limit = std::nullopt) {
    detail::require(perms.is_permutation_code(), "lift_code needs a permutation code (repetition-free, n = k)");
    const std::size_t k = perms.k();
    detail::require(n >= k, "lift_code needs n >= k");
    Code out(n, k, true);
    if (limit && *limit == 0) return out;

    std::vector<std::vector<std::size_t>> classes(k);
    for (std::size_t rho = 0; rho < k; ++rho) classes[rho] = residue_class(rho, k, n);

    std::vector<std::size_t> digit(k);
    std::vector<Letter> letters(k);
    for (const Word& pi : perms.words()) {
        std::vector<const std::vector<std::size_t>*> options(k);
        for (std::size_t i = 0; i < k; ++i) options[i] = &classes[residue(pi[i] + 1, k)];
        std::fill(digit.begin(), digit.end(), 0);
        while (true) {
            for (std::size_t i = 0; i < k; ++i) letters[i] = static_cast<Letter>((*options[i])[digit[i]] - 1);
            out.add(Word(letters));
            if (limit && out.size() >= *limit) return out;
            std::size_t i = k;
            while (i-- > 0) {
                if (++digit[i] < options[i]->size()) break;
                digit[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
    }
    return out;
}

/// Exponents and log2 bound values for a constructed reverse-free code.
struct BoundsReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t size = 0;
    double exponent_achieved = 0.0;      // log_n(size)
    double reference_exponent = 0.0;     // k - (k/2) log_n(k)
    double log2_lower_combinator = 0.0;  // log2(floor(n/k)^k * F(k,k) lower bound)
    double log2_upper_trivial = 0.0;     // log2((10 n k^{-1/2})^k)
    double log2_upper_shrink = 0.0;      // log2(n^k (12 e^2)^k k^{-k/2})
};

inline BoundsReport bound_table(std::size_t n, std::size_t k, std::uint64_t size, std::uint64_t fkk_lower = 1) {
    detail::require(n >= k && k >= 1, "bound_table needs n >= k >= 1");
    detail::require(size >= 1 && fkk_lower >= 1, "bound_table needs size >= 1 and F(k,k) >= 1");
    const double ln = std::log2(static_cast<double>(n));
    const double lk = std::log2(static_cast<double>(k));
    const double kk = static_cast<double>(k);
    BoundsReport r;
    r.n = n;
    r.k = k;
    r.size = size;
    // With n = 1 only the single word exists; log_1 is undefined, so report the degenerate values.
    r.exponent_achieved = n > 1 ? std::log2(static_cast<double>(size)) / ln : 0.0;
    r.reference_exponent = n > 1 ? kk - kk / 2.0 * lk / ln : kk;
    r.log2_lower_combinator = kk * std::log2(static_cast<double>(n / k)) + std::log2(static_cast<double>(fkk_lower));
    r.log2_upper_trivial = kk * std::log2(10.0 * static_cast<double>(n) / std::sqrt(kk));
    r.log2_upper_shrink = kk * ln + kk * std::log2(12.0) + 2.0 * kk * std::log2(std::numbers::e) - kk / 2.0 * lk;
    return r;
}

}  // namespace revfree
