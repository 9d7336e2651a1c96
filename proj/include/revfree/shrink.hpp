#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revfree/binary_matrix.hpp"
#include "revfree/code.hpp"
#include "revfree/error.hpp"
#include "revfree/pattern.hpp"

namespace revfree {

/**
 * A code together with its overall matrix and the per-entry support counts
 * (how many words have letter c at position r). Rows of the overall matrix
 * are positions, columns are letters.
 */
class ShrinkState {
public:
    explicit ShrinkState(Code code) : code_(std::move(code)), overall_(overall_matrix(code_)) {
        support_.assign(code_.k() * code_.n(), 0);
        for (const Word& w : code_.words())
            for (std::size_t i = 0; i < w.size(); ++i) ++support_[i * code_.n() + w[i]];
        weight_ = overall_.weight();
        density_ = static_cast<double>(weight_) /
                   (static_cast<double>(code_.n()) * std::sqrt(static_cast<double>(code_.k())));
        for (std::size_t r = 0; r < overall_.rows(); ++r)
            if (overall_.row_weight(r) <= 1) ++emptiness_;
    }

    const Code& code() const noexcept { return code_; }
    const BinaryMatrix& overall() const noexcept { return overall_; }
    std::size_t size() const noexcept { return code_.size(); }
    std::size_t weight() const noexcept { return weight_; }
    /// weight / (n sqrt(k))
    double density() const noexcept { return density_; }
    /// Rows of the overall matrix with at most one 1-entry.
    std::size_t emptiness() const noexcept { return emptiness_; }

    std::size_t support(const Entry& e) const { return support_[e.row * code_.n() + e.col]; }

private:
    Code code_;
    BinaryMatrix overall_;
    std::vector<std::size_t> support_;
    std::size_t weight_ = 0;
    double density_ = 0.0;
    std::size_t emptiness_ = 0;
};

/// Overall 1-entries supported by at most |U|/n words, in lexicographic order.
inline std::vector<Entry> light_entries(const ShrinkState& s) {
    std::vector<Entry> out;
    const std::size_t n = s.code().n();
    for (const Entry& e : s.overall().ones())
        if (s.support(e) * n <= s.size()) out.push_back(e);
    return out;
}

using EntryPair = std::pair<Entry, Entry>;

/**
 * Pairs of overall 1-entries in distinct rows and distinct columns that no
 * single word realizes together. Each pair is ordered (smaller entry first)
 * and the list is sorted.
 */
inline std::vector<EntryPair> avoided_pairs(const ShrinkState& s) {
    const auto entries = s.overall().ones();
    const std::size_t m = s.size();
    const std::size_t stride = (m + 63) / 64;
    const std::size_t n = s.code().n();

    // Bitset of supporting words per overall entry.
    std::vector<std::uint64_t> bits(entries.size() * stride, 0);
    std::vector<std::size_t> slot(s.code().k() * n, 0);
    for (std::size_t e = 0; e < entries.size(); ++e) slot[entries[e].row * n + entries[e].col] = e;
    for (std::size_t w = 0; w < m; ++w) {
        const Word& word = s.code()[w];
        for (std::size_t i = 0; i < word.size(); ++i)
            bits[slot[i * n + word[i]] * stride + w / 64] |= std::uint64_t{1} << (w % 64);
    }

    std::vector<EntryPair> out;
    for (std::size_t a = 0; a < entries.size(); ++a)
        for (std::size_t b = a + 1; b < entries.size(); ++b) {
            if (entries[a].row == entries[b].row || entries[a].col == entries[b].col) continue;
            bool together = false;
            for (std::size_t j = 0; j < stride && !together; ++j)
                together = (bits[a * stride + j] & bits[b * stride + j]) != 0;
            if (!together) out.emplace_back(entries[a], entries[b]);
        }
    return out;
}

enum class StepKind { light, heavy };

/// One executed shrink step. Sizes, weights, emptiness before and after.
struct StepRecord {
    StepKind kind = StepKind::light;
    Entry entry;
    std::size_t size_before = 0, size_after = 0;
    std::size_t weight_before = 0, weight_after = 0;
    double density = 0.0;  // before the step
    std::size_t emptiness_before = 0, emptiness_after = 0;
    std::size_t phase = 0;
    // Heavy steps: avoided pairs through the chosen entry, whether the counting
    // premises (density >= 5, no light entry, enough S-occurrences) held, and
    // the count they guarantee.
    std::size_t avoided_count = 0;
    bool premise_ok = true;
    double required_avoided = 0.0;
};

namespace detail {

inline std::pair<ShrinkState, StepRecord> do_light_step(const ShrinkState& s) {
    const auto light = light_entries(s);
    require(!light.empty(), "light_step: no light entry");
    const Entry e = light.front();
    ShrinkState next(s.code().filtered([&](const Word& w) { return w[e.row] != e.col; }));

    const std::size_t n = s.code().n();
    ensure(next.size() * n >= (n - 1) * s.size(), "light step kept fewer than (1 - 1/n)|U| words");
    ensure(next.weight() + 1 <= s.weight(), "light step did not lower the overall weight");
    ensure(next.emptiness() >= s.emptiness(), "light step lowered the emptiness");

    StepRecord rec;
    rec.kind = StepKind::light;
    rec.entry = e;
    rec.size_before = s.size();
    rec.size_after = next.size();
    rec.weight_before = s.weight();
    rec.weight_after = next.weight();
    rec.density = s.density();
    rec.emptiness_before = s.emptiness();
    rec.emptiness_after = next.emptiness();
    return {std::move(next), rec};
}

inline bool in_s_occurrence(const BinaryMatrix& a, const Entry& e) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (r == e.row || !a.get(r, e.col)) continue;
        const auto row_r = a.row_words(r);
        const auto row_e = a.row_words(e.row);
        for (std::size_t w = 0; w < row_r.size(); ++w) {
            std::uint64_t both = row_r[w] & row_e[w];
            if (w == e.col / 64) both &= ~(std::uint64_t{1} << (e.col % 64));
            if (both) return true;
        }
    }
    return false;
}

inline std::pair<ShrinkState, StepRecord> do_heavy_step(const ShrinkState& s) {
    const auto pairs = avoided_pairs(s);
    if (pairs.empty()) throw precondition_error("no heavy candidate");

    const std::size_t n = s.code().n();
    const std::size_t k = s.code().k();
    std::vector<std::size_t> count(k * n, 0);
    for (const auto& [a, b] : pairs) {
        ++count[a.row * n + a.col];
        ++count[b.row * n + b.col];
    }
    // Maximizer, ties to the lexicographically smallest entry.
    std::size_t best = 0;
    for (std::size_t i = 1; i < count.size(); ++i)
        if (count[i] > count[best]) best = i;
    const Entry e{best / n, best % n};

    ShrinkState next(s.code().filtered([&](const Word& w) { return w[e.row] == e.col; }));

    for (const auto& [a, b] : pairs) {
        if (a == e) ensure(!next.overall().get(b.row, b.col), "avoided partner survived a heavy step");
        if (b == e) ensure(!next.overall().get(a.row, a.col), "avoided partner survived a heavy step");
    }
    ensure(next.overall().row_weight(e.row) == 1, "heavy step left more than one 1 in the chosen row");
    const bool in_s = in_s_occurrence(s.overall(), e);
    if (in_s) ensure(next.emptiness() >= s.emptiness() + 1, "heavy step did not raise the emptiness");

    StepRecord rec;
    rec.kind = StepKind::heavy;
    rec.entry = e;
    rec.size_before = s.size();
    rec.size_after = next.size();
    rec.weight_before = s.weight();
    rec.weight_after = next.weight();
    rec.density = s.density();
    rec.emptiness_before = s.emptiness();
    rec.emptiness_after = next.emptiness();
    rec.avoided_count = count[best];

    const double m = s.density();
    const double nn = static_cast<double>(n);
    rec.required_avoided = 2.0 * nn * m * m * m / (5.0 * std::sqrt(static_cast<double>(k)));
    const bool no_light = light_entries(s).empty();
    rec.premise_ok = m >= 5.0 && no_light &&
                     static_cast<double>(count_s(s.overall()).exact_count) >= nn * nn * m * m * m * m / 5.0 &&
                     verify_reverse_free_pairwise(s.code()).holds;
    if (no_light) ensure(next.size() * n >= s.size(), "heavy step kept fewer than |U|/n words");
    if (rec.premise_ok)
        ensure(static_cast<double>(rec.avoided_count) >= rec.required_avoided,
               "chosen entry lies in fewer avoided pairs than guaranteed");
    return {std::move(next), rec};
}

}  // namespace detail

/// Drops every word through the smallest light entry.
inline ShrinkState light_step(const ShrinkState& s) { return detail::do_light_step(s).first; }

/// Keeps only the words through the entry lying in the most avoided pairs.
inline ShrinkState heavy_step(const ShrinkState& s) { return detail::do_heavy_step(s).first; }

struct ShrinkTrace {
    std::vector<StepRecord> steps;
    std::vector<std::size_t> phase_starts;  // 1-based step indices
    std::size_t heavy_count = 0;
    std::size_t initial_size = 0;
    std::size_t final_size = 0;
    double final_density = 0.0;
    std::size_t n = 0;
    std::size_t k = 0;
    double threshold = 10.0;
    /// log2((10 n / sqrt(k))^k); present when the final density is below 10.
    std::optional<double> log2_size_bound_trivial;
    /// (k - t) log2 n + k log2(12 / sqrt(k)) + 2k log2 e + t log2 n
    double log2_size_bound_combined = 0.0;
};

/// Thrown when run_shrink receives a code that is not reverse-free.
class not_reverse_free_error : public precondition_error {
public:
    explicit not_reverse_free_error(PairWitness w)
        : precondition_error("input code is not reverse-free"), witness_(w) {}
    const PairWitness& witness() const noexcept { return witness_; }

private:
    PairWitness witness_;
};

/**
 * Shrinks a reverse-free code while its density is at least `threshold`:
 * a light step when a light entry exists, otherwise a heavy step when an
 * avoided pair exists, otherwise stop. Phase j+1 begins at the first step
 * whose starting density is at most half the density at the start of phase j.
 */
inline ShrinkTrace run_shrink(const Code& input, double threshold = 10.0) {
    if (auto v = verify_reverse_free(input); !v.holds) throw not_reverse_free_error(*v.witness);

    ShrinkState state(input);
    ShrinkTrace trace;
    trace.n = input.n();
    trace.k = input.k();
    trace.threshold = threshold;
    trace.initial_size = state.size();

    double phase_density = 0.0;
    while (state.density() >= threshold) {
        std::optional<std::pair<ShrinkState, StepRecord>> outcome;
        if (!light_entries(state).empty())
            outcome = detail::do_light_step(state);
        else if (!avoided_pairs(state).empty())
            outcome = detail::do_heavy_step(state);
        else
            break;

        auto& [next, rec] = *outcome;
        const std::size_t index = trace.steps.size() + 1;
        if (index == 1 || rec.density <= phase_density / 2.0) {
            trace.phase_starts.push_back(index);
            phase_density = rec.density;
        }
        rec.phase = trace.phase_starts.size();
        detail::ensure(rec.weight_after < rec.weight_before, "shrink step did not lower the weight");
        detail::ensure(rec.size_after <= rec.size_before, "shrink step grew the code");
        if (rec.kind == StepKind::heavy) ++trace.heavy_count;
        detail::ensure(trace.heavy_count <= trace.k, "more heavy steps than rows");
        trace.steps.push_back(rec);
        state = std::move(next);
    }

    trace.final_size = state.size();
    trace.final_density = state.density();
    const double n = static_cast<double>(trace.n);
    const double k = static_cast<double>(trace.k);
    const double t = static_cast<double>(trace.heavy_count);
    if (trace.final_density < 10.0) trace.log2_size_bound_trivial = k * std::log2(10.0 * n / std::sqrt(k));
    trace.log2_size_bound_combined = (k - t) * std::log2(n) + k * std::log2(12.0 / std::sqrt(k)) +
                                     2.0 * k * std::log2(std::numbers::e) + t * std::log2(n);
    return trace;
}

}  // namespace revfree
