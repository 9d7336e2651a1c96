#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revfree/error.hpp"

namespace revfree {

/// Position of a matrix entry, 0-based (row, column).
struct Entry {
    std::size_t row = 0;
    std::size_t col = 0;

    friend auto operator<=>(const Entry&, const Entry&) = default;
};

/**
 * Dense {0,1}-matrix stored row-major in 64-bit words.
 *
 * Every row occupies `words_per_row()` words; bits past `cols()` in the last
 * word of a row are always zero, so popcounts over whole rows are exact.
 */
class BinaryMatrix {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + word_bits - 1) / word_bits) {
        detail::require(rows >= 1 && cols >= 1, "BinaryMatrix needs at least one row and one column");
        bits_.assign(rows_ * stride_, 0);
    }

    /// Builds from nested 0/1 rows; all rows must share one length.
    BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows)
        : BinaryMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
        std::size_t r = 0;
        for (const auto& row : rows) {
            detail::require(row.size() == cols_, "ragged row in BinaryMatrix literal");
            std::size_t c = 0;
            for (int v : row) set(r, c++, v != 0);
            ++r;
        }
    }

    static BinaryMatrix identity(std::size_t n) {
        BinaryMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    static BinaryMatrix all_ones(std::size_t rows, std::size_t cols) {
        BinaryMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return stride_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    bool get(std::size_t r, std::size_t c) const {
        check_index(r, c);
        return (bits_[r * stride_ + c / word_bits] >> (c % word_bits)) & 1U;
    }

    void set(std::size_t r, std::size_t c, bool value = true) {
        check_index(r, c);
        word_type& w = bits_[r * stride_ + c / word_bits];
        const word_type mask = word_type{1} << (c % word_bits);
        w = value ? (w | mask) : (w & ~mask);
    }

    std::span<const word_type> row_words(std::size_t r) const {
        return {bits_.data() + r * stride_, stride_};
    }

    std::size_t row_weight(std::size_t r) const {
        std::size_t total = 0;
        for (word_type w : row_words(r)) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    std::size_t col_weight(std::size_t c) const {
        std::size_t total = 0;
        for (std::size_t r = 0; r < rows_; ++r) total += get(r, c) ? 1 : 0;
        return total;
    }

    /// Number of 1-entries.
    std::size_t weight() const {
        std::size_t total = 0;
        for (word_type w : bits_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    /// Column indices of the 1-entries in row `r`, ascending.
    std::vector<std::size_t> row_support(std::size_t r) const {
        std::vector<std::size_t> out;
        const auto words = row_words(r);
        for (std::size_t i = 0; i < words.size(); ++i) {
            word_type w = words[i];
            while (w) {
                out.push_back(i * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    /// All 1-entries in lexicographic (row, column) order.
    std::vector<Entry> ones() const {
        std::vector<Entry> out;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c : row_support(r)) out.push_back({r, c});
        return out;
    }

    BinaryMatrix transpose() const {
        BinaryMatrix t(cols_, rows_);
        for (const Entry& e : ones()) t.set(e.col, e.row);
        return t;
    }

    /// Entrywise OR with a matrix of the same shape.
    BinaryMatrix& operator|=(const BinaryMatrix& other) {
        detail::require(rows_ == other.rows_ && cols_ == other.cols_, "shape mismatch in BinaryMatrix OR");
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
        return *this;
    }

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

    /// Rows rendered as '0'/'1' strings, newline separated.
    std::string to_string() const {
        std::string s;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
            s += '\n';
        }
        return s;
    }

private:
    void check_index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw precondition_error("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                                     ") out of range for " + std::to_string(rows_) + "x" +
                                     std::to_string(cols_));
    }

    std::size_t rows_;
    std::size_t cols_;
    std::size_t stride_;
    std::vector<word_type> bits_;
};

/// The 2x2 all-ones pattern.
inline BinaryMatrix s_pattern() { return BinaryMatrix::all_ones(2, 2); }

}  // namespace revfree
