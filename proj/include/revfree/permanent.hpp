#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "revfree/binary_matrix.hpp"

namespace revfree {

using BigInt = boost::multiprecision::cpp_int;

/// Largest side accepted by permanent(); Ryser costs 2^n n.
inline constexpr std::size_t max_permanent_side = 30;

/**
 * Permanent of a square 0/1 matrix, i.e. the number of permutation matrices
 * it dominates. Ryser's inclusion-exclusion over column subsets, visited in
 * Gray-code order so each step toggles one column in the row sums.
 */
inline BigInt permanent(const BinaryMatrix& a) {
    detail::require(a.is_square(), "permanent() needs a square matrix, got " + std::to_string(a.rows()) +
                                       "x" + std::to_string(a.cols()));
    const std::size_t n = a.rows();
    if (n > max_permanent_side)
        throw capacity_error("permanent(): side " + std::to_string(n) + " exceeds limit " +
                             std::to_string(max_permanent_side));

    for (std::size_t r = 0; r < n; ++r)
        if (a.row_weight(r) == 0) return 0;

    // Column supports, so a toggle only touches the rows it changes.
    const BinaryMatrix columns = a.transpose();
    std::vector<std::vector<std::size_t>> col_rows(n);
    for (std::size_t c = 0; c < n; ++c) col_rows[c] = columns.row_support(c);
    std::vector<std::int64_t> row_sums(n, 0);
    std::size_t zero_rows = n;  // row sums equal to 0 make the term vanish
    BigInt total = 0;
    constexpr std::size_t narrow_side = 26;
    const std::size_t half = n / 2;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t gray = 0;
    for (std::uint64_t step = 1; step < subsets; ++step) {
        const auto col = static_cast<std::size_t>(std::countr_zero(step));
        const std::uint64_t bit = std::uint64_t{1} << col;
        const bool adding = (gray & bit) == 0;
        gray ^= bit;
        for (std::size_t r : col_rows[col]) {
            std::int64_t& s = row_sums[r];
            if (s == 0) --zero_rows;
            s += adding ? 1 : -1;
            if (s == 0) ++zero_rows;
        }
        if (zero_rows > 0) continue;

        const bool odd = (std::popcount(gray) % 2) != 0;
        // (-1)^(n - |S|): positive when |S| and n share parity.
        const bool positive = odd == (n % 2 == 1);
        BigInt term;
        if (n <= narrow_side) {
            // n^n < 2^127 here, so the product fits.
            unsigned __int128 product = 1;
            for (std::int64_t s : row_sums) product *= static_cast<unsigned __int128>(s);
            term = BigInt(product);
        } else {
            // Each half is at most 30^15 < 2^74.
            unsigned __int128 low = 1, high = 1;
            for (std::size_t r = 0; r < half; ++r) low *= static_cast<unsigned __int128>(row_sums[r]);
            for (std::size_t r = half; r < n; ++r) high *= static_cast<unsigned __int128>(row_sums[r]);
            term = BigInt(low);
            term *= BigInt(high);
        }
        positive ? total += term : total -= term;
    }
    return total;
}

/// (d/n)^n n!, the van der Waerden lower bound for the permanent of a
/// d-regular n x n 0/1 matrix. Evaluated in log space.
inline double regular_permanent_lower_bound(std::size_t n, std::size_t d) {
    detail::require(d >= 1 && d <= n, "regular_permanent_lower_bound needs 1 <= d <= n");
    const double nn = static_cast<double>(n);
    return std::exp(nn * std::log(static_cast<double>(d) / nn) + std::lgamma(nn + 1.0));
}

}  // namespace revfree
