#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "dsz/gf.hpp"

namespace dsz::zm {

/// Column cap for constructed matrices.
inline constexpr std::uint64_t kMaxColumns = 1u << 20;

/// Sparse 0-1 matrix, one strictly sorted column-index list per row.
/// Rows of the polynomial matrix are labeled by evaluation pairs (x, v) and
/// ordered lexicographically by (index(x), index(v)); columns are labeled by
/// coefficient vectors c in F^t and ordered lexicographically by
/// (c_0, ..., c_{t-1}).
struct ZMatrix {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::pair<gf::Elem, gf::Elem>> row_labels;   // (x, v)
    std::vector<std::vector<gf::Elem>> col_labels;           // c_0..c_{t-1}
    std::uint32_t field_order = 0;
    std::uint32_t degree_bound = 0;  // t

    std::uint64_t total_ones() const;
};

/// The q^2 x q^t matrix with a 1 at ((x,v), c) iff f_c(x) = v.
ZMatrix build_poly_matrix(const gf::Field& f, std::uint32_t t);

/// Rows whose evaluation point x is among the first num_x field elements.
/// Requires an untruncated t = 2 matrix and 1 <= num_x <= q.
ZMatrix truncate_rows(const ZMatrix& a, std::uint32_t num_x);

/// Max over unordered column pairs of the number of shared 1-rows.  A t x 2
/// all-1 submatrix exists iff the result is >= t.
std::uint32_t max_column_pair_intersection(const ZMatrix& a);

struct WeightReport {
    std::vector<std::uint64_t> row_weights;
    std::vector<std::uint64_t> col_weights;
    std::uint64_t total = 0;
};

WeightReport weight_report(const ZMatrix& a);

/// Kovari-Sos-Turan bound: (s-1)^{1/t} (n-t+1) m^{1-1/t} + (t-1) m.
double kst_bound(std::uint64_t m, std::uint64_t n, std::uint32_t s, std::uint32_t t);

/// Sparse text format: first line "m n", then one line per row of
/// space-separated column indices.  Dense mode writes a 0/1 grid instead.
void write_matrix(std::ostream& os, const ZMatrix& a, bool dense = false);

}  // namespace dsz::zm
