#include "dsz/zmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace dsz::zm {

std::uint64_t ZMatrix::total_ones() const {
    std::uint64_t t = 0;
    for (const auto& r : rows) t += r.size();
    return t;
}

ZMatrix build_poly_matrix(const gf::Field& f, std::uint32_t t) {
    if (t < 2) throw std::invalid_argument("degree bound t must be >= 2");
    const std::uint64_t q = f.q();
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        n *= q;
        if (n > kMaxColumns) throw std::invalid_argument("q^t exceeds column cap");
    }

    ZMatrix a;
    a.m = q * q;
    a.n = n;
    a.field_order = f.q();
    a.degree_bound = t;
    a.rows.resize(a.m);
    a.row_labels.reserve(a.m);
    for (gf::Elem x = 0; x < q; ++x)
        for (gf::Elem v = 0; v < q; ++v) a.row_labels.emplace_back(x, v);
    a.col_labels.reserve(n);

    // Column j has coefficient tuple given by the base-q digits of j with
    // c_0 most significant, so increasing j is lexicographic in (c_0,...).
    std::vector<gf::Elem> c(t);
    for (std::uint64_t j = 0; j < n; ++j) {
        std::uint64_t rem = j;
        for (std::uint32_t i = 0; i < t; ++i) {
            c[t - 1 - i] = static_cast<gf::Elem>(rem % q);
            rem /= q;
        }
        a.col_labels.push_back(c);
        for (gf::Elem x = 0; x < q; ++x) {
            const gf::Elem v = f.poly_eval(c, x);
            a.rows[std::uint64_t(x) * q + v].push_back(static_cast<std::uint32_t>(j));
        }
    }
    return a;
}

ZMatrix truncate_rows(const ZMatrix& a, std::uint32_t num_x) {
    if (a.degree_bound != 2 || a.m != std::uint64_t(a.field_order) * a.field_order)
        throw std::invalid_argument("truncate_rows requires an untruncated t=2 matrix");
    if (num_x < 1 || num_x > a.field_order)
        throw std::invalid_argument("num_x out of range");
    ZMatrix b = a;
    const std::uint64_t keep = std::uint64_t(num_x) * a.field_order;
    b.m = keep;
    b.rows.resize(keep);
    b.row_labels.resize(keep);
    return b;
}

std::uint32_t max_column_pair_intersection(const ZMatrix& a) {
    // Transpose once into per-column sorted row lists, then merge-count pairs.
    std::vector<std::vector<std::uint32_t>> cols(a.n);
    for (std::uint64_t i = 0; i < a.m; ++i)
        for (std::uint32_t j : a.rows[i]) cols[j].push_back(static_cast<std::uint32_t>(i));

    std::uint32_t best = 0;
    for (std::uint64_t j1 = 0; j1 < a.n; ++j1) {
        const auto& c1 = cols[j1];
        if (c1.empty()) continue;
        for (std::uint64_t j2 = j1 + 1; j2 < a.n; ++j2) {
            const auto& c2 = cols[j2];
            std::uint32_t common = 0;
            std::size_t i1 = 0, i2 = 0;
            while (i1 < c1.size() && i2 < c2.size()) {
                if (c1[i1] < c2[i2]) ++i1;
                else if (c1[i1] > c2[i2]) ++i2;
                else { ++common; ++i1; ++i2; }
            }
            best = std::max(best, common);
        }
    }
    return best;
}

WeightReport weight_report(const ZMatrix& a) {
    WeightReport r;
    r.row_weights.reserve(a.rows.size());
    r.col_weights.assign(a.n, 0);
    for (const auto& row : a.rows) {
        r.row_weights.push_back(row.size());
        r.total += row.size();
        for (std::uint32_t j : row) ++r.col_weights[j];
    }
    return r;
}

double kst_bound(std::uint64_t m, std::uint64_t n, std::uint32_t s, std::uint32_t t) {
    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    return std::pow(s - 1.0, 1.0 / t) * (nd - t + 1.0) * std::pow(md, 1.0 - 1.0 / t) +
           (t - 1.0) * md;
}

void write_matrix(std::ostream& os, const ZMatrix& a, bool dense) {
    os << a.m << ' ' << a.n << '\n';
    if (!dense) {
        for (const auto& row : a.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? " " : "") << row[i];
            os << '\n';
        }
        return;
    }
    for (const auto& row : a.rows) {
        std::size_t next = 0;
        for (std::uint64_t j = 0; j < a.n; ++j) {
            if (next < row.size() && row[next] == j) { os << '1'; ++next; }
            else os << '0';
            if (j + 1 < a.n) os << ' ';
        }
        os << '\n';
    }
}

}  // namespace dsz::zm
