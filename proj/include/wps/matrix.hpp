// Ideals and profiled 2-row (or general p x q) graded matrices: entry (i,j)
// is zero or homogeneous of degree a_j + b_{i-1} with b_0 = 0. The profile
// (a_1..a_q; b_1..b_{p-1}) is inferred from the entries and kept normalized
// with columns sorted ascending.
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "wps/errors.hpp"
#include "wps/parse.hpp"
#include "wps/polynomial.hpp"
#include "wps/weights.hpp"

namespace wps {

struct Ideal {
    WeightSystem ambient;
    std::vector<Polynomial> generators;

    Ideal() = default;
    // Drops zeros and deduplicates generators up to scalar.
    Ideal(WeightSystem W, std::vector<Polynomial> gens) : ambient(std::move(W)) {
        std::set<Polynomial> seen;
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            Polynomial n = g.normalized();
            if (seen.insert(n).second) generators.push_back(n);
        }
    }

    bool is_zero() const { return generators.empty(); }

    bool is_homogeneous() const {
        for (const auto& g : generators)
            if (!g.homogeneous_degree(ambient)) return false;
        return true;
    }
};

struct MatrixProfile {
    std::vector<long> col_degrees;   // ascending
    std::vector<long> row_offsets;   // b_1..b_{p-1}
    std::vector<int> column_permutation;  // sorted position -> original column

    std::string display() const {
        std::string s = "(";
        for (size_t i = 0; i < col_degrees.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(col_degrees[i]);
        }
        if (!row_offsets.empty()) {
            s += ";";
            for (size_t i = 0; i < row_offsets.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(row_offsets[i]);
            }
        }
        return s + ")";
    }
};

class GradedMatrix {
public:
    GradedMatrix() = default;
    GradedMatrix(WeightSystem W, std::vector<std::vector<Polynomial>> entries)
        : ambient_(std::move(W)), entries_(std::move(entries)) {
        if (entries_.empty() || entries_[0].empty())
            throw DimensionError("matrix must be nonempty");
        for (const auto& row : entries_)
            if (row.size() != entries_[0].size())
                throw DimensionError("ragged matrix");
    }

    static GradedMatrix parse(const WeightSystem& W,
                              const std::vector<std::vector<std::string>>& rows) {
        std::vector<std::vector<Polynomial>> entries;
        for (const auto& row : rows) {
            entries.emplace_back();
            for (const auto& cell : row) entries.back().push_back(parse_polynomial(cell, W));
        }
        return GradedMatrix(W, std::move(entries));
    }

    int rows() const { return static_cast<int>(entries_.size()); }
    int cols() const { return static_cast<int>(entries_[0].size()); }
    const WeightSystem& ambient() const { return ambient_; }
    const Polynomial& entry(int i, int j) const { return entries_.at(i).at(j); }
    const std::vector<std::vector<Polynomial>>& entries() const { return entries_; }

private:
    WeightSystem ambient_;
    std::vector<std::vector<Polynomial>> entries_;
};

// Infers and validates the profile. Throws DimensionError naming the first
// offending cell if some entry is inhomogeneous or the degrees are
// inconsistent with a (col_degrees; row_offsets) pattern.
inline MatrixProfile profile_of(const GradedMatrix& M) {
    const int p = M.rows(), q = M.cols();
    const long kUnknown = -1;
    std::vector<std::vector<long>> deg(p, std::vector<long>(q, kUnknown));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            const Polynomial& f = M.entry(i, j);
            if (f.is_zero()) continue;
            auto d = f.homogeneous_degree(M.ambient());
            if (!d)
                throw DimensionError("inhomogeneous entry at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
            deg[i][j] = *d;
        }

    // Row offsets relative to row 0: need some column meeting both rows.
    std::vector<long> offset(p, kUnknown);
    offset[0] = 0;
    for (int i = 1; i < p; ++i)
        for (int j = 0; j < q && offset[i] == kUnknown; ++j)
            if (deg[0][j] != kUnknown && deg[i][j] != kUnknown) offset[i] = deg[i][j] - deg[0][j];
    for (int i = 1; i < p; ++i)
        if (offset[i] == kUnknown)
            throw DimensionError("row " + std::to_string(i) +
                                 " shares no nonzero column with row 0; offsets undetermined");

    std::vector<long> a(q, kUnknown);
    for (int j = 0; j < q; ++j) {
        for (int i = 0; i < p; ++i)
            if (deg[i][j] != kUnknown) {
                long cand = deg[i][j] - offset[i];
                if (a[j] == kUnknown) a[j] = cand;
                else if (a[j] != cand)
                    throw DimensionError("degree pattern violated at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
            }
        if (a[j] == kUnknown)
            throw DimensionError("column " + std::to_string(j) + " is zero; degree undetermined");
        if (a[j] <= 0) throw DimensionError("column degree must be positive");
    }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            if (deg[i][j] != kUnknown && deg[i][j] != a[j] + offset[i])
                throw DimensionError("degree pattern violated at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");

    MatrixProfile prof;
    prof.column_permutation.resize(q);
    for (int j = 0; j < q; ++j) prof.column_permutation[j] = j;
    std::stable_sort(prof.column_permutation.begin(), prof.column_permutation.end(),
                     [&](int x, int y) { return a[x] < a[y]; });
    for (int j : prof.column_permutation) prof.col_degrees.push_back(a[j]);
    for (int i = 1; i < p; ++i) {
        if (offset[i] < 0) throw DimensionError("row offsets must be nonnegative");
        prof.row_offsets.push_back(offset[i]);
    }
    if (!std::is_sorted(prof.row_offsets.begin(), prof.row_offsets.end()))
        throw DimensionError("row offsets must be weakly increasing");
    return prof;
}

namespace detail {

inline Polynomial det_by_laplace(const GradedMatrix& M, const std::vector<int>& rows,
                                 const std::vector<int>& cols) {
    const size_t k = rows.size();
    if (k == 1) return M.entry(rows[0], cols[0]);
    Polynomial acc(M.ambient().var_count());
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        if (M.entry(rows[0], cols[j]).is_zero()) continue;
        std::vector<int> sub_cols;
        for (size_t l = 0; l < k; ++l)
            if (l != j) sub_cols.push_back(cols[l]);
        Polynomial minor = det_by_laplace(M, sub_rows, sub_cols);
        Polynomial term = M.entry(rows[0], cols[j]) * minor;
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

template <class F>
void for_each_combination(int n, int k, F f) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

// Ideal of all size x size minors.
inline Ideal minors(const GradedMatrix& M, int size) {
    if (size < 1 || size > std::min(M.rows(), M.cols()))
        throw DimensionError("minor size out of range");
    std::vector<Polynomial> gens;
    detail::for_each_combination(M.rows(), size, [&](const std::vector<int>& rows) {
        detail::for_each_combination(M.cols(), size, [&](const std::vector<int>& cols) {
            gens.push_back(detail::det_by_laplace(M, rows, cols));
        });
    });
    return Ideal(M.ambient(), std::move(gens));
}

}  // namespace wps
