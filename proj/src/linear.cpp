#include "hsf/linear.hpp"

#include <stdexcept>

namespace hsf {

std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("rref: ragged matrix");

    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);

        const Rational inv = m[row][col].reciprocal();
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> nullspace_basis(RationalMatrix a, std::size_t n_unknowns) {
    std::vector<std::vector<Rational>> basis;
    const std::size_t cols = n_unknowns;
    if (!a.empty() && a[0].size() != cols)
        throw std::invalid_argument("nullspace_basis: column count mismatch");
    const std::vector<std::size_t> pivots = rref(a);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolveResult solve_linear(RationalMatrix a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: row count mismatch");
    LinearSolveResult res;
    if (a.empty()) {
        res.consistent = true;
        res.unique = true;
        return res;
    }
    const std::size_t cols = a[0].size();
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);

    const std::vector<std::size_t> pivots = rref(a);
    res.rank = pivots.size();
    if (!pivots.empty() && pivots.back() == cols) return res;  // 0 = 1 row: inconsistent

    res.consistent = true;
    res.unique = pivots.size() == cols;
    res.solution.assign(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) res.solution[pivots[r]] = a[r][cols];
    return res;
}

}  // namespace hsf
