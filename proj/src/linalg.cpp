#include "c2mot/linalg.hpp"

#include <utility>

namespace c2mot {

namespace {

// Row-reduces in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> reduce(std::vector<F2Vector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || !rows[k][c]) continue;
            for (std::size_t j = 0; j < cols; ++j) rows[k][j] ^= rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

F2Vector F2Matrix::column(std::size_t c) const {
    F2Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

std::size_t F2Matrix::rank() const {
    std::vector<F2Vector> rows(rows_, F2Vector(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) rows[r][c] = at(r, c);
    return reduce(rows, cols_).size();
}

std::vector<F2Vector> F2Matrix::kernel() const {
    std::vector<F2Vector> rows(rows_, F2Vector(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) rows[r][c] = at(r, c);
    const auto pivots = reduce(rows, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<F2Vector> out;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        F2Vector v(cols_, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = rows[k][free];
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank_of(const std::vector<F2Vector>& vectors, std::size_t length) {
    std::vector<F2Vector> rows = vectors;
    return reduce(rows, length).size();
}

bool same_span(const std::vector<F2Vector>& x, const std::vector<F2Vector>& y, std::size_t length) {
    std::vector<F2Vector> both = x;
    both.insert(both.end(), y.begin(), y.end());
    const std::size_t r = rank_of(both, length);
    return r == rank_of(x, length) && r == rank_of(y, length);
}

}  // namespace c2mot
