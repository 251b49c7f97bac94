#pragma once

// Dense linear algebra over Z/2, sized for the per-degree bases of the charts.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "c2mot/f2sum.hpp"

namespace c2mot {

using F2Vector = std::vector<std::uint8_t>;

class F2Matrix {
public:
    F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, bool v) { data_[r * cols_ + c] = v ? 1 : 0; }
    void flip(std::size_t r, std::size_t c) { data_[r * cols_ + c] ^= 1; }

    F2Vector column(std::size_t c) const;
    std::size_t rank() const;
    /// Basis of the null space {v : A v = 0}, as vectors of length cols().
    std::vector<F2Vector> kernel() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> data_;
};

/// Rank of a family of vectors of common length.
std::size_t rank_of(const std::vector<F2Vector>& vectors, std::size_t length);
/// True iff the two families span the same subspace of (Z/2)^length.
bool same_span(const std::vector<F2Vector>& x, const std::vector<F2Vector>& y, std::size_t length);

/// Matrix of a linear map given on a source basis, in coordinates of a target
/// basis. Returns false in `closed` if some image term lies outside the target basis.
template <class S, class T, class F>
F2Matrix matrix_of(const std::vector<S>& source, const std::vector<T>& target, F&& f, bool* closed = nullptr) {
    F2Matrix out(target.size(), source.size());
    if (closed) *closed = true;
    for (std::size_t c = 0; c < source.size(); ++c) {
        const F2Sum<T> image = f(source[c]);
        for (const auto& t : image) {
            std::size_t r = 0;
            while (r < target.size() && !(target[r] == t)) ++r;
            if (r == target.size()) {
                if (closed) *closed = false;
                continue;
            }
            out.flip(r, c);
        }
    }
    return out;
}

}  // namespace c2mot
