#include <doctest.h>

#include "c2mot/linalg.hpp"
#include "c2mot/sample.hpp"

using namespace c2mot;

namespace {

F2Vector mat_vec(const F2Matrix& m, const F2Vector& v) {
    F2Vector out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] ^= m.at(r, c) & v[c];
    return out;
}

}  // namespace

TEST_CASE("rank and kernel of small matrices") {
    F2Matrix m(2, 3);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 1, true);
    m.set(1, 2, true);
    CHECK(m.rank() == 2);
    const auto ker = m.kernel();
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == F2Vector{1, 1, 1});

    F2Matrix z(3, 2);
    CHECK(z.rank() == 0);
    CHECK(z.kernel().size() == 2);
    CHECK(F2Matrix(0, 0).rank() == 0);
}

TEST_CASE("rank-nullity and kernel vectors on random matrices") {
    Sampler rnd(31, 1);
    for (int k = 0; k < 300; ++k) {
        const std::size_t rows = static_cast<std::size_t>(rnd.uniform(0, 6));
        const std::size_t cols = static_cast<std::size_t>(rnd.uniform(0, 6));
        F2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rnd.uniform(0, 1) == 1);
        const auto ker = m.kernel();
        CHECK(m.rank() + ker.size() == cols);
        CHECK(rank_of(ker, cols) == ker.size());
        for (const auto& v : ker) CHECK(mat_vec(m, v) == F2Vector(rows, 0));
    }
}

TEST_CASE("span equality") {
    const std::vector<F2Vector> x{{1, 0, 1}, {0, 1, 1}};
    const std::vector<F2Vector> y{{1, 1, 0}, {1, 0, 1}};
    const std::vector<F2Vector> z{{1, 0, 0}};
    CHECK(same_span(x, y, 3));
    CHECK_FALSE(same_span(x, z, 3));
    CHECK(same_span({}, {{0, 0, 0}}, 3));
}

TEST_CASE("matrix_of reports terms outside the target basis") {
    const std::vector<int> src{1, 2};
    const std::vector<int> tgt{2};
    bool closed = true;
    const auto m = matrix_of(src, tgt, [](int k) { return F2Sum<int>{2 * k}; }, &closed);
    CHECK_FALSE(closed);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 0);
}
