#include <doctest.h>

#include <map>
#include <utility>

#include "c2mot/expr.hpp"
#include "c2mot/point.hpp"
#include "c2mot/sample.hpp"

using namespace c2mot;

namespace {

template <class M>
F2Sum<M> one_term(const M& m) {
    F2Sum<M> s;
    s.toggle(m);
    return s;
}

const PtMono kA = PtMono::pos(1, 0);
const PtMono kU = PtMono::pos(0, 1);
const PtMono kTheta = PtMono::neg(0, 0);

// Oracle: write every point monomial as theta^t a^i u^j with i, j of any sign,
// multiply as Laurent monomials, and keep the product only if it lies in one of
// the two cones (theta^2 = 0).
struct Laurent {
    int t, i, j;
};
Laurent as_laurent(const PtMono& x) {
    return x.is_pos() ? Laurent{0, x.m, x.n} : Laurent{1, -x.m, -x.n};
}
std::optional<PtMono> from_laurent(const Laurent& l) {
    if (l.t == 0 && l.i >= 0 && l.j >= 0) return PtMono::pos(l.i, l.j);
    if (l.t == 1 && l.i <= 0 && l.j <= 0) return PtMono::neg(-l.i, -l.j);
    return std::nullopt;
}
std::optional<PtMono> oracle_mul(const PtMono& x, const PtMono& y) {
    const auto s = as_laurent(x), t = as_laurent(y);
    if (s.t + t.t > 1) return std::nullopt;
    return from_laurent({s.t + t.t, s.i + t.i, s.j + t.j});
}

// Oracle for the action on theta*Z/2[a^{+-1}, u^-1]: multiply as Laurent
// monomials in (a, u) and drop anything with a positive u-power.
std::optional<TildeTopMono> oracle_act(const PtMono& r, const TildeTopMono& t) {
    if (r.is_neg()) return std::nullopt;
    const int a = t.m + r.m;
    const int u = -t.n + r.n;
    if (u > 0) return std::nullopt;
    return TildeTopMono{a, -u};
}

}  // namespace

TEST_CASE("pt_mul examples") {
    CHECK(pt_mul(PtMono::pos(2, 0), kU) == PtMono::pos(2, 1));
    CHECK(pt_mul(kA, PtMono::neg(1, 2)) == PtMono::neg(0, 2));
    CHECK_FALSE(pt_mul(kU, kTheta).has_value());
    CHECK_FALSE(pt_mul(kTheta, kTheta).has_value());
}

TEST_CASE("pt_mul agrees with the Laurent oracle and is commutative and associative") {
    Sampler rnd(7, 8);
    for (int k = 0; k < 2000; ++k) {
        const auto x = rnd.pt(), y = rnd.pt(), z = rnd.pt();
        CHECK(pt_mul(x, y) == oracle_mul(x, y));
        CHECK(pt_mul(x, y) == pt_mul(y, x));
        const auto xy = pt_mul(one_term(x), one_term(y));
        CHECK(pt_mul(xy, one_term(z)) == pt_mul(one_term(x), pt_mul(one_term(y), one_term(z))));
    }
}

TEST_CASE("pt_basis examples") {
    CHECK(pt_basis({2, -3}) == std::vector<PtMono>{PtMono::neg(1, 0)});
    CHECK(pt_basis({-1, 1}) == std::vector<PtMono>{kU});
    CHECK(pt_basis({1, 0}).empty());
    CHECK(pt_basis({0, 0}) == std::vector<PtMono>{PtMono::one()});
    CHECK(pt_basis({2, -2}) == std::vector<PtMono>{kTheta});
}

TEST_CASE("pt_basis enumerates exactly the monomials of each degree") {
    // Brute force over exponents, independent of the closed form.
    std::map<std::pair<int, int>, int> count;
    for (int m = 0; m <= 30; ++m)
        for (int n = 0; n <= 30; ++n) {
            for (const auto x : {PtMono::pos(m, n), PtMono::neg(m, n)}) {
                const auto d = degree(x);
                ++count[{d.a, d.p}];
            }
        }
    for (int a = -8; a <= 8; ++a)
        for (int p = -8; p <= 8; ++p) {
            const auto basis = pt_basis({a, p});
            CHECK(basis.size() == static_cast<std::size_t>(count[{a, p}]));
            CHECK(basis.size() == static_cast<std::size_t>((a <= 0 && p >= -a) || (a >= 2 && p <= -a)));
            for (const auto& x : basis) CHECK(degree(x) == RO2Degree{a, p});
        }
}

TEST_CASE("EC2 topological ring") {
    CHECK(ec2top_mul(EC2TopMono{0, 1}, EC2TopMono{0, -1}) == EC2TopMono{0, 0});
    CHECK(ec2top_mul(EC2TopMono{1, 0}, EC2TopMono{0, -2}) == EC2TopMono{1, -2});
    CHECK(localize(one_term(kTheta)).is_zero());
    CHECK(ec2top_basis({1, -1}) == std::vector<EC2TopMono>{{0, -1}});
    CHECK(degree(EC2TopMono{0, -1}) == RO2Degree{1, -1});
}

TEST_CASE("localize examples and multiplicativity") {
    CHECK(localize(one_term(PtMono::pos(2, 1))) == one_term(EC2TopMono{2, 1}));
    CHECK(localize(one_term(PtMono::neg(0, 1))).is_zero());
    CHECK(localize(PtElem{}).is_zero());
    Sampler rnd(3, 8);
    for (int k = 0; k < 1000; ++k) {
        const auto x = one_term(rnd.pt()), y = one_term(rnd.pt());
        CHECK(localize(pt_mul(x, y)) == ec2top_mul(localize(x), localize(y)));
    }
}

TEST_CASE("tilde_to_pt examples") {
    CHECK(tilde_to_pt(TildeTopMono{-2, 1}) == PtMono::neg(2, 1));
    CHECK_FALSE(tilde_to_pt(TildeTopMono{1, 1}).has_value());
    CHECK(tilde_to_pt(TildeTopMono{0, 0}) == kTheta);
}

TEST_CASE("pt_act_tilde examples and oracle") {
    CHECK(pt_act_tilde(kU, TildeTopMono{1, 3}) == TildeTopMono{1, 2});
    CHECK_FALSE(pt_act_tilde(kU, TildeTopMono{0, 0}).has_value());
    CHECK_FALSE(pt_act_tilde(kTheta, TildeTopMono{0, 1}).has_value());
    Sampler rnd(11, 8);
    for (int k = 0; k < 2000; ++k) {
        const auto r = rnd.pt();
        const auto t = rnd.tildetop();
        CHECK(pt_act_tilde(r, t) == oracle_act(r, t));
    }
}

TEST_CASE("tilde_to_pt is linear over the point ring") {
    Sampler rnd(5, 6);
    for (int k = 0; k < 2000; ++k) {
        const auto r = one_term(rnd.pt());
        const auto t = one_term(rnd.tildetop());
        CHECK(tilde_to_pt(pt_act_tilde(r, t)) == pt_mul(r, tilde_to_pt(t)));
    }
}

TEST_CASE("tildetop and block bases") {
    CHECK(tildetop_basis({2, 4}) == std::vector<TildeTopMono>{{6, 0}});
    for (int p = -8; p <= 8; ++p) CHECK(b_basis(1, {4, p}).empty());
    for (int p = -8; p <= 8; ++p) {
        CHECK(b_basis(1, {2, p}).size() == 1);
        CHECK(b_basis(1, {3, p}).size() == 1);
        CHECK(tildetop_basis({1, p}).empty());
    }
}

TEST_CASE("BElem rejects monomials outside the block") {
    CHECK_THROWS_WITH_AS(BElem(1, one_term(TildeTopMono{0, 3})), doctest::Contains("n > 2i-1 in B_i"),
                         std::invalid_argument);
    CHECK_NOTHROW(BElem(1, one_term(TildeTopMono{0, 1})));
    CHECK_NOTHROW(BElem(2, one_term(TildeTopMono{0, 3})));
}

TEST_CASE("block maps") {
    const BElem theta_u1(1, one_term(TildeTopMono{0, 1}));
    CHECK(b_incl(theta_u1) == BElem(2, one_term(TildeTopMono{0, 1})));
    CHECK(b_incl(BElem(1, one_term(TildeTopMono{3, 0}))) == BElem(2, one_term(TildeTopMono{3, 0})));
    CHECK(b_incl(BElem(1)).is_zero());

    CHECK(b_mul_u2(BElem(2, one_term(TildeTopMono{0, 3}))) == theta_u1);
    CHECK(b_mul_u2(BElem(2, one_term(TildeTopMono{0, 1}))).is_zero());
    CHECK(b_mul_u2(theta_u1).is_zero());

    CHECK(b_quot(BElem(2, one_term(TildeTopMono{0, 3}))).is_zero());
    CHECK(b_quot(BElem(2, one_term(TildeTopMono{0, 1}))) == theta_u1);
    CHECK(b_quot(BElem(2, one_term(TildeTopMono{5, 0}))) == BElem(1, one_term(TildeTopMono{5, 0})));

    CHECK(b_to_pt(theta_u1) == one_term(PtMono::neg(0, 1)));
    CHECK(b_to_pt(BElem(1, one_term(TildeTopMono{2, 1}))).is_zero());
    CHECK(b_to_pt(BElem(3, one_term(TildeTopMono{-1, 4}))) == one_term(PtMono::neg(1, 4)));
}

TEST_CASE("block maps commute") {
    Sampler rnd(13, 8);
    for (int k = 0; k < 1000; ++k) {
        const int i = rnd.uniform(1, 5);
        const BElem x(i, one_term(rnd.block(i)));
        CHECK(b_mul_u2(b_incl(x)) == b_incl(b_mul_u2(x)));
        CHECK(b_quot(b_incl(x)) == x);
    }
}

TEST_CASE("image of B_i in the point ring") {
    for (int i = 1; i <= 4; ++i)
        for (int a = -8; a <= 8; ++a)
            for (int p = -8; p <= 8; ++p) {
                PtElem image;
                for (const auto& t : b_basis(i, {a, p})) image += b_to_pt(BElem(i, one_term(t)));
                PtElem expected;
                for (const auto& x : pt_basis({a, p}))
                    if (x.is_neg() && x.n <= 2 * i - 1) expected.toggle(x);
                CHECK(image == expected);
            }
}

TEST_CASE("topological middle exactness, monomial level") {
    for (int a = -8; a <= 8; ++a)
        for (int p = -8; p <= 8; ++p) {
            PtElem kernel, image;
            for (const auto& x : pt_basis({a, p}))
                if (localize(one_term(x)).is_zero()) kernel.toggle(x);
            for (const auto& t : tildetop_basis({a, p})) image += tilde_to_pt(one_term(t));
            CHECK(kernel == image);
        }
}

TEST_CASE("topological BC2") {
    CHECK(topbc2_basis(3) == std::vector<TopBC2Mono>{{3}});
    CHECK(topbc2_basis(-1).empty());
    CHECK(topbc2_mul(one_term(TopBC2Mono{2}), one_term(TopBC2Mono{3})) == one_term(TopBC2Mono{5}));
}
