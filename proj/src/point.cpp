#include "c2mot/point.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

#include "mutation.hpp"

namespace c2mot {

RO2Degree degree(const PtMono& x) {
    if (x.is_pos()) return {-x.n, x.m + x.n};
    return {2 + x.n, -(2 + x.m + x.n)};
}

std::optional<PtMono> pt_mul(const PtMono& x, const PtMono& y) {
    if (x.is_neg() && y.is_neg()) return std::nullopt;
    if (x.is_pos() && y.is_pos()) return PtMono::pos(x.m + y.m, x.n + y.n);
    const PtMono& p = x.is_pos() ? x : y;
    const PtMono& q = x.is_pos() ? y : x;
    // a^m u^n * theta/(a^m' u^n'): positive powers left over vanish in NC
    if (q.m < p.m || q.n < p.n) return std::nullopt;
    return PtMono::neg(q.m - p.m, q.n - p.n);
}

PtElem pt_mul(const PtElem& x, const PtElem& y) {
    return bilinear<PtMono>(x, y, [](const PtMono& s, const PtMono& t) { return pt_mul(s, t); });
}

std::vector<PtMono> pt_basis(RO2Degree d) {
    if (d.a <= 0 && d.p >= -d.a) return {PtMono::pos(d.p + d.a, -d.a)};
    if (d.a >= 2 && d.p <= -d.a) return {PtMono::neg(-d.p - d.a, d.a - 2)};
    return {};
}

RO2Degree degree(const EC2TopMono& x) { return {-x.n, x.m + x.n}; }

EC2TopMono ec2top_mul(const EC2TopMono& x, const EC2TopMono& y) { return {x.m + y.m, x.n + y.n}; }

EC2TopElem ec2top_mul(const EC2TopElem& x, const EC2TopElem& y) {
    return bilinear<EC2TopMono>(x, y, [](const EC2TopMono& s, const EC2TopMono& t) {
        return std::optional<EC2TopMono>(ec2top_mul(s, t));
    });
}

std::vector<EC2TopMono> ec2top_basis(RO2Degree d) {
    if (d.p + d.a >= 0) return {EC2TopMono{d.p + d.a, -d.a}};
    return {};
}

RO2Degree degree(const TildeTopMono& x) { return {2 + x.n, x.m - x.n - 2}; }

std::vector<TildeTopMono> tildetop_basis(RO2Degree d) {
    if (d.a >= 2) return {TildeTopMono{d.p + d.a, d.a - 2}};
    return {};
}

bool fits_block(const TildeTopMono& t, int index) { return t.n >= 0 && t.n <= 2 * index - 1; }

BElem::BElem(int index, TildeTopElem terms) : index_(index), terms_(std::move(terms)) {
    if (index < 0) throw std::invalid_argument(fmt::format("block index {} < 0", index));
    for (const auto& t : terms_) {
        if (t.n < 0) throw std::invalid_argument(fmt::format("n < 0 in B_i (n={}, i={})", t.n, index));
        if (!fits_block(t, index))
            throw std::invalid_argument(fmt::format("n > 2i-1 in B_i (n={}, i={})", t.n, index));
    }
}

BElem BElem::unchecked(int index, TildeTopElem terms) {
    BElem out;
    out.index_ = index;
    out.terms_ = std::move(terms);
    return out;
}

std::vector<TildeTopMono> b_basis(int index, RO2Degree d) {
    std::vector<TildeTopMono> out;
    for (const auto& t : tildetop_basis(d))
        if (fits_block(t, index)) out.push_back(t);
    return out;
}

TopBC2Elem topbc2_mul(const TopBC2Elem& x, const TopBC2Elem& y) {
    return bilinear<TopBC2Mono>(x, y, [](const TopBC2Mono& s, const TopBC2Mono& t) {
        return std::optional<TopBC2Mono>(TopBC2Mono{s.k + t.k});
    });
}

std::vector<TopBC2Mono> topbc2_basis(int k) {
    if (k >= 0) return {TopBC2Mono{k}};
    return {};
}

EC2TopElem localize(const PtElem& x) {
    return linear<EC2TopMono>(x, [](const PtMono& m) -> std::optional<EC2TopMono> {
        if (m.is_neg()) return std::nullopt;
        return EC2TopMono{m.m, m.n};
    });
}

std::optional<PtMono> tilde_to_pt(const TildeTopMono& t) {
#if C2MOT_MUTATION == C2MOT_MUTATION_DROP_POSITIVE_A_KILL
    return PtMono::neg(-t.m, t.n);
#else
    if (t.m > 0) return std::nullopt;
    return PtMono::neg(-t.m, t.n);
#endif
}

PtElem tilde_to_pt(const TildeTopElem& t) {
    return linear<PtMono>(t, [](const TildeTopMono& m) { return tilde_to_pt(m); });
}

std::optional<TildeTopMono> pt_act_tilde(const PtMono& x, const TildeTopMono& t) {
    if (x.is_neg()) return std::nullopt;
    const int n = t.n - x.n;
    if (n < 0) return std::nullopt;
    return TildeTopMono{t.m + x.m, n};
}

TildeTopElem pt_act_tilde(const PtElem& x, const TildeTopElem& t) {
    return bilinear<TildeTopMono>(x, t, [](const PtMono& s, const TildeTopMono& m) { return pt_act_tilde(s, m); });
}

BElem b_incl(const BElem& x) { return BElem::unchecked(x.index() + 1, x.terms()); }

std::optional<TildeTopMono> mul_u2_to_lower_block(const TildeTopMono& t, int index) {
    if (index - 1 <= 0) return std::nullopt;  // B_0 = 0
#if C2MOT_MUTATION != C2MOT_MUTATION_DROP_U2_KILL
    if (t.n < 2) return std::nullopt;
#endif
    return TildeTopMono{t.m, t.n - 2};
}

BElem b_mul_u2(const BElem& x) {
    const int target = std::max(x.index() - 1, 0);
    return BElem::unchecked(target, linear<TildeTopMono>(x.terms(), [&](const TildeTopMono& t) {
                                return mul_u2_to_lower_block(t, x.index());
                            }));
}

BElem b_quot(const BElem& x) {
    const int target = std::max(x.index() - 1, 0);
    return BElem::unchecked(target, linear<TildeTopMono>(x.terms(), [&](const TildeTopMono& t) {
                                return fits_block(t, target) ? std::optional<TildeTopMono>(t) : std::nullopt;
                            }));
}

PtElem b_to_pt(const BElem& x) { return tilde_to_pt(x.terms()); }

}  // namespace c2mot
