#include "c2mot/realization.hpp"

namespace c2mot {

std::optional<PtMono> re_point(const MotMono& x) {
    if (const auto* f = std::get_if<FreeMono>(&x)) return pt_mul(f->x, PtMono::pos(0, 2 * f->e));
    const auto& t = std::get<TorMono>(x);
    return tilde_to_pt(TildeTopMono{t.m, t.n});
}

PtElem re_point(const MotElem& x) {
    return linear<PtMono>(x, [](const MotMono& m) { return re_point(m); });
}

std::optional<EC2TopMono> re_ec2(const EC2MotMono& x) {
    if (x.x.is_neg()) return std::nullopt;
    return EC2TopMono{x.x.m, x.x.n + 2 * x.e};
}

EC2TopElem re_ec2(const EC2MotElem& x) {
    return linear<EC2TopMono>(x, [](const EC2MotMono& m) { return re_ec2(m); });
}

TildeTopMono re_tilde(const TildeMotMono& x) { return {x.m, x.n}; }

TildeTopElem re_tilde(const TildeMotElem& x) {
    return linear<TildeTopMono>(x, [](const TildeMotMono& m) { return std::optional<TildeTopMono>(re_tilde(m)); });
}

TopBC2Mono re_bc2(const BC2Mono& x) { return {x.eps + 2 * x.m2}; }

TopBC2Elem re_bc2(const BC2Elem& x) {
    return linear<TopBC2Mono>(x, [](const BC2Mono& m) { return std::optional<TopBC2Mono>(re_bc2(m)); });
}

}  // namespace c2mot
