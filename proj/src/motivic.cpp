#include "c2mot/motivic.hpp"

#include <algorithm>
#include <stdexcept>

#include "mutation.hpp"

namespace c2mot {

namespace {

constexpr RO2Degree kXiDeg{-2, 2};

PtMono u_power(int k) { return PtMono::pos(0, k); }

// Coordinates of an element of some B_i, before the tau_s bookkeeping.
struct BlockCoord {
    int i;
    TildeTopMono t;
};

// Applies the point part, mu^g and xi^e of a free monomial to an element of B_i.
// a raises m, u lowers n, mu is the inclusion B_i -> B_{i+1}, xi is u^2 : B_i -> B_{i-1}.
std::optional<BlockCoord> act_on_block(const FreeMono& x, BlockCoord c) {
    if (x.x.is_neg()) return std::nullopt;  // NC acts by 0
    auto t = pt_act_tilde(x.x, c.t);
    if (!t) return std::nullopt;
    c.t = *t;
    c.i += x.g;
    for (int k = 0; k < x.e; ++k) {
        auto s = mul_u2_to_lower_block(c.t, c.i);
        if (!s) return std::nullopt;
        c.t = *s;
        c.i -= 1;
    }
    return c;
}

std::optional<MotMono> free_times_torsion(const FreeMono& x, const TorMono& y) {
    auto c = act_on_block(x, {y.i, {y.m, y.n}});
    if (!c) return std::nullopt;
    const int j = y.j - x.f;
    if (j >= 1) return TorMono{c->i, j, c->t.m, c->t.n};
    // Crossing into the free summand: B_i{mu^i/tau_s} -> M{mu^i} is B_i -> M,
    // any further tau_s stay on the free side.
    auto p = tilde_to_pt(c->t);
    if (!p) return std::nullopt;
    return FreeMono{*p, 0, -j, c->i};
}

std::optional<MotMono> torsion_times_torsion([[maybe_unused]] const TorMono& x, [[maybe_unused]] const TorMono& y) {
#if C2MOT_MUTATION == C2MOT_MUTATION_TORSION_PRODUCTS
    TorMono z{x.i + y.i, x.j + y.j, x.m + y.m, x.n + y.n};
    if (!is_valid(z)) return std::nullopt;
    return z;
#else
    return std::nullopt;
#endif
}

}  // namespace

MotDegree degree(const FreeMono& x) {
    return {degree(x.x) + x.e * kXiDeg, {x.g - x.e, x.e + x.f - x.g}};
}

MotDegree degree(const TorMono& x) { return {{2 + x.n, x.m - x.n - 2}, {x.i, -(x.i + x.j)}}; }

MotDegree degree(const MotMono& x) {
    return std::visit([](const auto& m) { return degree(m); }, x);
}

std::optional<FreeMono> normalize_free(const PtMono& x, int e, int f, int g) {
    const int k = std::min(e, g);
    if (k <= 0) return FreeMono{x, e, f, g};
    auto y = pt_mul(x, u_power(2 * k));
    if (!y) return std::nullopt;
    return FreeMono{*y, e - k, f, g - k};
}

bool is_normal(const FreeMono& x) {
    return x.e >= 0 && x.f >= 0 && x.g >= 0 && std::min(x.e, x.g) == 0 && x.x.m >= 0 && x.x.n >= 0;
}

bool is_valid(const TorMono& t) { return t.i >= 1 && t.j >= 1 && t.n >= 0 && t.n <= 2 * t.i - 1; }

MotElem mot_mul(const MotMono& x, const MotMono& y) {
    MotElem out;
    const auto* fx = std::get_if<FreeMono>(&x);
    const auto* fy = std::get_if<FreeMono>(&y);
    if (fx && fy) {
        auto p = pt_mul(fx->x, fy->x);
        if (!p) return out;
        if (auto z = normalize_free(*p, fx->e + fy->e, fx->f + fy->f, fx->g + fy->g)) out.toggle(MotMono{*z});
        return out;
    }
    if (fx) {
        out.toggle(free_times_torsion(*fx, std::get<TorMono>(y)));
        return out;
    }
    if (fy) {
        out.toggle(free_times_torsion(*fy, std::get<TorMono>(x)));
        return out;
    }
    out.toggle(torsion_times_torsion(std::get<TorMono>(x), std::get<TorMono>(y)));
    return out;
}

MotElem mot_mul(const MotElem& x, const MotElem& y) {
    return bilinear<MotMono>(x, y, [](const MotMono& s, const MotMono& t) { return mot_mul(s, t); });
}

std::vector<MotMono> mot_basis(const MotDegree& d) {
    const int b = d.wt.a;
    const int q = d.wt.p;
    std::vector<MotMono> out;
    if (b + q >= 0) {
        const int e = b >= 0 ? 0 : -b;
        const int g = b >= 0 ? b : 0;
        for (const auto& x : pt_basis(d.deg - e * kXiDeg)) out.emplace_back(FreeMono{x, e, b + q, g});
    } else if (b >= 1) {
        for (const auto& t : b_basis(b, d.deg)) out.emplace_back(TorMono{b, -(b + q), t.m, t.n});
    }
    return out;
}

MotElem mot_one() { return MotElem{MotMono{FreeMono{PtMono::one(), 0, 0, 0}}}; }

MotElem mot_generator(Generator g) {
    auto free = [](PtMono x, int e, int f, int gg) { return MotElem{MotMono{FreeMono{x, e, f, gg}}}; };
    switch (g) {
    case Generator::a: return free(PtMono::pos(1, 0), 0, 0, 0);
    case Generator::u: return free(PtMono::pos(0, 1), 0, 0, 0);
    case Generator::theta: return free(PtMono::neg(0, 0), 0, 0, 0);
    case Generator::xi: return free(PtMono::one(), 1, 0, 0);
    case Generator::tau_s: return free(PtMono::one(), 0, 1, 0);
    case Generator::mu: return free(PtMono::one(), 0, 0, 1);
    case Generator::tau: return free(PtMono::one(), 0, 1, 1);
    case Generator::e1:
    case Generator::e2: break;
    }
    throw std::invalid_argument("e1 and e2 are not elements of the motivic cohomology of C");
}

MotDegree degree(const EC2MotMono& x) { return {degree(x.x) + x.e * kXiDeg, {-x.e, x.e + x.f}}; }

std::optional<EC2MotMono> ec2mot_mul(const EC2MotMono& x, const EC2MotMono& y) {
    auto p = pt_mul(x.x, y.x);
    if (!p) return std::nullopt;
    return EC2MotMono{*p, x.e + y.e, x.f + y.f};
}

EC2MotElem ec2mot_mul(const EC2MotElem& x, const EC2MotElem& y) {
    return bilinear<EC2MotMono>(x, y, [](const EC2MotMono& s, const EC2MotMono& t) { return ec2mot_mul(s, t); });
}

std::vector<EC2MotMono> ec2mot_basis(const MotDegree& d) {
    const int b = d.wt.a;
    const int q = d.wt.p;
    if (b + q < 0) return {};
    const int e = -b;
    std::vector<EC2MotMono> out;
    for (const auto& x : pt_basis(d.deg - e * kXiDeg)) out.push_back({x, e, b + q});
    return out;
}

std::optional<EC2MotMono> restrict_to_ec2(const MotMono& x) {
    const auto* f = std::get_if<FreeMono>(&x);
    if (!f) return std::nullopt;
    auto p = pt_mul(f->x, u_power(2 * f->g));
    if (!p) return std::nullopt;
    return EC2MotMono{*p, f->e - f->g, f->f};
}

EC2MotElem restrict_to_ec2(const MotElem& x) {
    return linear<EC2MotMono>(x, [](const MotMono& m) { return restrict_to_ec2(m); });
}

MotDegree degree(const TildeMotMono& x) { return {{2 + x.n, x.m - x.n - 2}, {x.i, x.j - x.i}}; }

bool is_valid(const TildeMotMono& t) { return t.i >= 1 && t.n >= 0 && t.n <= 2 * t.i - 1; }

std::vector<TildeMotMono> tildemot_basis(const MotDegree& d) {
    const int b = d.wt.a;
    std::vector<TildeMotMono> out;
    if (b < 1) return out;
    for (const auto& t : b_basis(b, d.deg)) out.push_back({b, d.wt.p + b, t.m, t.n});
    return out;
}

TildeMotElem tildemot_act(const MotElem& x, const TildeMotElem& t) {
    TildeMotElem out;
    for (const auto& mx : x) {
        const auto* f = std::get_if<FreeMono>(&mx);
        if (!f) throw std::invalid_argument("torsion elements do not act on the E~C2 cohomology");
        for (const auto& mt : t) {
            auto c = act_on_block(*f, {mt.i, {mt.m, mt.n}});
            if (c) out.toggle(TildeMotMono{c->i, mt.j + f->f, c->t.m, c->t.n});
        }
    }
    return out;
}

std::optional<MotMono> tilde_to_mot(const TildeMotMono& t) {
    if (t.j <= -1) return TorMono{t.i, -t.j, t.m, t.n};
    auto p = tilde_to_pt(TildeTopMono{t.m, t.n});
    if (!p) return std::nullopt;
    return FreeMono{*p, 0, t.j, t.i};
}

MotElem tilde_to_mot(const TildeMotElem& t) {
    return linear<MotMono>(t, [](const TildeMotMono& m) { return tilde_to_mot(m); });
}

MotDegree degree(const BC2Mono& x) { return integral_bidegree(x.eps + 2 * x.m2, x.eps + x.m2 + x.k); }

BC2Mono bc2_normalize(int k, int eps, int m2) {
    while (eps >= 2) {
        eps -= 2;
        k += 1;
        m2 += 1;
    }
    return {k, eps, m2};
}

BC2Mono bc2_mul(const BC2Mono& x, const BC2Mono& y) { return bc2_normalize(x.k + y.k, x.eps + y.eps, x.m2 + y.m2); }

BC2Elem bc2_mul(const BC2Elem& x, const BC2Elem& y) {
    return bilinear<BC2Mono>(x, y, [](const BC2Mono& s, const BC2Mono& t) { return std::optional<BC2Mono>(bc2_mul(s, t)); });
}

std::vector<BC2Mono> bc2_basis(int a, int b) {
    if (a < 0) return {};
    const int eps = a % 2;
    const int m2 = a / 2;
    const int k = b - eps - m2;
    if (k < 0) return {};
    return {BC2Mono{k, eps, m2}};
}

int bc2_dim(int a, int b) { return static_cast<int>(bc2_basis(a, b).size()); }

EC2MotMono bc2_to_ec2mot(const BC2Mono& x) {
    const int weight = x.k + x.eps + x.m2;
    return {PtMono::pos(x.eps + 2 * x.m2, 2 * x.k + x.eps), -weight, weight};
}

EC2MotElem bc2_to_ec2mot(const BC2Elem& x) {
    return linear<EC2MotMono>(x, [](const BC2Mono& m) { return std::optional<EC2MotMono>(bc2_to_ec2mot(m)); });
}

MotDegree degree(const CFieldMono& x) { return integral_bidegree(0, x.k); }

CFieldElem cfield_mul(const CFieldElem& x, const CFieldElem& y) {
    return bilinear<CFieldMono>(x, y, [](const CFieldMono& s, const CFieldMono& t) {
        return std::optional<CFieldMono>(CFieldMono{s.k + t.k});
    });
}

std::vector<CFieldMono> cfield_basis(int a, int b) {
    if (a == 0 && b >= 0) return {CFieldMono{b}};
    return {};
}

}  // namespace c2mot
