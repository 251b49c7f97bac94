#include "c2mot/sample.hpp"

namespace c2mot {

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

PtMono Sampler::pt() {
    const int m = exponent();
    const int n = exponent();
    return uniform(0, 1) ? PtMono::pos(m, n) : PtMono::neg(m, n);
}

EC2TopMono Sampler::ec2top() { return {exponent(), signed_exponent()}; }

TildeTopMono Sampler::tildetop() { return {signed_exponent(), exponent()}; }

TildeTopMono Sampler::block(int index) { return {signed_exponent(), uniform(0, 2 * index - 1)}; }

FreeMono Sampler::free() {
    FreeMono f{pt(), exponent(), exponent(), exponent()};
    if (uniform(0, 1))
        f.e = 0;
    else
        f.g = 0;
    return f;
}

TorMono Sampler::torsion() {
    const int i = uniform(1, bound_ < 1 ? 1 : bound_);
    const auto t = block(i);
    return {i, uniform(1, bound_ < 1 ? 1 : bound_), t.m, t.n};
}

MotMono Sampler::motivic() {
    if (uniform(0, 2) == 0) return torsion();
    return free();
}

EC2MotMono Sampler::ec2mot() { return {pt(), signed_exponent(), exponent()}; }

TildeMotMono Sampler::tildemot() {
    const int i = uniform(1, bound_ < 1 ? 1 : bound_);
    const auto t = block(i);
    return {i, signed_exponent(), t.m, t.n};
}

BC2Mono Sampler::bc2() { return {exponent(), uniform(0, 1), exponent()}; }

CFieldMono Sampler::cfield() { return {exponent()}; }

TopBC2Mono Sampler::topbc2() { return {exponent()}; }

Element Sampler::element(const RingId& ring, int max_terms) {
    using K = RingId::Kind;
    const int terms = uniform(0, max_terms);
    auto fill = [&](auto sum, auto draw) {
        for (int k = 0; k < terms; ++k) sum.toggle(draw());
        return sum;
    };
    switch (ring.kind) {
    case K::pt: return fill(PtElem{}, [&] { return pt(); });
    case K::ec2top: return fill(EC2TopElem{}, [&] { return ec2top(); });
    case K::tildetop: return fill(TildeTopElem{}, [&] { return tildetop(); });
    case K::block: return BElem(ring.block, fill(TildeTopElem{}, [&] { return block(ring.block); }));
    case K::motivic: return fill(MotElem{}, [&] { return motivic(); });
    case K::ec2mot: return fill(EC2MotElem{}, [&] { return ec2mot(); });
    case K::tildemot: return fill(TildeMotElem{}, [&] { return tildemot(); });
    case K::bc2: return fill(BC2Elem{}, [&] { return bc2(); });
    case K::cfield: return fill(CFieldElem{}, [&] { return cfield(); });
    case K::topbc2: return fill(TopBC2Elem{}, [&] { return topbc2(); });
    }
    throw std::logic_error("unreachable ring kind");
}

}  // namespace c2mot
