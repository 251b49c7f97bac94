#pragma once

// Seeded random monomials and elements for property checks.

#include <random>

#include "c2mot/expr.hpp"
#include "c2mot/motivic.hpp"
#include "c2mot/point.hpp"

namespace c2mot {

using Rng = std::mt19937_64;

/// Exponents are drawn from [-bound, bound] or [0, bound] as each type requires.
class Sampler {
public:
    Sampler(std::uint64_t seed, int bound) : rng_(seed), bound_(bound) {}

    int uniform(int lo, int hi);
    int exponent() { return uniform(0, bound_); }
    int signed_exponent() { return uniform(-bound_, bound_); }

    PtMono pt();
    EC2TopMono ec2top();
    TildeTopMono tildetop();
    /// Monomial fitting B_index.
    TildeTopMono block(int index);
    FreeMono free();
    TorMono torsion();
    MotMono motivic();
    EC2MotMono ec2mot();
    TildeMotMono tildemot();
    BC2Mono bc2();
    CFieldMono cfield();
    TopBC2Mono topbc2();

    /// Sum of up to max_terms random monomials of the ring.
    Element element(const RingId& ring, int max_terms);

    Rng& rng() { return rng_; }

private:
    Rng rng_;
    int bound_;
};

}  // namespace c2mot
