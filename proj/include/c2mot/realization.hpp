#pragma once

// Betti realization on each motivic object: Re(tau_s) = Re(mu) = 1, Re(xi) = u^2.

#include "c2mot/motivic.hpp"
#include "c2mot/point.hpp"

namespace c2mot {

std::optional<PtMono> re_point(const MotMono& x);
PtElem re_point(const MotElem& x);

std::optional<EC2TopMono> re_ec2(const EC2MotMono& x);
EC2TopElem re_ec2(const EC2MotElem& x);

TildeTopMono re_tilde(const TildeMotMono& x);
TildeTopElem re_tilde(const TildeMotElem& x);

/// tau |-> 1, e1 |-> x, e2 |-> x^2.
TopBC2Mono re_bc2(const BC2Mono& x);
TopBC2Elem re_bc2(const BC2Elem& x);

}  // namespace c2mot
