#pragma once

// C2-equivariant motivic (Bredon) cohomology rings over C with Z/2 coefficients.
//
//   H(C)      = M[xi, tau_s, mu]/(xi*mu - u^2)  +  sum_{i,j>=1} B_i{mu^i / tau_s^j}
//   H(EC2)    = M[xi^{+-1}, tau_s]
//   H~(E~C2)  = sum_{i>=1, j in Z} B_i{mu^i tau_s^j}
//   H(BC2)    = Z/2[tau][e1, e2]/(e1^2 = tau*e2)     (integer bidegrees)
//   H(C)      = Z/2[tau]                             (non-equivariant)
//
// Degrees: |xi| = (-2+2s, -1+s), |tau_s| = (0, s), |mu| = (0, 1-s).

#include <compare>
#include <optional>
#include <variant>
#include <vector>

#include "c2mot/f2sum.hpp"
#include "c2mot/grading.hpp"
#include "c2mot/point.hpp"

namespace c2mot {

/// x * xi^e * tau_s^f * mu^g with x a monomial of M; normal form has min(e, g) == 0.
struct FreeMono {
    PtMono x;
    int e = 0;
    int f = 0;
    int g = 0;
    friend constexpr auto operator<=>(const FreeMono&, const FreeMono&) = default;
};

/// (theta a^m u^-n) * mu^i / tau_s^j in B_i{mu^i/tau_s^j}; i, j >= 1, 0 <= n <= 2i-1.
struct TorMono {
    int i = 1;
    int j = 1;
    int m = 0;
    int n = 0;
    friend constexpr auto operator<=>(const TorMono&, const TorMono&) = default;
};

using MotMono = std::variant<FreeMono, TorMono>;
using MotElem = F2Sum<MotMono>;

MotDegree degree(const FreeMono& x);
MotDegree degree(const TorMono& x);
MotDegree degree(const MotMono& x);

/// Reduces xi*mu -> u^2 until min(e, g) == 0; nullopt if the point part dies.
std::optional<FreeMono> normalize_free(const PtMono& x, int e, int f, int g);
bool is_normal(const FreeMono& x);
/// 0 <= n <= 2i-1, i >= 1, j >= 1.
bool is_valid(const TorMono& t);

MotElem mot_mul(const MotMono& x, const MotMono& y);
MotElem mot_mul(const MotElem& x, const MotElem& y);

/// Monomial basis in the given (degree, weight).
std::vector<MotMono> mot_basis(const MotDegree& d);

/// The motivic ring elements named a, u, theta, xi, tau_s, mu, tau.
MotElem mot_generator(Generator g);
MotElem mot_one();

/// x * xi^e * tau_s^f, e of any sign, f >= 0.
struct EC2MotMono {
    PtMono x;
    int e = 0;
    int f = 0;
    friend constexpr auto operator<=>(const EC2MotMono&, const EC2MotMono&) = default;
};
using EC2MotElem = F2Sum<EC2MotMono>;

MotDegree degree(const EC2MotMono& x);
std::optional<EC2MotMono> ec2mot_mul(const EC2MotMono& x, const EC2MotMono& y);
EC2MotElem ec2mot_mul(const EC2MotElem& x, const EC2MotElem& y);
std::vector<EC2MotMono> ec2mot_basis(const MotDegree& d);

/// Restriction along EC2 -> pt: mu |-> u^2/xi, torsion |-> 0.
std::optional<EC2MotMono> restrict_to_ec2(const MotMono& x);
EC2MotElem restrict_to_ec2(const MotElem& x);

/// (theta a^m u^-n) * mu^i * tau_s^j in B_i{mu^i tau_s^j}; i >= 1, j any, 0 <= n <= 2i-1.
struct TildeMotMono {
    int i = 1;
    int j = 0;
    int m = 0;
    int n = 0;
    friend constexpr auto operator<=>(const TildeMotMono&, const TildeMotMono&) = default;
};
using TildeMotElem = F2Sum<TildeMotMono>;

MotDegree degree(const TildeMotMono& x);
bool is_valid(const TildeMotMono& t);
std::vector<TildeMotMono> tildemot_basis(const MotDegree& d);

/// Action of the free part of H(C) on H~(E~C2). Throws std::invalid_argument
/// if x has a torsion component.
TildeMotElem tildemot_act(const MotElem& x, const TildeMotElem& t);

/// The map H~(E~C2) -> H(C) of the isotropy sequence.
std::optional<MotMono> tilde_to_mot(const TildeMotMono& t);
MotElem tilde_to_mot(const TildeMotElem& t);

/// tau^k * e1^eps * e2^m2 with eps in {0, 1}.
struct BC2Mono {
    int k = 0;
    int eps = 0;
    int m2 = 0;
    friend constexpr auto operator<=>(const BC2Mono&, const BC2Mono&) = default;
};
using BC2Elem = F2Sum<BC2Mono>;

/// Integer bidegree (a, b) as a MotDegree with zero sigma parts.
MotDegree degree(const BC2Mono& x);
/// Rewrites e1^2 -> tau*e2 until eps <= 1.
BC2Mono bc2_normalize(int k, int eps, int m2);
BC2Mono bc2_mul(const BC2Mono& x, const BC2Mono& y);
BC2Elem bc2_mul(const BC2Elem& x, const BC2Elem& y);
std::vector<BC2Mono> bc2_basis(int a, int b);
int bc2_dim(int a, int b);
/// e1 |-> a u tau_s/xi, e2 |-> a^2 tau_s/xi, tau |-> u^2 tau_s/xi.
EC2MotMono bc2_to_ec2mot(const BC2Mono& x);
EC2MotElem bc2_to_ec2mot(const BC2Elem& x);

/// tau^k in Z/2[tau], bidegree (0, k).
struct CFieldMono {
    int k = 0;
    friend constexpr auto operator<=>(const CFieldMono&, const CFieldMono&) = default;
};
using CFieldElem = F2Sum<CFieldMono>;

MotDegree degree(const CFieldMono& x);
CFieldElem cfield_mul(const CFieldElem& x, const CFieldElem& y);
std::vector<CFieldMono> cfield_basis(int a, int b);

}  // namespace c2mot
