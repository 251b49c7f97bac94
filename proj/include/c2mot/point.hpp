#pragma once

// Topological C2-equivariant Bredon cohomology with Z/2 coefficients:
//   M            = H^*(pt)       = Z/2[a,u] + NC,  NC = theta * Z/2[a^-1, u^-1]
//   H^*(EC2)     = Z/2[a, u^{+-1}]
//   H~^*(E~C2)   = theta * Z/2[a^{+-1}, u^-1]    (an M-module)
//   B_i          = theta * Z/2[a^{+-1}, u^-1] / (u^{-2i})
//   H^*(BC2)     = Z/2[x]
// together with the module maps between them.

#include <compare>
#include <optional>
#include <vector>

#include "c2mot/f2sum.hpp"
#include "c2mot/grading.hpp"

namespace c2mot {

/// Monomial of M: a^m u^n in the positive cone, or theta/(a^m u^n) in the negative cone.
struct PtMono {
    enum class Cone : std::uint8_t { Pos, Neg };
    Cone cone = Cone::Pos;
    int m = 0;  // a-exponent (denominator exponent for Neg)
    int n = 0;  // u-exponent (denominator exponent for Neg)

    static constexpr PtMono pos(int m, int n) { return {Cone::Pos, m, n}; }
    static constexpr PtMono neg(int m, int n) { return {Cone::Neg, m, n}; }
    static constexpr PtMono one() { return pos(0, 0); }
    constexpr bool is_pos() const { return cone == Cone::Pos; }
    constexpr bool is_neg() const { return cone == Cone::Neg; }

    friend constexpr auto operator<=>(const PtMono&, const PtMono&) = default;
};

using PtElem = F2Sum<PtMono>;

RO2Degree degree(const PtMono& x);

std::optional<PtMono> pt_mul(const PtMono& x, const PtMono& y);
PtElem pt_mul(const PtElem& x, const PtElem& y);

/// Monomial basis of M in degree d (0 or 1 element).
std::vector<PtMono> pt_basis(RO2Degree d);

/// a^m u^n with m >= 0 and n of any sign, in Z/2[a, u^{+-1}].
struct EC2TopMono {
    int m = 0;
    int n = 0;
    friend constexpr auto operator<=>(const EC2TopMono&, const EC2TopMono&) = default;
};
using EC2TopElem = F2Sum<EC2TopMono>;

RO2Degree degree(const EC2TopMono& x);
EC2TopMono ec2top_mul(const EC2TopMono& x, const EC2TopMono& y);
EC2TopElem ec2top_mul(const EC2TopElem& x, const EC2TopElem& y);
std::vector<EC2TopMono> ec2top_basis(RO2Degree d);

/// theta * a^m * u^{-n}, m of any sign, n >= 0.
struct TildeTopMono {
    int m = 0;
    int n = 0;
    friend constexpr auto operator<=>(const TildeTopMono&, const TildeTopMono&) = default;
};
using TildeTopElem = F2Sum<TildeTopMono>;

RO2Degree degree(const TildeTopMono& x);
std::vector<TildeTopMono> tildetop_basis(RO2Degree d);

/// Element of the block B_index. Index 0 denotes the zero module B_0.
class BElem {
public:
    /// Throws std::invalid_argument("n > 2i-1 in B_i") when a monomial does not fit.
    BElem(int index, TildeTopElem terms);
    explicit BElem(int index) : index_(index) {}

    /// Skips the n <= 2i-1 check; for results of the structure maps.
    static BElem unchecked(int index, TildeTopElem terms);

    int index() const { return index_; }
    const TildeTopElem& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }

    friend bool operator==(const BElem&, const BElem&) = default;

private:
    BElem() = default;
    int index_ = 0;
    TildeTopElem terms_;
};

/// True iff 0 <= n <= 2*index - 1.
bool fits_block(const TildeTopMono& t, int index);
std::vector<TildeTopMono> b_basis(int index, RO2Degree d);

/// x^k in Z/2[x], |x| = 1.
struct TopBC2Mono {
    int k = 0;
    friend constexpr auto operator<=>(const TopBC2Mono&, const TopBC2Mono&) = default;
};
using TopBC2Elem = F2Sum<TopBC2Mono>;

TopBC2Elem topbc2_mul(const TopBC2Elem& x, const TopBC2Elem& y);
std::vector<TopBC2Mono> topbc2_basis(int k);

// Module maps of the isotropy separation sequence.
EC2TopElem localize(const PtElem& x);
std::optional<PtMono> tilde_to_pt(const TildeTopMono& t);
PtElem tilde_to_pt(const TildeTopElem& t);
std::optional<TildeTopMono> pt_act_tilde(const PtMono& x, const TildeTopMono& t);
TildeTopElem pt_act_tilde(const PtElem& x, const TildeTopElem& t);

// Maps between the blocks.
BElem b_incl(const BElem& x);
/// Monomial-level u^2 map B_index -> B_{index-1}; nullopt when killed.
std::optional<TildeTopMono> mul_u2_to_lower_block(const TildeTopMono& t, int index);
BElem b_mul_u2(const BElem& x);
BElem b_quot(const BElem& x);
PtElem b_to_pt(const BElem& x);

}  // namespace c2mot
