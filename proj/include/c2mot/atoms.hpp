#pragma once

// Exponent vectors over the named atoms. Every monomial of every ring is a
// Laurent monomial in these atoms; the printer and the parser go through this
// representation, and summing generator degrees over it gives an independent
// route to each monomial's degree.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "c2mot/grading.hpp"
#include "c2mot/motivic.hpp"
#include "c2mot/point.hpp"

namespace c2mot {

/// Printing order: theta, a, u, xi, mu, tau_s, tau, e1, e2, x.
enum class Atom : std::uint8_t { theta, a, u, xi, mu, tau_s, tau, e1, e2, x };
inline constexpr std::size_t kAtomCount = 10;

std::string_view atom_name(Atom a);
/// Accepts the ASCII names and the Unicode aliases (θ, ξ, μ, τ_σ, τσ, τ, e₁, e₂).
std::optional<Atom> atom_from_name(std::string_view name);

struct AtomPowers {
    std::array<int, kAtomCount> exp{};

    int& operator[](Atom a) { return exp[static_cast<std::size_t>(a)]; }
    int operator[](Atom a) const { return exp[static_cast<std::size_t>(a)]; }
    bool is_one() const;

    friend AtomPowers operator+(const AtomPowers& x, const AtomPowers& y);
    friend AtomPowers operator-(const AtomPowers& x);
    friend auto operator<=>(const AtomPowers&, const AtomPowers&) = default;
};

AtomPowers powers(const PtMono& x);
AtomPowers powers(const EC2TopMono& x);
AtomPowers powers(const TildeTopMono& x);
AtomPowers powers(const TopBC2Mono& x);
AtomPowers powers(const FreeMono& x);
AtomPowers powers(const TorMono& x);
AtomPowers powers(const MotMono& x);
AtomPowers powers(const EC2MotMono& x);
AtomPowers powers(const TildeMotMono& x);
AtomPowers powers(const BC2Mono& x);
AtomPowers powers(const CFieldMono& x);

/// Sum of generator_degree over the exponents; the atom x is ignored.
MotDegree degree_from_powers(const AtomPowers& p);

/// Canonical text, e.g. "theta/(a^2*u)", "theta*a^2*mu*tau_s", "1".
std::string format_powers(const AtomPowers& p);

}  // namespace c2mot
