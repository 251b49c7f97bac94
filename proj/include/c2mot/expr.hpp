#pragma once

// Element expressions.
//
//   expr   := term ('+' term)*
//   term   := factor (('*' | '/') factor)*
//   factor := primary ('^' int)?
//   primary:= atom | '0' | '1' | '(' expr ')'
//   int    := ['-'|'+'] digits | '(' ['-'|'+'] digits ')'
//
// Atoms: theta a u xi mu tau_s tau e1 e2 x (Unicode aliases θ ξ μ τ_σ τ e₁ e₂).
// A divisor must evaluate to a single monomial; "theta/(a^2*u)" and
// "theta*mu/tau_s^2" are sugar for negative exponents. Coefficients are in Z/2,
// so repeated terms cancel.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "c2mot/atoms.hpp"
#include "c2mot/motivic.hpp"
#include "c2mot/point.hpp"

namespace c2mot {

struct RingId {
    enum class Kind : std::uint8_t { pt, ec2top, tildetop, block, motivic, ec2mot, tildemot, bc2, cfield, topbc2 };
    Kind kind = Kind::pt;
    int block = 0;  // i >= 1 for Kind::block

    friend bool operator==(const RingId&, const RingId&) = default;
};

/// "pt", "ec2top", "tildetop", "b<i>" (i >= 1), "motivic", "ec2mot", "tildemot",
/// "bc2", "cfield", "topbc2". Throws std::invalid_argument on anything else.
RingId parse_ring_id(std::string_view name);
std::string to_string(const RingId& r);
/// Rings graded by RO(C2) alone (no weight).
bool is_topological(const RingId& r);
/// Rings graded by integer bidegrees (or a single integer for topbc2).
bool is_integral(const RingId& r);

using Element = std::variant<PtElem, EC2TopElem, TildeTopElem, BElem, MotElem, EC2MotElem, TildeMotElem, BC2Elem,
                             CFieldElem, TopBC2Elem>;

Element zero_element(const RingId& r);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A well-formed expression whose value violates an invariant of the target ring.
class ConstraintError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Formal Z/2 sums of Laurent monomials in the atoms, before ring validation.
std::vector<AtomPowers> parse_formal(std::string_view src);

Element parse(const RingId& ring, std::string_view src);

/// Validates one formal monomial in the ring; the result is a (possibly zero)
/// element because normal forms like xi*mu -> u^2 can annihilate it.
Element element_from_powers(const RingId& ring, const AtomPowers& p);

/// Deterministic text: terms ordered by degree, then lexicographically, joined by " + ".
std::string print_canonical(const Element& x);
std::string print_canonical(const RingId& ring, const Element& x);

/// One (degree, canonical text) pair per monomial, in canonical order.
struct Term {
    MotDegree degree;
    std::string text;
};
std::vector<Term> canonical_terms(const Element& x);

/// Common degree of all terms; nullopt for zero. Throws std::invalid_argument
/// ("not homogeneous") when the terms disagree.
std::optional<MotDegree> degree_of(const Element& x);

bool is_zero(const Element& x);
Element add(const Element& x, const Element& y);
/// Product in the ring; B_i and E~C2 elements are modules and throw std::invalid_argument.
Element multiply(const Element& x, const Element& y);

/// Monomial basis of the ring in the given degree, as canonical strings.
/// Topological rings read only d.deg; integral rings read (d.deg.a, d.wt.a).
std::vector<std::string> basis_at(const RingId& ring, const MotDegree& d);

}  // namespace c2mot
