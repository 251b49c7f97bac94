#include "c2mot/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <initializer_list>

#include <fmt/format.h>

namespace c2mot {

// ---------------------------------------------------------------- ring ids

RingId parse_ring_id(std::string_view name) {
    using K = RingId::Kind;
    static constexpr std::array<std::pair<std::string_view, K>, 9> table{{
        {"pt", K::pt},
        {"ec2top", K::ec2top},
        {"tildetop", K::tildetop},
        {"motivic", K::motivic},
        {"ec2mot", K::ec2mot},
        {"tildemot", K::tildemot},
        {"bc2", K::bc2},
        {"cfield", K::cfield},
        {"topbc2", K::topbc2},
    }};
    for (const auto& [n, k] : table)
        if (n == name) return {k, 0};
    if (name.size() >= 2 && (name[0] == 'b' || name[0] == 'B')) {
        std::string_view digits = name.substr(1);
        if (digits.size() >= 2 && digits.front() == '(' && digits.back() == ')')
            digits = digits.substr(1, digits.size() - 2);
        int i = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && i >= 1) return {K::block, i};
    }
    throw std::invalid_argument(fmt::format("unknown ring id '{}'", name));
}

std::string to_string(const RingId& r) {
    using K = RingId::Kind;
    switch (r.kind) {
    case K::pt: return "pt";
    case K::ec2top: return "ec2top";
    case K::tildetop: return "tildetop";
    case K::block: return fmt::format("b{}", r.block);
    case K::motivic: return "motivic";
    case K::ec2mot: return "ec2mot";
    case K::tildemot: return "tildemot";
    case K::bc2: return "bc2";
    case K::cfield: return "cfield";
    case K::topbc2: return "topbc2";
    }
    return "?";
}

bool is_topological(const RingId& r) {
    using K = RingId::Kind;
    return r.kind == K::pt || r.kind == K::ec2top || r.kind == K::tildetop || r.kind == K::block;
}

bool is_integral(const RingId& r) {
    using K = RingId::Kind;
    return r.kind == K::bc2 || r.kind == K::cfield || r.kind == K::topbc2;
}

Element zero_element(const RingId& r) {
    using K = RingId::Kind;
    switch (r.kind) {
    case K::pt: return PtElem{};
    case K::ec2top: return EC2TopElem{};
    case K::tildetop: return TildeTopElem{};
    case K::block: return BElem(r.block);
    case K::motivic: return MotElem{};
    case K::ec2mot: return EC2MotElem{};
    case K::tildemot: return TildeMotElem{};
    case K::bc2: return BC2Elem{};
    case K::cfield: return CFieldElem{};
    case K::topbc2: return TopBC2Elem{};
    }
    throw std::logic_error("unreachable ring kind");
}

// ---------------------------------------------------------------- parser

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error(fmt::format("syntax error at position {}: {}", position, message)), position_(position) {}

namespace {

using Formal = F2Sum<AtomPowers>;

Formal formal_product(const Formal& x, const Formal& y) {
    return bilinear<AtomPowers>(x, y, [](const AtomPowers& s, const AtomPowers& t) {
        return std::optional<AtomPowers>(s + t);
    });
}

constexpr int kMaxExponent = 1 << 16;
constexpr int kMaxSumPower = 64;

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Formal run() {
        Formal out = expr();
        skip_ws();
        if (pos_ != src_.size()) fail(fmt::format("unexpected '{}'", src_[pos_]));
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Formal expr() {
        Formal sum = term();
        while (accept('+')) sum += term();
        return sum;
    }

    Formal term() {
        Formal acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = formal_product(acc, factor());
            } else if (accept('/')) {
                skip_ws();
                const std::size_t at = pos_;
                Formal d = factor();
                if (d.size() != 1) fail_at(at, "divisor must be a single monomial");
                acc = formal_product(acc, Formal{-*d.begin()});
            } else {
                return acc;
            }
        }
    }

    Formal factor() {
        skip_ws();
        const std::size_t at = pos_;
        Formal base = primary();
        if (!accept('^')) return base;
        const int k = integer();
        return power(base, k, at);
    }

    Formal power(const Formal& base, int k, std::size_t at) const {
        if (base.size() == 1) {
            AtomPowers p;
            for (std::size_t i = 0; i < kAtomCount; ++i) p.exp[i] = base.begin()->exp[i] * k;
            return Formal{p};
        }
        if (k < 0) fail_at(at, "negative power of a non-monomial");
        if (k > kMaxSumPower) fail_at(at, fmt::format("power of a sum above {}", kMaxSumPower));
        Formal out{AtomPowers{}};
        for (int i = 0; i < k; ++i) out = formal_product(out, base);
        return out;
    }

    int integer() {
        skip_ws();
        const bool paren = accept('(');
        skip_ws();
        bool negative = false;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
            negative = src_[pos_] == '-';
            ++pos_;
        }
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        int value = 0;
        auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec != std::errc() || value > kMaxExponent) fail_at(start, "exponent out of range");
        if (paren && !accept(')')) fail("expected ')'");
        return negative ? -value : value;
    }

    Formal primary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        if (accept('(')) {
            Formal inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            const auto digits = src_.substr(start, pos_ - start);
            if (digits == "0") return Formal{};
            if (digits == "1") return Formal{AtomPowers{}};
            fail_at(start, "coefficients other than 0 and 1 are not supported");
        }
        // Unicode aliases first; they may share a leading byte with ASCII names (e₁).
        static constexpr std::array<std::string_view, 8> aliases{"τ_σ", "τσ", "τ", "θ", "ξ", "μ", "e₁", "e₂"};
        for (auto alias : aliases) {
            if (src_.substr(pos_, alias.size()) == alias) {
                pos_ += alias.size();
                return atom_formal(*atom_from_name(alias));
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            const auto name = src_.substr(start, pos_ - start);
            if (auto a = atom_from_name(name)) return atom_formal(*a);
            fail_at(start, fmt::format("unknown atom '{}'", name));
        }
        fail(fmt::format("unexpected '{}'", c));
    }

    static Formal atom_formal(Atom a) {
        AtomPowers p;
        p[a] = 1;
        return Formal{p};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- validation

void only_atoms(const RingId& ring, const AtomPowers& p, std::initializer_list<Atom> allowed) {
    for (std::size_t i = 0; i < kAtomCount; ++i) {
        const auto atom = static_cast<Atom>(i);
        if (p.exp[i] != 0 && std::find(allowed.begin(), allowed.end(), atom) == allowed.end())
            throw ConstraintError(fmt::format("atom '{}' is not available in ring {}", atom_name(atom), to_string(ring)));
    }
}

// theta^t a^m u^n as a monomial of M.
PtMono point_monomial(const AtomPowers& p) {
    const int t = p[Atom::theta];
    const int m = p[Atom::a];
    const int n = p[Atom::u];
    if (t != 0 && t != 1) throw ConstraintError("theta exponent must be 0 or 1");
    if (t == 0) {
        if (m < 0 || n < 0) throw ConstraintError("negative a or u exponent requires theta (negative cone)");
        return PtMono::pos(m, n);
    }
    if (m > 0 || n > 0) throw ConstraintError("a and u exponents must be <= 0 alongside theta (negative cone)");
    return PtMono::neg(-m, -n);
}

// theta * a^m * u^-n with the block constraint when index > 0.
TildeTopMono tilde_monomial(const AtomPowers& p, int index) {
    if (p[Atom::theta] != 1) throw ConstraintError("theta exponent must be 1 in the E~C2 cohomology");
    if (p[Atom::u] > 0) throw ConstraintError("u exponent must be <= 0 in the E~C2 cohomology");
    TildeTopMono t{p[Atom::a], -p[Atom::u]};
    if (index > 0 && !fits_block(t, index))
        throw ConstraintError(fmt::format("n > 2i-1 in B_i (n={}, i={})", t.n, index));
    return t;
}

// tau = mu * tau_s in the motivic rings.
AtomPowers fold_tau(AtomPowers p) {
    p[Atom::mu] += p[Atom::tau];
    p[Atom::tau_s] += p[Atom::tau];
    p[Atom::tau] = 0;
    return p;
}

Element motivic_from_powers(const RingId& ring, AtomPowers p) {
    only_atoms(ring, p, {Atom::theta, Atom::a, Atom::u, Atom::xi, Atom::mu, Atom::tau_s, Atom::tau});
    p = fold_tau(p);
    MotElem out;
    if (p[Atom::tau_s] >= 0) {
        if (p[Atom::xi] < 0 || p[Atom::mu] < 0)
            throw ConstraintError("xi and mu exponents must be >= 0 in the free part");
        auto f = normalize_free(point_monomial(p), p[Atom::xi], p[Atom::tau_s], p[Atom::mu]);
        if (f) out.toggle(MotMono{*f});
        return out;
    }
    if (p[Atom::xi] != 0) throw ConstraintError("xi exponent must be 0 in a torsion monomial");
    const int i = p[Atom::mu];
    if (i < 1) throw ConstraintError("torsion monomial needs mu^i with i >= 1");
    const auto t = tilde_monomial(p, i);
    out.toggle(MotMono{TorMono{i, -p[Atom::tau_s], t.m, t.n}});
    return out;
}

}  // namespace

std::vector<AtomPowers> parse_formal(std::string_view src) {
    Formal f = Parser(src).run();
    return {f.begin(), f.end()};
}

Element element_from_powers(const RingId& ring, const AtomPowers& p) {
    using K = RingId::Kind;
    switch (ring.kind) {
    case K::pt:
        only_atoms(ring, p, {Atom::theta, Atom::a, Atom::u});
        return PtElem{point_monomial(p)};
    case K::ec2top:
        only_atoms(ring, p, {Atom::a, Atom::u});
        if (p[Atom::a] < 0) throw ConstraintError("a exponent must be >= 0 in Z/2[a, u^{+-1}]");
        return EC2TopElem{EC2TopMono{p[Atom::a], p[Atom::u]}};
    case K::tildetop:
        only_atoms(ring, p, {Atom::theta, Atom::a, Atom::u});
        return TildeTopElem{tilde_monomial(p, 0)};
    case K::block:
        only_atoms(ring, p, {Atom::theta, Atom::a, Atom::u});
        return BElem(ring.block, TildeTopElem{tilde_monomial(p, ring.block)});
    case K::motivic: return motivic_from_powers(ring, p);
    case K::ec2mot: {
        only_atoms(ring, p, {Atom::theta, Atom::a, Atom::u, Atom::xi, Atom::tau_s, Atom::tau, Atom::e1, Atom::e2});
        // tau = u^2 tau_s/xi, e1 = a u tau_s/xi, e2 = a^2 tau_s/xi
        AtomPowers q = p;
        const int tau = q[Atom::tau], e1 = q[Atom::e1], e2 = q[Atom::e2];
        q[Atom::tau] = q[Atom::e1] = q[Atom::e2] = 0;
        q[Atom::u] += 2 * tau + e1;
        q[Atom::a] += e1 + 2 * e2;
        q[Atom::tau_s] += tau + e1 + e2;
        q[Atom::xi] -= tau + e1 + e2;
        if (q[Atom::tau_s] < 0) throw ConstraintError("tau_s exponent must be >= 0 in the EC2 cohomology");
        return EC2MotElem{EC2MotMono{point_monomial(q), q[Atom::xi], q[Atom::tau_s]}};
    }
    case K::tildemot: {
        only_atoms(ring, p, {Atom::theta, Atom::a, Atom::u, Atom::mu, Atom::tau_s, Atom::tau});
        const AtomPowers q = fold_tau(p);
        const int i = q[Atom::mu];
        if (i < 1) throw ConstraintError("E~C2 monomial needs mu^i with i >= 1");
        const auto t = tilde_monomial(q, i);
        return TildeMotElem{TildeMotMono{i, q[Atom::tau_s], t.m, t.n}};
    }
    case K::bc2:
        only_atoms(ring, p, {Atom::tau, Atom::e1, Atom::e2});
        if (p[Atom::tau] < 0 || p[Atom::e1] < 0 || p[Atom::e2] < 0)
            throw ConstraintError("tau, e1, e2 exponents must be >= 0");
        return BC2Elem{bc2_normalize(p[Atom::tau], p[Atom::e1], p[Atom::e2])};
    case K::cfield:
        only_atoms(ring, p, {Atom::tau});
        if (p[Atom::tau] < 0) throw ConstraintError("tau exponent must be >= 0");
        return CFieldElem{CFieldMono{p[Atom::tau]}};
    case K::topbc2:
        only_atoms(ring, p, {Atom::x});
        if (p[Atom::x] < 0) throw ConstraintError("x exponent must be >= 0");
        return TopBC2Elem{TopBC2Mono{p[Atom::x]}};
    }
    throw std::logic_error("unreachable ring kind");
}

Element parse(const RingId& ring, std::string_view src) {
    Element out = zero_element(ring);
    for (const auto& p : parse_formal(src)) out = add(out, element_from_powers(ring, p));
    return out;
}

// ---------------------------------------------------------------- printing

namespace {

MotDegree mot_degree(const PtMono& x) { return {degree(x), {}}; }
MotDegree mot_degree(const EC2TopMono& x) { return {degree(x), {}}; }
MotDegree mot_degree(const TildeTopMono& x) { return {degree(x), {}}; }
MotDegree mot_degree(const TopBC2Mono& x) { return integral_bidegree(x.k, 0); }
template <class M>
MotDegree mot_degree(const M& x) {
    return degree(x);
}

template <class M>
void collect(const F2Sum<M>& x, std::vector<Term>& out) {
    for (const auto& m : x) out.push_back({mot_degree(m), format_powers(powers(m))});
}

}  // namespace

std::vector<Term> canonical_terms(const Element& x) {
    std::vector<Term> out;
    std::visit(
        [&](const auto& e) {
            if constexpr (std::is_same_v<std::decay_t<decltype(e)>, BElem>)
                collect(e.terms(), out);
            else
                collect(e, out);
        },
        x);
    std::sort(out.begin(), out.end(), [](const Term& s, const Term& t) {
        if (s.degree != t.degree) return s.degree < t.degree;
        return s.text < t.text;
    });
    return out;
}

std::string print_canonical(const Element& x) {
    const auto terms = canonical_terms(x);
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += " + ";
        out += t.text;
    }
    return out;
}

std::string print_canonical(const RingId& ring, const Element& x) {
    if (x.index() != zero_element(ring).index())
        throw std::invalid_argument(fmt::format("element does not belong to ring {}", to_string(ring)));
    return print_canonical(x);
}

std::optional<MotDegree> degree_of(const Element& x) {
    const auto terms = canonical_terms(x);
    if (terms.empty()) return std::nullopt;
    for (const auto& t : terms)
        if (t.degree != terms.front().degree) throw std::invalid_argument("not homogeneous");
    return terms.front().degree;
}

bool is_zero(const Element& x) {
    return std::visit([](const auto& e) { return e.is_zero(); }, x);
}

Element add(const Element& x, const Element& y) {
    if (x.index() != y.index()) throw std::invalid_argument("cannot add elements of different rings");
    return std::visit(
        [&](const auto& ex) -> Element {
            using T = std::decay_t<decltype(ex)>;
            const auto& ey = std::get<T>(y);
            if constexpr (std::is_same_v<T, BElem>) {
                if (ex.index() != ey.index()) throw std::invalid_argument("cannot add elements of different blocks");
                return BElem::unchecked(ex.index(), ex.terms() + ey.terms());
            } else {
                return ex + ey;
            }
        },
        x);
}

Element multiply(const Element& x, const Element& y) {
    if (x.index() != y.index()) throw std::invalid_argument("cannot multiply elements of different rings");
    return std::visit(
        [&](const auto& ex) -> Element {
            using T = std::decay_t<decltype(ex)>;
            const auto& ey = std::get<T>(y);
            if constexpr (std::is_same_v<T, PtElem>) return pt_mul(ex, ey);
            else if constexpr (std::is_same_v<T, EC2TopElem>) return ec2top_mul(ex, ey);
            else if constexpr (std::is_same_v<T, MotElem>) return mot_mul(ex, ey);
            else if constexpr (std::is_same_v<T, EC2MotElem>) return ec2mot_mul(ex, ey);
            else if constexpr (std::is_same_v<T, BC2Elem>) return bc2_mul(ex, ey);
            else if constexpr (std::is_same_v<T, CFieldElem>) return cfield_mul(ex, ey);
            else if constexpr (std::is_same_v<T, TopBC2Elem>) return topbc2_mul(ex, ey);
            else throw std::invalid_argument("this object is a module over the point ring; it has no product");
        },
        x);
}

std::vector<std::string> basis_at(const RingId& ring, const MotDegree& d) {
    using K = RingId::Kind;
    std::vector<std::string> out;
    auto push = [&](const auto& monos) {
        for (const auto& m : monos) out.push_back(format_powers(powers(m)));
    };
    switch (ring.kind) {
    case K::pt: push(pt_basis(d.deg)); break;
    case K::ec2top: push(ec2top_basis(d.deg)); break;
    case K::tildetop: push(tildetop_basis(d.deg)); break;
    case K::block: push(b_basis(ring.block, d.deg)); break;
    case K::motivic: push(mot_basis(d)); break;
    case K::ec2mot: push(ec2mot_basis(d)); break;
    case K::tildemot: push(tildemot_basis(d)); break;
    case K::bc2: push(bc2_basis(d.deg.a, d.wt.a)); break;
    case K::cfield: push(cfield_basis(d.deg.a, d.wt.a)); break;
    case K::topbc2: push(topbc2_basis(d.deg.a)); break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace c2mot
