#include "c2mot/atoms.hpp"

#include <utility>
#include <vector>

#include <fmt/format.h>

namespace c2mot {

namespace {

constexpr std::array<std::string_view, kAtomCount> kNames{"theta", "a", "u", "xi", "mu", "tau_s", "tau", "e1", "e2", "x"};

AtomPowers make(std::initializer_list<std::pair<Atom, int>> entries) {
    AtomPowers p;
    for (const auto& [a, k] : entries) p[a] += k;
    return p;
}

}  // namespace

std::string_view atom_name(Atom a) { return kNames[static_cast<std::size_t>(a)]; }

std::optional<Atom> atom_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kAtomCount; ++i)
        if (kNames[i] == name) return static_cast<Atom>(i);
    static constexpr std::array<std::pair<std::string_view, Atom>, 8> aliases{{
        {"θ", Atom::theta},
        {"ξ", Atom::xi},
        {"μ", Atom::mu},
        {"τ_σ", Atom::tau_s},
        {"τσ", Atom::tau_s},
        {"τ", Atom::tau},
        {"e₁", Atom::e1},
        {"e₂", Atom::e2},
    }};
    for (const auto& [alias, a] : aliases)
        if (alias == name) return a;
    return std::nullopt;
}

bool AtomPowers::is_one() const {
    for (int k : exp)
        if (k != 0) return false;
    return true;
}

AtomPowers operator+(const AtomPowers& x, const AtomPowers& y) {
    AtomPowers out;
    for (std::size_t i = 0; i < kAtomCount; ++i) out.exp[i] = x.exp[i] + y.exp[i];
    return out;
}

AtomPowers operator-(const AtomPowers& x) {
    AtomPowers out;
    for (std::size_t i = 0; i < kAtomCount; ++i) out.exp[i] = -x.exp[i];
    return out;
}

AtomPowers powers(const PtMono& x) {
    if (x.is_pos()) return make({{Atom::a, x.m}, {Atom::u, x.n}});
    return make({{Atom::theta, 1}, {Atom::a, -x.m}, {Atom::u, -x.n}});
}

AtomPowers powers(const EC2TopMono& x) { return make({{Atom::a, x.m}, {Atom::u, x.n}}); }

AtomPowers powers(const TildeTopMono& x) { return make({{Atom::theta, 1}, {Atom::a, x.m}, {Atom::u, -x.n}}); }

AtomPowers powers(const TopBC2Mono& x) { return make({{Atom::x, x.k}}); }

AtomPowers powers(const FreeMono& x) {
    return powers(x.x) + make({{Atom::xi, x.e}, {Atom::tau_s, x.f}, {Atom::mu, x.g}});
}

AtomPowers powers(const TorMono& x) {
    return make({{Atom::theta, 1}, {Atom::a, x.m}, {Atom::u, -x.n}, {Atom::mu, x.i}, {Atom::tau_s, -x.j}});
}

AtomPowers powers(const MotMono& x) {
    return std::visit([](const auto& m) { return powers(m); }, x);
}

AtomPowers powers(const EC2MotMono& x) { return powers(x.x) + make({{Atom::xi, x.e}, {Atom::tau_s, x.f}}); }

AtomPowers powers(const TildeMotMono& x) {
    return make({{Atom::theta, 1}, {Atom::a, x.m}, {Atom::u, -x.n}, {Atom::mu, x.i}, {Atom::tau_s, x.j}});
}

AtomPowers powers(const BC2Mono& x) { return make({{Atom::tau, x.k}, {Atom::e1, x.eps}, {Atom::e2, x.m2}}); }

AtomPowers powers(const CFieldMono& x) { return make({{Atom::tau, x.k}}); }

MotDegree degree_from_powers(const AtomPowers& p) {
    MotDegree d;
    for (std::size_t i = 0; i < kAtomCount; ++i) {
        const auto atom = static_cast<Atom>(i);
        if (atom == Atom::x || p.exp[i] == 0) continue;
        d = d + p.exp[i] * generator_degree(atom_name(atom));
    }
    return d;
}

std::string format_powers(const AtomPowers& p) {
    std::vector<std::string> num;
    std::vector<std::string> den;
    for (std::size_t i = 0; i < kAtomCount; ++i) {
        const int k = p.exp[i];
        if (k == 0) continue;
        const auto name = kNames[i];
        const int mag = k > 0 ? k : -k;
        std::string factor = mag == 1 ? std::string(name) : fmt::format("{}^{}", name, mag);
        (k > 0 ? num : den).push_back(std::move(factor));
    }
    std::string out = num.empty() ? "1" : fmt::format("{}", fmt::join(num, "*"));
    if (den.size() == 1) out += "/" + den.front();
    if (den.size() > 1) out += fmt::format("/({})", fmt::join(den, "*"));
    return out;
}

}  // namespace c2mot
