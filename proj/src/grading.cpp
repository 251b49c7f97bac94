#include "c2mot/grading.hpp"

#include <array>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace c2mot {

std::string to_string(RO2Degree d) {
    if (d.p < 0) return fmt::format("{}-{}s", d.a, -d.p);
    return fmt::format("{}+{}s", d.a, d.p);
}

std::string to_string(const MotDegree& d) {
    return fmt::format("({}, {})", to_string(d.deg), to_string(d.wt));
}

std::ostream& operator<<(std::ostream& os, RO2Degree d) { return os << to_string(d); }
std::ostream& operator<<(std::ostream& os, const MotDegree& d) { return os << to_string(d); }

MotDegree generator_degree(Generator g) {
    switch (g) {
    case Generator::a: return {{0, 1}, {0, 0}};
    case Generator::u: return {{-1, 1}, {0, 0}};
    case Generator::theta: return {{2, -2}, {0, 0}};
    case Generator::xi: return {{-2, 2}, {-1, 1}};
    case Generator::tau_s: return {{0, 0}, {0, 1}};
    case Generator::mu: return {{0, 0}, {1, -1}};
    case Generator::tau: return {{0, 0}, {1, 0}};
    case Generator::e1: return {{1, 0}, {1, 0}};
    case Generator::e2: return {{2, 0}, {1, 0}};
    }
    throw std::logic_error("unreachable generator");
}

std::string_view generator_name(Generator g) {
    switch (g) {
    case Generator::a: return "a";
    case Generator::u: return "u";
    case Generator::theta: return "theta";
    case Generator::xi: return "xi";
    case Generator::tau_s: return "tau_s";
    case Generator::mu: return "mu";
    case Generator::tau: return "tau";
    case Generator::e1: return "e1";
    case Generator::e2: return "e2";
    }
    throw std::logic_error("unreachable generator");
}

MotDegree generator_degree(std::string_view symbol) {
    static constexpr std::array<std::pair<std::string_view, Generator>, 17> table{{
        {"a", Generator::a},
        {"u", Generator::u},
        {"theta", Generator::theta},
        {"θ", Generator::theta},
        {"xi", Generator::xi},
        {"ξ", Generator::xi},
        {"tau_s", Generator::tau_s},
        {"τ_σ", Generator::tau_s},
        {"τσ", Generator::tau_s},
        {"mu", Generator::mu},
        {"μ", Generator::mu},
        {"tau", Generator::tau},
        {"τ", Generator::tau},
        {"e1", Generator::e1},
        {"e₁", Generator::e1},
        {"e2", Generator::e2},
        {"e₂", Generator::e2},
    }};
    for (const auto& [name, g] : table)
        if (name == symbol) return generator_degree(g);
    throw std::invalid_argument(fmt::format("unknown generator '{}'", symbol));
}

WeightRegion classify_weight(int b, int q) {
    using K = WeightRegion::Kind;
    if (b >= 0 && b + q >= 0) return {K::PointCone, 0};
    if (b >= 1) return {K::TildeBlock, b};  // b + q < 0 here
    if (b < 0 && b + q >= 0) return {K::EC2Cone, 0};
    return {K::Zero, 0};  // b < 0 and b + q < 0, or b == 0 and q < 0 (B_0 = 0)
}

std::string region_label(const WeightRegion& r) {
    switch (r.kind) {
    case WeightRegion::Kind::PointCone: return "M";
    case WeightRegion::Kind::TildeBlock: return fmt::format("B{}", r.block);
    case WeightRegion::Kind::EC2Cone: return "E";
    case WeightRegion::Kind::Zero: return "0";
    }
    return "?";
}

}  // namespace c2mot
