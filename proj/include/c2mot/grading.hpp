#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace c2mot {

/// An RO(C2) degree a + p*sigma.
struct RO2Degree {
    int a = 0;  // trivial part
    int p = 0;  // sigma part

    friend constexpr RO2Degree operator+(RO2Degree x, RO2Degree y) { return {x.a + y.a, x.p + y.p}; }
    friend constexpr RO2Degree operator-(RO2Degree x, RO2Degree y) { return {x.a - y.a, x.p - y.p}; }
    friend constexpr RO2Degree operator-(RO2Degree x) { return {-x.a, -x.p}; }
    friend constexpr RO2Degree operator*(int k, RO2Degree x) { return {k * x.a, k * x.p}; }
    friend constexpr auto operator<=>(const RO2Degree&, const RO2Degree&) = default;
};

/// Cohomological degree together with the motivic weight b + q*sigma.
struct MotDegree {
    RO2Degree deg;
    RO2Degree wt;

    friend constexpr MotDegree operator+(MotDegree x, MotDegree y) { return {x.deg + y.deg, x.wt + y.wt}; }
    friend constexpr MotDegree operator-(MotDegree x, MotDegree y) { return {x.deg - y.deg, x.wt - y.wt}; }
    friend constexpr MotDegree operator*(int k, MotDegree x) { return {k * x.deg, k * x.wt}; }
    friend constexpr auto operator<=>(const MotDegree&, const MotDegree&) = default;
};

constexpr MotDegree degree_add(MotDegree x, MotDegree y) { return x + y; }

/// Integer bidegree (a, b) viewed as (a + 0 sigma, b + 0 sigma).
constexpr MotDegree integral_bidegree(int a, int b) { return {{a, 0}, {b, 0}}; }

std::string to_string(RO2Degree d);
std::string to_string(const MotDegree& d);
std::ostream& operator<<(std::ostream& os, RO2Degree d);
std::ostream& operator<<(std::ostream& os, const MotDegree& d);

enum class Generator : std::uint8_t { a, u, theta, xi, tau_s, mu, tau, e1, e2 };

/// Fixed degree table of the named generators. Throws std::invalid_argument
/// for names outside {a, u, theta, xi, tau_s, mu, tau, e1, e2} (ASCII or Unicode).
MotDegree generator_degree(std::string_view symbol);
MotDegree generator_degree(Generator g);
std::string_view generator_name(Generator g);

/// Region of the weight plane (b, q).
struct WeightRegion {
    enum class Kind : std::uint8_t { PointCone, TildeBlock, EC2Cone, Zero };
    Kind kind = Kind::Zero;
    int block = 0;  // B_block index, only meaningful for TildeBlock

    friend constexpr bool operator==(const WeightRegion&, const WeightRegion&) = default;
};

WeightRegion classify_weight(int b, int q);

/// Short label used by the weight-plane chart: "M", "B<i>", "E", "0".
std::string region_label(const WeightRegion& r);

}  // namespace c2mot
