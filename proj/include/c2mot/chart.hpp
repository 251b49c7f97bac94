#pragma once

// Dimension charts: the degree plane of one ring at a fixed weight, and the
// weight plane labelled by region.
//
// Degree charts put the trivial part a on the horizontal axis and the sigma
// part p on the vertical axis. For bc2, cfield and topbc2 the vertical axis is
// the integer weight b instead (topbc2 has no weight, so its rows repeat).

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "c2mot/expr.hpp"
#include "c2mot/grading.hpp"

namespace c2mot {

struct ChartWindow {
    int x_min = 0, x_max = 0;
    int y_min = 0, y_max = 0;

    /// Throws std::invalid_argument on an inverted axis.
    void validate() const;
};

struct ChartCell {
    MotDegree degree;
    std::vector<std::string> basis;

    std::size_t dimension() const { return basis.size(); }
};

struct Chart {
    RingId ring;
    RO2Degree weight;
    ChartWindow window;
    /// Sorted by weight, then by degree (lexicographic on (b, q, a, p)).
    std::vector<ChartCell> cells;
};

Chart build_chart(const RingId& ring, const ChartWindow& window, RO2Degree weight);
std::string render_ascii(const Chart& chart);
nlohmann::json to_json(const Chart& chart);
/// Header ring,a,p,b,q,dim,basis; basis elements joined by ';'.
std::string render_csv(const Chart& chart);

struct PlaneCell {
    int b = 0;
    int q = 0;
    WeightRegion region;
};

struct PlaneChart {
    ChartWindow window;  // x = b, y = q
    std::vector<PlaneCell> cells;
};

PlaneChart build_plane(const ChartWindow& window);
std::string render_ascii(const PlaneChart& chart);
nlohmann::json to_json(const PlaneChart& chart);

}  // namespace c2mot
