#include "c2mot/chart.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace c2mot {

void ChartWindow::validate() const {
    if (x_min > x_max || y_min > y_max) throw std::invalid_argument("window has an axis with min > max");
}

namespace {

MotDegree cell_degree(const RingId& ring, int x, int y, RO2Degree weight) {
    if (is_integral(ring)) return integral_bidegree(x, y);
    if (is_topological(ring)) return {{x, y}, {}};
    return {{x, y}, weight};
}

std::string vertical_label(const RingId& ring) { return is_integral(ring) ? "b" : "p"; }

}  // namespace

Chart build_chart(const RingId& ring, const ChartWindow& window, RO2Degree weight) {
    window.validate();
    Chart chart{ring, is_topological(ring) || is_integral(ring) ? RO2Degree{} : weight, window, {}};
    for (int x = window.x_min; x <= window.x_max; ++x)
        for (int y = window.y_min; y <= window.y_max; ++y) {
            const MotDegree d = cell_degree(ring, x, y, weight);
            chart.cells.push_back({d, basis_at(ring, d)});
        }
    std::sort(chart.cells.begin(), chart.cells.end(), [](const ChartCell& s, const ChartCell& t) {
        if (s.degree.wt != t.degree.wt) return s.degree.wt < t.degree.wt;
        return s.degree.deg < t.degree.deg;
    });
    return chart;
}

std::string render_ascii(const Chart& chart) {
    const auto& w = chart.window;
    const std::size_t width = static_cast<std::size_t>(w.x_max - w.x_min + 1);
    const std::size_t height = static_cast<std::size_t>(w.y_max - w.y_min + 1);
    std::vector<std::string> grid(height, std::string(width, '.'));
    for (const auto& c : chart.cells) {
        const int x = c.degree.deg.a;
        const int y = is_integral(chart.ring) ? c.degree.wt.a : c.degree.deg.p;
        const auto dim = c.dimension();
        if (dim == 0) continue;
        grid[static_cast<std::size_t>(w.y_max - y)][static_cast<std::size_t>(x - w.x_min)] =
            dim <= 9 ? static_cast<char>('0' + dim) : '*';
    }
    std::string out;
    if (is_topological(chart.ring) || is_integral(chart.ring))
        out += fmt::format("ring {}\n", to_string(chart.ring));
    else
        out += fmt::format("ring {} weight {}\n", to_string(chart.ring), to_string(chart.weight));
    out += fmt::format("{:>4}\n", vertical_label(chart.ring));
    for (std::size_t r = 0; r < height; ++r) {
        out += fmt::format("{:>4} |", w.y_max - static_cast<int>(r));
        for (char c : grid[r]) out += fmt::format("{:>3}", c);
        out += '\n';
    }
    out += "     +" + std::string(3 * width, '-') + '\n';
    out += "      ";
    for (int x = w.x_min; x <= w.x_max; ++x) out += fmt::format("{:>3}", x);
    out += "  a\n";
    return out;
}

nlohmann::json to_json(const Chart& chart) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : chart.cells)
        cells.push_back({{"a", c.degree.deg.a},
                         {"p", c.degree.deg.p},
                         {"b", c.degree.wt.a},
                         {"q", c.degree.wt.p},
                         {"dim", c.dimension()},
                         {"basis", c.basis}});
    const auto& w = chart.window;
    return {{"kind", "degree"},
            {"ring", to_string(chart.ring)},
            {"weight", {{"b", chart.weight.a}, {"q", chart.weight.p}}},
            {"window", {{"x", {w.x_min, w.x_max}}, {"y", {w.y_min, w.y_max}}}},
            {"cells", cells}};
}

std::string render_csv(const Chart& chart) {
    std::string out = "ring,a,p,b,q,dim,basis\n";
    const auto ring = to_string(chart.ring);
    for (const auto& c : chart.cells) {
        std::string basis;
        for (const auto& b : c.basis) {
            if (!basis.empty()) basis += ';';
            basis += b;
        }
        out += fmt::format("{},{},{},{},{},{},{}\n", ring, c.degree.deg.a, c.degree.deg.p, c.degree.wt.a, c.degree.wt.p,
                           c.dimension(), basis);
    }
    return out;
}

PlaneChart build_plane(const ChartWindow& window) {
    window.validate();
    PlaneChart chart{window, {}};
    for (int b = window.x_min; b <= window.x_max; ++b)
        for (int q = window.y_min; q <= window.y_max; ++q) chart.cells.push_back({b, q, classify_weight(b, q)});
    return chart;
}

std::string render_ascii(const PlaneChart& chart) {
    const auto& w = chart.window;
    std::size_t cell = 2;
    for (const auto& c : chart.cells) cell = std::max(cell, region_label(c.region).size() + 1);
    for (int b = w.x_min; b <= w.x_max; ++b) cell = std::max(cell, std::to_string(b).size() + 1);
    std::string out = "weight plane (M: point cone, B<i>: block B_i, E: EC2 cone, 0: zero)\n";
    out += fmt::format("{:>4}\n", "q");
    for (int q = w.y_max; q >= w.y_min; --q) {
        out += fmt::format("{:>4} |", q);
        for (int b = w.x_min; b <= w.x_max; ++b) out += fmt::format("{:>{}}", region_label(classify_weight(b, q)), cell);
        out += '\n';
    }
    out += "     +" + std::string(cell * static_cast<std::size_t>(w.x_max - w.x_min + 1), '-') + '\n';
    out += "      ";
    for (int b = w.x_min; b <= w.x_max; ++b) out += fmt::format("{:>{}}", b, cell);
    out += "  b\n";
    return out;
}

nlohmann::json to_json(const PlaneChart& chart) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : chart.cells)
        cells.push_back({{"b", c.b}, {"q", c.q}, {"region", region_label(c.region)}});
    const auto& w = chart.window;
    return {{"kind", "plane"}, {"window", {{"x", {w.x_min, w.x_max}}, {"y", {w.y_min, w.y_max}}}}, {"cells", cells}};
}

}  // namespace c2mot
