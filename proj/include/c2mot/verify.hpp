#pragma once

// Verification suites: every structural claim about the rings, recomputed from
// basis enumeration and the implemented maps and compared with closed-form
// predictions over a window of degrees and weights.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace c2mot {

struct Window {
    int a_min = -8, a_max = 8;
    int p_min = -8, p_max = 8;
    int b_min = -8, b_max = 8;
    int q_min = -8, q_max = 8;

    /// [-n, n] on all eight axes.
    static Window symmetric(int n);
    /// Throws std::invalid_argument when some min exceeds its max.
    void validate() const;
};

struct Check {
    std::string name;
    std::string location;
    std::string expected;
    std::string actual;

    bool pass() const { return expected == actual; }
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
    void add(std::string name, std::string location, std::string expected, std::string actual);
};

Report verify_figures(const Window& w);
Report verify_vanishing(const Window& w);
Report verify_exactness(const Window& w);
Report verify_ring_axioms(std::uint64_t seed, int trials);
Report verify_realization(const Window& w);
Report verify_example_p1();

/// "figures", "vanishing", "exactness", "ring", "realization", "p1".
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one suite; an escaping exception becomes a failed check.
Report run_suite(const std::string& name, const Window& w, std::uint64_t seed, int trials);

nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const std::vector<Report>& reports, const Window& w, std::uint64_t seed, int trials);

}  // namespace c2mot
