#include <doctest.h>

#include "c2mot/verify.hpp"

using namespace c2mot;

TEST_CASE("every suite passes on a small window") {
    const auto w = Window::symmetric(4);
    for (const auto& name : suite_names()) {
        const auto r = run_suite(name, w, 1, 200);
        INFO(name);
        CHECK(r.suite == name);
        CHECK_FALSE(r.checks.empty());
        CHECK(r.failures() == 0);
    }
}

TEST_CASE("suites are deterministic") {
    const auto w = Window::symmetric(3);
    CHECK(to_json(verify_ring_axioms(5, 100)) == to_json(verify_ring_axioms(5, 100)));
    CHECK(to_json(verify_exactness(w)) == to_json(verify_exactness(w)));
}

TEST_CASE("report semantics") {
    Report r{"demo", {}};
    r.add("same", "here", "1", "1");
    r.add("differs", "there", "1", "0");
    CHECK(r.failures() == 1);
    CHECK_FALSE(r.ok());
    const auto j = to_json(r);
    CHECK(j["failures"] == 1);
    CHECK(j["checks"][1]["pass"] == false);
}

TEST_CASE("invalid inputs") {
    Window w = Window::symmetric(2);
    w.a_min = 3;
    CHECK_THROWS_AS(w.validate(), std::invalid_argument);
    CHECK(run_suite("figures", w, 1, 1).failures() == 1);
    CHECK_THROWS_AS(verify_ring_axioms(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("nope", Window::symmetric(1), 1, 1), std::invalid_argument);
}
