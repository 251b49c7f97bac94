#include <doctest.h>

#include <stdexcept>

#include "c2mot/grading.hpp"

using namespace c2mot;

TEST_CASE("generator degree table") {
    CHECK(generator_degree("a") == MotDegree{{0, 1}, {0, 0}});
    CHECK(generator_degree("u") == MotDegree{{-1, 1}, {0, 0}});
    CHECK(generator_degree("theta") == MotDegree{{2, -2}, {0, 0}});
    CHECK(generator_degree("xi") == MotDegree{{-2, 2}, {-1, 1}});
    CHECK(generator_degree("tau_s") == MotDegree{{0, 0}, {0, 1}});
    CHECK(generator_degree("mu") == MotDegree{{0, 0}, {1, -1}});
    CHECK(generator_degree("tau") == MotDegree{{0, 0}, {1, 0}});
    CHECK(generator_degree("e1") == MotDegree{{1, 0}, {1, 0}});
    CHECK(generator_degree("e2") == MotDegree{{2, 0}, {1, 0}});
}

TEST_CASE("unicode generator names") {
    CHECK(generator_degree("τ_σ") == generator_degree("tau_s"));
    CHECK(generator_degree("θ") == generator_degree("theta"));
    CHECK(generator_degree("e₁") == generator_degree("e1"));
    CHECK(generator_degree("ξ") == generator_degree(Generator::xi));
}

TEST_CASE("unknown generator is rejected") {
    CHECK_THROWS_AS(generator_degree("rho"), std::invalid_argument);
    CHECK_THROWS_AS(generator_degree(""), std::invalid_argument);
}

TEST_CASE("degree_add examples") {
    const MotDegree d{{3, -1}, {2, 5}};
    CHECK(degree_add(MotDegree{}, d) == d);
    CHECK(degree_add(generator_degree("xi"), generator_degree("mu")) == MotDegree{{-2, 2}, {0, 0}});
    CHECK(degree_add(generator_degree("xi"), generator_degree("mu")) == 2 * generator_degree("u"));
    CHECK(degree_add(generator_degree("tau_s"), generator_degree("mu")) == generator_degree("tau"));
}

TEST_CASE("degree_add is a commutative associative monoid on a window") {
    for (int a = -2; a <= 2; ++a)
        for (int p = -2; p <= 2; ++p)
            for (int b = -2; b <= 2; ++b) {
                const MotDegree x{{a, p}, {b, a - p}}, y{{p, b}, {a, -b}}, z{{b, a}, {p, p}};
                CHECK(degree_add(x, y) == degree_add(y, x));
                CHECK(degree_add(degree_add(x, y), z) == degree_add(x, degree_add(y, z)));
                CHECK(degree_add(x, MotDegree{}) == x);
            }
}

TEST_CASE("classify_weight examples") {
    CHECK(classify_weight(0, 0).kind == WeightRegion::Kind::PointCone);
    CHECK(classify_weight(2, -3) == WeightRegion{WeightRegion::Kind::TildeBlock, 2});
    CHECK(classify_weight(-1, -1).kind == WeightRegion::Kind::Zero);
    CHECK(classify_weight(-1, 1).kind == WeightRegion::Kind::EC2Cone);
    CHECK(classify_weight(0, -1).kind == WeightRegion::Kind::Zero);
}

TEST_CASE("classify_weight partitions the plane and carries the block index") {
    for (int b = -10; b <= 10; ++b)
        for (int q = -10; q <= 10; ++q) {
            const int hits = (b >= 0 && b + q >= 0) + (b >= 1 && b + q < 0) + (b < 0 && b + q >= 0) +
                             ((b < 0 && b + q < 0) || (b == 0 && q < 0));
            CHECK(hits == 1);
            const auto r = classify_weight(b, q);
            if (r.kind == WeightRegion::Kind::TildeBlock) {
                CHECK(r.block == b);
                CHECK(r.block >= 1);
            }
        }
}

TEST_CASE("degree and region labels") {
    CHECK(to_string(RO2Degree{2, -3}) == "2-3s");
    CHECK(to_string(RO2Degree{-1, 1}) == "-1+1s");
    CHECK(region_label(classify_weight(3, -5)) == "B3");
    CHECK(region_label(classify_weight(1, 1)) == "M");
    CHECK(region_label(classify_weight(-2, 4)) == "E");
    CHECK(region_label(classify_weight(-2, -4)) == "0");
}
