// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Each criterion pairs the relevant verification suite with an independent
// recomputation written here.

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "c2mot/expr.hpp"
#include "c2mot/motivic.hpp"
#include "c2mot/point.hpp"
#include "c2mot/sample.hpp"
#include "c2mot/verify.hpp"

#ifndef C2MOT_MUTANT_1
#error "mutant executable paths must be defined"
#endif

using namespace c2mot;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) note = what;
        pass = pass && ok;
    }
};

bool suite_passes(Outcome& o, const Report& r) {
    o.require(r.ok(), fmt::format("suite {} has {} failures", r.suite, r.failures()));
    return r.ok();
}

bool check_named(Outcome& o, const Report& r, const std::string& prefix) {
    bool found = false;
    for (const auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) {
            found = true;
            o.require(c.pass(), fmt::format("{} @ {}: expected {}, actual {}", c.name, c.location, c.expected, c.actual));
        }
    o.require(found, "no check named " + prefix);
    return found;
}

MotElem gen(Generator g) { return mot_generator(g); }

const Window kWindow = Window::symmetric(8);

Outcome figure1() {
    Outcome o;
    check_named(o, verify_figures(kWindow), "figure1.point_cones");
    int mismatches = 0;
    for (int a = -8; a <= 8; ++a)
        for (int p = -8; p <= 8; ++p) {
            const bool expected = (a <= 0 && p >= -a) || (a >= 2 && p <= -a);
            mismatches += pt_basis({a, p}).size() != static_cast<std::size_t>(expected);
        }
    o.require(mismatches == 0, fmt::format("{} mismatches", mismatches));
    return o;
}

Outcome relations() {
    Outcome o;
    const auto u2 = parse(parse_ring_id("motivic"), "u^2");
    o.require(Element{mot_mul(gen(Generator::xi), gen(Generator::mu))} == u2, "xi*mu != u^2");
    const auto theta_over_a = std::get<MotElem>(parse(parse_ring_id("motivic"), "theta/a"));
    o.require(mot_mul(mot_mul(theta_over_a, gen(Generator::xi)), gen(Generator::mu)).is_zero(), "(theta/a)*xi*mu != 0");
    o.require(mot_mul(theta_over_a, mot_mul(gen(Generator::xi), gen(Generator::mu))).is_zero(),
              "(theta/a)*(xi*mu) != 0");
    return o;
}

Outcome region_theorem() {
    Outcome o;
    check_named(o, verify_figures(kWindow), "motivic.region_prediction");
    int mismatches = 0;
    for (int b = -8; b <= 8; ++b)
        for (int q = -8; q <= 8; ++q)
            for (int a = -8; a <= 8; ++a)
                for (int p = -8; p <= 8; ++p) {
                    std::size_t expected = 0;
                    if (b >= 0 && b + q >= 0)
                        expected = (a <= 0 && p >= -a) || (a >= 2 && p <= -a);
                    else if (b >= 1)
                        expected = 2 <= a && a <= 2 * b + 1;
                    else if (b + q >= 0)
                        expected = pt_basis({a - 2 * b, p + 2 * b}).size();
                    mismatches += mot_basis({{a, p}, {b, q}}).size() != expected;
                }
    o.require(mismatches == 0, fmt::format("{} mismatches", mismatches));
    return o;
}

Outcome vanishing() {
    Outcome o;
    suite_passes(o, verify_vanishing(kWindow));
    for (int a = -8; a <= 8; ++a)
        for (int p = -8; p <= 8; ++p) {
            o.require(mot_basis({{a, p}, {-1, -1}}).empty(), "weight (-1,-1) not empty");
            o.require(ec2mot_basis({{a, p}, {1, -2}}).empty(), "EC2 weight (1,-2) not empty");
            for (int b = -8; b <= 0; ++b)
                for (int q = -8; q <= 8; ++q)
                    o.require(tildemot_basis({{a, p}, {b, q}}).empty(), "tilde weight with b <= 0 not empty");
        }
    o.require(mot_basis({{4, 0}, {1, 0}}).empty(), "(4,0,1,0) not empty");
    return o;
}

Outcome exactness() {
    Outcome o;
    suite_passes(o, verify_exactness(kWindow));
    return o;
}

Outcome cross_checks() {
    Outcome o;
    auto reduced_bc2 = [](int a, int b) { return bc2_dim(a, b) - ((a == 0 && b >= 0) ? 1 : 0); };
    for (int a = -6; a <= 10; ++a)
        for (int b = -6; b <= 10; ++b) {
            const auto d = integral_bidegree(a, b);
            o.require(static_cast<int>(tildemot_basis(d).size()) == reduced_bc2(a - 1, b),
                      fmt::format("tilde = reduced BC2 at ({}, {})", a, b));
            o.require(static_cast<int>(ec2mot_basis(d).size()) == bc2_dim(a, b), fmt::format("EC2 = BC2 at ({}, {})", a, b));
        }
    o.require(tildemot_basis(integral_bidegree(1, 1)).empty(), "dim (1,1) != 0");
    o.require(tildemot_basis(integral_bidegree(2, 1)).size() == 1, "dim (2,1) != 1");
    suite_passes(o, verify_example_p1());
    return o;
}

Outcome realization() {
    Outcome o;
    suite_passes(o, verify_realization(kWindow));
    return o;
}

Outcome ring_axioms() {
    Outcome o;
    const auto r = verify_ring_axioms(1, 1000);
    suite_passes(o, r);
    check_named(o, r, "motivic.confluence_xi_mu");
    check_named(o, r, "bc2.confluence_e1_squared");
    for (const auto* ring : {"pt", "motivic", "ec2mot", "bc2"}) {
        check_named(o, r, fmt::format("{}.commutative", ring));
        check_named(o, r, fmt::format("{}.associative", ring));
        check_named(o, r, fmt::format("{}.distributive", ring));
    }
    return o;
}

Outcome parser() {
    Outcome o;
    Sampler rnd(2024, 6);
    for (const auto* name :
         {"pt", "ec2top", "tildetop", "b1", "b2", "motivic", "ec2mot", "tildemot", "bc2", "cfield", "topbc2"}) {
        const auto ring = parse_ring_id(name);
        for (int k = 0; k < 1000; ++k) {
            const Element x = rnd.element(ring, 4);
            const auto text = print_canonical(ring, x);
            o.require(parse(ring, text) == x, fmt::format("round trip failed in {} on '{}'", name, text));
        }
    }
    auto rejects = [&](const char* ring, const char* src, const std::string& needle) {
        try {
            parse(parse_ring_id(ring), src);
            o.require(false, fmt::format("'{}' accepted in {}", src, ring));
        } catch (const std::exception& e) {
            o.require(std::string(e.what()).find(needle) != std::string::npos,
                      fmt::format("'{}' rejected with '{}'", src, e.what()));
        }
    };
    rejects("b1", "theta*u^-3", "n > 2i-1 in B_i");
    rejects("pt", "theta^2", "theta exponent must be 0 or 1");
    rejects("pt", "a^-1", "negative a or u exponent requires theta");
    rejects("pt", "a*+u", "syntax error at position 2");
    return o;
}

Outcome mutation_sensitivity() {
    Outcome o;
    for (const char* exe : {C2MOT_MUTANT_1, C2MOT_MUTANT_2, C2MOT_MUTANT_3}) {
        const std::string cmd = fmt::format("\"{}\" verify all --window 8 --seed 1 --no-report > /dev/null 2>&1", exe);
        const int status = std::system(cmd.c_str());
        const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        o.require(code == 3, fmt::format("{} exited with {}", exe, code));
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Figure-1 two-cone pattern of the point ring", figure1},
        {"relations xi*mu = u^2 and (theta/a)*xi*mu = 0", relations},
        {"region theorem over every weight in [-8,8]^2", region_theorem},
        {"vanishing regions", vanishing},
        {"isotropy sequences: middle exactness and four-term dimensions", exactness},
        {"cross-checks with BC2 and the P^1 groups", cross_checks},
        {"Betti realization isomorphisms and images", realization},
        {"ring axioms and normal-form confluence", ring_axioms},
        {"parser round trip and documented rejections", parser},
        {"mutation sensitivity of verify all", mutation_sensitivity},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = e.what();
        }
        failed += !o.pass;
        std::cout << fmt::format("criterion {:>2}: {} - {}{}", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first,
                                 o.pass ? "" : " (" + o.note + ")")
                  << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
