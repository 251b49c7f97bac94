#include "c2mot/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <fmt/format.h>

#include "c2mot/atoms.hpp"
#include "c2mot/expr.hpp"
#include "c2mot/linalg.hpp"
#include "c2mot/motivic.hpp"
#include "c2mot/point.hpp"
#include "c2mot/realization.hpp"
#include "c2mot/sample.hpp"

namespace c2mot {

Window Window::symmetric(int n) { return {-n, n, -n, n, -n, n, -n, n}; }

void Window::validate() const {
    if (a_min > a_max || p_min > p_max || b_min > b_max || q_min > q_max)
        throw std::invalid_argument("window has an axis with min > max");
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass(); }));
}

void Report::add(std::string name, std::string location, std::string expected, std::string actual) {
    checks.push_back({std::move(name), std::move(location), std::move(expected), std::move(actual)});
}

namespace {

// ------------------------------------------------------------------ helpers

// Tallies many cell comparisons into one summary check, keeping the first few
// disagreements as individual failing checks.
class Scan {
public:
    Scan(Report& report, std::string name, std::string scope)
        : report_(report), name_(std::move(name)), scope_(std::move(scope)) {}
    Scan(const Scan&) = delete;
    Scan& operator=(const Scan&) = delete;
    ~Scan() {
        report_.add(name_, scope_, fmt::format("{} of {} agree", total_, total_),
                    fmt::format("{} of {} agree", agree_, total_));
        for (auto& c : details_) report_.checks.push_back(std::move(c));
    }

    void compare(const std::string& location, const std::string& expected, const std::string& actual) {
        ++total_;
        if (expected == actual) {
            ++agree_;
        } else if (details_.size() < kMaxDetails) {
            details_.push_back({name_, location, expected, actual});
        }
    }
    void compare(const std::string& location, std::size_t expected, std::size_t actual) {
        compare(location, std::to_string(expected), std::to_string(actual));
    }
    void require(const std::string& location, bool ok, const std::string& what) {
        compare(location, what, ok ? what : "violated");
    }

private:
    static constexpr std::size_t kMaxDetails = 5;
    Report& report_;
    std::string name_;
    std::string scope_;
    std::size_t total_ = 0;
    std::size_t agree_ = 0;
    std::vector<Check> details_;
};

std::string deg_loc(int a, int p) { return fmt::format("deg={}", to_string(RO2Degree{a, p})); }
std::string mot_loc(const MotDegree& d) {
    return fmt::format("deg={},wt={}", to_string(d.deg), to_string(d.wt));
}
std::string scope(const Window& w) {
    return fmt::format("a[{},{}] p[{},{}] b[{},{}] q[{},{}]", w.a_min, w.a_max, w.p_min, w.p_max, w.b_min, w.b_max,
                       w.q_min, w.q_max);
}
std::string top_scope(const Window& w) {
    return fmt::format("a[{},{}] p[{},{}]", w.a_min, w.a_max, w.p_min, w.p_max);
}

template <class F>
void for_degrees(const Window& w, F&& f) {
    for (int a = w.a_min; a <= w.a_max; ++a)
        for (int p = w.p_min; p <= w.p_max; ++p) f(a, p);
}

template <class F>
void for_weights(const Window& w, F&& f) {
    for (int b = w.b_min; b <= w.b_max; ++b)
        for (int q = w.q_min; q <= w.q_max; ++q) f(b, q);
}

template <class F>
void for_all(const Window& w, F&& f) {
    for_weights(w, [&](int b, int q) { for_degrees(w, [&](int a, int p) { f(MotDegree{{a, p}, {b, q}}); }); });
}

// Closed-form predictions, written directly from the cone descriptions.
bool point_cone(int a, int p) { return (a <= 0 && p >= -a) || (a >= 2 && p <= -a); }
bool ec2top_cone(int a, int p) { return p >= -a; }
bool block_columns(int a, int i) { return i >= 1 && a >= 2 && a <= 2 * i + 1; }

std::size_t predicted_motivic(int a, int p, int b, int q) {
    if (b >= 0 && b + q >= 0) return point_cone(a, p);
    if (b >= 1 && b + q < 0) return block_columns(a, b);
    if (b < 0 && b + q >= 0) return point_cone(a - 2 * b, p + 2 * b);
    return 0;
}

std::size_t predicted_ec2mot(int a, int p, int b, int q) {
    if (b + q < 0) return 0;
    return point_cone(a - 2 * b, p + 2 * b);
}

MotDegree mdeg(const PtMono& x) { return {degree(x), {}}; }
MotDegree mdeg(const EC2TopMono& x) { return {degree(x), {}}; }
MotDegree mdeg(const TildeTopMono& x) { return {degree(x), {}}; }
MotDegree mdeg(const TopBC2Mono& x) { return integral_bidegree(x.k, 0); }
template <class M>
MotDegree mdeg(const M& x) {
    return degree(x);
}

template <class M>
std::string show(const F2Sum<M>& x) {
    return print_canonical(Element{x});
}
std::string show(const BElem& x) { return fmt::format("B{}:{}", x.index(), print_canonical(Element{x})); }

template <class M>
F2Sum<M> single(const M& m) {
    F2Sum<M> out;
    out.toggle(m);
    return out;
}

// Bijectivity of a map between two bases given as a matrix.
std::string shape(const F2Matrix& m) {
    if (m.rows() == m.cols() && m.rank() == m.cols()) return "bijective";
    return fmt::format("rank {} from {} to {}", m.rank(), m.cols(), m.rows());
}

std::vector<F2Vector> columns(const F2Matrix& m) {
    std::vector<F2Vector> out;
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
    return out;
}

// Kernel vectors of `m` pushed into coordinates of the middle basis.
std::vector<F2Vector> kernel_vectors(const F2Matrix& m) { return m.kernel(); }

// Degree reported by a monomial against the sum of generator degrees.
template <class M>
bool degree_consistent(const M& m) {
    if constexpr (std::is_same_v<M, TopBC2Mono>)
        return true;
    else
        return mdeg(m) == degree_from_powers(powers(m));
}

// Integral degrees carry no sigma part; BC2 and C live there.
template <class M>
bool integral_consistent(const M& m) {
    return mdeg(m) == degree_from_powers(powers(m));
}

// ------------------------------------------------------------------ well-formedness

bool well_formed(const PtMono& x) { return x.m >= 0 && x.n >= 0; }
bool well_formed(const EC2TopMono& x) { return x.m >= 0; }
bool well_formed(const TildeTopMono& x) { return x.n >= 0; }
bool well_formed(const TopBC2Mono& x) { return x.k >= 0; }
bool well_formed(const FreeMono& x) { return well_formed(x.x) && x.e >= 0 && x.f >= 0 && x.g >= 0 && is_normal(x); }
bool well_formed(const TorMono& x) { return is_valid(x); }
bool well_formed(const MotMono& x) {
    return std::visit([](const auto& m) { return well_formed(m); }, x);
}
bool well_formed(const EC2MotMono& x) { return well_formed(x.x) && x.f >= 0; }
bool well_formed(const TildeMotMono& x) { return is_valid(x); }
bool well_formed(const BC2Mono& x) { return x.k >= 0 && (x.eps == 0 || x.eps == 1) && x.m2 >= 0; }
bool well_formed(const CFieldMono& x) { return x.k >= 0; }

template <class M>
bool all_well_formed(const F2Sum<M>& x) {
    return std::all_of(x.begin(), x.end(), [](const M& m) { return well_formed(m); });
}

}  // namespace

// ====================================================================== figures

Report verify_figures(const Window& w) {
    w.validate();
    Report r{"figures", {}};
    {
        Scan s(r, "figure1.point_cones", top_scope(w));
        for_degrees(w, [&](int a, int p) { s.compare(deg_loc(a, p), point_cone(a, p), pt_basis({a, p}).size()); });
    }
    {
        Scan s(r, "figure2.ec2_panel", top_scope(w));
        for_degrees(w, [&](int a, int p) { s.compare(deg_loc(a, p), ec2top_cone(a, p), ec2top_basis({a, p}).size()); });
    }
    {
        Scan s(r, "figure2.tilde_panel", top_scope(w));
        for_degrees(w, [&](int a, int p) { s.compare(deg_loc(a, p), a >= 2, tildetop_basis({a, p}).size()); });
    }
    for (int i = 1; i <= std::max(3, w.b_max); ++i) {
        Scan s(r, fmt::format("figure2.block_panel.B{}", i), top_scope(w));
        for_degrees(w, [&](int a, int p) { s.compare(deg_loc(a, p), block_columns(a, i), b_basis(i, {a, p}).size()); });
    }
    {
        Scan s(r, "weight_plane.classify", fmt::format("b[{},{}] q[{},{}]", w.b_min, w.b_max, w.q_min, w.q_max));
        for_weights(w, [&](int b, int q) {
            std::string expected = "0";
            if (b >= 0 && b + q >= 0) expected = "M";
            else if (b >= 1) expected = fmt::format("B{}", b);
            else if (b + q >= 0) expected = "E";
            s.compare(fmt::format("wt={}", to_string(RO2Degree{b, q})), expected, region_label(classify_weight(b, q)));
        });
    }
    {
        Scan s(r, "motivic.region_prediction", scope(w));
        Scan unique(r, "motivic.dimension_at_most_one", scope(w));
        for_all(w, [&](const MotDegree& d) {
            const auto basis = mot_basis(d);
            s.compare(mot_loc(d), predicted_motivic(d.deg.a, d.deg.p, d.wt.a, d.wt.p), basis.size());
            unique.require(mot_loc(d), basis.size() <= 1, "dim <= 1");
        });
    }
    {
        Scan s(r, "ec2mot.weight_plane", scope(w));
        for_all(w, [&](const MotDegree& d) {
            s.compare(mot_loc(d), predicted_ec2mot(d.deg.a, d.deg.p, d.wt.a, d.wt.p), ec2mot_basis(d).size());
        });
    }
    {
        Scan s(r, "tildemot.weight_plane", scope(w));
        for_all(w, [&](const MotDegree& d) {
            s.compare(mot_loc(d), block_columns(d.deg.a, d.wt.a), tildemot_basis(d).size());
        });
    }
    {
        // Weight b+q >= 0: tau_s is a bijection into weight + sigma.
        Scan s(r, "ec2mot.tau_s_periodicity", scope(w));
        const auto tau_s = single(EC2MotMono{PtMono::one(), 0, 1});
        for_all(w, [&](const MotDegree& d) {
            if (d.wt.a + d.wt.p < 0) return;
            const MotDegree shifted{d.deg, d.wt + RO2Degree{0, 1}};
            bool closed = true;
            const auto m = matrix_of(ec2mot_basis(d), ec2mot_basis(shifted),
                                     [&](const EC2MotMono& x) { return ec2mot_mul(tau_s, single(x)); }, &closed);
            s.compare(mot_loc(d), "bijective", closed ? shape(m) : "leaves the target degree");
        });
    }
    {
        Scan s(r, "ec2mot.xi_periodicity", scope(w));
        const auto xi = single(EC2MotMono{PtMono::one(), 1, 0});
        const MotDegree step = generator_degree(Generator::xi);
        for_all(w, [&](const MotDegree& d) {
            bool closed = true;
            const auto m = matrix_of(ec2mot_basis(d), ec2mot_basis(d + step),
                                     [&](const EC2MotMono& x) { return ec2mot_mul(xi, single(x)); }, &closed);
            s.compare(mot_loc(d), "bijective", closed ? shape(m) : "leaves the target degree");
        });
    }
    {
        Scan s(r, "degree.generator_sum", scope(w));
        auto check_all = [&](const std::string& loc, const auto& basis, const MotDegree& d) {
            for (const auto& m : basis) {
                s.require(loc, degree_consistent(m), "sum of generator degrees");
                s.require(loc, mdeg(m) == d, "reported degree");
            }
        };
        for_degrees(w, [&](int a, int p) {
            const MotDegree d{{a, p}, {}};
            check_all(deg_loc(a, p), pt_basis(d.deg), d);
            check_all(deg_loc(a, p), ec2top_basis(d.deg), d);
            check_all(deg_loc(a, p), tildetop_basis(d.deg), d);
        });
        for_all(w, [&](const MotDegree& d) {
            check_all(mot_loc(d), mot_basis(d), d);
            check_all(mot_loc(d), ec2mot_basis(d), d);
            check_all(mot_loc(d), tildemot_basis(d), d);
        });
        for (int a = w.a_min; a <= w.a_max; ++a)
            for (int b = w.b_min; b <= w.b_max; ++b)
                for (const auto& m : bc2_basis(a, b)) s.require(mot_loc(integral_bidegree(a, b)), integral_consistent(m), "sum of generator degrees");
    }
    {
        // H^{a,b}(EC2) agrees with H^{a,b}(BC2) in integral bidegrees.
        Scan s(r, "ec2mot.integral_equals_bc2", fmt::format("a[{},{}] b[{},{}]", w.a_min, w.a_max, w.b_min, w.b_max));
        for (int a = w.a_min; a <= w.a_max; ++a)
            for (int b = w.b_min; b <= w.b_max; ++b) {
                const auto d = integral_bidegree(a, b);
                s.compare(mot_loc(d), static_cast<std::size_t>(bc2_dim(a, b)), ec2mot_basis(d).size());
            }
    }
    {
        Scan s(r, "bc2.dimension", fmt::format("a[{},{}] b[{},{}]", w.a_min, w.a_max, w.b_min, w.b_max));
        for (int a = w.a_min; a <= w.a_max; ++a)
            for (int b = w.b_min; b <= w.b_max; ++b)
                s.compare(mot_loc(integral_bidegree(a, b)), 0 <= a && a <= 2 * b, static_cast<std::size_t>(bc2_dim(a, b)));
    }
    return r;
}

// ====================================================================== vanishing

Report verify_vanishing(const Window& w) {
    w.validate();
    Report r{"vanishing", {}};
    Scan negative_weights(r, "motivic.zero_when_b_and_b_plus_q_negative", scope(w));
    Scan above_diagonal(r, "motivic.zero_when_a_ge_2b_plus_2_and_p_ge_2q", scope(w));
    Scan tilde_zero(r, "tildemot.zero_when_b_nonpositive", scope(w));
    Scan ec2_zero(r, "ec2mot.zero_when_b_plus_q_negative", scope(w));
    for_all(w, [&](const MotDegree& d) {
        const int a = d.deg.a, p = d.deg.p, b = d.wt.a, q = d.wt.p;
        if (b < 0 && b + q < 0) negative_weights.compare(mot_loc(d), 0, mot_basis(d).size());
        if (a >= 2 * b + 2 && p >= 2 * q) above_diagonal.compare(mot_loc(d), 0, mot_basis(d).size());
        if (b <= 0) tilde_zero.compare(mot_loc(d), 0, tildemot_basis(d).size());
        if (b + q < 0) ec2_zero.compare(mot_loc(d), 0, ec2mot_basis(d).size());
    });
    Scan bc2(r, "bc2.a_above_2b", fmt::format("a[{},{}] b[{},{}]", w.a_min, w.a_max, w.b_min, w.b_max));
    for (int a = w.a_min; a <= w.a_max; ++a)
        for (int b = w.b_min; b <= w.b_max; ++b)
            if (a > 2 * b) bc2.compare(mot_loc(integral_bidegree(a, b)), 0, bc2_basis(a, b).size());
    return r;
}

// ====================================================================== exactness

namespace {

// ker(out) == im(in) inside the middle basis.
template <class S, class Mid, class T, class In, class Out>
std::string middle_exactness(const std::vector<S>& src, const std::vector<Mid>& mid, const std::vector<T>& tgt, In&& in,
                             Out&& out) {
    bool closed_in = true, closed_out = true;
    const auto m_in = matrix_of(src, mid, in, &closed_in);
    const auto m_out = matrix_of(mid, tgt, out, &closed_out);
    if (!closed_in) return "incoming map leaves the degree";
    if (!closed_out) return "outgoing map leaves the degree";
    const auto ker = kernel_vectors(m_out);
    const auto im = columns(m_in);
    if (same_span(ker, im, mid.size())) return "ker = im";
    return fmt::format("dim ker {} vs dim im {}", rank_of(ker, mid.size()), rank_of(im, mid.size()));
}

template <class S, class T, class F>
std::size_t map_rank(const std::vector<S>& src, const std::vector<T>& tgt, F&& f) {
    return matrix_of(src, tgt, f).rank();
}

}  // namespace

Report verify_exactness(const Window& w) {
    w.validate();
    Report r{"exactness", {}};
    auto tilde_pt = [](const TildeTopMono& t) { return tilde_to_pt(single(t)); };
    auto loc_map = [](const PtMono& x) { return localize(single(x)); };
    auto tilde_mot = [](const TildeMotMono& t) { return tilde_to_mot(single(t)); };
    auto restrict_map = [](const MotMono& x) { return restrict_to_ec2(single(x)); };
    {
        Scan s(r, "topological.middle", top_scope(w));
        for_degrees(w, [&](int a, int p) {
            const RO2Degree d{a, p};
            s.compare(deg_loc(a, p), "ker = im",
                      middle_exactness(tildetop_basis(d), pt_basis(d), ec2top_basis(d), tilde_pt, loc_map));
        });
    }
    {
        Scan s(r, "topological.kernel_is_negative_cone", top_scope(w));
        for_degrees(w, [&](int a, int p) {
            const auto basis = pt_basis({a, p});
            const auto m = matrix_of(basis, ec2top_basis({a, p}), loc_map);
            std::size_t neg = 0;
            for (const auto& x : basis) neg += x.is_neg();
            s.compare(deg_loc(a, p), neg, basis.size() - m.rank());
        });
    }
    {
        Scan s(r, "topological.four_term", top_scope(w));
        for_degrees(w, [&](int a, int p) {
            const RO2Degree d{a, p}, d1{a + 1, p};
            const auto ec2 = ec2top_basis(d);
            const std::size_t coker = ec2.size() - map_rank(pt_basis(d), ec2, loc_map);
            const auto src = tildetop_basis(d1);
            const std::size_t ker = src.size() - map_rank(src, pt_basis(d1), tilde_pt);
            s.compare(deg_loc(a, p), coker, ker);
        });
    }
    {
        Scan s(r, "blocks.image_in_point", top_scope(w));
        for (int i = 1; i <= std::max(3, w.b_max); ++i)
            for_degrees(w, [&](int a, int p) {
                const auto target = pt_basis({a, p});
                std::vector<F2Vector> expected;
                for (std::size_t k = 0; k < target.size(); ++k)
                    if (target[k].is_neg() && target[k].n <= 2 * i - 1) {
                        F2Vector v(target.size(), 0);
                        v[k] = 1;
                        expected.push_back(v);
                    }
                const auto m = matrix_of(b_basis(i, {a, p}), target,
                                         [&](const TildeTopMono& t) { return b_to_pt(BElem(i, single(t))); });
                s.compare(fmt::format("B{} {}", i, deg_loc(a, p)), "equal",
                          same_span(expected, columns(m), target.size()) ? "equal" : "different");
            });
    }
    {
        Scan s(r, "motivic.middle", scope(w));
        for_all(w, [&](const MotDegree& d) {
            s.compare(mot_loc(d), "ker = im",
                      middle_exactness(tildemot_basis(d), mot_basis(d), ec2mot_basis(d), tilde_mot, restrict_map));
        });
    }
    {
        Scan s(r, "motivic.four_term", scope(w));
        for_all(w, [&](const MotDegree& d) {
            const MotDegree d1{d.deg + RO2Degree{1, 0}, d.wt};
            const auto ec2 = ec2mot_basis(d);
            const std::size_t coker = ec2.size() - map_rank(mot_basis(d), ec2, restrict_map);
            const auto src = tildemot_basis(d1);
            const std::size_t ker = src.size() - map_rank(src, mot_basis(d1), tilde_mot);
            s.compare(mot_loc(d), coker, ker);
        });
    }
    return r;
}

// ====================================================================== ring axioms

namespace {

template <class M, class Draw, class Mul>
void ring_axioms(Report& r, const std::string& ring, int trials, Sampler& rnd, Draw draw, Mul mul, const F2Sum<M>& one) {
    const std::string where = fmt::format("{} x {} trials", ring, trials);
    Scan comm(r, ring + ".commutative", where);
    Scan assoc(r, ring + ".associative", where);
    Scan distrib(r, ring + ".distributive", where);
    Scan unit(r, ring + ".unit", where);
    Scan additive(r, ring + ".degree_additive", where);
    Scan normal(r, ring + ".normal_form", where);
    auto sum = [&] {
        F2Sum<M> s;
        const int terms = rnd.uniform(0, 3);
        for (int k = 0; k < terms; ++k) s.toggle(draw());
        return s;
    };
    for (int t = 0; t < trials; ++t) {
        const M mx = draw(), my = draw(), mz = draw();
        const auto x = single(mx), y = single(my), z = single(mz);
        const std::string loc = fmt::format("{} ; {} ; {}", show(x), show(y), show(z));
        const auto xy = mul(x, y);
        comm.compare(loc, show(xy), show(mul(y, x)));
        assoc.compare(loc, show(mul(xy, z)), show(mul(x, mul(y, z))));
        unit.compare(loc, show(x), show(mul(x, one)));
        for (const auto& m : xy) additive.compare(loc, to_string(mdeg(mx) + mdeg(my)), to_string(mdeg(m)));
        normal.require(loc, all_well_formed(xy), "normal form");
        const auto sx = sum(), sy = sum(), sz = sum();
        distrib.compare(fmt::format("{} ; {} ; {}", show(sx), show(sy), show(sz)), show(mul(sx, sy + sz)),
                        show(mul(sx, sy) + mul(sx, sz)));
    }
}

MotElem mot_of(const FreeMono& f) { return single(MotMono{f}); }

}  // namespace

Report verify_ring_axioms(std::uint64_t seed, int trials) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    Report r{"ring", {}};
    Sampler rnd(seed, 6);
    Sampler wide(seed ^ 0x9e3779b97f4a7c15ULL, 8);

    ring_axioms<PtMono>(r, "pt", trials, wide, [&] { return wide.pt(); },
                        [](const PtElem& x, const PtElem& y) { return pt_mul(x, y); }, single(PtMono::one()));
    ring_axioms<EC2TopMono>(r, "ec2top", trials, wide, [&] { return wide.ec2top(); },
                            [](const EC2TopElem& x, const EC2TopElem& y) { return ec2top_mul(x, y); },
                            single(EC2TopMono{0, 0}));
    ring_axioms<MotMono>(r, "motivic", trials, rnd, [&] { return rnd.motivic(); },
                         [](const MotElem& x, const MotElem& y) { return mot_mul(x, y); }, mot_one());
    ring_axioms<EC2MotMono>(r, "ec2mot", trials, rnd, [&] { return rnd.ec2mot(); },
                            [](const EC2MotElem& x, const EC2MotElem& y) { return ec2mot_mul(x, y); },
                            single(EC2MotMono{PtMono::one(), 0, 0}));
    ring_axioms<BC2Mono>(r, "bc2", trials, rnd, [&] { return rnd.bc2(); },
                         [](const BC2Elem& x, const BC2Elem& y) { return bc2_mul(x, y); }, single(BC2Mono{}));
    ring_axioms<CFieldMono>(r, "cfield", trials, rnd, [&] { return rnd.cfield(); },
                            [](const CFieldElem& x, const CFieldElem& y) { return cfield_mul(x, y); },
                            single(CFieldMono{}));
    ring_axioms<TopBC2Mono>(r, "topbc2", trials, rnd, [&] { return rnd.topbc2(); },
                            [](const TopBC2Elem& x, const TopBC2Elem& y) { return topbc2_mul(x, y); },
                            single(TopBC2Mono{}));

    const std::string where = fmt::format("{} trials", trials);
    {
        // xi*mu -> u^2 reached through every order of multiplying the factors.
        Scan s(r, "motivic.confluence_xi_mu", where);
        const auto xi = mot_generator(Generator::xi), mu = mot_generator(Generator::mu);
        const auto tau_s = mot_generator(Generator::tau_s);
        for (int t = 0; t < trials; ++t) {
            const PtMono x = rnd.pt();
            const int e = rnd.uniform(1, 4), f = rnd.uniform(0, 3), g = rnd.uniform(1, 4);
            std::vector<MotElem> factors{mot_of(FreeMono{x, 0, 0, 0})};
            factors.insert(factors.end(), e, xi);
            factors.insert(factors.end(), g, mu);
            factors.insert(factors.end(), f, tau_s);
            std::shuffle(factors.begin(), factors.end(), rnd.rng());
            MotElem product = mot_one();
            for (const auto& factor : factors) product = mot_mul(product, factor);
            MotElem expected;
            expected.toggle([&]() -> std::optional<MotMono> {
                if (auto n = normalize_free(x, e, f, g)) return MotMono{*n};
                return std::nullopt;
            }());
            s.compare(fmt::format("{} * xi^{} * tau_s^{} * mu^{}", show(single(x)), e, f, g), show(expected),
                      show(product));
        }
    }
    {
        Scan s(r, "bc2.confluence_e1_squared", where);
        const BC2Elem tau = single(BC2Mono{1, 0, 0}), e1 = single(BC2Mono{0, 1, 0}), e2 = single(BC2Mono{0, 0, 1});
        for (int t = 0; t < trials; ++t) {
            const int k = rnd.uniform(0, 3), eps = rnd.uniform(2, 7), m2 = rnd.uniform(0, 3);
            std::vector<BC2Elem> factors;
            factors.insert(factors.end(), k, tau);
            factors.insert(factors.end(), eps, e1);
            factors.insert(factors.end(), m2, e2);
            std::shuffle(factors.begin(), factors.end(), rnd.rng());
            BC2Elem product = single(BC2Mono{});
            for (const auto& factor : factors) product = bc2_mul(product, factor);
            s.compare(fmt::format("tau^{} * e1^{} * e2^{}", k, eps, m2), show(single(bc2_normalize(k, eps, m2))),
                      show(product));
        }
    }
    {
        Scan hom(r, "pt.localize_multiplicative", where);
        Scan lin(r, "pt.tilde_to_pt_linear", where);
        Scan act(r, "pt.action_associative", where);
        for (int t = 0; t < trials; ++t) {
            const auto x = single(wide.pt()), y = single(wide.pt());
            const auto tt = single(wide.tildetop());
            const std::string loc = fmt::format("{} ; {} ; {}", show(x), show(y), show(tt));
            hom.compare(loc, show(ec2top_mul(localize(x), localize(y))), show(localize(pt_mul(x, y))));
            lin.compare(loc, show(pt_mul(x, tilde_to_pt(tt))), show(tilde_to_pt(pt_act_tilde(x, tt))));
            act.compare(loc, show(pt_act_tilde(pt_mul(x, y), tt)), show(pt_act_tilde(x, pt_act_tilde(y, tt))));
        }
    }
    {
        Scan commute(r, "blocks.u2_commutes_with_inclusion", where);
        Scan quot(r, "blocks.quotient_after_inclusion", where);
        for (int t = 0; t < trials; ++t) {
            const int i = rnd.uniform(1, 4);
            const BElem x(i, single(rnd.block(i)));
            const std::string loc = show(x);
            commute.compare(loc, show(b_mul_u2(b_incl(x))), show(b_incl(b_mul_u2(x))));
            quot.compare(loc, show(x), show(b_quot(b_incl(x))));
        }
    }
    {
        Scan act(r, "tildemot.action_associative", where);
        Scan lin(r, "tildemot.tilde_to_mot_linear", where);
        Scan closed(r, "tildemot.action_normal_form", where);
        Scan res(r, "motivic.restrict_multiplicative", where);
        for (int t = 0; t < trials; ++t) {
            const auto x = mot_of(rnd.free()), y = mot_of(rnd.free());
            const auto tt = single(rnd.tildemot());
            const std::string loc = fmt::format("{} ; {} ; {}", show(x), show(y), show(tt));
            const auto xt = tildemot_act(x, tt);
            act.compare(loc, show(tildemot_act(mot_mul(x, y), tt)), show(tildemot_act(x, tildemot_act(y, tt))));
            lin.compare(loc, show(mot_mul(x, tilde_to_mot(tt))), show(tilde_to_mot(xt)));
            closed.require(loc, all_well_formed(xt), "normal form");
            const auto u = single(rnd.motivic()), v = single(rnd.motivic());
            res.compare(fmt::format("{} ; {}", show(u), show(v)), show(ec2mot_mul(restrict_to_ec2(u), restrict_to_ec2(v))),
                        show(restrict_to_ec2(mot_mul(u, v))));
        }
    }
    {
        Scan hom(r, "bc2.to_ec2mot_multiplicative", where);
        Scan inj(r, "bc2.to_ec2mot_injective", where);
        for (int t = 0; t < trials; ++t) {
            const BC2Mono mx = rnd.bc2(), my = rnd.bc2();
            const auto x = single(mx), y = single(my);
            const std::string loc = fmt::format("{} ; {}", show(x), show(y));
            hom.compare(loc, show(ec2mot_mul(bc2_to_ec2mot(x), bc2_to_ec2mot(y))), show(bc2_to_ec2mot(bc2_mul(x, y))));
            inj.compare(loc, mx == my ? "equal" : "distinct",
                        bc2_to_ec2mot(mx) == bc2_to_ec2mot(my) ? "equal" : "distinct");
        }
    }
    return r;
}

// ====================================================================== realization

Report verify_realization(const Window& w) {
    w.validate();
    Report r{"realization", {}};
    auto re_pt = [](const MotMono& x) { return re_point(single(x)); };
    {
        Scan iso(r, "re_point.bijective_weight_zero", top_scope(w));
        for_degrees(w, [&](int a, int p) {
            const MotDegree d{{a, p}, {0, 0}};
            bool closed = true;
            const auto m = matrix_of(mot_basis(d), pt_basis(d.deg), re_pt, &closed);
            iso.compare(mot_loc(d), "bijective", closed ? shape(m) : "leaves the degree");
        });
    }
    {
        Scan cone(r, "re_point.bijective_point_cone", scope(w));
        Scan block(r, "re_point.block_image", scope(w));
        for_all(w, [&](const MotDegree& d) {
            const int b = d.wt.a, q = d.wt.p;
            const auto target = pt_basis(d.deg);
            bool closed = true;
            const auto m = matrix_of(mot_basis(d), target, re_pt, &closed);
            if (b >= 0 && b + q >= 0) cone.compare(mot_loc(d), "bijective", closed ? shape(m) : "leaves the degree");
            if (b >= 1 && b + q < 0) {
                std::vector<F2Vector> expected;
                for (std::size_t k = 0; k < target.size(); ++k)
                    if (target[k].is_neg() && target[k].n <= 2 * b - 1) {
                        F2Vector v(target.size(), 0);
                        v[k] = 1;
                        expected.push_back(v);
                    }
                block.compare(mot_loc(d), "equal",
                              closed && same_span(expected, columns(m), target.size()) ? "equal" : "different");
            }
        });
    }
    {
        Scan iso(r, "re_ec2.bijective_a_le_2b", scope(w));
        Scan zero(r, "re_ec2.zero_a_ge_2b_plus_2", scope(w));
        auto re = [](const EC2MotMono& x) { return re_ec2(single(x)); };
        for_all(w, [&](const MotDegree& d) {
            const int a = d.deg.a, b = d.wt.a, q = d.wt.p;
            if (b + q < 0) return;
            bool closed = true;
            const auto m = matrix_of(ec2mot_basis(d), ec2top_basis(d.deg), re, &closed);
            if (a <= 2 * b) iso.compare(mot_loc(d), "bijective", closed ? shape(m) : "leaves the degree");
            if (a >= 2 * b + 2) zero.compare(mot_loc(d), "0", closed ? std::to_string(m.rank()) : "leaves the degree");
        });
    }
    {
        Scan iso(r, "re_bc2.bijective_a_le_2b", fmt::format("a[{},{}] b[{},{}]", w.a_min, w.a_max, w.b_min, w.b_max));
        for (int a = w.a_min; a <= w.a_max; ++a)
            for (int b = w.b_min; b <= w.b_max; ++b) {
                if (a > 2 * b) continue;
                bool closed = true;
                const auto m = matrix_of(bc2_basis(a, b), topbc2_basis(a),
                                         [](const BC2Mono& x) { return re_bc2(single(x)); }, &closed);
                iso.compare(mot_loc(integral_bidegree(a, b)), "bijective", closed ? shape(m) : "leaves the degree");
            }
    }
    {
        // Multiplicativity against each generator, over every basis monomial of the window.
        Scan mot(r, "re_point.multiplicative", scope(w));
        Scan ec2(r, "re_ec2.multiplicative", scope(w));
        Scan tilde(r, "re_tilde.linear", scope(w));
        const std::vector<Generator> gens{Generator::a,     Generator::u,  Generator::theta,
                                          Generator::xi,    Generator::mu, Generator::tau_s};
        std::vector<EC2MotElem> ec2_gens{single(EC2MotMono{PtMono::pos(1, 0), 0, 0}),
                                         single(EC2MotMono{PtMono::pos(0, 1), 0, 0}),
                                         single(EC2MotMono{PtMono::neg(0, 0), 0, 0}),
                                         single(EC2MotMono{PtMono::one(), 1, 0}),
                                         single(EC2MotMono{PtMono::one(), -1, 0}),
                                         single(EC2MotMono{PtMono::one(), 0, 1})};
        for_all(w, [&](const MotDegree& d) {
            const std::string loc = mot_loc(d);
            for (const auto& x : mot_basis(d)) {
                const auto ex = single(x);
                for (auto g : gens) {
                    const auto eg = mot_generator(g);
                    mot.compare(loc + " * " + std::string(generator_name(g)), show(pt_mul(re_point(eg), re_point(ex))),
                                show(re_point(mot_mul(eg, ex))));
                }
            }
            for (const auto& x : ec2mot_basis(d)) {
                const auto ex = single(x);
                for (const auto& g : ec2_gens)
                    ec2.compare(loc + " * " + show(g), show(ec2top_mul(re_ec2(g), re_ec2(ex))),
                                show(re_ec2(ec2mot_mul(g, ex))));
            }
            for (const auto& x : tildemot_basis(d)) {
                const auto ex = single(x);
                for (auto g : gens) {
                    if (g == Generator::theta) continue;
                    const auto eg = mot_generator(g);
                    tilde.compare(loc + " * " + std::string(generator_name(g)),
                                  show(pt_act_tilde(re_point(eg), re_tilde(ex))), show(re_tilde(tildemot_act(eg, ex))));
                }
            }
        });
        Scan bc2(r, "re_bc2.multiplicative", fmt::format("a[{},{}] b[{},{}]", w.a_min, w.a_max, w.b_min, w.b_max));
        const std::vector<BC2Elem> bc2_gens{single(BC2Mono{1, 0, 0}), single(BC2Mono{0, 1, 0}), single(BC2Mono{0, 0, 1})};
        for (int a = w.a_min; a <= w.a_max; ++a)
            for (int b = w.b_min; b <= w.b_max; ++b)
                for (const auto& x : bc2_basis(a, b))
                    for (const auto& g : bc2_gens) {
                        const auto ex = single(x);
                        bc2.compare(mot_loc(integral_bidegree(a, b)) + " * " + show(g),
                                    show(topbc2_mul(re_bc2(g), re_bc2(ex))), show(re_bc2(bc2_mul(g, ex))));
                    }
    }
    return r;
}

// ====================================================================== P^1 example

Report verify_example_p1() {
    Report r{"p1", {}};
    const RingId tilde{RingId::Kind::tildemot, 0};
    auto dim = [](int a, int b) { return tildemot_basis(integral_bidegree(a, b)).size(); };
    r.add("tildemot.dim", mot_loc(integral_bidegree(1, 1)), "0", std::to_string(dim(1, 1)));
    r.add("tildemot.dim", mot_loc(integral_bidegree(2, 1)), "1", std::to_string(dim(2, 1)));
    const auto basis = basis_at(tilde, integral_bidegree(2, 1));
    r.add("tildemot.basis", mot_loc(integral_bidegree(2, 1)), "theta*a^2*mu*tau_s",
          basis.size() == 1 ? basis.front() : fmt::format("{} elements", basis.size()));
    r.add("tildemot.sum_nonzero", "(1,1) + (2,1)", "nonzero", dim(1, 1) + dim(2, 1) > 0 ? "nonzero" : "zero");
    auto reduced_bc2 = [](int a, int b) {
        const int d = bc2_dim(a, b);
        return static_cast<std::size_t>(a == 0 && b >= 0 ? d - 1 : d);
    };
    r.add("bc2.reduced_dim", mot_loc(integral_bidegree(1, 1)), "1", std::to_string(reduced_bc2(1, 1)));
    {
        Scan s(r, "tildemot.integral_equals_reduced_bc2", "a[-6,10] b[-6,10]");
        for (int a = -6; a <= 10; ++a)
            for (int b = -6; b <= 10; ++b) s.compare(mot_loc(integral_bidegree(a, b)), reduced_bc2(a - 1, b), dim(a, b));
    }
    return r;
}

// ====================================================================== dispatch

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"figures", "vanishing", "exactness", "ring", "realization", "p1"};
    return names;
}

bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

Report run_suite(const std::string& name, const Window& w, std::uint64_t seed, int trials) {
    try {
        if (name == "figures") return verify_figures(w);
        if (name == "vanishing") return verify_vanishing(w);
        if (name == "exactness") return verify_exactness(w);
        if (name == "ring") return verify_ring_axioms(seed, trials);
        if (name == "realization") return verify_realization(w);
        if (name == "p1") return verify_example_p1();
    } catch (const std::exception& e) {
        Report r{name, {}};
        r.add("exception", name, "no exception", e.what());
        return r;
    }
    throw std::invalid_argument(fmt::format("unknown suite '{}'", name));
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"location", c.location},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass()}});
    return {{"suite", r.suite}, {"failures", r.failures()}, {"checks", checks}};
}

nlohmann::json to_json(const std::vector<Report>& reports, const Window& w, std::uint64_t seed, int trials) {
    nlohmann::json suites = nlohmann::json::array();
    std::size_t failures = 0;
    for (const auto& r : reports) {
        suites.push_back(to_json(r));
        failures += r.failures();
    }
    return {{"window",
             {{"a", {w.a_min, w.a_max}}, {"p", {w.p_min, w.p_max}}, {"b", {w.b_min, w.b_max}}, {"q", {w.q_min, w.q_max}}}},
            {"seed", seed},
            {"trials", trials},
            {"failures", failures},
            {"suites", suites}};
}

}  // namespace c2mot
