// One line per acceptance criterion; exits nonzero if any criterion fails.
#include "commands.hpp"

#include "uniflip/cyclotomic.hpp"
#include "uniflip/error.hpp"
#include "uniflip/gamma.hpp"
#include "uniflip/ppoly.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <thread>

using namespace uniflip;

namespace {

const std::vector<std::string> kTypes = {"A1", "B2", "C2", "B3", "C3", "B4", "C4", "D4", "G2", "F4"};

struct Verdict {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

class Engines {
public:
    const PolynomialEngine& operator()(const std::string& t) {
        auto& e = cache_[t];
        if (!e) {
            const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
            e = std::make_unique<PolynomialEngine>(
                TypeContext::load(CartanType::parse(t), UNIFLIP_TEST_DATA_DIR), jobs);
        }
        return *e;
    }

private:
    std::map<std::string, std::unique_ptr<PolynomialEngine>> cache_;
};

Poly u(std::size_t k) { return Poly::monomial(1, k); }

Verdict sign_sweep(Engines& engines, std::size_t& checked, double& seconds) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& t : kTypes) {
        const SignReport r = verify_sign_theorem(engines(t));
        checked += r.checks.size();
        for (const auto& c : r.checks)
            v.require(c.pass, t + " orbit " + std::to_string(c.orbit) + " family " + std::to_string(c.family) +
                                  " m " + std::to_string(c.m) + " z " + std::to_string(c.z));
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(seconds < 600, "sweep took longer than ten minutes");
    return v;
}

Verdict closed_forms(Engines& engines) {
    Verdict v;
    for (const auto& t : kTypes) {
        const auto& e = engines(t);
        v.require(e.P(e.find_family("trivial"), 0, 0, 0).poly == Poly::constant(1), t + " trivial");
        v.require(e.P(e.find_family("sign"), 0, 0, 0).poly == u(e.context().root_system().num_positive()),
                  t + " sign");
    }
    return v;
}

Verdict degrees(Engines& engines, std::size_t& checked) {
    Verdict v;
    for (const auto& t : kTypes)
        for (const auto& c : verify_degrees(engines(t))) {
            ++checked;
            v.require(c.pass, t + " family " + std::to_string(c.family) + " q " + std::to_string(c.q));
        }
    return v;
}

Verdict independence(Engines& engines, std::size_t& orbits, std::size_t& comparisons) {
    Verdict v;
    for (const auto& t : kTypes) {
        const auto& e = engines(t);
        for (std::size_t o = 0; o < e.orbits().size(); ++o) {
            const auto r = independence_check(e, o);
            const bool admits = e.orbits()[o].orbit_size > 1 || e.orbits()[o].rep.wh.order() > 1 ||
                                e.orbits()[o].rep.stabilizer.order() > e.orbits()[o].rep.wh.order();
            v.require(r.skipped == !admits, t + " orbit " + e.orbits()[o].name + " skipped wrongly");
            v.require(r.failures == 0, t + " orbit " + e.orbits()[o].name);
            orbits += !r.skipped;
            comparisons += r.comparisons;
        }
    }
    return v;
}

Verdict coinvariants(Engines& engines) {
    Verdict v;
    for (const auto& t : kTypes) {
        const auto& e = engines(t);
        const auto& ctx = e.context();
        Poly weighted;
        for (std::size_t c = 0; c < ctx.characters().num_chars(); ++c) {
            const Poly& f = ctx.fake_degrees()[c];
            weighted += f * Rational(static_cast<long>(ctx.characters().dim(c)));
            for (const auto& x : f.coeffs()) v.require(x.is_integer() && x.sign() >= 0, t + " fake degree");
        }
        v.require(weighted == length_generating_function(ctx.weyl()), t + " sum of dim * fake degree");
        // Every trace was produced by an exact division; check integrality.
        for (const auto& y : e.orbits())
            for (std::size_t z = 0; z < e.zset(y.id).size(); ++z)
                for (const auto& p : e.traces(y.id, z)) v.require(p.has_integer_coeffs(), t + " trace " + y.name);
    }
    return v;
}

Verdict fourier() {
    Verdict v;
    for (const char* name : {"1", "Z2", "Z2xZ2", "S3", "S4"}) {
        const GammaGroup g = GammaGroup::get(name);
        const FourierMatrix f = fourier_matrix(g);
        v.require(f.is_symmetric(), std::string(name) + " symmetric");
        v.require(f.is_involutive(), std::string(name) + " involutive");
        v.require(f.denominators_divide(g.order()), std::string(name) + " denominators");
    }
    return v;
}

Verdict b2_swap(Engines& engines) {
    Verdict v;
    const auto& b2 = engines("B2");
    const auto& ctx = b2.context();
    const std::size_t fi = ctx.families().family_of[ctx.char_index("(1,1)")];
    const Family& f = ctx.families().families[fi];
    const BangMap& b = b2.bang(fi);
    const std::size_t e11 = f.fourier->index_of(f.gamma->find("1", "1"));
    const std::size_t geps = f.fourier->index_of(f.gamma->find("g", "eps"));
    v.require(f.members.size() == 3, "B2 family size");
    v.require(b.image[e11] == geps && b.image[geps] == e11, "(1,1) <-> (g,eps)");
    std::string ambiguous;
    for (const char* t : {"B2", "G2"}) {
        const auto& e = engines(t);
        const auto& fams = e.context().families().families;
        for (std::size_t i = 0; i < fams.size(); ++i)
            for (std::size_t m = 0; m < fams[i].size_M(); ++m)
                if (e.bang(i).candidates[m] != 1)
                    ambiguous += std::string(ambiguous.empty() ? "" : ", ") + t + " " + fams[i].m_name(m) + " has " +
                                 std::to_string(e.bang(i).candidates[m]) + " solutions";
    }
    v.require(ambiguous.empty(), ambiguous);
    return v;
}

Verdict g2_a2() {
    Verdict v;
    cli::RunConfig cfg;
    cfg.command = cli::Command::Subsystems;
    cfg.type = "G2";
    cfg.data_dir = UNIFLIP_TEST_DATA_DIR;
    const cli::Report r = cli::build_report(cfg);
    bool found = false;
    for (const auto& row : r.rows)
        if (row["name"] == "A2(long)") {
            found = true;
            v.require(row["Z"] == 2, "A2(long) does not have two classes");
            v.require(row["bang"] == "0<->1", "A2(long) classes not swapped");
        }
    v.require(found, "no A2(long) row");
    v.require(r.rows.size() == 6, "G2 does not have six orbits");
    return v;
}

Verdict order_polys(Engines& engines, std::size_t& subsystems) {
    Verdict v;
    for (const auto& t : kTypes) {
        const auto& e = engines(t);
        for (const auto& y : e.orbits()) {
            Poly split = u(y.rep.num_positive());
            for (const auto& f : y.rep.type.factors())
                for (int d : degrees_of(f)) split *= u(static_cast<std::size_t>(d)) - Poly::constant(1);
            v.require(group_order_poly(e.context().weyl(), y.rep, 0).poly == split, t + " " + y.name);
            ++subsystems;
        }
    }
    const auto& b2 = engines("B2");
    const std::size_t aa = b2.find_orbit("A1(long)xA1(long)");
    const std::uint32_t swap = b2.zset(aa).classes.at(1).lift;
    v.require(group_order_poly(b2.context().weyl(), b2.orbits()[aa].rep, swap).poly ==
                  u(2) * (u(4) - Poly::constant(1)),
              "A1xA1 swap");
    const Poly one_minus = Poly{Rational(-1), Rational(1)};
    const Poly one_plus = Poly{Rational(1), Rational(1)};
    v.require(torus_order(IntMatrix::identity(4)).poly == poly_pow(one_minus, 4), "identity");
    IntMatrix minus(4, 4);
    for (std::size_t i = 0; i < 4; ++i) minus(i, i) = -1;
    v.require(torus_order(minus).poly == poly_pow(one_plus, 4) && torus_order(minus).eps == 1, "-1");
    const WeylGroup& w = b2.context().weyl();
    v.require(torus_order(w.matrix(w.word({0, 1}))).poly == Poly{Rational(1), Rational(0), Rational(1)},
              "B2 Coxeter element");
    return v;
}

Verdict determinism() {
    Verdict v;
    for (const char* t : {"B2", "G2", "D4"})
        for (const char* which : {"theorem112", "independence", "degrees", "selftest"})
            for (auto f : {cli::Format::Table, cli::Format::Json, cli::Format::Csv}) {
                cli::RunConfig cfg;
                cfg.command = cli::Command::Verify;
                cfg.which = which;
                cfg.type = t;
                cfg.format = f;
                cfg.data_dir = UNIFLIP_TEST_DATA_DIR;
                std::string first;
                for (unsigned jobs : {1u, 4u, 1u}) {
                    cfg.jobs = jobs;
                    std::ostringstream out, err;
                    cli::run(cfg, out, err);
                    if (first.empty()) first = out.str();
                    v.require(!first.empty() && out.str() == first, std::string(t) + " " + which);
                }
            }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    // --known-failure N: criterion N is reported as usual but does not set the exit status.
    std::set<int> known;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--known-failure") known.insert(std::stoi(argv[++i]));
    Engines engines;
    int failed = 0;
    auto report = [&](int n, const std::string& what, const Verdict& v) {
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
        if (!v.pass) std::cout << " [first failure: " << v.detail << "]";
        if (!v.pass && known.count(n)) std::cout << " (known failure)";
        std::cout << std::endl;
        failed += !v.pass && !known.count(n);
    };
    auto guarded = [&](int n, auto&& what, auto&& fn) {
        try {
            const Verdict v = fn();
            report(n, what(), v);
        } catch (const std::exception& e) {
            Verdict v;
            v.require(false, e.what());
            report(n, what(), v);
        }
    };

    std::size_t sign_checks = 0, degree_checks = 0, indep_orbits = 0, indep_cmp = 0, subsystems = 0;
    double seconds = 0;
    guarded(1, [&] {
        std::ostringstream s;
        s << "sign identity over A1 B2 C2 B3 C3 B4 C4 D4 G2 F4 (" << sign_checks << " tuples, " << static_cast<int>(seconds)
          << "s)";
        return s.str();
    }, [&] { return sign_sweep(engines, sign_checks, seconds); });
    guarded(2, [] { return std::string("full system: P = 1 for the trivial family, u^N for the sign family"); },
            [&] { return closed_forms(engines); });
    guarded(3, [&] {
        return "full-system values positive integers at q in {2,3,4,5,7,8,9,16} (" + std::to_string(degree_checks) +
               " values)";
    }, [&] { return degrees(engines, degree_checks); });
    guarded(4, [&] {
        return "representative independence (" + std::to_string(indep_orbits) + " orbits, " +
               std::to_string(indep_cmp) + " comparisons)";
    }, [&] { return independence(engines, indep_orbits, indep_cmp); });
    guarded(5, [] { return std::string("fake degrees and integral exact graded traces"); },
            [&] { return coinvariants(engines); });
    guarded(6, [] { return std::string("Fourier matrices for 1, Z2, Z2xZ2, S3, S4"); }, [] { return fourier(); });
    guarded(7, [] { return std::string("B2 swap (1,1) <-> (g,eps); unique m! in B2 and G2"); },
            [&] { return b2_swap(engines); });
    guarded(8, [] { return std::string("G2 subsystem listing: A2(long) has two classes swapped by !"); },
            [] { return g2_a2(); });
    guarded(9, [&] {
        return "order polynomials (" + std::to_string(subsystems) + " split subsystems, A1xA1 swap, torus orders)";
    }, [&] { return order_polys(engines, subsystems); });
    guarded(10, [] { return std::string("repeated verify runs are byte-identical"); }, [] { return determinism(); });
    return failed ? 1 : 0;
}
