#include "uniflip/ppoly.hpp"

#include "uniflip/cyclotomic.hpp"
#include "uniflip/error.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace uniflip {

std::vector<Poly> member_traces(const TypeContext& ctx, const Restriction& vh, const WeylSubgroup& wh,
                                std::uint32_t lift) {
    const CosetSeries cs(ctx.weyl(), lift, vh, wh);
    std::vector<Poly> out;
    for (std::size_t chi = 0; chi < ctx.characters().num_chars(); ++chi)
        out.push_back(cs.tensor_invariant(ctx.characters(), chi));
    return out;
}

namespace {

Poly combine(const Family& f, std::size_t m, const std::vector<Poly>& traces) {
    if (m >= f.size_M()) throw Error(ErrorCode::MismatchedFamily, "element index outside M of the family");
    Poly p;
    for (std::size_t k = 0; k < f.members.size(); ++k) {
        const Rational c = f.pairing(m, k) * Rational(f.delta[m]);
        if (!c.is_zero()) p += traces[f.members[k]] * c;
    }
    return p;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

bool parse_index(const std::string& s, std::size_t& out) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        return false;
    out = std::stoul(s);
    return true;
}

}  // namespace

Poly compute_P(const TypeContext& ctx, const Family& f, std::size_t m, const Restriction& vh,
               const WeylSubgroup& wh, std::uint32_t lift) {
    return combine(f, m, member_traces(ctx, vh, wh, lift));
}

PolynomialEngine::PolynomialEngine(std::shared_ptr<const TypeContext> ctx, unsigned jobs) : ctx_(std::move(ctx)) {
    const WeylGroup& w = ctx_->weyl();
    orbits_ = enumerate_pseudo_levis(w);
    zsets_.resize(orbits_.size());
    traces_.resize(orbits_.size());
    const bool bang = w.longest_is_minus_one();
    parallel_for(orbits_.size(), jobs, [&](std::size_t o) {
        const Subsystem& s = orbits_[o].rep;
        ZSet z = z_classes(w, s);
        if (bang) bang_involution(z, w);
        std::vector<std::vector<Poly>> tr;
        for (const auto& zc : z.classes) tr.push_back(member_traces(*ctx_, s.vh, s.wh, zc.lift));
        zsets_[o] = std::move(z);
        traces_[o] = std::move(tr);
    });
    if (bang)
        for (const auto& f : ctx_->families().families) bangs_.push_back(solve_bang(f, ctx_->b()));
}

const BangMap& PolynomialEngine::bang(std::size_t family) const {
    if (!has_bang())
        throw Error(ErrorCode::W0NotCentral, "m -> m! needs the longest element to act as -1");
    return bangs_.at(family);
}

PPolynomial PolynomialEngine::P(std::size_t family, std::size_t m, std::size_t orbit, std::size_t z) const {
    const Family& f = ctx_->families().families.at(family);
    PPolynomial p;
    p.poly = combine(f, m, traces_.at(orbit).at(z));
    p.prov = {ctx_->name(), orbit, family, m, z, zsets_[orbit].classes[z].lift, orbits_[orbit].rep.roots};
    return p;
}

std::size_t PolynomialEngine::find_orbit(const std::string& key) const {
    if (key == "full") return 0;
    std::size_t idx;
    if (parse_index(key, idx) && idx < orbits_.size()) return idx;
    for (const auto& y : orbits_)
        if (y.name == key) return y.id;
    throw Error(ErrorCode::UnknownFilter, "no orbit '" + key + "' in " + ctx_->name());
}

std::size_t PolynomialEngine::find_family(const std::string& key) const {
    const auto& fams = ctx_->families();
    std::size_t idx;
    if (parse_index(key, idx) && idx < fams.families.size()) return idx;
    for (std::size_t i = 0; i < fams.families.size(); ++i)
        if (ctx_->family_name(i) == key) return i;
    for (const auto& l : ctx_->labels())
        if (l.name == key) return fams.family_of[l.chi];
    throw Error(ErrorCode::UnknownFilter, "no family '" + key + "' in " + ctx_->name());
}

bool SignReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const SignCheck& c) { return c.pass; });
}

SignReport verify_sign_theorem(const PolynomialEngine& e) {
    const WeylGroup& w = e.context().weyl();
    if (!w.longest_is_minus_one())
        throw Error(ErrorCode::W0NotCentral,
                    "the longest element of W(" + e.context().name() + ") does not act as -1");
    SignReport r;
    const auto& fams = e.context().families().families;
    for (std::size_t o = 0; o < e.orbits().size(); ++o) {
        const ZSet& zs = e.zset(o);
        for (std::size_t fi = 0; fi < fams.size(); ++fi) {
            const Family& f = fams[fi];
            const BangMap& bang = e.bang(fi);
            for (std::size_t m = 0; m < f.size_M(); ++m)
                for (const auto& zc : zs.classes) {
                    SignCheck c{o, fi, m, zc.index, bang.image[m], zc.bang, false, {}, {}};
                    c.lhs = e.P(fi, c.m_bang, o, c.z_bang).poly;
                    c.rhs = poly_negate_variable(e.P(fi, m, o, zc.index).poly);
                    if (f.A % 2) c.rhs = -c.rhs;
                    c.pass = c.lhs == c.rhs;
                    r.checks.push_back(std::move(c));
                }
        }
    }
    return r;
}

IndependenceReport independence_check(const PolynomialEngine& e, std::size_t orbit) {
    const TypeContext& ctx = e.context();
    const WeylGroup& w = ctx.weyl();
    const YOrbit& y = e.orbits()[orbit];
    const Subsystem& s = y.rep;
    const ZSet& zs = e.zset(orbit);
    IndependenceReport r;
    r.orbit = orbit;

    struct Alternative {
        std::string what;
        const Subsystem* sub;
        std::function<std::uint32_t(std::uint32_t)> lift;
    };
    std::vector<Alternative> alts;
    if (s.wh.order() > 1) {
        const std::uint32_t h = s.wh.elements.back();
        alts.push_back({"coset element n*h", &s, [&w, h](std::uint32_t n) { return w.mul(n, h); }});
    }
    if (s.stabilizer.order() > s.wh.order()) {
        const std::uint32_t x = s.stabilizer.elements.back();
        alts.push_back({"conjugate lift x*n*x^-1", &s,
                        [&w, x](std::uint32_t n) { return w.mul(w.mul(x, n), w.inv(x)); }});
    }
    Subsystem conj;
    if (y.orbit_size > 1) {
        std::uint32_t g = 0;
        for (std::uint32_t x = 0; x < w.order(); ++x)
            if (w.apply(x, s.roots) != s.roots) {
                g = x;
                break;
            }
        conj = make_subsystem(w, w.apply(g, s.roots));
        alts.push_back({"conjugate subsystem g*Sigma", &conj,
                        [&w, g](std::uint32_t n) { return w.mul(w.mul(g, n), w.inv(g)); }});
    }
    if (alts.empty()) {
        r.skipped = true;
        return r;
    }
    const auto& fams = ctx.families().families;
    for (const auto& alt : alts) {
        r.alternatives.push_back(alt.what);
        for (const auto& zc : zs.classes) {
            const auto tr = member_traces(ctx, alt.sub->vh, alt.sub->wh, alt.lift(zc.lift));
            for (std::size_t fi = 0; fi < fams.size(); ++fi)
                for (std::size_t m = 0; m < fams[fi].size_M(); ++m) {
                    ++r.comparisons;
                    if (!(combine(fams[fi], m, tr) == e.P(fi, m, orbit, zc.index).poly)) ++r.failures;
                }
        }
    }
    return r;
}

Rational specialize(const Poly& p, const Rational& q) { return p.eval(q); }

Rational specialize_degree(const Poly& p, long q) {
    const Rational v = p.eval(Rational(q));
    if (!v.is_integer() || v.sign() <= 0)
        throw Error(ErrorCode::NonIntegralDegree,
                    "value " + v.str() + " at q = " + std::to_string(q) + " of " + p.str() + " is not a positive integer");
    return v;
}

std::vector<DegreeCheck> verify_degrees(const PolynomialEngine& e, const std::vector<long>& qs) {
    std::vector<DegreeCheck> out;
    const auto& fams = e.context().families().families;
    for (std::size_t fi = 0; fi < fams.size(); ++fi)
        for (std::size_t m = 0; m < fams[fi].size_M(); ++m) {
            const Poly p = e.P(fi, m, 0, 0).poly;
            for (long q : qs) {
                DegreeCheck c{fi, m, q, p.eval(Rational(q)), true};
                try {
                    specialize_degree(p, q);
                } catch (const Error&) {
                    c.pass = false;
                }
                out.push_back(std::move(c));
            }
        }
    return out;
}

TorusOrder torus_order(const IntMatrix& w) {
    TorusOrder t;
    t.poly = det_u_minus(w);
    const Poly root = Poly{Rational(-1), Rational(1)};
    std::size_t fixed = 0;
    Poly p = t.poly;
    while (auto q = poly_divide_exact(p, root)) {
        p = *q;
        ++fixed;
        if (p.degree() == std::optional<std::size_t>(0)) break;
    }
    t.eps = (w.rows() - fixed) % 2 ? -1 : 1;
    return t;
}

namespace {

Poly substitute_power(const Poly& p, std::size_t d) {
    std::vector<Rational> c(p.is_zero() ? 0 : *p.degree() * d + 1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[k * d] = p.coeffs()[k];
    return Poly(std::move(c));
}

// prod over a primitive e-th root zeta of (1 - zeta t).
Poly orbit_factor(int e) {
    return e == 1 ? Poly{Rational(1), Rational(-1)} : cyclotomic_polynomial(e);
}

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

// Multisets of divisors e of o with sum of phi(e) equal to k.
void multisets(const std::vector<int>& divs, std::size_t from, int k, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < divs.size(); ++i) {
        const int ph = euler_phi(divs[i]);
        if (ph > k) continue;
        cur.push_back(divs[i]);
        multisets(divs, i, k - ph, cur, out);
        cur.pop_back();
    }
}

}  // namespace

GroupOrder group_order_poly(const WeylGroup& w, const Subsystem& s, std::uint32_t n) {
    if (!s.stabilizer.contains(n))
        throw Error(ErrorCode::NotInStabilizer, "twisting element does not preserve the subsystem");
    std::vector<int> degrees;
    for (const auto& f : s.type.factors())
        for (int d : degrees_of(f)) degrees.push_back(d);
    std::sort(degrees.begin(), degrees.end());
    const std::size_t total = static_cast<std::size_t>(std::accumulate(degrees.begin(), degrees.end(), 0));

    const std::size_t order = series_guard_order(total);
    TruncatedSeries molien(order);
    for (auto h : s.wh.elements) {
        const TruncatedSeries t = TruncatedSeries(det_one_minus_u(s.vh.restrict(w.perm(w.mul(n, h)))), order).inverse();
        molien += t;
    }
    molien *= Rational(1, static_cast<long>(s.wh.order()));
    Poly r;
    try {
        r = series_divide_exact(TruncatedSeries(Poly::constant(1), order), molien, total);
    } catch (const Error&) {
        throw Error(ErrorCode::ProductFormMismatch, "twisted Molien series is not 1/polynomial");
    }

    int o = 1;
    for (std::uint32_t x = n; !s.wh.contains(x); x = w.mul(x, n)) ++o;
    std::vector<int> divs;
    for (int e = 1; e <= o; ++e)
        if (o % e == 0) divs.push_back(e);

    std::vector<std::pair<int, int>> groups;  // degree, multiplicity
    for (int d : degrees) {
        if (!groups.empty() && groups.back().first == d) ++groups.back().second;
        else groups.emplace_back(d, 1);
    }
    std::vector<std::vector<std::vector<int>>> options;
    for (const auto& [d, k] : groups) {
        std::vector<std::vector<int>> opts;
        std::vector<int> cur;
        multisets(divs, 0, k, cur, opts);
        options.push_back(std::move(opts));
    }
    std::vector<std::size_t> pick(groups.size(), 0);
    while (true) {
        Poly prod = Poly::constant(1);
        for (std::size_t g = 0; g < groups.size(); ++g)
            for (int e : options[g][pick[g]])
                prod *= substitute_power(orbit_factor(e), static_cast<std::size_t>(groups[g].first));
        if (prod == r) {
            GroupOrder out;
            for (std::size_t g = 0; g < groups.size(); ++g)
                for (int e : options[g][pick[g]])
                    for (int j = 0; j < euler_phi(e); ++j) out.eps.emplace_back(groups[g].first, e);
            out.poly = Poly::monomial(1, s.num_positive()) * poly_reverse(r, total);
            return out;
        }
        std::size_t g = 0;
        while (g < groups.size() && ++pick[g] == options[g].size()) pick[g++] = 0;
        if (g == groups.size()) break;
    }
    throw Error(ErrorCode::ProductFormMismatch,
                "no root-of-unity assignment reproduces the twisted Molien series of " + s.label);
}

ClassIndexReport class_index_identity(const WeylGroup& w, const Subsystem& s, std::uint32_t n) {
    ClassIndexReport r;
    std::set<std::uint32_t> seen;
    for (auto h : s.wh.elements) {
        const std::uint32_t y = w.mul(n, h);
        if (seen.count(y)) continue;
        std::set<std::uint32_t> orbit;
        for (auto x : s.wh.elements) orbit.insert(w.mul(w.mul(x, y), w.inv(x)));
        seen.insert(orbit.begin(), orbit.end());
        r.sizes.push_back(orbit.size());
        r.total += orbit.size();
    }
    r.pass = r.total == s.wh.order();
    return r;
}

}  // namespace uniflip
