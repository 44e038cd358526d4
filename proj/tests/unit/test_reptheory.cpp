#include "support.hpp"

#include "uniflip/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace uniflip;
using test::P;
using test::u;

namespace {

// Polynomial functions on V in simple-root coordinates, as monomial -> coefficient.
using Monomial = std::vector<int>;
using MPoly = std::map<Monomial, Rational>;

void monomials(std::size_t vars, int degree, Monomial& cur, std::vector<Monomial>& out) {
    if (cur.size() + 1 == vars) {
        cur.push_back(degree);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = degree; k >= 0; --k) {
        cur.push_back(k);
        monomials(vars, degree - k, cur, out);
        cur.pop_back();
    }
}

std::vector<Monomial> monomials(std::size_t vars, int degree) {
    std::vector<Monomial> out;
    Monomial cur;
    monomials(vars, degree, cur, out);
    return out;
}

MPoly mul(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r[m] += ca * cb;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

// f(Mx) for f a monomial.
MPoly substitute(const Monomial& m, const IntMatrix& a) {
    const std::size_t n = m.size();
    MPoly r{{Monomial(n, 0), Rational(1)}};
    for (std::size_t i = 0; i < n; ++i) {
        MPoly lin;
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) != 0) {
                Monomial e(n, 0);
                e[j] = 1;
                lin[e] = Rational(static_cast<long>(a(i, j)));
            }
        for (int k = 0; k < m[i]; ++k) r = mul(r, lin);
    }
    return r;
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

// Dimensions of the coinvariant algebra in degrees 0..top by explicit linear
// algebra: invariants from the Reynolds operator, then the ideal they span.
std::vector<std::size_t> coinvariant_dimensions(const WeylGroup& w, int top) {
    const std::size_t n = static_cast<std::size_t>(w.root_system().rank());
    std::vector<std::vector<MPoly>> inv(static_cast<std::size_t>(top) + 1);
    for (int d = 1; d <= top; ++d)
        for (const auto& m : monomials(n, d)) {
            MPoly avg;
            for (std::uint32_t x = 0; x < w.order(); ++x)
                for (const auto& [mm, c] : substitute(m, w.matrix(x))) avg[mm] += c;
            std::erase_if(avg, [](const auto& kv) { return kv.second.is_zero(); });
            if (!avg.empty()) inv[static_cast<std::size_t>(d)].push_back(avg);
        }
    std::vector<std::size_t> dims;
    for (int j = 0; j <= top; ++j) {
        const auto basis = monomials(n, j);
        std::map<Monomial, std::size_t> col;
        for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
        std::vector<std::vector<Rational>> rows;
        for (int k = 1; k <= j; ++k)
            for (const auto& f : inv[static_cast<std::size_t>(k)])
                for (const auto& m : monomials(n, j - k)) {
                    std::vector<Rational> row(basis.size());
                    for (const auto& [mm, c] : mul(f, MPoly{{m, Rational(1)}})) row[col.at(mm)] = c;
                    rows.push_back(std::move(row));
                }
        dims.push_back(basis.size() - rank(rows));
    }
    return dims;
}

// Fake degree of the S_n character labelled by a partition:
// u^{n(lambda)} [n]! / prod over hooks [h].
Poly hook_fake_degree(const std::vector<int>& lambda) {
    auto q_int = [](int h) { return Poly(std::vector<Rational>(static_cast<std::size_t>(h), Rational(1))); };
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    Poly num = Poly::constant(1), den = Poly::constant(1);
    for (int i = 1; i <= n; ++i) num *= q_int(i);
    std::size_t nl = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        nl += i * static_cast<std::size_t>(lambda[i]);
        for (int j = 0; j < lambda[i]; ++j) {
            int below = 0;
            for (std::size_t k = i + 1; k < lambda.size(); ++k) below += lambda[k] > j;
            den *= q_int(lambda[i] - j + below);
        }
    }
    return u(nl) * *poly_divide_exact(num, den);
}

std::vector<int> partition_of(const std::string& label) {
    std::vector<int> p;
    for (char c : label)
        if (std::isdigit(static_cast<unsigned char>(c))) p.push_back(c - '0');
    return p;
}

}  // namespace

TEST_SUITE("reptheory") {

TEST_CASE("character tables: dimensions and orthogonality") {
    auto dims = [](const std::string& t) {
        const auto ctx = test::context(t);
        std::vector<std::int64_t> d;
        for (std::size_t c = 0; c < ctx->characters().num_chars(); ++c) d.push_back(ctx->characters().dim(c));
        std::sort(d.begin(), d.end());
        return d;
    };
    CHECK(dims("A1") == std::vector<std::int64_t>{1, 1});
    CHECK(dims("B2") == std::vector<std::int64_t>{1, 1, 1, 1, 2});
    CHECK(dims("G2") == std::vector<std::int64_t>{1, 1, 1, 1, 2, 2});
    for (const auto& t : test::kAllTypes) {
        CAPTURE(t);
        const auto ctx = test::context(t);
        const auto& tab = ctx->characters().table;
        CHECK(tab.num_chars() == tab.num_classes());
        CHECK(tab.is_rational());
        std::int64_t sum = 0;
        for (std::size_t c = 0; c < tab.num_chars(); ++c) {
            sum += ctx->characters().dim(c) * ctx->characters().dim(c);
            for (std::size_t d = 0; d < tab.num_chars(); ++d)
                CHECK(tab.inner_product(tab.chars[c], tab.chars[d]) == Cyclotomic(tab.field_order, c == d ? 1 : 0));
        }
        CHECK(sum == static_cast<std::int64_t>(ctx->weyl().order()));
    }
}

TEST_CASE("character table size guard") {
    const auto ctx = test::context("B3");
    try {
        character_table(ctx->weyl(), 20);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("fake degrees and b-invariants") {
    for (const auto& t : test::kAllTypes) {
        CAPTURE(t);
        const auto ctx = test::context(t);
        const auto& ch = ctx->characters();
        const std::size_t n = ctx->root_system().num_positive();
        CHECK(ctx->fake_degrees()[ch.trivial()] == Poly::constant(1));
        CHECK(ctx->fake_degrees()[ch.sign()] == u(n));
        CHECK(ctx->b()[ch.trivial()] == 0);
        CHECK(ctx->b()[ch.sign()] == static_cast<int>(n));
        Poly weighted;
        for (std::size_t c = 0; c < ch.num_chars(); ++c) {
            const Poly& f = ctx->fake_degrees()[c];
            CHECK(f.eval(Rational(1)) == Rational(static_cast<long>(ch.dim(c))));
            CHECK(f.has_integer_coeffs());
            for (const auto& x : f.coeffs()) CHECK(x.sign() >= 0);
            CHECK(static_cast<std::size_t>(ctx->b()[c]) == *f.valuation());
            weighted += f * Rational(static_cast<long>(ch.dim(c)));
        }
        CHECK(weighted == length_generating_function(ctx->weyl()));
    }
    const auto b2 = test::context("B2");
    CHECK(b2->fake_degrees()[b2->char_index("(1,1)")] == u(1) + u(3));
    CHECK(b2->b()[b2->char_index("(1,1)")] == 1);
}

TEST_CASE("type A fake degrees match the hook formula") {
    for (const char* t : {"A1", "A2", "A3", "A4"}) {
        const auto ctx = test::context(t);
        for (const auto& l : ctx->labels()) {
            CAPTURE(l.name);
            CHECK(ctx->fake_degrees()[l.chi] == hook_fake_degree(partition_of(l.name)));
        }
    }
}

TEST_CASE("coinvariant dimensions agree with explicit linear algebra") {
    for (const char* t : {"B2", "G2", "A2"}) {
        CAPTURE(t);
        const auto ctx = test::context(t);
        const WeylGroup& w = ctx->weyl();
        const int n = static_cast<int>(ctx->root_system().num_positive());
        const auto dims = coinvariant_dimensions(w, std::min(n, 4));
        const WeylSubgroup all = full_group(w);
        RootSubset roots(ctx->root_system().num_roots());
        std::iota(roots.begin(), roots.end(), 0);
        const Poly trace = coinvariant_graded_trace(w, 0, Restriction(ctx->root_system(), roots), all);
        for (std::size_t j = 0; j < dims.size(); ++j) CHECK(trace.coeff(j) == Rational(static_cast<long>(dims[j])));
        CHECK(trace == length_generating_function(w));
    }
}

TEST_CASE("coinvariant graded traces") {
    const auto ctx = test::context("B2");
    const WeylGroup& w = ctx->weyl();
    const RootSystem& rs = ctx->root_system();
    CHECK(coinvariant_graded_trace(w, 0, Restriction(rs, {}), reflection_subgroup(w, {})) == P({1}));
    CHECK(coinvariant_graded_trace(w, w.longest(), Restriction(rs, {}), reflection_subgroup(w, {})) == P({1}));
    const RootSubset a1 = {0, rs.negate(0)};
    CHECK(coinvariant_graded_trace(w, w.longest(), Restriction(rs, a1), reflection_subgroup(w, a1)) == P({1, -1}));
    CHECK(coinvariant_graded_trace(w, 0, Restriction(rs, a1), reflection_subgroup(w, a1)) == P({1, 1}));
    try {
        // A simple reflection of the other length does not preserve {+-alpha_1}.
        coinvariant_graded_trace(w, w.reflection(1), Restriction(rs, a1), reflection_subgroup(w, a1));
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInStabilizer);
    }
}

TEST_CASE("tensor invariants on the full system are fake degrees") {
    for (const char* t : {"B2", "G2", "B3", "D4"}) {
        const auto ctx = test::context(t);
        const WeylGroup& w = ctx->weyl();
        RootSubset roots(ctx->root_system().num_roots());
        std::iota(roots.begin(), roots.end(), 0);
        const Restriction vh(ctx->root_system(), roots);
        const CosetSeries cs(w, 0, vh, full_group(w));
        for (std::size_t c = 0; c < ctx->characters().num_chars(); ++c)
            CHECK(cs.tensor_invariant(ctx->characters(), c) == ctx->fake_degrees()[c]);
    }
}

TEST_CASE("tensor invariants on the torus are character values") {
    const auto ctx = test::context("G2");
    const WeylGroup& w = ctx->weyl();
    const Restriction vh(ctx->root_system(), {});
    const WeylSubgroup t = reflection_subgroup(w, {});
    for (std::uint32_t x = 0; x < w.order(); ++x)
        for (std::size_t c = 0; c < ctx->characters().num_chars(); ++c)
            CHECK(tensor_invariant_graded_trace(ctx->characters(), x, c, vh, t) ==
                  Poly::constant(Rational(static_cast<long>(
                      ctx->characters().values[c][w.group().class_of(x)]))));
}

TEST_CASE("tensor invariants are conjugation invariant and integral") {
    const auto& e = test::engine("F4");
    const auto& ctx = e.context();
    const WeylGroup& w = ctx.weyl();
    for (const auto& y : e.orbits()) {
        const Subsystem& s = y.rep;
        const std::uint32_t x = s.stabilizer.elements[s.stabilizer.order() / 2];
        for (const auto& zc : e.zset(y.id).classes) {
            const auto moved = member_traces(ctx, s.vh, s.wh, w.mul(w.mul(x, zc.lift), w.inv(x)));
            CHECK(moved == e.traces(y.id, zc.index));
            for (const auto& p : moved) CHECK(p.has_integer_coeffs());
        }
    }
}

TEST_CASE("labels") {
    const auto b2 = test::context("B2");
    std::vector<int> bs;
    for (const auto& l : b2->labels()) bs.push_back(l.b);
    std::sort(bs.begin(), bs.end());
    CHECK(bs == std::vector<int>{0, 1, 2, 2, 4});
    CHECK(test::context("F4")->labels().size() == 25);
    try {
        b2->char_index("(3,-)");
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownLabel);
    }
}

TEST_CASE("label matching failures") {
    const auto ctx = test::context("B2");
    const auto& ch = ctx->characters();
    const std::vector<LabelHint> ok = {{"triv", 1, 0, {}}, {"refl", 2, 1, {}},
                                       {"a", 1, 2, {{{2}, 1}}}, {"b", 1, 2, {{{2}, -1}}},
                                       {"sgn", 1, 4, {}}};
    CHECK(label_irreducibles(ch, ctx->b(), ok).size() == 5);

    auto code_of = [&](std::vector<LabelHint> hints) {
        try {
            label_irreducibles(ch, ctx->b(), hints);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    auto ambiguous = ok;
    ambiguous[2].traces.clear();
    CHECK(code_of(ambiguous) == ErrorCode::AmbiguousLabel);
    auto missing = ok;
    missing.pop_back();
    CHECK(code_of(missing) == ErrorCode::UnmatchedIrreducible);
    auto wrong = ok;
    wrong[1].b = 3;
    CHECK(code_of(wrong) == ErrorCode::UnmatchedIrreducible);
}

}
