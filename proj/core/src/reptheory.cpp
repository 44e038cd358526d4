#include "uniflip/reptheory.hpp"

#include "uniflip/error.hpp"

#include <algorithm>

namespace uniflip {

namespace {

// Inverse of a square rational matrix by Gauss-Jordan elimination.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw Error(ErrorCode::InvalidArgument, "singular Gram matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational s = Rational(1) / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

TruncatedSeries inverse_det(const IntMatrix& m, std::size_t order) {
    return TruncatedSeries(det_one_minus_u(m), order).inverse();
}

}  // namespace

Restriction::Restriction(const RootSystem& rs, const RootSubset& sigma) : sigma_(sigma) {
    std::sort(sigma_.begin(), sigma_.end());
    std::vector<bool> in(rs.num_roots(), false);
    for (auto a : sigma_) in[a] = true;
    for (auto a : sigma_) {
        if (!rs.is_positive(a)) continue;
        bool decomposable = false;
        for (auto b : sigma_) {
            if (!rs.is_positive(b) || b == a) continue;
            RootVec d = rs.root(a);
            for (std::size_t i = 0; i < d.size(); ++i) d[i] -= rs.root(b)[i];
            const long c = rs.index_of(d);
            if (c >= 0 && in[static_cast<std::size_t>(c)] && rs.is_positive(static_cast<std::size_t>(c))) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple_.push_back(a);
    }
    const std::size_t k = simple_.size();
    std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            g[i][j] = Rational(static_cast<long>(rs.form(rs.root(simple_[i]), rs.root(simple_[j]))));
    const auto ginv = invert(g);
    for (auto a : sigma_) {
        std::vector<Rational> rhs(k);
        for (std::size_t i = 0; i < k; ++i)
            rhs[i] = Rational(static_cast<long>(rs.form(rs.root(simple_[i]), rs.root(a))));
        std::vector<std::int64_t> x(k);
        for (std::size_t i = 0; i < k; ++i) {
            Rational s;
            for (std::size_t j = 0; j < k; ++j) s += ginv[i][j] * rhs[j];
            if (!s.is_integer())
                throw Error(ErrorCode::NotClosed, "root is not an integral combination of simple roots");
            x[i] = s.to_int64();
        }
        coords_.emplace(a, std::move(x));
    }
}

IntMatrix Restriction::restrict(const Perm& p) const {
    const std::size_t k = simple_.size();
    IntMatrix m(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto it = coords_.find(p[simple_[j]]);
        if (it == coords_.end())
            throw Error(ErrorCode::NotInStabilizer, "element does not preserve the subsystem");
        for (std::size_t i = 0; i < k; ++i) m(i, j) = it->second[i];
    }
    return m;
}

std::size_t WeylCharacters::trivial() const {
    for (std::size_t c = 0; c < values.size(); ++c)
        if (std::all_of(values[c].begin(), values[c].end(), [](std::int64_t v) { return v == 1; }))
            return c;
    throw Error(ErrorCode::DataIntegrity, "no trivial character");
}

std::size_t WeylCharacters::sign() const {
    const auto& cls = weyl->group().classes();
    for (std::size_t c = 0; c < values.size(); ++c) {
        bool ok = true;
        for (std::size_t k = 0; k < cls.size() && ok; ++k)
            ok = values[c][k] == (weyl->length(cls[k].representative) % 2 ? -1 : 1);
        if (ok) return c;
    }
    throw Error(ErrorCode::DataIntegrity, "no sign character");
}

std::size_t WeylCharacters::tensor_sign(std::size_t chi) const {
    const auto& cls = weyl->group().classes();
    for (std::size_t c = 0; c < values.size(); ++c) {
        bool ok = true;
        for (std::size_t k = 0; k < cls.size() && ok; ++k)
            ok = values[c][k] == values[chi][k] * (weyl->length(cls[k].representative) % 2 ? -1 : 1);
        if (ok) return c;
    }
    throw Error(ErrorCode::DataIntegrity, "character tensor sign is not irreducible");
}

WeylCharacters character_table(const WeylGroup& w, std::size_t max_order) {
    WeylCharacters t;
    t.weyl = &w;
    t.table = compute_character_table(w.group(), max_order);
    for (const auto& row : t.table.chars) {
        std::vector<std::int64_t> v;
        for (const auto& x : row) {
            if (!x.is_rational() || !x.rational_value().is_integer())
                throw Error(ErrorCode::DataIntegrity, "Weyl group character value is not an integer");
            v.push_back(x.rational_value().to_int64());
        }
        t.values.push_back(std::move(v));
    }
    return t;
}

Poly length_generating_function(const WeylGroup& w) {
    std::vector<Rational> c(w.root_system().num_positive() + 1);
    for (std::uint32_t x = 0; x < w.order(); ++x) c[static_cast<std::size_t>(w.length(x))] += 1;
    return Poly(std::move(c));
}

Poly fake_degree(const WeylCharacters& t, std::size_t chi) {
    const WeylGroup& w = *t.weyl;
    const std::size_t n = w.root_system().num_positive();
    const std::size_t order = series_guard_order(n);
    TruncatedSeries s(order);
    const auto& cls = w.group().classes();
    for (std::size_t k = 0; k < cls.size(); ++k) {
        if (t.values[chi][k] == 0) continue;
        TruncatedSeries term = inverse_det(w.matrix(cls[k].representative), order);
        term *= Rational(static_cast<long>(cls[k].elements.size()) * t.values[chi][k]);
        s += term;
    }
    s *= Rational(1, static_cast<long>(w.order()));
    Poly prod = Poly::constant(1);
    for (int d : w.root_system().degrees())
        prod *= Poly::constant(1) - Poly::monomial(1, static_cast<std::size_t>(d));
    return series_divide_exact(s, TruncatedSeries(prod, order).inverse(), n);
}

int b_invariant(const WeylCharacters& t, std::size_t chi) {
    const auto v = fake_degree(t, chi).valuation();
    if (!v) throw Error(ErrorCode::DataIntegrity, "zero fake degree");
    return static_cast<int>(*v);
}

CosetSeries::CosetSeries(const WeylGroup& w, std::uint32_t n, const Restriction& vh,
                         const WeylSubgroup& wh)
    : n_(n), degree_(vh.num_positive()), molien_(series_guard_order(vh.num_positive())) {
    const std::size_t order = series_guard_order(degree_);
    // Group coset elements by (class in W, det(1 - u x|V_H)).
    std::map<std::pair<std::size_t, std::vector<Rational>>, long> counts;
    for (auto h : wh.elements) {
        const std::uint32_t x = w.mul(n, h);
        const Poly d = det_one_minus_u(vh.restrict(w.perm(x)));
        ++counts[{w.group().class_of(x), d.coeffs()}];
    }
    std::map<std::vector<Rational>, TruncatedSeries> inverses;
    for (const auto& [key, count] : counts) {
        auto it = inverses.find(key.second);
        if (it == inverses.end())
            it = inverses.emplace(key.second, TruncatedSeries(Poly(key.second), order).inverse()).first;
        TruncatedSeries term = it->second;
        term *= Rational(count);
        auto bc = by_class_.find(key.first);
        if (bc == by_class_.end()) bc = by_class_.emplace(key.first, TruncatedSeries(order)).first;
        bc->second += term;
        molien_ += term;
    }
    const Rational scale(1, static_cast<long>(wh.order()));
    molien_ *= scale;
    for (auto& [c, s] : by_class_) s *= scale;
}

Poly CosetSeries::class_function_invariant(const std::vector<Rational>& class_values) const {
    TruncatedSeries num(molien_.order());
    for (const auto& [c, s] : by_class_) {
        if (class_values[c].is_zero()) continue;
        TruncatedSeries term = s;
        term *= class_values[c];
        num += term;
    }
    return series_divide_exact(num, molien_, degree_);
}

Poly CosetSeries::tensor_invariant(const WeylCharacters& t, std::size_t chi) const {
    std::vector<Rational> v;
    for (auto x : t.values[chi]) v.emplace_back(static_cast<long>(x));
    return class_function_invariant(v);
}

Poly coinvariant_graded_trace(const WeylGroup& w, std::uint32_t g, const Restriction& vh,
                              const WeylSubgroup& wh) {
    const IntMatrix m = vh.restrict(w.perm(g));
    CosetSeries cs(w, g, vh, wh);
    return series_divide_exact(inverse_det(m, cs.molien().order()), cs.molien(), cs.expected_degree());
}

Poly tensor_invariant_graded_trace(const WeylCharacters& t, std::uint32_t n, std::size_t chi,
                                   const Restriction& vh, const WeylSubgroup& wh) {
    return CosetSeries(*t.weyl, n, vh, wh).tensor_invariant(t, chi);
}

}  // namespace uniflip
