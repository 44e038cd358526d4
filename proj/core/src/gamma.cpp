#include "uniflip/gamma.hpp"

#include "uniflip/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace uniflip {

namespace {

using CharFn = std::function<Cyclotomic(const Perm&)>;

struct ClassSpec {
    std::string name;
    Perm rep;
    std::vector<std::pair<std::string, CharFn>> chars;
};

Perm cycles(std::size_t n, std::initializer_list<std::initializer_list<int>> cs) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    for (const auto& c : cs) {
        std::vector<int> v(c);
        for (std::size_t i = 0; i < v.size(); ++i)
            p[static_cast<std::size_t>(v[i])] = static_cast<std::uint16_t>(v[(i + 1) % v.size()]);
    }
    return p;
}

Cyclotomic rat(long v) { return Cyclotomic(kGammaField, Rational(v)); }

std::vector<int> cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        int k = 0;
        for (std::size_t x = i; !seen[x]; x = p[x]) {
            seen[x] = true;
            ++k;
        }
        if (k) out.push_back(k);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

long perm_sign(const Perm& p) {
    long s = 1;
    for (int k : cycle_type(p))
        if (k % 2 == 0) s = -s;
    return s;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

// Characters of <g> indexed by exponent j: g^k -> zeta_ord^{jk}.
std::vector<std::pair<std::string, CharFn>> cyclic(const Perm& g, int ord,
                                                   const std::vector<std::string>& names) {
    std::vector<std::pair<std::string, CharFn>> out;
    for (int j = 0; j < ord; ++j) {
        out.emplace_back(names[static_cast<std::size_t>(j)], [g, ord, j](const Perm& x) {
            Perm y(g.size());
            std::iota(y.begin(), y.end(), 0);
            for (int k = 0; k < ord; ++k) {
                if (y == x) return Cyclotomic::zeta(kGammaField, static_cast<long>(kGammaField / ord) * j * k);
                y = compose(g, y);
            }
            throw Error(ErrorCode::InvalidArgument, "element outside the cyclic centralizer");
        });
    }
    return out;
}

// Values of the S_n irreducibles used here, by cycle type.
CharFn by_cycle_type(std::map<std::vector<int>, long> table) {
    return [table = std::move(table)](const Perm& x) { return rat(table.at(cycle_type(x))); };
}

std::vector<ClassSpec> specs_for(const std::string& name, std::size_t& points) {
    const CharFn one = [](const Perm&) { return rat(1); };
    if (name == "1") {
        points = 1;
        return {{"1", Perm{0}, {{"1", one}}}};
    }
    if (name == "Z2") {
        points = 2;
        const CharFn eps = [](const Perm& x) { return rat(is_identity(x) ? 1 : -1); };
        const std::vector<std::pair<std::string, CharFn>> ch{{"1", one}, {"eps", eps}};
        return {{"1", Perm{0, 1}, ch}, {"g", Perm{1, 0}, ch}};
    }
    if (name == "Z2xZ2" || name == "Z2xZ2xZ2") {
        const std::size_t k = name == "Z2xZ2" ? 2 : 3;
        points = 2 * k;
        const std::string letters = "abc";
        std::vector<std::pair<std::string, CharFn>> ch;
        for (unsigned s = 0; s < (1u << k); ++s) {
            std::string nm = s == 0 ? "1" : "e";
            for (std::size_t l = 0; l < k; ++l)
                if (s & (1u << l)) nm += letters[l];
            ch.emplace_back(nm, [s, k](const Perm& x) {
                long v = 1;
                for (std::size_t l = 0; l < k; ++l)
                    if ((s & (1u << l)) && x[2 * l] != 2 * l) v = -v;
                return rat(v);
            });
        }
        // Identity first, then by number of letters.
        std::vector<unsigned> order(1u << k);
        std::iota(order.begin(), order.end(), 0u);
        std::stable_sort(order.begin(), order.end(),
                         [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
        std::vector<ClassSpec> out;
        for (unsigned s : order) {
            Perm p(points);
            std::iota(p.begin(), p.end(), 0);
            std::string nm = s == 0 ? "1" : "";
            for (std::size_t l = 0; l < k; ++l)
                if (s & (1u << l)) {
                    std::swap(p[2 * l], p[2 * l + 1]);
                    nm += letters[l];
                }
            out.push_back({nm, p, ch});
        }
        return out;
    }
    if (name == "S3") {
        points = 3;
        const Perm g2 = cycles(3, {{0, 1}}), g3 = cycles(3, {{0, 1, 2}});
        const CharFn sgn = [](const Perm& x) { return rat(perm_sign(x)); };
        const CharFn r = by_cycle_type({{{1, 1, 1}, 2}, {{2, 1}, 0}, {{3}, -1}});
        return {{"1", cycles(3, {}), {{"1", one}, {"r", r}, {"eps", sgn}}},
                {"g2", g2, {{"1", one}, {"eps", sgn}}},
                {"g3", g3, cyclic(g3, 3, {"1", "theta", "theta2"})}};
    }
    if (name == "S4") {
        points = 4;
        const Perm g2 = cycles(4, {{0, 1}}), g2p = cycles(4, {{0, 1}, {2, 3}});
        const Perm g3 = cycles(4, {{0, 1, 2}}), g4 = cycles(4, {{0, 1, 2, 3}});
        const CharFn sgn = [](const Perm& x) { return rat(perm_sign(x)); };
        using CT = std::vector<int>;
        const CharFn sigma = by_cycle_type({{CT{1, 1, 1, 1}, 2}, {CT{2, 1, 1}, 0}, {CT{2, 2}, 2}, {CT{3, 1}, -1}, {CT{4}, 0}});
        const CharFn lambda1 = by_cycle_type({{CT{1, 1, 1, 1}, 3}, {CT{2, 1, 1}, 1}, {CT{2, 2}, -1}, {CT{3, 1}, 0}, {CT{4}, -1}});
        const CharFn lambda2 = by_cycle_type({{CT{1, 1, 1, 1}, 3}, {CT{2, 1, 1}, -1}, {CT{2, 2}, -1}, {CT{3, 1}, 0}, {CT{4}, 1}});
        // Centralizer of (01): <(01)> x <(23)>; A, B are the values on them.
        auto lin2 = [](long a, long b) -> CharFn {
            return [a, b](const Perm& x) { return rat((x[0] != 0 ? a : 1) * (x[2] != 2 ? b : 1)); };
        };
        // Centralizer of (01)(23) is dihedral of order 8; A on odd elements,
        // B on elements exchanging {0,1} with {2,3}.
        auto d8 = [](long a, long b) -> CharFn {
            return [a, b](const Perm& x) {
                return rat((perm_sign(x) < 0 ? a : 1) * (x[0] == 2 || x[0] == 3 ? b : 1));
            };
        };
        const CharFn r = [g2p](const Perm& x) { return rat(is_identity(x) ? 2 : (x == g2p ? -2 : 0)); };
        return {{"1", cycles(4, {}), {{"1", one}, {"sigma", sigma}, {"lambda1", lambda1}, {"lambda2", lambda2}, {"eps", sgn}}},
                {"g2", g2, {{"1", lin2(1, 1)}, {"eps", lin2(-1, -1)}, {"eps'", lin2(1, -1)}, {"eps''", lin2(-1, 1)}}},
                {"g2p", g2p, {{"1", d8(1, 1)}, {"r", r}, {"eps", d8(-1, -1)}, {"eps'", d8(1, -1)}, {"eps''", d8(-1, 1)}}},
                {"g3", g3, cyclic(g3, 3, {"1", "theta", "theta2"})},
                {"g4", g4, cyclic(g4, 4, {"1", "i", "-1", "-i"})}};
    }
    throw Error(ErrorCode::UnsupportedType, "unsupported family group '" + name + "'");
}

bool greater_values(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b,
                    const std::vector<std::uint32_t>& where) {
    for (auto e : where) {
        const auto& x = a[e].coords();
        const auto& y = b[e].coords();
        if (x != y) return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
    }
    return false;
}

}  // namespace

Rational GammaCharacter::degree() const { return values[0].rational_value(); }

class GammaBuilder {
public:
    static GammaGroup build(const std::string& name) {
        std::size_t points = 0;
        auto specs = specs_for(name, points);
        GammaGroup g;
        g.name_ = name;
        std::vector<Perm> gens;
        for (const auto& s : specs) gens.push_back(s.rep);
        g.group_ = FiniteGroup::from_permutations(gens, &g.elements_);
        std::map<Perm, std::uint32_t> index;
        for (std::uint32_t i = 0; i < g.elements_.size(); ++i) index.emplace(g.elements_[i], i);
        std::vector<bool> covered(g.group_.classes().size(), false);
        for (auto& s : specs) {
            GammaClass c;
            c.name = s.name;
            c.representative = index.at(s.rep);
            const std::size_t k = g.group_.class_of(c.representative);
            if (covered[k]) throw Error(ErrorCode::DataIntegrity, name + ": class listed twice");
            covered[k] = true;
            c.size = g.group_.classes()[k].elements.size();
            c.centralizer = g.group_.centralizer(c.representative);
            std::sort(c.centralizer.begin(), c.centralizer.end());
            if (c.size * c.centralizer.size() != g.order())
                throw Error(ErrorCode::DataIntegrity, name + ": class and centralizer sizes disagree");
            for (auto& [cn, fn] : s.chars) {
                GammaCharacter ch{cn, std::vector<Cyclotomic>(g.order(), Cyclotomic(kGammaField))};
                for (auto e : c.centralizer) ch.values[e] = fn(g.elements_[e]);
                c.chars.push_back(std::move(ch));
            }
            check_centralizer_table(g, c);
            std::stable_sort(c.chars.begin(), c.chars.end(), [&](const GammaCharacter& a, const GammaCharacter& b) {
                if (a.degree() != b.degree()) return a.degree() < b.degree();
                return greater_values(a.values, b.values, c.centralizer);
            });
            g.classes_.push_back(std::move(c));
        }
        if (std::find(covered.begin(), covered.end(), false) != covered.end())
            throw Error(ErrorCode::DataIntegrity, name + ": not every class is listed");
        return g;
    }

private:
    // The listed characters must be exactly the irreducibles of the centralizer.
    static void check_centralizer_table(const GammaGroup& g, const GammaClass& c) {
        const auto n = static_cast<long>(c.centralizer.size());
        Rational dims;
        for (std::size_t i = 0; i < c.chars.size(); ++i) {
            dims += c.chars[i].degree() * c.chars[i].degree();
            for (std::size_t j = 0; j < c.chars.size(); ++j) {
                Cyclotomic s(kGammaField);
                for (auto e : c.centralizer) s += c.chars[i].values[e] * c.chars[j].values[e].conj();
                if (!(s == Cyclotomic(kGammaField, Rational(i == j ? n : 0))))
                    throw Error(ErrorCode::DataIntegrity, g.name() + ": characters at " + c.name +
                                                              " are not orthonormal");
            }
        }
        if (dims != Rational(n))
            throw Error(ErrorCode::DataIntegrity, g.name() + ": characters at " + c.name + " are incomplete");
    }
};

GammaGroup GammaGroup::get(const std::string& name) { return GammaBuilder::build(name); }

MElement GammaGroup::find(const std::string& cls, const std::string& chr) const {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i].name != cls) continue;
        for (std::size_t j = 0; j < classes_[i].chars.size(); ++j)
            if (classes_[i].chars[j].name == chr) return {i, j};
    }
    throw Error(ErrorCode::UnknownLabel, name_ + " has no element (" + cls + "," + chr + ")");
}

std::string GammaGroup::str(const MElement& m) const {
    return "(" + classes_[m.cls].name + "," + classes_[m.cls].chars[m.chr].name + ")";
}

std::vector<MElement> build_M(const GammaGroup& g) {
    std::vector<MElement> out;
    for (std::size_t i = 0; i < g.classes().size(); ++i)
        for (std::size_t j = 0; j < g.classes()[i].chars.size(); ++j) out.push_back({i, j});
    return out;
}

Cyclotomic fourier_pairing(const GammaGroup& g, const MElement& m, const MElement& mp) {
    const FiniteGroup& grp = g.group();
    const GammaClass& cx = g.classes()[m.cls];
    const GammaClass& cy = g.classes()[mp.cls];
    const std::uint32_t x = cx.representative, y = cy.representative;
    Cyclotomic total(kGammaField);
    for (std::uint32_t e = 0; e < grp.size(); ++e) {
        const std::uint32_t h = grp.conj(e, y);  // e y e^-1
        if (grp.mul(x, h) != grp.mul(h, x)) continue;
        const std::uint32_t k = grp.conj(grp.inv(e), x);  // e^-1 x e
        total += g.value(m, h) * g.value(mp, k).conj();
    }
    total *= Rational(1, static_cast<long>(cx.centralizer.size() * cy.centralizer.size()));
    return total;
}

std::size_t FourierMatrix::index_of(const MElement& m) const {
    auto it = std::find(elements.begin(), elements.end(), m);
    if (it == elements.end()) throw Error(ErrorCode::InvalidArgument, "element not in M");
    return static_cast<std::size_t>(it - elements.begin());
}

bool FourierMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (entries[i][j] != entries[j][i]) return false;
    return true;
}

bool FourierMatrix::is_involutive() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) {
            Rational s;
            for (std::size_t k = 0; k < size(); ++k) s += entries[i][k] * entries[k][j];
            if (s != Rational(i == j ? 1 : 0)) return false;
        }
    return true;
}

bool FourierMatrix::denominators_divide(std::size_t n) const {
    const mpz_class nn(static_cast<unsigned long>(n));
    for (const auto& row : entries)
        for (const auto& x : row)
            if (!mpz_divisible_p(nn.get_mpz_t(), x.denominator().get_mpz_t())) return false;
    return true;
}

FourierMatrix fourier_matrix(const GammaGroup& g) {
    FourierMatrix f;
    f.elements = build_M(g);
    for (const auto& m : f.elements) {
        std::vector<Rational> row;
        for (const auto& mp : f.elements) {
            const Cyclotomic v = fourier_pairing(g, m, mp);
            if (!v.is_rational())
                throw Error(ErrorCode::DataIntegrity, "Fourier entry " + g.str(m) + "," + g.str(mp) +
                                                          " of " + g.name() + " is not rational: " + v.str());
            row.push_back(v.rational_value());
        }
        f.entries.push_back(std::move(row));
    }
    return f;
}

}  // namespace uniflip
