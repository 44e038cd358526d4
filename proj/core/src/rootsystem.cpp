#include "uniflip/rootsystem.hpp"

#include "uniflip/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace uniflip {

namespace {

constexpr int kMaxRank = 8;
constexpr long double kMaxWeylOrder = 50000;

void validate(const SimpleFactor& f) {
    const std::string name = std::string(1, f.series) + std::to_string(f.rank);
    bool ok = false;
    switch (f.series) {
        case 'A': ok = f.rank >= 1 && f.rank <= kMaxRank; break;
        case 'B': ok = f.rank >= 2 && f.rank <= kMaxRank; break;
        case 'C': ok = f.rank >= 2 && f.rank <= kMaxRank; break;
        case 'D': ok = f.rank >= 3 && f.rank <= kMaxRank; break;
        case 'G': ok = f.rank == 2; break;
        case 'F': ok = f.rank == 4; break;
        default: ok = false;
    }
    if (!ok) throw Error(ErrorCode::UnsupportedType, "unsupported Cartan type " + name);
}

// Gram block for one factor, Bourbaki numbering.
std::vector<std::vector<std::int64_t>> factor_gram(const SimpleFactor& f) {
    const int n = f.rank;
    std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n, 0));
    auto link = [&](int i, int j, std::int64_t v) { g[i][j] = g[j][i] = v; };
    switch (f.series) {
        case 'A':
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case 'B':
            for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 4 : 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
            break;
        case 'C':
            for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 2 : 4;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 2, n - 1, -2);
            break;
        case 'D':
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case 'G':
            g[0][0] = 6;
            g[1][1] = 2;
            link(0, 1, -3);
            break;
        case 'F':
            g[0][0] = g[1][1] = 4;
            g[2][2] = g[3][3] = 2;
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
            break;
        default:
            break;
    }
    return g;
}

}  // namespace

std::vector<int> degrees_of(const SimpleFactor& f) {
    const int n = f.rank;
    std::vector<int> d;
    switch (f.series) {
        case 'A':
            for (int i = 2; i <= n + 1; ++i) d.push_back(i);
            break;
        case 'B':
        case 'C':
            for (int i = 1; i <= n; ++i) d.push_back(2 * i);
            break;
        case 'D':
            for (int i = 1; i < n; ++i) d.push_back(2 * i);
            d.push_back(n);
            break;
        case 'G': d = {2, 6}; break;
        case 'F': d = {2, 6, 8, 12}; break;
        case 'E':
            if (n == 6) d = {2, 5, 6, 8, 9, 12};
            if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
            if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
        default: break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

CartanType::CartanType(std::vector<SimpleFactor> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) validate(f);
}

CartanType CartanType::parse(const std::string& text) {
    std::vector<SimpleFactor> fs;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(c));
    if (s.empty() || s == "T") return CartanType{};
    std::size_t pos = 0;
    while (pos < s.size()) {
        const char series = s[pos++];
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || !std::isalpha(static_cast<unsigned char>(series)))
            throw Error(ErrorCode::UnsupportedType, "cannot parse Cartan type '" + text + "'");
        fs.push_back({series, std::stoi(s.substr(start, pos - start))});
        if (pos < s.size()) {
            if (s[pos] != 'X' && s[pos] != '*')
                throw Error(ErrorCode::UnsupportedType, "cannot parse Cartan type '" + text + "'");
            ++pos;
        }
    }
    return CartanType(std::move(fs));
}

int CartanType::rank() const {
    int r = 0;
    for (const auto& f : factors_) r += f.rank;
    return r;
}

std::string CartanType::str() const {
    if (factors_.empty()) return "T";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "x";
        s += factors_[i].series + std::to_string(factors_[i].rank);
    }
    return s;
}

long RootSystem::index_of(const RootVec& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

int RootSystem::height(std::size_t i) const {
    return std::accumulate(roots_[i].begin(), roots_[i].end(), 0);
}

std::int64_t RootSystem::form(const RootVec& a, const RootVec& b) const {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
    }
    return s;
}

std::int64_t RootSystem::cartan_pairing(const RootVec& a, const RootVec& b) const {
    const std::int64_t bb = form(b, b);
    const std::int64_t num = 2 * form(a, b);
    if (num % bb != 0) throw Error(ErrorCode::InvalidArgument, "non-integral Cartan pairing");
    return num / bb;
}

std::vector<std::vector<std::int64_t>> RootSystem::cartan_matrix() const {
    std::vector<std::vector<std::int64_t>> a(rank_, std::vector<std::int64_t>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) a[i][j] = 2 * gram_[i][j] / gram_[j][j];
    return a;
}

RootVec RootSystem::reflect(const RootVec& v, std::size_t root_index) const {
    const RootVec& a = roots_[root_index];
    const std::int64_t c = cartan_pairing(v, a);
    RootVec r = v;
    for (int i = 0; i < rank_; ++i) r[i] -= static_cast<int>(c * a[i]);
    return r;
}

std::vector<std::uint16_t> RootSystem::reflection_permutation(std::size_t i) const {
    std::vector<std::uint16_t> p(roots_.size());
    for (std::size_t j = 0; j < roots_.size(); ++j)
        p[j] = static_cast<std::uint16_t>(index_of(reflect(roots_[j], i)));
    return p;
}

int RootSystem::component_of(std::size_t root_index) const { return root_component_[root_index]; }

std::size_t RootSystem::highest_root(int component) const {
    std::size_t best = 0;
    int best_h = -1;
    for (std::size_t i = 0; i < num_pos_; ++i)
        if (root_component_[i] == component && height(i) > best_h) {
            best_h = height(i);
            best = i;
        }
    return best;
}

std::int64_t RootSystem::long_norm(int component) const {
    std::int64_t m = 0;
    for (int s : components_[component]) m = std::max(m, gram_[s][s]);
    return m;
}

std::vector<int> reflection_degrees(const Poly& poincare, int rank) {
    // Q = P * (1 - u)^rank must equal prod (1 - u^{d_i}).
    Poly q = poincare * poly_pow(Poly{1, -1}, static_cast<unsigned>(rank));
    std::vector<int> degs;
    while (q != Poly::constant(1)) {
        auto v = (q - Poly::constant(1)).valuation();
        if (!v || q.coeff(0) != Rational(1) || q.coeff(*v).sign() >= 0)
            throw Error(ErrorCode::FactorizationFailure,
                        "length generating function does not factor: " + poincare.str());
        const auto d = *v;
        auto next = poly_divide_exact(q, Poly::constant(1) - Poly::monomial(1, d));
        if (!next)
            throw Error(ErrorCode::FactorizationFailure,
                        "1 - u^" + std::to_string(d) + " does not divide " + q.str());
        q = *next;
        degs.push_back(static_cast<int>(d));
        if (static_cast<int>(degs.size()) > rank)
            throw Error(ErrorCode::FactorizationFailure, "too many factors");
    }
    if (static_cast<int>(degs.size()) != rank)
        throw Error(ErrorCode::FactorizationFailure, "factor count differs from rank");
    std::sort(degs.begin(), degs.end());
    return degs;
}

std::vector<int> reflection_degrees(const RootSystem& rs) {
    return reflection_degrees(rs.poincare_polynomial(), rs.rank());
}

RootSystem build_root_system(const CartanType& t) {
    long double expected = 1;
    for (const auto& f : t.factors()) {
        validate(f);
        for (int d : degrees_of(f)) expected *= d;
    }
    if (expected > kMaxWeylOrder)
        throw Error(ErrorCode::UnsupportedType,
                    "Weyl group of " + t.str() + " is too large to enumerate");

    RootSystem rs;
    rs.type_ = t;
    rs.rank_ = t.rank();
    const int n = rs.rank_;
    rs.gram_.assign(n, std::vector<std::int64_t>(n, 0));
    int offset = 0;
    for (const auto& f : t.factors()) {
        const auto g = factor_gram(f);
        std::vector<int> comp;
        for (int i = 0; i < f.rank; ++i) {
            comp.push_back(offset + i);
            for (int j = 0; j < f.rank; ++j) rs.gram_[offset + i][offset + j] = g[i][j];
        }
        rs.components_.push_back(std::move(comp));
        offset += f.rank;
    }

    // Close the simple roots under simple reflections.
    auto simple_reflect = [&](const RootVec& v, int i) {
        std::int64_t num = 0;
        for (int j = 0; j < n; ++j) num += 2 * v[j] * rs.gram_[j][i];
        const std::int64_t c = num / rs.gram_[i][i];
        RootVec r = v;
        r[i] -= static_cast<int>(c);
        return r;
    };
    std::set<RootVec> found;
    std::deque<RootVec> queue;
    for (int i = 0; i < n; ++i) {
        RootVec e(n, 0);
        e[i] = 1;
        found.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        RootVec v = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            RootVec w = simple_reflect(v, i);
            if (found.insert(w).second) queue.push_back(std::move(w));
        }
    }
    std::vector<RootVec> pos;
    for (const auto& v : found)
        if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) pos.push_back(v);
    std::sort(pos.begin(), pos.end(), [](const RootVec& a, const RootVec& b) {
        const int ha = std::accumulate(a.begin(), a.end(), 0);
        const int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    if (pos.size() * 2 != found.size())
        throw Error(ErrorCode::InvalidArgument, "root closure is not symmetric");
    rs.num_pos_ = pos.size();
    rs.roots_ = pos;
    for (const auto& v : pos) {
        RootVec m = v;
        for (auto& x : m) x = -x;
        rs.roots_.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < rs.roots_.size(); ++i) {
        rs.index_.emplace(rs.roots_[i], i);
        rs.norms_.push_back(rs.form(rs.roots_[i], rs.roots_[i]));
        int comp = -1;
        for (int j = 0; j < n && comp < 0; ++j)
            if (rs.roots_[i][j] != 0)
                for (std::size_t c = 0; c < rs.components_.size(); ++c)
                    if (std::find(rs.components_[c].begin(), rs.components_[c].end(), j) !=
                        rs.components_[c].end())
                        comp = static_cast<int>(c);
        rs.root_component_.push_back(comp);
    }

    // Length generating function by breadth-first search over W acting on roots.
    std::vector<std::vector<std::uint16_t>> gens;
    for (int i = 0; i < n; ++i) gens.push_back(rs.reflection_permutation(i));
    std::vector<std::uint16_t> id(rs.roots_.size());
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<std::uint16_t>> seen{id};
    std::vector<std::vector<std::uint16_t>> layer{id};
    std::vector<Rational> counts;
    while (!layer.empty()) {
        counts.emplace_back(static_cast<long>(layer.size()));
        std::vector<std::vector<std::uint16_t>> next;
        for (const auto& p : layer)
            for (const auto& s : gens) {
                std::vector<std::uint16_t> q(p.size());
                for (std::size_t j = 0; j < p.size(); ++j) q[j] = s[p[j]];
                if (seen.insert(q).second) next.push_back(std::move(q));
            }
        layer = std::move(next);
    }
    rs.poincare_ = Poly(std::move(counts));
    rs.degrees_ = reflection_degrees(rs.poincare_, n);
    return rs;
}

std::vector<ExtendedDiagram> extended_diagram(const RootSystem& rs) {
    std::vector<ExtendedDiagram> out;
    for (std::size_t c = 0; c < rs.components().size(); ++c) {
        ExtendedDiagram d;
        d.component = static_cast<int>(c);
        const std::size_t theta = rs.highest_root(static_cast<int>(c));
        d.nodes.push_back({rs.negate(theta), 1, true});
        for (int s : rs.components()[c])
            d.nodes.push_back({static_cast<std::size_t>(s), rs.root(theta)[s], false});
        const std::size_t m = d.nodes.size();
        d.adjacent.assign(m, std::vector<bool>(m, false));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                d.adjacent[i][j] = i != j && rs.form(rs.root(d.nodes[i].root),
                                                     rs.root(d.nodes[j].root)) != 0;
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace uniflip
