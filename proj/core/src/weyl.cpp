#include "uniflip/weyl.hpp"

#include "uniflip/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace uniflip {

WeylGroup::WeylGroup(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
    const RootSystem& r = *rs_;
    std::vector<Perm> gens;
    for (int i = 0; i < r.rank(); ++i) gens.push_back(r.reflection_permutation(i));
    if (gens.empty()) {
        Perm id(r.num_roots());
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint16_t>(i);
        perms_.push_back(id);
        group_ = FiniteGroup(1, {0});
    } else {
        group_ = FiniteGroup::from_permutations(gens, &perms_);
    }
    const auto n = static_cast<std::size_t>(r.rank());
    for (std::uint32_t w = 0; w < perms_.size(); ++w) {
        const Perm& p = perms_[w];
        index_.emplace(p, w);
        IntMatrix m(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const RootVec& img = r.root(p[j]);
            for (std::size_t i = 0; i < n; ++i) m(i, j) = img[i];
        }
        matrices_.push_back(std::move(m));
        int len = 0;
        for (std::size_t i = 0; i < r.num_positive(); ++i)
            if (!r.is_positive(p[i])) ++len;
        lengths_.push_back(len);
        if (static_cast<std::size_t>(len) == r.num_positive()) longest_ = w;
    }
    for (std::size_t a = 0; a < r.num_roots(); ++a)
        reflections_.push_back(index_of(r.reflection_permutation(a)));
}

std::uint32_t WeylGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "permutation is not in W");
    return it->second;
}

std::uint32_t WeylGroup::word(const std::vector<int>& simple) const {
    std::uint32_t w = 0;
    for (int s : simple) {
        if (s < 0 || s >= rs_->rank())
            throw Error(ErrorCode::InvalidArgument, "simple reflection index out of range");
        w = mul(w, reflections_[static_cast<std::size_t>(s)]);
    }
    return w;
}

std::vector<int> WeylGroup::reduced_word(std::uint32_t w) const {
    std::vector<int> out;
    while (lengths_[w] > 0) {
        for (int i = 0; i < rs_->rank(); ++i) {
            const auto v = mul(reflections_[static_cast<std::size_t>(i)], w);
            if (lengths_[v] < lengths_[w]) {
                out.push_back(i);
                w = v;
                break;
            }
        }
    }
    return out;
}

RootSubset WeylGroup::apply(std::uint32_t w, const RootSubset& s) const {
    RootSubset out;
    out.reserve(s.size());
    for (auto a : s) out.push_back(perms_[w][a]);
    std::sort(out.begin(), out.end());
    return out;
}

bool WeylSubgroup::contains(std::uint32_t w) const {
    return std::binary_search(elements.begin(), elements.end(), w);
}

FiniteGroup WeylSubgroup::as_group() const { return subgroup(ambient->group(), elements); }

WeylSubgroup full_group(const WeylGroup& w) {
    WeylSubgroup g;
    g.ambient = &w;
    const auto& rs = w.root_system();
    for (int i = 0; i < rs.rank(); ++i) g.generators.push_back(static_cast<std::size_t>(i));
    g.elements.resize(w.order());
    for (std::uint32_t i = 0; i < w.order(); ++i) g.elements[i] = i;
    return g;
}

LongestElement longest_element(const WeylGroup& w) {
    return {w.element(w.longest()), w.longest(), w.longest_is_minus_one()};
}

bool is_closed_subsystem(const RootSystem& rs, const RootSubset& s) {
    std::vector<bool> in(rs.num_roots(), false);
    for (auto a : s) {
        if (a >= rs.num_roots()) return false;
        in[a] = true;
    }
    for (auto a : s) {
        if (!in[rs.negate(a)]) return false;
        for (auto b : s) {
            if (!in[static_cast<std::size_t>(rs.index_of(rs.reflect(rs.root(b), a)))]) return false;
            RootVec sum = rs.root(a);
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += rs.root(b)[i];
            const long idx = rs.index_of(sum);
            if (idx >= 0 && !in[static_cast<std::size_t>(idx)]) return false;
        }
    }
    return true;
}

WeylSubgroup reflection_subgroup(const WeylGroup& w, const RootSubset& sigma) {
    if (!is_closed_subsystem(w.root_system(), sigma))
        throw Error(ErrorCode::NotClosed, "root subset is not a closed subsystem");
    WeylSubgroup h;
    h.ambient = &w;
    h.generators = sigma;
    std::set<std::uint32_t> seen{0};
    std::deque<std::uint32_t> queue{0};
    std::vector<std::uint32_t> gens;
    for (auto a : sigma)
        if (w.root_system().is_positive(a)) gens.push_back(w.reflection(a));
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        for (auto s : gens) {
            const auto y = w.mul(x, s);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    h.elements.assign(seen.begin(), seen.end());
    return h;
}

WeylSubgroup setwise_stabilizer(const WeylSubgroup& g, const RootSubset& sigma) {
    const WeylGroup& w = *g.ambient;
    std::vector<bool> in(w.root_system().num_roots(), false);
    for (auto a : sigma) in[a] = true;
    WeylSubgroup s;
    s.ambient = g.ambient;
    for (auto x : g.elements) {
        const Perm& p = w.perm(x);
        if (std::all_of(sigma.begin(), sigma.end(), [&](std::size_t a) { return in[p[a]]; }))
            s.elements.push_back(x);
    }
    return s;
}

std::vector<std::uint32_t> CosetQuotient::coset(std::size_t c) const {
    std::vector<std::uint32_t> out;
    for (auto k : kernel.elements) out.push_back(numerator.ambient->mul(representatives[c], k));
    std::sort(out.begin(), out.end());
    return out;
}

CosetQuotient quotient(const WeylSubgroup& n, const WeylSubgroup& k) {
    const WeylGroup& w = *n.ambient;
    for (auto x : k.elements)
        if (!n.contains(x)) throw Error(ErrorCode::NotNormal, "kernel is not a subgroup of N");
    for (auto x : n.elements)
        for (auto y : k.elements)
            if (!k.contains(w.mul(w.mul(x, y), w.inv(x))))
                throw Error(ErrorCode::NotNormal, "subgroup is not normal");

    CosetQuotient q;
    q.numerator = n;
    q.kernel = k;
    for (auto x : n.elements) {
        if (q.coset_of.count(x)) continue;
        // Elements are visited in increasing order, so x is the least in its coset.
        const std::size_t c = q.representatives.size();
        q.representatives.push_back(x);
        for (auto y : k.elements) q.coset_of.emplace(w.mul(x, y), c);
    }
    const std::size_t m = q.representatives.size();
    std::vector<std::uint32_t> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            table[a * m + b] = static_cast<std::uint32_t>(
                q.coset_of.at(w.mul(q.representatives[a], q.representatives[b])));
    q.group = FiniteGroup(m, std::move(table));
    return q;
}

}  // namespace uniflip
