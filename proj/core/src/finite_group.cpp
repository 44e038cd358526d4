#include "uniflip/finite_group.hpp"

#include "uniflip/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace uniflip {

Perm compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm invert(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint16_t>(i);
    return r;
}

FiniteGroup::FiniteGroup(std::size_t n, std::vector<std::uint32_t> table)
    : n_(n), table_(std::move(table)) {
    if (table_.size() != n_ * n_ || n_ == 0)
        throw Error(ErrorCode::InvalidArgument, "bad multiplication table");
    inverse_.assign(n_, 0);
    for (std::uint32_t a = 0; a < n_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a)
            throw Error(ErrorCode::InvalidArgument, "element 0 is not the identity");
        bool found = false;
        for (std::uint32_t b = 0; b < n_; ++b)
            if (mul(a, b) == 0) {
                inverse_[a] = b;
                found = true;
                break;
            }
        if (!found) throw Error(ErrorCode::InvalidArgument, "element without inverse");
    }
    orders_.assign(n_, 0);
    for (std::uint32_t a = 0; a < n_; ++a) {
        std::uint32_t x = a, k = 1;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        orders_[a] = k;
    }
    class_of_.assign(n_, static_cast<std::size_t>(-1));
    for (std::uint32_t a = 0; a < n_; ++a) {
        if (class_of_[a] != static_cast<std::size_t>(-1)) continue;
        std::set<std::uint32_t> cls;
        for (std::uint32_t x = 0; x < n_; ++x) cls.insert(conj(x, a));
        ConjugacyClass c{a, {cls.begin(), cls.end()}, orders_[a]};
        for (auto e : c.elements) class_of_[e] = classes_.size();
        classes_.push_back(std::move(c));
    }
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& generators,
                                           std::vector<Perm>* elements_out,
                                           std::size_t max_order) {
    if (generators.empty() && !elements_out)
        return FiniteGroup(1, {0});
    const std::size_t deg = generators.empty() ? 0 : generators.front().size();
    Perm id(deg);
    std::iota(id.begin(), id.end(), 0);
    std::set<Perm> seen{id};
    std::deque<Perm> queue{id};
    while (!queue.empty()) {
        Perm p = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : generators) {
            Perm q = compose(s, p);
            if (seen.insert(q).second) {
                if (seen.size() > max_order)
                    throw Error(ErrorCode::TooLarge,
                                "group order exceeds " + std::to_string(max_order));
                queue.push_back(std::move(q));
            }
        }
    }
    std::vector<Perm> elems(seen.begin(), seen.end());  // lexicographic; identity first
    std::map<Perm, std::uint32_t> index;
    for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    const std::size_t n = elems.size();
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
    if (elements_out) *elements_out = std::move(elems);
    return FiniteGroup(n, std::move(table));
}

std::uint32_t FiniteGroup::pow(std::uint32_t a, long k) const {
    const long o = orders_[a];
    long e = ((k % o) + o) % o;
    std::uint32_t r = 0;
    for (long i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

std::uint32_t FiniteGroup::exponent() const {
    std::uint32_t e = 1;
    for (auto o : orders_) e = std::lcm(e, o);
    return e;
}

std::size_t FiniteGroup::inverse_class(std::size_t c) const {
    return class_of_[inverse_[classes_[c].representative]];
}

std::size_t FiniteGroup::power_class(std::size_t c, long k) const {
    return class_of_[pow(classes_[c].representative, k)];
}

std::vector<std::uint32_t> FiniteGroup::centralizer(std::uint32_t a) const {
    std::vector<std::uint32_t> z;
    for (std::uint32_t x = 0; x < n_; ++x)
        if (mul(x, a) == mul(a, x)) z.push_back(x);
    return z;
}

bool FiniteGroup::is_abelian() const { return classes_.size() == n_; }

FiniteGroup subgroup(const FiniteGroup& g, const std::vector<std::uint32_t>& elements) {
    if (elements.empty() || elements.front() != 0)
        throw Error(ErrorCode::InvalidArgument, "subgroup element list must start with identity");
    std::map<std::uint32_t, std::uint32_t> local;
    for (std::uint32_t i = 0; i < elements.size(); ++i) local.emplace(elements[i], i);
    const std::size_t n = elements.size();
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto it = local.find(g.mul(elements[a], elements[b]));
            if (it == local.end())
                throw Error(ErrorCode::InvalidArgument, "element subset is not closed");
            table[a * n + b] = it->second;
        }
    return FiniteGroup(n, std::move(table));
}

}  // namespace uniflip
