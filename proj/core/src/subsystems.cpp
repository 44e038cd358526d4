#include "uniflip/subsystems.hpp"

#include "uniflip/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace uniflip {

RootSubset generated_subsystem(const RootSystem& rs, const RootSubset& roots) {
    std::set<std::size_t> out;
    std::deque<std::size_t> queue;
    auto add = [&](std::size_t a) {
        if (out.insert(a).second) queue.push_back(a);
    };
    for (auto a : roots) {
        add(a);
        add(rs.negate(a));
    }
    std::vector<std::vector<std::uint16_t>> refl;
    for (auto a : roots) refl.push_back(rs.reflection_permutation(a));
    while (!queue.empty()) {
        const auto a = queue.front();
        queue.pop_front();
        for (const auto& p : refl) add(p[a]);
    }
    return RootSubset(out.begin(), out.end());
}

std::pair<CartanType, std::string> classify_subsystem(const RootSystem& rs, const RootSubset& roots) {
    if (roots.empty()) return {CartanType(), "T"};
    const Restriction vh(rs, roots);
    const auto& simple = vh.simple();
    const std::size_t k = simple.size();
    // Components of the subsystem diagram.
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        std::deque<std::size_t> q{i};
        comp[i] = ncomp;
        while (!q.empty()) {
            auto x = q.front();
            q.pop_front();
            for (std::size_t y = 0; y < k; ++y)
                if (comp[y] < 0 && rs.form(rs.root(simple[x]), rs.root(simple[y])) != 0) {
                    comp[y] = ncomp;
                    q.push_back(y);
                }
        }
        ++ncomp;
    }
    bool ambient_two_lengths = false;
    for (std::size_t i = 0; i < rs.num_positive(); ++i)
        if (rs.norm(i) != rs.norm(0)) ambient_two_lengths = true;

    struct Piece {
        SimpleFactor f;
        int tag;  // 0 none, 1 long, 2 short
    };
    std::vector<Piece> pieces;
    for (int c = 0; c < ncomp; ++c) {
        int rank = 0;
        std::int64_t lo = 0, hi = 0;
        std::size_t first = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (comp[i] != c) continue;
            if (rank == 0) first = simple[i];
            ++rank;
            const auto nrm = rs.norm(simple[i]);
            lo = lo ? std::min(lo, nrm) : nrm;
            hi = std::max(hi, nrm);
        }
        std::size_t count = 0, long_count = 0;
        for (auto a : roots) {
            // A root lies in component c iff it pairs nontrivially with some simple root of c
            // or is one of them; use coordinates in the subsystem basis.
            const auto& x = vh.coordinates(a);
            bool in = false;
            for (std::size_t i = 0; i < k; ++i)
                if (x[i] != 0) {
                    in = comp[i] == c;
                    break;
                }
            if (!in) continue;
            ++count;
            if (rs.norm(a) == hi) ++long_count;
        }
        SimpleFactor f{'A', rank};
        int tag = 0;
        const auto n = static_cast<std::size_t>(rank);
        if (lo == hi) {
            if (rank >= 4 && count == 2 * n * (n - 1)) f.series = 'D';
            else if (count != n * (n + 1))
                throw Error(ErrorCode::UnsupportedType, "unrecognized simply-laced subsystem component");
            if (ambient_two_lengths) tag = hi == rs.long_norm(rs.component_of(first)) ? 1 : 2;
        } else if (hi == 3 * lo) {
            f.series = 'G';
        } else if (rank == 4 && count == 48) {
            f.series = 'F';
        } else {
            f.series = (rank == 2 || long_count == 2 * n * (n - 1)) ? 'B' : 'C';
        }
        pieces.push_back({f, tag});
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        if (a.f.rank != b.f.rank) return a.f.rank > b.f.rank;
        if (a.f.series != b.f.series) return a.f.series < b.f.series;
        return a.tag < b.tag;
    });
    std::vector<SimpleFactor> factors;
    std::string label;
    for (const auto& p : pieces) {
        factors.push_back(p.f);
        if (!label.empty()) label += "x";
        label += std::string(1, p.f.series) + std::to_string(p.f.rank);
        if (p.tag == 1) label += "(long)";
        if (p.tag == 2) label += "(short)";
    }
    return {CartanType(factors), label};
}

Subsystem make_subsystem(const WeylGroup& w, const RootSubset& roots) {
    Subsystem s;
    s.roots = roots;
    std::sort(s.roots.begin(), s.roots.end());
    s.wh = reflection_subgroup(w, s.roots);
    s.vh = Restriction(w.root_system(), s.roots);
    std::tie(s.type, s.label) = classify_subsystem(w.root_system(), s.roots);
    s.stabilizer = setwise_stabilizer(full_group(w), s.roots);
    return s;
}

RootSubset canonical_form(const WeylGroup& w, const RootSubset& roots) {
    RootSubset best = roots;
    std::sort(best.begin(), best.end());
    for (std::uint32_t x = 0; x < w.order(); ++x) {
        RootSubset img = w.apply(x, roots);
        if (img < best) best = std::move(img);
    }
    return best;
}

namespace {

// Orbit of a subset under W, by closing under simple reflections.
std::set<RootSubset> orbit_of(const WeylGroup& w, const RootSubset& roots) {
    std::set<RootSubset> seen{roots};
    std::deque<RootSubset> q{roots};
    const int r = w.root_system().rank();
    while (!q.empty()) {
        RootSubset s = q.front();
        q.pop_front();
        for (int i = 0; i < r; ++i) {
            RootSubset t = w.apply(w.reflection(static_cast<std::size_t>(i)), s);
            if (seen.insert(t).second) q.push_back(std::move(t));
        }
    }
    return seen;
}

// Components of a closed subsystem as lists of its simple roots.
std::vector<RootSubset> simple_components(const RootSystem& rs, const RootSubset& simple) {
    std::vector<RootSubset> out;
    std::vector<bool> done(simple.size(), false);
    for (std::size_t i = 0; i < simple.size(); ++i) {
        if (done[i]) continue;
        RootSubset c{simple[i]};
        done[i] = true;
        for (std::size_t h = 0; h < c.size(); ++h)
            for (std::size_t j = 0; j < simple.size(); ++j)
                if (!done[j] && rs.form(rs.root(c[h]), rs.root(simple[j])) != 0) {
                    done[j] = true;
                    c.push_back(simple[j]);
                }
        out.push_back(c);
    }
    return out;
}

// Highest root of the component spanned by the given simple roots.
std::size_t component_highest(const RootSystem& rs, const RootSubset& comp) {
    const RootSubset sub = generated_subsystem(rs, comp);
    const Restriction vh(rs, sub);
    std::size_t best = 0;
    long best_height = -1;
    for (auto a : sub) {
        long h = 0;
        for (auto x : vh.coordinates(a)) h += x;
        if (h > best_height) {
            best_height = h;
            best = a;
        }
    }
    return best;
}

}  // namespace

std::vector<YOrbit> enumerate_pseudo_levis(const WeylGroup& w) {
    const RootSystem& rs = w.root_system();
    RootSubset all(rs.num_roots());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

    std::map<RootSubset, std::size_t> member_of;  // subset -> orbit slot
    std::vector<std::pair<RootSubset, std::size_t>> found;  // canonical form, orbit size
    std::deque<RootSubset> queue;
    auto visit = [&](const RootSubset& s) {
        if (member_of.count(s)) return;
        const auto orbit = orbit_of(w, s);
        for (const auto& t : orbit) member_of.emplace(t, found.size());
        found.emplace_back(*orbit.begin(), orbit.size());
        queue.push_back(*orbit.begin());
    };
    visit(all);
    while (!queue.empty()) {
        const RootSubset s = queue.front();
        queue.pop_front();
        if (s.empty()) continue;
        const Restriction vh(rs, s);
        const auto comps = simple_components(rs, vh.simple());
        for (std::size_t c = 0; c < comps.size(); ++c) {
            RootSubset others;
            for (std::size_t d = 0; d < comps.size(); ++d)
                if (d != c) others.insert(others.end(), comps[d].begin(), comps[d].end());
            RootSubset nodes = comps[c];
            nodes.push_back(rs.negate(component_highest(rs, comps[c])));
            const std::size_t n = nodes.size();
            for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
                RootSubset keep = others;
                for (std::size_t i = 0; i < n; ++i)
                    if (!(mask & (1ul << i))) keep.push_back(nodes[i]);
                RootSubset t = keep.empty() ? RootSubset{} : generated_subsystem(rs, keep);
                if (!is_closed_subsystem(rs, t)) continue;
                visit(t);
            }
        }
    }

    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (found[a].first.size() != found[b].first.size()) return found[a].first.size() > found[b].first.size();
        return found[a].first < found[b].first;
    });
    std::vector<YOrbit> out;
    std::map<std::string, int> seen_labels;
    for (auto i : order) {
        YOrbit y;
        y.id = out.size();
        y.rep = make_subsystem(w, found[i].first);
        y.orbit_size = found[i].second;
        y.name = y.rep.label;
        ++seen_labels[y.name];
        out.push_back(std::move(y));
    }
    std::map<std::string, int> counter;
    for (auto& y : out)
        if (seen_labels[y.name] > 1) y.name += "." + std::to_string(++counter[y.name]);
    return out;
}

std::size_t ZSet::class_of_element(std::uint32_t x) const {
    const std::size_t coset = quotient.coset_of.at(x);
    const std::size_t qc = quotient.group.class_of(static_cast<std::uint32_t>(coset));
    for (const auto& z : classes)
        if (z.quotient_class == qc) return z.index;
    throw Error(ErrorCode::InvalidArgument, "element outside the normalizer");
}

ZSet z_classes(const WeylGroup& w, const Subsystem& s) {
    ZSet z;
    z.quotient = quotient(s.stabilizer, s.wh);
    const auto& cls = z.quotient.group.classes();
    for (std::size_t c = 0; c < cls.size(); ++c) {
        ZClass zc;
        zc.index = c;
        zc.quotient_class = c;
        zc.lift = z.quotient.representatives[cls[c].representative];
        zc.size = cls[c].elements.size();
        zc.bang = c;
        z.classes.push_back(zc);
    }
    (void)w;
    return z;
}

void bang_involution(ZSet& z, const WeylGroup& w) {
    if (!w.longest_is_minus_one())
        throw Error(ErrorCode::W0NotCentral,
                    "the longest element of W(" + w.root_system().type().str() + ") does not act as -1");
    const auto& q = z.quotient;
    const auto w0 = static_cast<std::uint32_t>(q.coset_of.at(w.longest()));
    const auto& cls = q.group.classes();
    for (auto& zc : z.classes) {
        std::size_t image = static_cast<std::size_t>(-1);
        for (auto e : cls[zc.quotient_class].elements) {
            const std::size_t k = q.group.class_of(q.group.mul(w0, e));
            if (image == static_cast<std::size_t>(-1)) image = k;
            else if (image != k)
                throw Error(ErrorCode::DataIntegrity, "bang depends on the class representative");
        }
        zc.bang = image;
    }
    for (const auto& zc : z.classes)
        if (z.classes[zc.bang].bang != zc.index)
            throw Error(ErrorCode::DataIntegrity, "bang is not an involution");
    z.has_bang = true;
}

}  // namespace uniflip
