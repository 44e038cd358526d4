#pragma once

#include "uniflip/reptheory.hpp"
#include "uniflip/weyl.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace uniflip {

/// A closed symmetric subsystem with the groups attached to it.
struct Subsystem {
    RootSubset roots;
    CartanType type;
    /// Type with length tags, e.g. "A1(long)xA1(short)"; "T" when empty.
    std::string label;
    Restriction vh;
    WeylSubgroup wh;          ///< generated by the reflections in roots
    WeylSubgroup stabilizer;  ///< setwise stabilizer in W

    const RootSubset& simple() const { return vh.simple(); }
    std::size_t num_positive() const { return roots.size() / 2; }
};

/// Throws NotClosed.
Subsystem make_subsystem(const WeylGroup& w, const RootSubset& roots);

/// Cartan type and tagged label of a closed subsystem.
std::pair<CartanType, std::string> classify_subsystem(const RootSystem& rs, const RootSubset& roots);

/// Smallest subset (sorted, compared lexicographically) in the W-orbit.
RootSubset canonical_form(const WeylGroup& w, const RootSubset& roots);

struct YOrbit {
    std::size_t id = 0;
    std::string name;     ///< label, with ".k" appended when labels repeat
    Subsystem rep;        ///< canonical representative
    std::size_t orbit_size = 0;
};

/// W-orbits of subsystems reachable from the full system by repeatedly
/// deleting nodes from the extended diagram of a component. Ordered by
/// decreasing number of roots, then canonical form.
std::vector<YOrbit> enumerate_pseudo_levis(const WeylGroup& w);

/// Subsystem generated by the reflections in the given roots.
RootSubset generated_subsystem(const RootSystem& rs, const RootSubset& roots);

struct ZClass {
    std::size_t index = 0;
    std::size_t quotient_class = 0;  ///< class index in quotient.group
    std::uint32_t lift = 0;          ///< least element of the representative coset
    std::size_t size = 0;
    std::size_t bang = 0;            ///< index of z!
};

/// Conjugacy classes of N_W(Sigma)/W_Sigma.
struct ZSet {
    CosetQuotient quotient;
    std::vector<ZClass> classes;
    bool has_bang = false;

    std::size_t size() const { return classes.size(); }
    /// ZClass index of the class containing the coset of x in N.
    std::size_t class_of_element(std::uint32_t x) const;
};

/// Throws NotNormal (an internal inconsistency).
ZSet z_classes(const WeylGroup& w, const Subsystem& s);

/// Sets z! = class of (image of w0) z. Throws W0NotCentral unless w0 = -1.
void bang_involution(ZSet& z, const WeylGroup& w);

}  // namespace uniflip
