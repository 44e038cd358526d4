#pragma once

#include "uniflip/context.hpp"
#include "uniflip/subsystems.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace uniflip {

struct PProvenance {
    std::string type;
    std::size_t orbit = 0;
    std::size_t family = 0;
    std::size_t m = 0;  ///< index into the family's M
    std::size_t z = 0;
    std::uint32_t lift = 0;
    RootSubset representative;
};

struct PPolynomial {
    Poly poly;
    PProvenance prov;
};

/// Sum over E in c of Delta(m) <m, m_E> times the graded trace of the coset
/// lift W_H on (coinvariants of W_H tensor E)^{W_H}.
Poly compute_P(const TypeContext& ctx, const Family& f, std::size_t m, const Restriction& vh,
               const WeylSubgroup& wh, std::uint32_t lift);

/// Tensor-invariant graded traces of every irreducible of W for one coset.
std::vector<Poly> member_traces(const TypeContext& ctx, const Restriction& vh, const WeylSubgroup& wh,
                                std::uint32_t lift);

/// Orbits, Z-sets and graded traces of one type, computed once.
class PolynomialEngine {
public:
    /// Work is spread over `jobs` threads by orbit.
    explicit PolynomialEngine(std::shared_ptr<const TypeContext> ctx, unsigned jobs = 1);

    const TypeContext& context() const { return *ctx_; }
    const std::vector<YOrbit>& orbits() const { return orbits_; }
    const ZSet& zset(std::size_t orbit) const { return zsets_[orbit]; }
    /// Traces per irreducible for (orbit, z).
    const std::vector<Poly>& traces(std::size_t orbit, std::size_t z) const { return traces_[orbit][z]; }
    /// Throws W0NotCentral unless w0 = -1.
    const BangMap& bang(std::size_t family) const;
    bool has_bang() const { return ctx_->weyl().longest_is_minus_one(); }

    PPolynomial P(std::size_t family, std::size_t m, std::size_t orbit, std::size_t z) const;

    /// Orbit by id, name, or "full"; throws UnknownFilter.
    std::size_t find_orbit(const std::string& key) const;
    /// Family by id, "trivial", "sign" or a member label; throws UnknownFilter.
    std::size_t find_family(const std::string& key) const;

private:
    std::shared_ptr<const TypeContext> ctx_;
    std::vector<YOrbit> orbits_;
    std::vector<ZSet> zsets_;
    std::vector<std::vector<std::vector<Poly>>> traces_;
    std::vector<BangMap> bangs_;
};

struct SignCheck {
    std::size_t orbit, family, m, z;
    std::size_t m_bang, z_bang;
    bool pass;
    Poly lhs;  ///< P_{m!, z!}(u)
    Poly rhs;  ///< (-1)^{A_c} P_{m,z}(-u)
};

struct SignReport {
    std::vector<SignCheck> checks;
    bool all_pass() const;
};

/// Every orbit, family, m and z. Throws W0NotCentral.
SignReport verify_sign_theorem(const PolynomialEngine& e);

struct IndependenceReport {
    std::size_t orbit = 0;
    bool skipped = false;
    std::vector<std::string> alternatives;  ///< description of each alternative used
    std::size_t comparisons = 0;
    std::size_t failures = 0;
};

/// Recomputes P for every (c, m, z) through a conjugate subsystem, another
/// element of the lifted coset and a conjugate lift, and compares.
IndependenceReport independence_check(const PolynomialEngine& e, std::size_t orbit);

/// Exact value at u = q.
Rational specialize(const Poly& p, const Rational& q);
/// Throws NonIntegralDegree unless the value at q is a positive integer.
Rational specialize_degree(const Poly& p, long q);

struct DegreeCheck {
    std::size_t family, m;
    long q;
    Rational value;
    bool pass;
};
/// Full-system values at q in {2,3,4,5,7,8,9,16} by default.
std::vector<DegreeCheck> verify_degrees(const PolynomialEngine& e,
                                        const std::vector<long>& qs = {2, 3, 4, 5, 7, 8, 9, 16});

struct TorusOrder {
    Poly poly;  ///< det(u - w)
    int eps = 1;  ///< (-1)^(rank - dim of the fixed space)
};
TorusOrder torus_order(const IntMatrix& w);

struct GroupOrder {
    Poly poly;  ///< u^{N_H} prod (u^{d_i} - eps_i)
    /// Per basic degree d_i, the order of the root of unity eps_i; degrees
    /// are listed increasingly and eps_i runs over whole Galois orbits.
    std::vector<std::pair<int, int>> eps;
};
/// Throws ProductFormMismatch when the twisted Molien series has no product form.
GroupOrder group_order_poly(const WeylGroup& w, const Subsystem& s, std::uint32_t n);

struct ClassIndexReport {
    std::vector<std::size_t> sizes;  ///< orbits of W_H on n W_H by conjugation
    std::size_t total = 0;
    bool pass = false;  ///< total == |W_H|
};
ClassIndexReport class_index_identity(const WeylGroup& w, const Subsystem& s, std::uint32_t n);

}  // namespace uniflip
