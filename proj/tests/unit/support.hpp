#pragma once

#include "uniflip/ppoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace test {

inline const std::string kDataDir = UNIFLIP_TEST_DATA_DIR;

inline std::shared_ptr<const uniflip::TypeContext> context(const std::string& type) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const uniflip::TypeContext>> cache;
    std::lock_guard lock(mu);
    auto& c = cache[type];
    if (!c) c = uniflip::TypeContext::load(uniflip::CartanType::parse(type), kDataDir);
    return c;
}

inline const uniflip::PolynomialEngine& engine(const std::string& type) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<uniflip::PolynomialEngine>> cache;
    auto ctx = context(type);
    std::lock_guard lock(mu);
    auto& e = cache[type];
    if (!e) e = std::make_unique<uniflip::PolynomialEngine>(ctx, 4);
    return *e;
}

inline uniflip::Poly P(std::initializer_list<long> c) {
    std::vector<uniflip::Rational> v;
    for (long x : c) v.emplace_back(x);
    return uniflip::Poly(std::move(v));
}

inline uniflip::Poly u(std::size_t k) { return uniflip::Poly::monomial(1, k); }

inline std::size_t orbit_named(const uniflip::PolynomialEngine& e, const std::string& name) {
    for (const auto& y : e.orbits())
        if (y.name == name) return y.id;
    throw std::runtime_error("no orbit " + name);
}

// Types whose data ships with the repository.
inline const std::vector<std::string> kAllTypes = {"A1", "A2", "A3", "A4", "B2", "C2", "B3",
                                                   "C3", "B4", "C4", "D4", "G2", "F4"};
inline const std::vector<std::string> kCentralTypes = {"A1", "B2", "C2", "B3", "C3",
                                                       "B4", "C4", "D4", "G2", "F4"};

}  // namespace test
