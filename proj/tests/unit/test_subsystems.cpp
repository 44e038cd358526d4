#include "support.hpp"

#include "uniflip/error.hpp"

#include <doctest.h>

#include <set>

using namespace uniflip;

namespace {

std::vector<std::string> names(const std::vector<YOrbit>& ys) {
    std::vector<std::string> out;
    for (const auto& y : ys) out.push_back(y.name);
    return out;
}

}  // namespace

TEST_SUITE("subsystems") {

TEST_CASE("orbit lists") {
    CHECK(names(test::engine("A1").orbits()) == std::vector<std::string>{"A1", "T"});
    CHECK(names(test::engine("B2").orbits()) ==
          std::vector<std::string>{"B2", "A1(long)xA1(long)", "A1(long)", "A1(short)", "T"});
    CHECK(names(test::engine("G2").orbits()) ==
          std::vector<std::string>{"G2", "A2(long)", "A1(long)xA1(short)", "A1(long)", "A1(short)", "T"});
    CHECK(test::engine("F4").orbits().size() == 24);
}

TEST_CASE("orbit sizes times stabilizer orders give |W|") {
    for (const auto& t : test::kAllTypes) {
        CAPTURE(t);
        const auto& e = test::engine(t);
        const std::size_t order = e.context().weyl().order();
        for (const auto& y : e.orbits()) {
            CAPTURE(y.name);
            CHECK(y.orbit_size * y.rep.stabilizer.order() == order);
            CHECK(is_closed_subsystem(e.context().root_system(), y.rep.roots));
            CHECK(y.rep.simple().size() == static_cast<std::size_t>(y.rep.type.rank()));
            CHECK(canonical_form(e.context().weyl(), y.rep.roots) == y.rep.roots);
            for (auto x : y.rep.wh.elements) CHECK(y.rep.stabilizer.contains(x));
        }
        CHECK(e.orbits().front().rep.roots.size() == e.context().root_system().num_roots());
        CHECK(e.orbits().back().rep.roots.empty());
    }
}

TEST_CASE("enumeration is closed under one more deletion step") {
    for (const char* t : {"B3", "G2", "F4", "D4"}) {
        CAPTURE(t);
        const auto& e = test::engine(t);
        const WeylGroup& w = e.context().weyl();
        const RootSystem& rs = e.context().root_system();
        std::set<RootSubset> known;
        for (const auto& y : e.orbits()) known.insert(y.rep.roots);
        for (const auto& y : e.orbits()) {
            // Components of the representative, each with its simple roots and lowest root.
            const auto& simple = y.rep.simple();
            for (std::size_t drop = 0; drop < simple.size(); ++drop) {
                RootSubset gens;
                for (std::size_t i = 0; i < simple.size(); ++i)
                    if (i != drop) gens.push_back(simple[i]);
                const RootSubset sub = generated_subsystem(rs, gens);
                CHECK(known.count(canonical_form(w, sub)) == 1);
            }
        }
    }
}

TEST_CASE("classification labels") {
    const auto& e = test::engine("B2");
    const RootSystem& rs = e.context().root_system();
    CHECK(classify_subsystem(rs, {}).second == "T");
    for (const auto& y : e.orbits()) CHECK(classify_subsystem(rs, y.rep.roots).second == y.name);
    CHECK(classify_subsystem(test::context("F4")->root_system(), test::engine("F4").orbits()[0].rep.roots).first.str() ==
          "F4");
}

TEST_CASE("Z sets") {
    const auto& g2 = test::engine("G2");
    CHECK(g2.zset(0).size() == 1);
    CHECK(g2.zset(0).classes[0].bang == 0);
    const std::size_t a2 = test::orbit_named(g2, "A2(long)");
    REQUIRE(g2.zset(a2).size() == 2);
    CHECK(g2.zset(a2).classes[0].bang == 1);
    CHECK(g2.zset(a2).classes[1].bang == 0);

    const auto& b2 = test::engine("B2");
    const std::size_t t = test::orbit_named(b2, "T");
    CHECK(b2.zset(t).size() == 5);
    const std::size_t aa = test::orbit_named(b2, "A1(long)xA1(long)");
    REQUIRE(b2.zset(aa).size() == 2);
    for (const auto& c : b2.zset(aa).classes) CHECK(c.bang == c.index);
    for (const auto& ty : test::kAllTypes) {
        const auto& e = test::engine(ty);
        CHECK(e.zset(0).size() == 1);
        for (const auto& y : e.orbits()) {
            std::size_t total = 0;
            for (const auto& c : e.zset(y.id).classes) {
                total += c.size;
                CHECK(e.zset(y.id).class_of_element(c.lift) == c.index);
                if (e.has_bang()) CHECK(e.zset(y.id).classes[c.bang].bang == c.index);
            }
            CHECK(total * y.rep.wh.order() == y.rep.stabilizer.order());
        }
    }
}

TEST_CASE("the bang involution needs w0 = -1") {
    const auto& e = test::engine("A2");
    ZSet z = z_classes(e.context().weyl(), e.orbits()[0].rep);
    try {
        bang_involution(z, e.context().weyl());
        FAIL("accepted");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::W0NotCentral);
    }
}

TEST_CASE("non-closed subsets are rejected") {
    const auto ctx = test::context("B2");
    RootSubset shorts;
    for (std::size_t a = 0; a < ctx->root_system().num_roots(); ++a)
        if (ctx->root_system().norm(a) < ctx->root_system().long_norm(0)) shorts.push_back(a);
    try {
        make_subsystem(ctx->weyl(), shorts);
        FAIL("accepted");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::NotClosed);
    }
}

}
