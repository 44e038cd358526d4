#include "support.hpp"

#include "uniflip/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace uniflip;

namespace {

RootSystem build(const std::string& t) { return build_root_system(CartanType::parse(t)); }

}  // namespace

TEST_SUITE("rootsystem") {

TEST_CASE("sizes and degrees") {
    struct Row {
        const char* type;
        std::size_t roots;
        std::vector<int> degrees;
    };
    const std::vector<Row> rows = {{"A1", 2, {2}},          {"A2", 6, {2, 3}},         {"B2", 8, {2, 4}},
                                   {"C3", 18, {2, 4, 6}},   {"D4", 24, {2, 4, 4, 6}}, {"G2", 12, {2, 6}},
                                   {"F4", 48, {2, 6, 8, 12}}, {"A1xA1", 4, {2, 2}}};
    for (const auto& r : rows) {
        CAPTURE(r.type);
        const RootSystem rs = build(r.type);
        CHECK(rs.num_roots() == r.roots);
        CHECK(rs.num_positive() * 2 == r.roots);
        auto d = rs.degrees();
        std::sort(d.begin(), d.end());
        CHECK(d == r.degrees);
        CHECK(std::accumulate(d.begin(), d.end(), 0) - rs.rank() == static_cast<int>(rs.num_positive()));
    }
}

TEST_CASE("degrees reproduce the length generating function") {
    for (const auto& t : test::kAllTypes) {
        CAPTURE(t);
        const RootSystem rs = build(t);
        Poly prod = Poly::constant(1);
        for (int d : rs.degrees()) {
            std::vector<Rational> c(static_cast<std::size_t>(d), Rational(1));
            prod *= Poly(std::move(c));  // (u^d - 1)/(u - 1)
        }
        CHECK(prod == rs.poincare_polynomial());
        CHECK(reflection_degrees(rs.poincare_polynomial(), rs.rank()) == rs.degrees());
    }
}

TEST_CASE("G2 Poincare polynomial factors as (1+u)(1+u+...+u^5)") {
    CHECK(build("G2").poincare_polynomial() == test::P({1, 2, 2, 2, 2, 2, 1}));
}

TEST_CASE("closure under negation, addition and reflection") {
    for (const auto& t : test::kAllTypes) {
        CAPTURE(t);
        const RootSystem rs = build(t);
        for (std::size_t a = 0; a < rs.num_roots(); ++a) {
            RootVec neg = rs.root(a);
            for (auto& x : neg) x = -x;
            CHECK(rs.index_of(neg) == static_cast<long>(rs.negate(a)));
            const bool nonneg = std::all_of(rs.root(a).begin(), rs.root(a).end(), [](int x) { return x >= 0; });
            CHECK(nonneg == rs.is_positive(a));
            auto perm = rs.reflection_permutation(a);
            auto sorted = perm;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
        }
    }
}

TEST_CASE("highest root has the largest height") {
    for (const auto& t : test::kAllTypes) {
        const RootSystem rs = build(t);
        const std::size_t h = rs.highest_root(0);
        for (std::size_t a = 0; a < rs.num_positive(); ++a)
            if (a != h) CHECK(rs.height(a) < rs.height(h));
    }
}

TEST_CASE("extended diagrams and marks") {
    auto marks = [](const std::string& t) {
        const RootSystem rs = build(t);
        const auto ext = extended_diagram(rs);
        REQUIRE(ext.size() == 1);
        CHECK(ext[0].nodes.front().affine);
        CHECK(rs.negate(rs.highest_root(0)) == ext[0].nodes.front().root);
        std::vector<int> m;
        for (const auto& n : ext[0].nodes) m.push_back(n.mark);
        std::sort(m.begin(), m.end());
        return m;
    };
    CHECK(marks("A1") == std::vector<int>{1, 1});
    CHECK(marks("B2") == std::vector<int>{1, 1, 2});
    CHECK(marks("G2") == std::vector<int>{1, 2, 3});
    CHECK(marks("F4") == std::vector<int>{1, 2, 2, 3, 4});
}

TEST_CASE("type names") {
    CHECK(CartanType::parse("b3").str() == "B3");
    CHECK(CartanType::parse("A1xA1").str() == "A1xA1");
    CHECK(CartanType::parse("").rank() == 0);
    CHECK(CartanType::parse("T").str() == "T");
    for (std::string bad : {"G3", "F2", "D2", "Q4", "B", "3B"}) {
        CAPTURE(bad);
        try {
            CartanType::parse(bad);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnsupportedType);
        }
    }
}

TEST_CASE("B and C differ as root systems") {
    const RootSystem b = build("B3"), c = build("C3");
    auto long_count = [](const RootSystem& rs) {
        std::size_t n = 0;
        for (std::size_t a = 0; a < rs.num_roots(); ++a) n += rs.norm(a) == rs.long_norm(0);
        return n;
    };
    CHECK(long_count(b) == 12);
    CHECK(long_count(c) == 6);
}

}
