#include "support.hpp"

#include "uniflip/checksum.hpp"
#include "uniflip/error.hpp"
#include "uniflip/gamma.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace uniflip;

namespace {

ErrorCode ingest_code(const std::string& type, const std::vector<FamilyRecord>& records) {
    const auto ctx = test::context(type);
    try {
        ingest_family_tables(records, ctx->characters(), ctx->labels(), ctx->b());
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

FamilyRecord single(const std::string& label) { return {{label}, "1", {{label, {"1", "1"}}}, {}}; }

std::vector<FamilyRecord> b2_records() {
    return {single("(2,-)"), single("(-,11)"),
            {{"(1,1)", "(-,2)", "(11,-)"},
             "Z2",
             {{"(1,1)", {"1", "1"}}, {"(-,2)", {"1", "eps"}}, {"(11,-)", {"g", "1"}}},
             {}}};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("sizes of M") {
    CHECK(build_M(GammaGroup::get("1")).size() == 1);
    CHECK(build_M(GammaGroup::get("Z2")).size() == 4);
    CHECK(build_M(GammaGroup::get("Z2xZ2")).size() == 16);
    CHECK(build_M(GammaGroup::get("S3")).size() == 8);
    CHECK(build_M(GammaGroup::get("S4")).size() == 21);
    try {
        GammaGroup::get("S5");
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnsupportedType);
    }
}

TEST_CASE("class and centralizer data are consistent") {
    for (const char* name : {"1", "Z2", "Z2xZ2", "Z2xZ2xZ2", "S3", "S4"}) {
        const GammaGroup g = GammaGroup::get(name);
        std::size_t total = 0;
        for (const auto& c : g.classes()) {
            CHECK(c.size * c.centralizer.size() == g.order());
            total += c.size;
        }
        CHECK(total == g.order());
    }
}

TEST_CASE("Fourier pairing values") {
    const GammaGroup one = GammaGroup::get("1");
    CHECK(fourier_pairing(one, {0, 0}, {0, 0}) == Cyclotomic(kGammaField, 1));
    const GammaGroup z2 = GammaGroup::get("Z2");
    const MElement e11 = z2.find("1", "1"), e1eps = z2.find("1", "eps"), g1 = z2.find("g", "1"),
                   geps = z2.find("g", "eps");
    CHECK(fourier_pairing(z2, e11, e11) == Cyclotomic(kGammaField, Rational(1, 2)));
    CHECK(fourier_pairing(z2, e1eps, g1) == Cyclotomic(kGammaField, Rational(-1, 2)));
    CHECK(fourier_pairing(z2, g1, e1eps) == Cyclotomic(kGammaField, Rational(-1, 2)));
    CHECK(fourier_pairing(z2, geps, geps) == Cyclotomic(kGammaField, Rational(1, 2)));
    CHECK(z2.str(geps) == "(g,eps)");
    try {
        z2.find("g", "r");
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownLabel);
    }
}

TEST_CASE("S3 Fourier matrix matches the known 8x8 table") {
    const GammaGroup s3 = GammaGroup::get("S3");
    const FourierMatrix f = fourier_matrix(s3);
    auto at = [&](const char* c1, const char* x1, const char* c2, const char* x2) {
        return f.entries[f.index_of(s3.find(c1, x1))][f.index_of(s3.find(c2, x2))];
    };
    CHECK(at("1", "1", "1", "1") == Rational(1, 6));
    CHECK(at("1", "1", "1", "r") == Rational(1, 3));
    CHECK(at("1", "r", "1", "r") == Rational(2, 3));
    CHECK(at("1", "1", "g2", "1") == Rational(1, 2));
    CHECK(at("g2", "1", "g2", "1") == Rational(1, 2));
    CHECK(at("g2", "1", "g2", "eps") == Rational(-1, 2));
    CHECK(at("g3", "1", "g3", "1") == Rational(2, 3));
    CHECK(at("g3", "theta", "g3", "theta") == Rational(2, 3));
    CHECK(at("g3", "theta", "g3", "theta2") == Rational(-1, 3));
    CHECK(at("1", "r", "g2", "1") == Rational(0));
}

TEST_CASE("Fourier matrices are symmetric involutions with bounded denominators") {
    for (const char* name : {"1", "Z2", "Z2xZ2", "Z2xZ2xZ2", "S3", "S4"}) {
        CAPTURE(name);
        const GammaGroup g = GammaGroup::get(name);
        const FourierMatrix f = fourier_matrix(g);
        CHECK(f.is_symmetric());
        CHECK(f.is_involutive());
        CHECK(f.denominators_divide(g.order()));
        const std::size_t origin = f.index_of(g.find("1", "1"));
        for (std::size_t j = 0; j < f.size(); ++j) CHECK(f.entries[origin][j].sign() > 0);
    }
}

TEST_CASE("shipped family tables") {
    const auto b2 = test::context("B2");
    CHECK(b2->families().families.size() == 3);
    const auto g2 = test::context("G2");
    const auto& gf = g2->families().families;
    REQUIRE(gf.size() == 3);
    const Family& big = gf[g2->families().family_of[g2->char_index("phi2,1")]];
    CHECK(big.members.size() == 4);
    CHECK(big.gamma->name() == "S3");
    CHECK(big.size_M() == 8);
    CHECK(big.a == 1);
    CHECK(big.A == 5);
    CHECK(big.special == g2->char_index("phi2,1"));
    for (const auto& t : test::kAllTypes) {
        CAPTURE(t);
        const auto ctx = test::context(t);
        const std::size_t n = ctx->root_system().num_positive();
        const auto& fd = ctx->families();
        const Family& triv = fd.families[fd.family_of[ctx->characters().trivial()]];
        const Family& sgn = fd.families[fd.family_of[ctx->characters().sign()]];
        CHECK(triv.a == 0);
        CHECK(triv.A == 0);
        CHECK(sgn.a == static_cast<int>(n));
        CHECK(sgn.A == static_cast<int>(n));
        for (const auto& f : fd.families) {
            CHECK(f.a <= f.A);
            CHECK(f.members.size() <= f.size_M());
            Rational self;
            for (std::size_t k = 0; k < f.members.size(); ++k) self += f.fourier->entries[f.embedding[k]][f.embedding[k]];
            CHECK(self.sign() > 0);
            for (int d : f.delta) CHECK(d == 1);
            if (f.members.size() == 1) CHECK(f.gamma->order() == 1);
        }
    }
}

TEST_CASE("ingest validation") {
    CHECK(ingest_code("B2", b2_records()) == ErrorCode::InvalidArgument);  // accepted

    auto missing = b2_records();
    missing.pop_back();
    CHECK(ingest_code("B2", missing) == ErrorCode::NotAPartition);

    auto doubled = b2_records();
    doubled.push_back(single("(1,1)"));
    CHECK(ingest_code("B2", doubled) == ErrorCode::NotAPartition);

    auto clash = b2_records();
    clash[2].embedding["(11,-)"] = {"1", "1"};
    CHECK(ingest_code("B2", clash) == ErrorCode::EmbeddingNotInjective);

    auto unknown = b2_records();
    unknown[0] = single("(3,-)");
    CHECK(ingest_code("B2", unknown) == ErrorCode::UnknownLabel);

    const std::vector<FamilyRecord> two_special = {
        single("(2,-)"), single("(-,11)"), single("(1,1)"),
        {{"(-,2)", "(11,-)"}, "Z2", {{"(-,2)", {"1", "1"}}, {"(11,-)", {"g", "1"}}}, {}}};
    CHECK(ingest_code("B2", two_special) == ErrorCode::SpecialNotUnique);

    const std::vector<FamilyRecord> untwisted = {
        {{"(2,-)", "(1,1)"}, "Z2", {{"(2,-)", {"1", "1"}}, {"(1,1)", {"g", "1"}}}, {}},
        single("(-,2)"), single("(11,-)"), single("(-,11)")};
    CHECK(ingest_code("B2", untwisted) == ErrorCode::SignTwistNotAFamily);

    auto bad_group = b2_records();
    bad_group[2].gamma = "S5";
    CHECK(ingest_code("B2", bad_group) == ErrorCode::UnsupportedType);
}

TEST_CASE("m -> m! on the B2 family") {
    const auto ctx = test::context("B2");
    const Family& f = ctx->families().families[ctx->families().family_of[ctx->char_index("(1,1)")]];
    const BangMap b = solve_bang(f, ctx->b());
    const GammaGroup& g = *f.gamma;
    const std::size_t e11 = f.fourier->index_of(g.find("1", "1"));
    const std::size_t geps = f.fourier->index_of(g.find("g", "eps"));
    CHECK(b.image[e11] == geps);
    CHECK(b.image[geps] == e11);
    CHECK(b.unique());
    CHECK(b.involution);
}

TEST_CASE("G2: only the two theta-eigenvalue cuspidal labels are ambiguous") {
    // Their rows of the S3 matrix agree on every column carrying a member.
    const auto ctx = test::context("G2");
    const Family& f = ctx->families().families[ctx->families().family_of[ctx->char_index("phi2,1")]];
    const BangMap b = solve_bang(f, ctx->b());
    std::vector<std::string> ambiguous;
    for (std::size_t m = 0; m < f.size_M(); ++m)
        if (b.candidates[m] != 1) {
            CHECK(b.candidates[m] == 2);
            ambiguous.push_back(f.m_name(m));
        }
    CHECK(ambiguous == std::vector<std::string>{"(g3,theta2)", "(g3,theta)"});
    CHECK(b.image[f.fourier->index_of(f.gamma->find("g2", "1"))] == f.fourier->index_of(f.gamma->find("g2", "eps")));
}

TEST_CASE("m -> m! satisfies both sign relations") {
    for (const auto& t : test::kCentralTypes) {
        CAPTURE(t);
        const auto ctx = test::context(t);
        for (const auto& f : ctx->families().families) {
            const BangMap b = solve_bang(f, ctx->b());
            CHECK(b.involution);
            if (t == "B2" || f.members.size() == 1) CHECK(b.unique());
            for (std::size_t m = 0; m < f.size_M(); ++m) {
                const std::size_t mb = b.image[m];
                CHECK(f.delta[mb] == ((f.a + f.A) % 2 ? -f.delta[m] : f.delta[m]));
                for (std::size_t k = 0; k < f.members.size(); ++k) {
                    const int s = (ctx->b()[f.members[k]] + f.a) % 2 ? -1 : 1;
                    CHECK(f.pairing(mb, k) == f.pairing(m, k) * Rational(s));
                }
                if (b.candidates[m] == 1) CHECK(b.image[mb] == m);
            }
        }
    }
}

TEST_CASE("data files are checksummed") {
    const std::string path = test::kDataDir + "/families/B2.json";
    const std::string text = slurp(path);
    CHECK(parse_family_records(text, "B2").size() == 3);
    auto code_of = [](const std::string& doc, const std::string& type) {
        try {
            parse_family_records(doc, type);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    std::string tampered = text;
    tampered.replace(tampered.find("\"Z2\""), 4, "\"S3\"");
    CHECK(code_of(tampered, "B2") == ErrorCode::DataIntegrity);
    CHECK(code_of(text, "C2") == ErrorCode::DataIntegrity);
    CHECK(code_of("{not json", "B2") == ErrorCode::DataIntegrity);
    std::string versioned = text;
    versioned.replace(versioned.find("\"version\": 1"), 12, "\"version\": 9");
    CHECK(code_of(versioned, "B2") == ErrorCode::DataIntegrity);
    try {
        load_label_hints(test::kDataDir + "/labels/E9.json", "E9");
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DataIntegrity);
    }
}

TEST_CASE("FNV-1a reference values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

}
