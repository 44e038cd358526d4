#include "commands.hpp"

#include "uniflip/error.hpp"
#include "uniflip/ppoly.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

namespace uniflip::cli {

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

const std::vector<std::string> kKnownOrder = {"A1", "A2", "A3", "A4", "B2", "C2", "B3",
                                              "C3", "B4", "C4", "D4", "G2", "F4"};

std::vector<std::string> available_types(const std::string& dir) {
    std::set<std::string> found;
    if (fs::is_directory(dir + "/labels"))
        for (const auto& e : fs::directory_iterator(dir + "/labels"))
            if (e.path().extension() == ".json" && fs::exists(dir + "/families/" + e.path().filename().string()))
                found.insert(e.path().stem().string());
    std::vector<std::string> out;
    for (const auto& t : kKnownOrder)
        if (found.erase(t)) out.push_back(t);
    out.insert(out.end(), found.begin(), found.end());
    return out;
}

std::shared_ptr<const TypeContext> load_context(const RunConfig& cfg) {
    if (cfg.type.empty()) throw Error(ErrorCode::InvalidArgument, "--type is required for this command");
    const CartanType t = CartanType::parse(cfg.type);
    const std::string name = t.str();
    if (!fs::exists(cfg.data_dir + "/labels/" + name + ".json"))
        throw Error(ErrorCode::UnsupportedType, "no curated data for " + name + " under " + cfg.data_dir);
    return TypeContext::load(t, cfg.data_dir);
}

ordered_json word_json(const WeylGroup& w, std::uint32_t x) {
    ordered_json a = ordered_json::array();
    for (int s : w.reduced_word(x)) a.push_back(s + 1);
    return a;
}

std::string count_line(const std::string& what, std::size_t total, std::size_t failed) {
    return what + ": " + std::to_string(total) + " checked, " + std::to_string(failed) + " failed, " +
           (failed ? "FAIL" : "PASS");
}

Report types_report(const RunConfig& cfg) {
    Report r;
    r.columns = {"type", "rank", "N", "W_order", "w0_is_minus_one", "irreducibles", "families"};
    for (const auto& name : available_types(cfg.data_dir)) {
        const auto ctx = TypeContext::load(CartanType::parse(name), cfg.data_dir);
        r.rows.push_back({{"type", name},
                          {"rank", ctx->root_system().rank()},
                          {"N", ctx->root_system().num_positive()},
                          {"W_order", ctx->weyl().order()},
                          {"w0_is_minus_one", ctx->weyl().longest_is_minus_one() ? "yes" : "no"},
                          {"irreducibles", ctx->labels().size()},
                          {"families", ctx->families().families.size()}});
    }
    return r;
}

std::vector<std::size_t> selected_orbits(const PolynomialEngine& e, const RunConfig& cfg) {
    if (!cfg.orbit.empty()) return {e.find_orbit(cfg.orbit)};
    std::vector<std::size_t> all(e.orbits().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
}

std::vector<std::size_t> selected_families(const PolynomialEngine& e, const RunConfig& cfg) {
    if (!cfg.family.empty()) return {e.find_family(cfg.family)};
    std::vector<std::size_t> all(e.context().families().families.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
}

Report subsystems_report(const PolynomialEngine& e) {
    Report r;
    const auto& rs = e.context().root_system();
    r.columns = {"id", "name", "simple_roots", "N_H", "orbit_size", "Z", "bang"};
    for (const auto& y : e.orbits()) {
        const ZSet& z = e.zset(y.id);
        ordered_json simple = ordered_json::array();
        for (auto a : y.rep.simple()) {
            std::string s = "(";
            for (std::size_t i = 0; i < rs.root(a).size(); ++i) s += (i ? "," : "") + std::to_string(rs.root(a)[i]);
            simple.push_back(s + ")");
        }
        std::string bang = "-";
        if (e.has_bang()) {
            bang.clear();
            for (const auto& c : z.classes) {
                if (c.bang < c.index) continue;
                if (!bang.empty()) bang += " ";
                bang += c.bang == c.index ? std::to_string(c.index)
                                          : std::to_string(c.index) + "<->" + std::to_string(c.bang);
            }
        }
        r.rows.push_back({{"id", y.id},
                          {"name", y.name},
                          {"simple_roots", simple},
                          {"N_H", y.rep.num_positive()},
                          {"orbit_size", y.orbit_size},
                          {"Z", z.size()},
                          {"bang", bang}});
    }
    return r;
}

Report zclasses_report(const PolynomialEngine& e, const RunConfig& cfg) {
    Report r;
    const WeylGroup& w = e.context().weyl();
    r.columns = {"orbit", "z", "lift", "size", "order", "bang", "twisted_classes", "order_poly"};
    for (auto o : selected_orbits(e, cfg)) {
        const Subsystem& s = e.orbits()[o].rep;
        for (const auto& c : e.zset(o).classes) {
            int order = 1;
            for (std::uint32_t x = c.lift; !s.wh.contains(x); x = w.mul(x, c.lift)) ++order;
            const auto ci = class_index_identity(w, s, c.lift);
            r.pass = r.pass && ci.pass;
            r.rows.push_back({{"orbit", e.orbits()[o].name},
                              {"z", c.index},
                              {"lift", word_json(w, c.lift)},
                              {"size", c.size},
                              {"order", order},
                              {"bang", e.has_bang() ? ordered_json(c.bang) : ordered_json()},
                              {"twisted_classes", ci.sizes.size()},
                              {"order_poly", poly_json(group_order_poly(w, s, c.lift).poly)}});
        }
    }
    return r;
}

Report ppoly_report(const PolynomialEngine& e, const RunConfig& cfg) {
    Report r;
    r.columns = {"type", "orbit", "family", "m", "z", "coeffs"};
    const auto& ctx = e.context();
    for (auto o : selected_orbits(e, cfg))
        for (auto f : selected_families(e, cfg)) {
            const Family& fam = ctx.families().families[f];
            for (std::size_t m = 0; m < fam.size_M(); ++m)
                for (std::size_t z = 0; z < e.zset(o).size(); ++z)
                    r.rows.push_back({{"type", ctx.name()},
                                      {"orbit", e.orbits()[o].name},
                                      {"family", ctx.family_name(f)},
                                      {"m", fam.m_name(m)},
                                      {"z", z},
                                      {"coeffs", poly_json(e.P(f, m, o, z).poly)}});
        }
    return r;
}

Report theorem_report(const PolynomialEngine& e, const RunConfig& cfg) {
    Report r;
    const auto& ctx = e.context();
    r.columns = {"orbit", "family", "m", "z", "m_bang", "z_bang", "result"};
    const SignReport rep = verify_sign_theorem(e);
    const auto orbits = selected_orbits(e, cfg);
    const auto fams = selected_families(e, cfg);
    std::size_t total = 0, failed = 0;
    for (const auto& c : rep.checks) {
        if (std::find(orbits.begin(), orbits.end(), c.orbit) == orbits.end()) continue;
        if (std::find(fams.begin(), fams.end(), c.family) == fams.end()) continue;
        const Family& f = ctx.families().families[c.family];
        ordered_json row = {{"orbit", e.orbits()[c.orbit].name},
                            {"family", ctx.family_name(c.family)},
                            {"m", f.m_name(c.m)},
                            {"z", c.z},
                            {"m_bang", f.m_name(c.m_bang)},
                            {"z_bang", c.z_bang},
                            {"result", c.pass}};
        if (!c.pass) {
            row["lhs"] = poly_json(c.lhs);
            row["rhs"] = poly_json(c.rhs);
            r.notes.push_back("mismatch at " + e.orbits()[c.orbit].name + " " + ctx.family_name(c.family) + " " +
                              f.m_name(c.m) + " z=" + std::to_string(c.z) + ": " + c.lhs.str() + " vs " + c.rhs.str());
            ++failed;
        }
        ++total;
        r.rows.push_back(std::move(row));
    }
    r.pass = failed == 0;
    r.notes.push_back(count_line("P_{m!,z!}(u) = (-1)^A P_{m,z}(-u)", total, failed));
    return r;
}

Report independence_report(const PolynomialEngine& e, const RunConfig& cfg) {
    Report r;
    r.columns = {"orbit", "alternatives", "comparisons", "failures", "result"};
    std::size_t total = 0, failed = 0;
    for (auto o : selected_orbits(e, cfg)) {
        const auto rep = independence_check(e, o);
        ordered_json alts = ordered_json::array();
        std::string joined;
        for (const auto& a : rep.alternatives) joined += (joined.empty() ? "" : "; ") + a;
        r.rows.push_back({{"orbit", e.orbits()[o].name},
                          {"alternatives", rep.skipped ? "none" : joined},
                          {"comparisons", rep.comparisons},
                          {"failures", rep.failures},
                          {"result", rep.skipped ? "skip" : (rep.failures ? "FAIL" : "pass")}});
        total += rep.comparisons;
        failed += rep.failures;
    }
    r.pass = failed == 0;
    r.notes.push_back(count_line("representative independence", total, failed));
    return r;
}

Report degrees_report(const PolynomialEngine& e, const RunConfig& cfg) {
    Report r;
    const auto& ctx = e.context();
    r.columns = {"family", "m", "q", "value", "result"};
    const auto fams = selected_families(e, cfg);
    std::size_t total = 0, failed = 0;
    for (const auto& c : verify_degrees(e)) {
        if (std::find(fams.begin(), fams.end(), c.family) == fams.end()) continue;
        const Family& f = ctx.families().families[c.family];
        r.rows.push_back({{"family", ctx.family_name(c.family)},
                          {"m", f.m_name(c.m)},
                          {"q", c.q},
                          {"value", c.value.str()},
                          {"result", c.pass}});
        ++total;
        if (!c.pass) ++failed;
    }
    r.pass = failed == 0;
    r.notes.push_back(count_line("full-system values are positive integers", total, failed));
    return r;
}

class SelfTest {
public:
    explicit SelfTest(Report& r) : r_(r) { r_.columns = {"check", "subject", "result", "detail"}; }
    void add(const std::string& check, const std::string& subject, bool ok, const std::string& detail = "") {
        r_.rows.push_back({{"check", check}, {"subject", subject}, {"result", ok}, {"detail", detail}});
        ++total_;
        if (!ok) ++failed_;
    }
    void finish() {
        r_.pass = failed_ == 0;
        r_.notes.push_back(count_line("selftest", total_, failed_));
    }

private:
    Report& r_;
    std::size_t total_ = 0, failed_ = 0;
};

Poly split_order(const Subsystem& s) {
    Poly p = Poly::monomial(1, s.num_positive());
    for (const auto& f : s.type.factors())
        for (int d : degrees_of(f)) p *= Poly::monomial(1, static_cast<std::size_t>(d)) - Poly::constant(1);
    return p;
}

Report selftest_report(const PolynomialEngine& e) {
    Report r;
    SelfTest st(r);
    const TypeContext& ctx = e.context();
    const WeylGroup& w = ctx.weyl();
    const auto& chars = ctx.characters();
    const auto& fams = ctx.families().families;

    Poly weighted;
    bool nonneg = true;
    for (std::size_t chi = 0; chi < chars.num_chars(); ++chi) {
        weighted += ctx.fake_degrees()[chi] * Rational(static_cast<long>(chars.dim(chi)));
        for (const auto& c : ctx.fake_degrees()[chi].coeffs()) nonneg = nonneg && c.is_integer() && c.sign() >= 0;
    }
    st.add("sum of dim(E) fake(E) = sum of u^l(w)", ctx.name(), weighted == length_generating_function(w));
    st.add("fake degrees are non-negative integral", ctx.name(), nonneg);

    for (std::size_t f = 0; f < fams.size(); ++f) {
        const auto& fm = *fams[f].fourier;
        const std::string g = fams[f].gamma->name();
        st.add("Fourier matrix symmetric", ctx.family_name(f) + " [" + g + "]", fm.is_symmetric());
        st.add("Fourier matrix involutive", ctx.family_name(f) + " [" + g + "]", fm.is_involutive());
        st.add("Fourier denominators divide |Gamma|", ctx.family_name(f) + " [" + g + "]",
               fm.denominators_divide(fams[f].gamma->order()));
    }

    const std::size_t triv = ctx.families().family_of[chars.trivial()];
    const std::size_t sgn = ctx.families().family_of[chars.sign()];
    st.add("trivial family P = 1", "full", e.P(triv, 0, 0, 0).poly == Poly::constant(1));
    st.add("sign family P = u^N", "full",
           e.P(sgn, 0, 0, 0).poly == Poly::monomial(1, ctx.root_system().num_positive()));

    for (const auto& y : e.orbits()) {
        bool integral = true;
        for (std::size_t z = 0; z < e.zset(y.id).size(); ++z)
            for (const auto& t : e.traces(y.id, z)) integral = integral && t.has_integer_coeffs();
        st.add("graded traces integral", y.name, integral);

        bool bounded = true;
        for (std::size_t f = 0; f < fams.size(); ++f)
            for (std::size_t m = 0; m < fams[f].size_M(); ++m)
                for (std::size_t z = 0; z < e.zset(y.id).size(); ++z) {
                    const Poly p = e.P(f, m, y.id, z).poly;
                    const auto d = p.degree();
                    bounded = bounded && (!d || *d <= y.rep.num_positive()) &&
                              fams[f].gamma->order() % p.denominator_lcm() == 0;
                }
        st.add("P denominators divide |Gamma|, degree <= N_H", y.name, bounded);

        st.add("untwisted order = u^N_H prod(u^d - 1)", y.name,
               group_order_poly(w, y.rep, 0).poly == split_order(y.rep));
        bool twisted = true;
        std::string detail;
        for (const auto& c : e.zset(y.id).classes) {
            try {
                group_order_poly(w, y.rep, c.lift);
            } catch (const Error& ex) {
                twisted = false;
                detail = ex.what();
            }
            twisted = twisted && class_index_identity(w, y.rep, c.lift).pass;
        }
        st.add("twisted order product form, class index sum", y.name, twisted, detail);
    }

    // On the torus only degree 0 survives: P is a combination of character values.
    const std::size_t torus = e.orbits().size() - 1;
    bool constants = true;
    for (std::size_t f = 0; f < fams.size(); ++f)
        for (std::size_t m = 0; m < fams[f].size_M(); ++m)
            for (const auto& c : e.zset(torus).classes) {
                Rational v;
                const std::size_t cls = w.group().class_of(c.lift);
                for (std::size_t k = 0; k < fams[f].members.size(); ++k)
                    v += Rational(fams[f].delta[m]) * fams[f].pairing(m, k) *
                         Rational(static_cast<long>(chars.values[fams[f].members[k]][cls]));
                constants = constants && e.P(f, m, torus, c.index).poly == Poly::constant(v);
            }
    st.add("torus P = sum of Delta <m, m_E> chi_E(z)", e.orbits()[torus].name, constants);

    if (e.has_bang())
        for (std::size_t f = 0; f < fams.size(); ++f) {
            const BangMap& b = e.bang(f);
            std::size_t multi = 0;
            for (auto c : b.candidates) multi += c > 1;
            st.add("m -> m! is an involution", ctx.family_name(f), b.involution,
                   multi ? std::to_string(multi) + " elements with several solutions" : "unique");
        }
    st.finish();
    return r;
}

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::W0NotCentral:
            return kUnsupportedHypothesis;
        case ErrorCode::UnsupportedType:
        case ErrorCode::UnknownFilter:
        case ErrorCode::InvalidArgument:
            return kUsage;
        case ErrorCode::DataIntegrity:
        case ErrorCode::UnmatchedIrreducible:
        case ErrorCode::AmbiguousLabel:
        case ErrorCode::UnknownLabel:
        case ErrorCode::NotAPartition:
        case ErrorCode::EmbeddingNotInjective:
        case ErrorCode::SpecialNotUnique:
        case ErrorCode::SignTwistNotAFamily:
        case ErrorCode::NoSolution:
        case ErrorCode::MismatchedFamily:
            return kDataIntegrity;
        default:
            return kCheckFailure;
    }
}

}  // namespace

Report build_report(const RunConfig& cfg) {
    set_series_guard_extra(cfg.guard_extra);
    if (cfg.command == Command::Types) {
        Report r = types_report(cfg);
        r.command = "types";
        return r;
    }
    const auto ctx = load_context(cfg);
    if (cfg.command == Command::Verify && cfg.which == "theorem112" && !ctx->weyl().longest_is_minus_one())
        throw Error(ErrorCode::W0NotCentral,
                    "the longest element of W(" + ctx->name() +
                        ") is not -1; the sign identity requires w0 to act as -1 on the root lattice");
    const PolynomialEngine e(ctx, cfg.jobs);
    Report r;
    switch (cfg.command) {
        case Command::Subsystems:
            r = subsystems_report(e);
            r.command = "subsystems";
            break;
        case Command::ZClasses:
            r = zclasses_report(e, cfg);
            r.command = "zclasses";
            break;
        case Command::PPoly:
            r = ppoly_report(e, cfg);
            r.command = "ppoly";
            break;
        case Command::Verify:
            if (cfg.which == "theorem112") r = theorem_report(e, cfg);
            else if (cfg.which == "independence") r = independence_report(e, cfg);
            else if (cfg.which == "degrees") r = degrees_report(e, cfg);
            else if (cfg.which == "selftest") r = selftest_report(e);
            else throw Error(ErrorCode::InvalidArgument, "unknown verification '" + cfg.which + "'");
            r.command = "verify " + cfg.which;
            break;
        case Command::Types:
            break;
    }
    r.meta["type"] = ctx->name();
    return r;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const Report r = build_report(cfg);
        out << render(r, cfg.format);
        return r.pass ? kPass : kCheckFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed data: " << e.what() << '\n';
        return kDataIntegrity;
    }
}

}  // namespace uniflip::cli
