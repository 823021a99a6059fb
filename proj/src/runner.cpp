#include "arfkit/runner.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "arfkit/document.hpp"

namespace arfkit {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kUsage =
    "usage: arfkit <command> [--json] [--alpha N] <file>...\n"
    "commands:\n"
    "  arf              Arf invariant of seifert or quadratic_space documents\n"
    "  brown            Brown invariant of enhanced_space or surface documents\n"
    "  classify         isomorphism class (dim, radical, Arf) of a quadratic space\n"
    "  signature        signature of a lattice or even_presentation document\n"
    "  charvec          characteristic vector and its mod-8 congruence\n"
    "  mu               Rochlin invariant of an even_presentation document\n"
    "  surgery-mu       Rochlin invariant of surgery on a knot (--alpha framing)\n"
    "  verify-closed    closed-case congruence on a scenario document\n"
    "  verify-relative  relative congruence on a scenario document\n"
    "  relation-check   Arf-Brown relation on a seifert plus a surface document\n";

struct FileReport {
    int status = 0;
    std::string text;
    json obj;
};

std::string arf_human(ArfValue a) { return arf_is_finite(a) ? arf_to_string(a) : "∞"; }

std::string brown_human(const BrownValue& b) { return b.is_finite() ? brown_to_string(b) : "∞"; }

json big_to_json(const BigInt& v) {
    if (v <= std::numeric_limits<std::int64_t>::max() &&
        v >= std::numeric_limits<std::int64_t>::min())
        return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

int enum_cap_from_env() {
    const char* v = std::getenv("ARFKIT_ENUM_CAP");
    if (!v || !*v) return kDefaultEnumCap;
    char* end = nullptr;
    long cap = std::strtol(v, &end, 10);
    if (!end || *end != '\0' || cap < 1 || cap > 62)
        throw InputError("ARFKIT_ENUM_CAP must be an integer between 1 and 62");
    return static_cast<int>(cap);
}

FileReport report_arf(const InputDocument& doc) {
    FileReport r;
    r.obj["command"] = "arf";
    std::ostringstream os;
    if (const auto* sd = std::get_if<SeifertDoc>(&doc)) {
        bool proper = properness_of(sd->data);
        ArfValue a = arf_of_link(sd->data);
        os << "Arf = " << arf_human(a);
        if (!arf_is_finite(a)) os << " (link not proper)";
        os << "\n";
        r.obj["kind"] = "seifert";
        r.obj["arf"] = arf_to_string(a);
        r.obj["proper"] = proper;
    } else if (const auto* qs = std::get_if<QuadraticSpaceDoc>(&doc)) {
        ArfValue a = arf_symplectic(qs->space);
        os << "Arf = " << arf_human(a);
        if (!arf_is_finite(a)) os << " (improper)";
        os << "\n";
        r.obj["kind"] = "quadratic_space";
        r.obj["arf"] = arf_to_string(a);
        r.obj["proper"] = is_proper(qs->space);
    } else {
        throw InputError("command arf expects a seifert or quadratic_space document, got " +
                         kind_of(doc));
    }
    r.text = os.str();
    return r;
}

FileReport report_brown(const InputDocument& doc, int cap) {
    FileReport r;
    r.obj["command"] = "brown";
    std::ostringstream os;
    if (const auto* es = std::get_if<EnhancedSpaceDoc>(&doc)) {
        BrownValue g = brown_gauss(es->space, cap);
        if (g != brown_compass(es->space, cap))
            throw InternalError("Brown computations disagree");
        os << "beta = " << brown_human(g);
        if (!g.is_finite()) os << " (improper)";
        os << "\n";
        r.obj["kind"] = "enhanced_space";
        r.obj["beta"] = brown_to_string(g);
    } else if (const auto* sf = std::get_if<SurfaceDoc>(&doc)) {
        r.obj["kind"] = "surface";
        BrownValue bl = beta_of_link(sf->data, cap);
        if (bl.is_finite()) {
            BrownValue bs = brown_gauss(enhanced_space_of(sf->data), cap);
            BigInt phi = sf->data.boundary_framing_sum() / 2;
            os << "beta_surface = " << brown_human(bs) << "\n";
            os << "phi = " << phi << "\n";
            os << "beta = " << brown_human(bl) << "\n";
            r.obj["beta_surface"] = brown_to_string(bs);
            r.obj["phi"] = big_to_json(phi);
            r.obj["beta"] = brown_to_string(bl);
        } else {
            os << "beta = " << brown_human(bl) << " (improper)\n";
            r.obj["beta"] = brown_to_string(bl);
        }
    } else {
        throw InputError("command brown expects an enhanced_space or surface document, got " +
                         kind_of(doc));
    }
    r.text = os.str();
    return r;
}

FileReport report_classify(const InputDocument& doc) {
    QuadraticSpace space = [&]() -> QuadraticSpace {
        if (const auto* qs = std::get_if<QuadraticSpaceDoc>(&doc)) return qs->space;
        if (const auto* sd = std::get_if<SeifertDoc>(&doc)) {
            // classification ignores linking data, but a contradictory
            // linking matrix is still an input error
            properness_of(sd->data);
            return quadratic_space_of(sd->data);
        }
        throw InputError("command classify expects a quadratic_space or seifert document, got " +
                         kind_of(doc));
    }();
    QuadClass c = classify(space);
    FileReport r;
    std::ostringstream os;
    os << "dim = " << c.dim << "\n";
    os << "radical = " << c.rad_dim << "\n";
    os << "Arf = " << arf_human(c.arf) << "\n";
    r.obj["command"] = "classify";
    r.obj["dim"] = c.dim;
    r.obj["radical"] = c.rad_dim;
    r.obj["arf"] = arf_to_string(c.arf);
    r.text = os.str();
    return r;
}

FileReport report_signature(const InputDocument& doc) {
    const IntLattice* l = nullptr;
    if (const auto* ld = std::get_if<LatticeDoc>(&doc))
        l = &ld->lattice;
    else if (const auto* ep = std::get_if<EvenPresentationDoc>(&doc))
        l = &ep->presentation.lattice();
    else
        throw InputError("command signature expects a lattice or even_presentation document, got " +
                         kind_of(doc));
    int sig = signature(*l);
    bool uni = is_unimodular(*l);
    bool even = is_even(*l);
    FileReport r;
    std::ostringstream os;
    os << "signature = " << sig << "\n";
    os << "unimodular = " << (uni ? "yes" : "no") << "\n";
    os << "even = " << (even ? "yes" : "no") << "\n";
    r.obj["command"] = "signature";
    r.obj["signature"] = sig;
    r.obj["unimodular"] = uni;
    r.obj["even"] = even;
    r.text = os.str();
    return r;
}

FileReport report_charvec(const InputDocument& doc) {
    const auto* ld = std::get_if<LatticeDoc>(&doc);
    const IntLattice* l = nullptr;
    if (ld)
        l = &ld->lattice;
    else if (const auto* ep = std::get_if<EvenPresentationDoc>(&doc))
        l = &ep->presentation.lattice();
    else
        throw InputError("command charvec expects a lattice or even_presentation document, got " +
                         kind_of(doc));
    CharVector xi = characteristic_vector(*l);
    BigInt sq = char_square(*l, xi);
    int sig = signature(*l);
    bool ok = check_van_der_blij(*l, xi);
    FileReport r;
    std::ostringstream os;
    os << "xi = (";
    for (std::size_t i = 0; i < xi.xi.size(); ++i)
        os << (i ? ", " : "") << static_cast<int>(xi.xi[i]);
    os << ")\n";
    os << "xi_square = " << sq << "\n";
    os << "signature = " << sig << "\n";
    os << "van_der_blij = " << (ok ? "holds" : "fails") << "\n";
    r.obj["command"] = "charvec";
    json xs = json::array();
    for (auto b : xi.xi) xs.push_back(static_cast<int>(b));
    r.obj["xi"] = std::move(xs);
    r.obj["xi_square"] = big_to_json(sq);
    r.obj["signature"] = sig;
    r.obj["van_der_blij"] = ok ? "holds" : "fails";
    r.status = ok ? 0 : 1;
    r.text = os.str();
    return r;
}

FileReport report_mu(const InputDocument& doc) {
    const auto* ep = std::get_if<EvenPresentationDoc>(&doc);
    if (!ep)
        throw InputError("command mu expects an even_presentation document, got " + kind_of(doc));
    int mu = mu_from_presentation(ep->presentation);
    FileReport r;
    r.text = "mu = " + std::to_string(mu) + "\n";
    r.obj["command"] = "mu";
    r.obj["mu"] = mu;
    return r;
}

FileReport report_surgery_mu(const InputDocument& doc, long long alpha) {
    const auto* sd = std::get_if<SeifertDoc>(&doc);
    if (!sd)
        throw InputError("command surgery-mu expects a seifert document, got " + kind_of(doc));
    int mu = mu_from_surgery(sd->data, alpha);
    ArfValue a = arf_of_link(sd->data);
    FileReport r;
    std::ostringstream os;
    os << "alpha = " << alpha << "\n";
    os << "Arf = " << arf_human(a) << "\n";
    os << "mu = " << mu << "\n";
    r.obj["command"] = "surgery-mu";
    r.obj["alpha"] = alpha;
    r.obj["arf"] = arf_to_string(a);
    r.obj["mu"] = mu;
    r.text = os.str();
    return r;
}

FileReport residual_report(const char* command, const Residual& res) {
    FileReport r;
    std::ostringstream os;
    os << "residual = " << res.value << " (mod " << res.modulus << ")\n";
    os << "verdict = " << (res.holds ? "holds" : "fails") << "\n";
    r.obj["command"] = command;
    r.obj["residual"] = res.value;
    r.obj["modulus"] = res.modulus;
    r.obj["verdict"] = res.holds ? "holds" : "fails";
    r.status = res.holds ? 0 : 1;
    r.text = os.str();
    return r;
}

FileReport report_verify_closed(const InputDocument& doc) {
    const auto* sc = std::get_if<ScenarioDoc>(&doc);
    if (!sc)
        throw InputError("command verify-closed expects a scenario document, got " + kind_of(doc));
    const RelativeScenario& s = sc->scenario;
    bool trivial_boundary =
        s.mu_boundary == 0 &&
        (s.family == ScenarioFamily::orientable
             ? s.arf_boundary == ArfValue::zero
             : s.beta_boundary == BrownValue::finite(0));
    if (!trivial_boundary)
        throw InputError("closed verification requires trivial boundary data; use verify-relative");
    Residual res = s.family == ScenarioFamily::orientable
                       ? verify_closed(s.sigma_x, s.f_square, s.arf_f, s.ks)
                       : verify_closed_brown(s.sigma_x, s.f_square, s.beta_f, s.ks);
    return residual_report("verify-closed", res);
}

FileReport report_verify_relative(const InputDocument& doc) {
    const auto* sc = std::get_if<ScenarioDoc>(&doc);
    if (!sc)
        throw InputError("command verify-relative expects a scenario document, got " + kind_of(doc));
    return residual_report("verify-relative", verify_relative(sc->scenario));
}

FileReport report_relation_check(const InputDocument& a, const InputDocument& b, int cap) {
    const SeifertDoc* sd = std::get_if<SeifertDoc>(&a);
    const SurfaceDoc* sf = std::get_if<SurfaceDoc>(&b);
    if (!sd) sd = std::get_if<SeifertDoc>(&b);
    if (!sf) sf = std::get_if<SurfaceDoc>(&a);
    if (!sd || !sf)
        throw InputError("command relation-check expects one seifert and one surface document");
    bool ok = arf_beta_relation_check(sd->data, sf->data, cap);
    ArfValue arf = arf_of_link(sd->data);
    BrownValue beta = beta_of_link(sf->data, cap);
    FileReport r;
    std::ostringstream os;
    r.obj["command"] = "relation-check";
    r.obj["arf"] = arf_to_string(arf);
    r.obj["beta"] = brown_to_string(beta);
    if (arf_is_finite(arf)) {
        BigInt lk = lk_total(sd->data);
        BigInt residual = ((BigInt(beta.value()) - 4 * arf_bit(arf) - lk) % 8 + 8) % 8;
        os << "Arf = " << arf_human(arf) << "\n";
        os << "beta = " << brown_human(beta) << "\n";
        os << "lk = " << lk << "\n";
        os << "residual = " << residual << " (mod 8)\n";
        os << "verdict = " << (ok ? "holds" : "fails") << "\n";
        r.obj["lk"] = big_to_json(lk);
        r.obj["residual"] = big_to_json(residual);
        r.obj["modulus"] = 8;
        r.obj["verdict"] = ok ? "holds" : "fails";
    } else {
        os << "Arf = " << arf_human(arf) << "\n";
        os << "beta = " << brown_human(beta) << "\n";
        os << "verdict = holds (vacuous)\n";
        r.obj["verdict"] = "holds";
        r.obj["vacuous"] = true;
    }
    r.status = ok ? 0 : 1;
    r.text = os.str();
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty() || args[0] == "--help" || args[0] == "help") {
            out << kUsage;
            return 0;
        }
        const std::string command = args[0];
        bool json_mode = false;
        long long alpha = 1;
        std::vector<std::string> files;
        for (std::size_t i = 1; i < args.size(); ++i) {
            const std::string& a = args[i];
            if (a == "--json") {
                json_mode = true;
            } else if (a == "--alpha") {
                if (i + 1 >= args.size()) throw InputError("--alpha needs a value");
                try {
                    alpha = std::stoll(args[++i]);
                } catch (const std::exception&) {
                    throw InputError("--alpha needs an integer value");
                }
            } else if (a.rfind("--alpha=", 0) == 0) {
                try {
                    alpha = std::stoll(a.substr(8));
                } catch (const std::exception&) {
                    throw InputError("--alpha needs an integer value");
                }
            } else if (!a.empty() && a[0] == '-' && a != "-") {
                throw InputError("unknown flag: " + a);
            } else {
                files.push_back(a);
            }
        }

        static const char* kCommands[] = {"arf",       "brown",         "classify",
                                          "signature", "charvec",       "mu",
                                          "surgery-mu", "verify-closed", "verify-relative",
                                          "relation-check"};
        bool known = false;
        for (const char* c : kCommands) known = known || command == c;
        if (!known) {
            err << "arfkit: unknown command \"" << command << "\"\n" << kUsage;
            return 2;
        }
        if (files.empty()) throw InputError("no input files");
        int cap = enum_cap_from_env();

        std::vector<std::pair<std::string, FileReport>> reports;
        int worst = 0;

        if (command == "relation-check") {
            if (files.size() != 2)
                throw InputError("relation-check needs exactly two files (seifert and surface)");
            std::optional<InputDocument> a, b;
            try {
                a = parse_document_file(files[0]);
            } catch (const InputError& e) {
                err << "arfkit: " << files[0] << ": " << e.what() << "\n";
            }
            try {
                b = parse_document_file(files[1]);
            } catch (const InputError& e) {
                err << "arfkit: " << files[1] << ": " << e.what() << "\n";
            }
            if (!a || !b) return 2;
            try {
                reports.emplace_back(files[0] + " " + files[1], report_relation_check(*a, *b, cap));
                worst = reports.back().second.status;
            } catch (const InputError& e) {
                err << "arfkit: " << e.what() << "\n";
                return 2;
            }
        } else {
            for (const auto& path : files) {
                try {
                    InputDocument doc = parse_document_file(path);
                    FileReport r;
                    if (command == "arf")
                        r = report_arf(doc);
                    else if (command == "brown")
                        r = report_brown(doc, cap);
                    else if (command == "classify")
                        r = report_classify(doc);
                    else if (command == "signature")
                        r = report_signature(doc);
                    else if (command == "charvec")
                        r = report_charvec(doc);
                    else if (command == "mu")
                        r = report_mu(doc);
                    else if (command == "surgery-mu")
                        r = report_surgery_mu(doc, alpha);
                    else if (command == "verify-closed")
                        r = report_verify_closed(doc);
                    else
                        r = report_verify_relative(doc);
                    worst = std::max(worst, r.status);
                    reports.emplace_back(path, std::move(r));
                } catch (const InputError& e) {
                    err << "arfkit: " << path << ": " << e.what() << "\n";
                    worst = 2;
                }
            }
        }

        if (json_mode && !reports.empty()) {
            if (reports.size() == 1 && files.size() <= (command == "relation-check" ? 2u : 1u)) {
                out << reports[0].second.obj.dump(2) << "\n";
            } else {
                json arr = json::array();
                for (auto& [path, r] : reports) {
                    json o = std::move(r.obj);
                    o["file"] = path;
                    arr.push_back(std::move(o));
                }
                out << arr.dump(2) << "\n";
            }
        } else if (!json_mode) {
            bool multi = files.size() > 1 && command != "relation-check";
            bool first = true;
            for (auto& [path, r] : reports) {
                if (!first) out << "\n";
                first = false;
                if (multi) out << "# " << path << "\n";
                out << r.text;
            }
        }
        return worst;
    } catch (const InputError& e) {
        err << "arfkit: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "arfkit: internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace arfkit
