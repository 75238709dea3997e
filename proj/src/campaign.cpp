#include "xprod/campaign.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "xprod/bridge.hpp"
#include "xprod/crossed.hpp"
#include "xprod/hocolim.hpp"
#include "xprod/modcat.hpp"
#include "xprod/strictify.hpp"

namespace xprod {

namespace {

const std::vector<std::string> kSuites = {"twist",     "ring",    "weak-action",
                                          "involution-compat", "strictify", "hocolim",
                                          "bridge",    "induction"};

const std::map<std::string, std::vector<std::string>>& deps() {
    static const std::map<std::string, std::vector<std::string>> d = {
        {"twist", {}},
        {"ring", {"twist"}},
        {"weak-action", {"twist"}},
        {"involution-compat", {"twist", "weak-action"}},
        {"strictify", {"twist", "weak-action"}},
        {"hocolim", {"twist", "weak-action", "strictify"}},
        {"bridge", {"twist", "weak-action", "strictify"}},
        {"induction", {"twist", "weak-action", "strictify"}},
    };
    return d;
}

CheckRecord skip_rec(const std::string& what, const std::string& reason) {
    CheckRecord r{"skip." + what, reason};
    r.witness_desc = "skipped, nothing was checked";
    return r;
}

TwistData strip_involution(const TwistData& t) {
    TwistData s = t;
    s.bar.reset();
    s.w.reset();
    s.w_inv.reset();
    return s;
}

}  // namespace

const std::vector<std::string>& all_suites() { return kSuites; }

Report run_campaign(const InstanceConfig& cfg, std::vector<std::string> suites,
                    bool explicit_suites) {
    const TwistData& t = cfg.twist;
    bool v_trivial = t.v == SignHom::trivial(t.G);
    bool w_present = t.w.has_value();

    if (suites.empty()) suites = kSuites;
    std::set<std::string> want;
    for (const auto& s : suites) {
        if (deps().find(s) == deps().end()) throw SuiteError("unknown suite \"" + s + "\"");
        if (explicit_suites) {
            bool needs_w = s == "involution-compat" || s == "hocolim";
            bool needs_v = s != "twist" && s != "ring";
            if (needs_w && !w_present)
                throw SuiteError("suite \"" + s +
                                 "\" needs involution data (w), absent from this instance");
            if (needs_v && !v_trivial)
                throw SuiteError("suite \"" + s +
                                 "\" needs the trivial sign homomorphism v on this instance");
        }
        want.insert(s);
        for (const auto& d : deps().at(s)) want.insert(d);
    }
    // closure of the dependency relation (two levels suffice, take a fixpoint anyway)
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& s : std::set<std::string>(want))
            for (const auto& d : deps().at(s))
                if (want.insert(d).second) grew = true;
    }

    Report rep;
    rep.seed = cfg.seed;
    bool ctau_ok = false, w_ok = false, weak_ok = false, strict_ok = false;

    auto selected = [&](const std::string& s) { return want.count(s) > 0; };

    if (selected("twist")) {
        Rng rng(cfg.seed);
        Report rt = validate_twist(t, rng);
        ctau_ok = rt.all_pass;
        if (w_present) {
            Report ri = validate_involution_twist(t, rng);
            w_ok = ri.all_pass;
            rt.merge(ri);
        }
        rep.merge(rt);
    }

    const std::string no_ctau = "twist conditions failed";
    const std::string no_w = w_present ? "involution conditions failed" : "no involution data";
    const std::string no_v = "nontrivial sign homomorphism: the restriction weak action "
                             "is not defined";

    if (selected("ring")) {
        if (!ctau_ok) {
            rep.add(skip_rec("ring", no_ctau));
        } else {
            Rng rng(cfg.seed);
            bool degraded = w_present && !w_ok;
            const TwistData te = degraded ? strip_involution(t) : t;
            rep.merge(verify_crossed_product(te, rng));
            if (cfg.ext) {
                std::optional<std::vector<int>> w1;
                if (w_present && w_ok) w1 = cfg.w1;
                rep.merge(verify_extension_iso(te, *cfg.ext, w1, rng));
            }
            if (degraded) rep.add(skip_rec("ring.involution", no_w));
        }
    }

    if (selected("weak-action")) {
        if (!ctau_ok) {
            rep.add(skip_rec("weak-action", no_ctau));
        } else if (!v_trivial) {
            rep.add(skip_rec("weak-action", no_v));
        } else {
            Rng rng(cfg.seed);
            Report r = verify_weak_action(t, cfg.max_rank, rng);
            weak_ok = r.all_pass;
            rep.merge(r);
        }
    }

    if (selected("involution-compat")) {
        if (!ctau_ok) {
            rep.add(skip_rec("involution-compat", no_ctau));
        } else if (!v_trivial) {
            rep.add(skip_rec("involution-compat", no_v));
        } else if (!w_ok) {
            rep.add(skip_rec("involution-compat", no_w));
        } else if (!weak_ok) {
            rep.add(skip_rec("involution-compat", "weak-action suite failed"));
        } else {
            Rng rng(cfg.seed);
            rep.merge(verify_involution_compat(t, cfg.max_rank, rng));
        }
    }

    if (selected("strictify")) {
        if (!ctau_ok) {
            rep.add(skip_rec("strictify", no_ctau));
        } else if (!v_trivial) {
            rep.add(skip_rec("strictify", no_v));
        } else if (!weak_ok) {
            rep.add(skip_rec("strictify", "weak-action suite failed"));
        } else {
            Rng rng(cfg.seed);
            Report r = verify_strict_action(t, cfg.max_rank, rng);
            if (w_ok) {
                Rng rng2(cfg.seed);
                r.merge(verify_strict_involution(t, cfg.max_rank, rng2));
            } else {
                r.add(skip_rec("strictify.involution", no_w));
            }
            strict_ok = r.all_pass;
            rep.merge(r);
        }
    }

    const std::string cat_blocked = !ctau_ok      ? no_ctau
                                    : !v_trivial  ? no_v
                                    : !weak_ok    ? "weak-action suite failed"
                                    : !strict_ok  ? "strictify suite failed"
                                                  : "";

    if (selected("hocolim")) {
        if (!cat_blocked.empty()) {
            rep.add(skip_rec("hocolim", cat_blocked));
        } else if (!w_ok) {
            rep.add(skip_rec("hocolim", no_w));
        } else {
            rep.merge(verify_hocolim(t, cfg.max_rank, cfg.seed));
        }
    }

    if (selected("bridge")) {
        if (!cat_blocked.empty()) {
            rep.add(skip_rec("bridge", cat_blocked));
        } else {
            const TwistData te = w_ok ? t : strip_involution(t);
            rep.merge(verify_bridge(te, cfg.max_rank, cfg.seed));
            if (!w_ok) rep.add(skip_rec("bridge.involution", no_w));
        }
    }

    if (selected("induction")) {
        if (!cat_blocked.empty()) {
            rep.add(skip_rec("induction", cat_blocked));
        } else {
            const TwistData te = w_ok ? t : strip_involution(t);
            // induce up the inclusion K -> K x Z/2 ...
            FiniteGroup z2 = FiniteGroup::cyclic(2);
            FiniteGroup g2 = FiniteGroup::product(te.G, z2);
            std::vector<int> incl(te.G.m);
            for (int k = 0; k < te.G.m; ++k) incl[k] = FiniteGroup::pair_index(z2, k, 0);
            auto ic = induce(te, incl, g2, cfg.max_rank);
            rep.merge(verify_induced(*ic, cfg.seed));
            // ... and compare the double colimits along the identity of K
            if (te.G.m <= 4) {
                std::vector<int> idphi(te.G.m);
                for (int k = 0; k < te.G.m; ++k) idphi[k] = k;
                rep.merge(check_induction_isos(te, idphi, te.G, GSet::regular(te.G),
                                               Biset::pullback_group(te.G, te.G, idphi),
                                               cfg.seed));
            } else {
                rep.add(skip_rec("induction.isos",
                                 "group order exceeds the exhaustive comparison bound"));
            }
            if (!w_ok) rep.add(skip_rec("induction.involution", no_w));
        }
    }

    return rep;
}

// ------------------------------------------------------------------------
// report serialization

std::string emit_report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["seed"] = r.seed;
    j["all_pass"] = r.all_pass;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["law"] = c.law;
        jc["pass"] = c.pass;
        jc["witness"] = c.witness;
        jc["witness_desc"] = c.witness_desc;
        jc["lhs"] = c.lhs;
        jc["rhs"] = c.rhs;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

std::string emit_report_text(const Report& r) {
    std::ostringstream out;
    out << "seed " << r.seed << "\n";
    int failed = 0;
    for (const auto& c : r.checks) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  --  " << c.law << "\n";
        if (!c.pass) {
            ++failed;
            if (!c.witness.empty()) {
                out << "      witness (" << c.witness_desc << "):";
                for (auto v : c.witness) out << " " << v;
                out << "\n";
            } else if (!c.witness_desc.empty()) {
                out << "      witness: " << c.witness_desc << "\n";
            }
            if (!c.lhs.empty()) out << "      lhs: " << c.lhs << "\n";
            if (!c.rhs.empty()) out << "      rhs: " << c.rhs << "\n";
        }
    }
    out << "summary: " << r.checks.size() << " checks, " << failed << " failed\n";
    return out.str();
}

Report parse_report_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Report r;
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& jc : j.at("checks")) {
        CheckRecord c;
        c.id = jc.at("id").get<std::string>();
        c.law = jc.at("law").get<std::string>();
        c.pass = jc.at("pass").get<bool>();
        c.witness = jc.at("witness").get<std::vector<long long>>();
        c.witness_desc = jc.at("witness_desc").get<std::string>();
        c.lhs = jc.at("lhs").get<std::string>();
        c.rhs = jc.at("rhs").get<std::string>();
        r.add(std::move(c));
    }
    if (r.all_pass != j.at("all_pass").get<bool>())
        throw std::runtime_error("parse_report_json: all_pass does not match the records");
    return r;
}

}  // namespace xprod
