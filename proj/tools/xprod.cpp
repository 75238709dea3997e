// xprod: load crossed-product instances, print their multiplication
// tables, run verification campaigns, and translate colimit morphisms to
// matrices over R*G.
//
// Exit codes: 0 all selected checks pass, 1 at least one check failed,
// 2 usage or configuration error.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "xprod/bridge.hpp"
#include "xprod/campaign.hpp"
#include "xprod/config.hpp"
#include "xprod/crossed.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int write_out(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 2;
    }
    out << data;
    return 0;
}

std::string read_in(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ordered_json element_terms(const xprod::CrossedElement& x) {
    ordered_json terms = ordered_json::array();
    for (const auto& [g, r] : x.terms) terms.push_back({g, r});
    return terms;
}

int cmd_validate(const xprod::InstanceConfig& cfg) {
    xprod::Report rep = xprod::run_campaign(cfg, {"twist"}, true);
    std::cout << xprod::emit_report_text(rep);
    return rep.all_pass ? 0 : 1;
}

int cmd_table(const xprod::InstanceConfig& cfg, const std::string& out_path) {
    const xprod::TwistData& t = cfg.twist;
    long long basis = (long long)t.R.size() * t.G.m;
    if (basis > 256) {
        std::cerr << "error: table needs |R| x |G| <= 256, this instance has " << basis
                  << " basis elements\n";
        return 2;
    }
    ordered_json j;
    j["instance"] = cfg.name;
    j["ring"] = t.R.desc();
    j["group_order"] = t.G.m;
    j["basis"] = ordered_json::array();
    for (int g = 0; g < t.G.m; ++g)
        for (int r = 0; r < t.R.size(); ++r) {
            ordered_json b;
            b["g"] = g;
            b["r"] = r;
            b["name"] = cx_to_string(t, xprod::cx_basis(t, r, g));
            j["basis"].push_back(std::move(b));
        }
    // products of basis elements are single terms: row g.r times column h.s
    j["table"] = ordered_json::array();
    for (int g = 0; g < t.G.m; ++g)
        for (int r = 0; r < t.R.size(); ++r) {
            ordered_json row = ordered_json::array();
            for (int h = 0; h < t.G.m; ++h)
                for (int s = 0; s < t.R.size(); ++s)
                    row.push_back(element_terms(
                        cx_mul(t, xprod::cx_basis(t, r, g), xprod::cx_basis(t, s, h))));
            j["table"].push_back(std::move(row));
        }
    return write_out(out_path, j.dump(2) + "\n");
}

int cmd_check(const xprod::InstanceConfig& cfg, const std::vector<std::string>& suites,
              bool explicit_suites, const std::string& format, const std::string& out_path) {
    xprod::Report rep = xprod::run_campaign(cfg, suites, explicit_suites);
    std::string data =
        format == "json" ? xprod::emit_report_json(rep) : xprod::emit_report_text(rep);
    int rc = write_out(out_path, data);
    if (rc != 0) return rc;
    return rep.all_pass ? 0 : 1;
}

// morphism input: {"src_rank": m, "tgt_rank": n, "terms": [{"g": g, "mat": [[..]]}]}
int cmd_alpha(const xprod::InstanceConfig& cfg, const std::string& in_path,
              const std::string& out_path) {
    const xprod::TwistData& t = cfg.twist;
    json j = json::parse(read_in(in_path));
    int m = j.at("src_rank").get<int>();
    int n = j.at("tgt_rank").get<int>();
    if (m < 1 || n < 1) throw std::runtime_error("ranks must be at least 1");
    xprod::SCatFiber fib = xprod::make_scat_fiber(t, std::max(m, n));
    xprod::Hocolim<xprod::SCatFiber> h = xprod::one_object_colimit(fib);
    auto a = h.obj(0, xprod::SObj{xprod::gen_plain(t.R, m), t.G.e});
    auto b = h.obj(0, xprod::SObj{xprod::gen_plain(t.R, n), t.G.e});
    auto mor = h.zero(a, b);
    for (const auto& jt : j.at("terms")) {
        int g = jt.at("g").get<int>();
        if (g < 0 || g >= t.G.m) throw std::runtime_error("term label out of range");
        xprod::Mat mat = xprod::Mat::zero(m, n);
        const json& rows = jt.at("mat");
        if ((int)rows.size() != m) throw std::runtime_error("term matrix must have src_rank rows");
        for (int i = 0; i < m; ++i) {
            if ((int)rows[i].size() != n)
                throw std::runtime_error("term matrix must have tgt_rank columns");
            for (int k = 0; k < n; ++k) {
                int r = rows[i][k].get<int>();
                if (r < 0 || r >= t.R.size())
                    throw std::runtime_error("matrix entry out of ring range");
                mat.at(i, k) = r;
            }
        }
        h.add_term(mor, xprod::Arrow{g, 0},
                   xprod::scat_mor_from_mat(fib, a.A, fib.act_obj(g, b.A), mat));
    }
    xprod::CrossedMatrix cm = xprod::alpha_mor(t, h, mor);
    ordered_json out;
    out["rows"] = cm.rows;
    out["cols"] = cm.cols;
    out["entries"] = ordered_json::array();
    out["display"] = ordered_json::array();
    for (int i = 0; i < cm.rows; ++i) {
        ordered_json erow = ordered_json::array(), drow = ordered_json::array();
        for (int k = 0; k < cm.cols; ++k) {
            erow.push_back(element_terms(cm.at(i, k)));
            drow.push_back(cx_to_string(t, cm.at(i, k)));
        }
        out["entries"].push_back(std::move(erow));
        out["display"].push_back(std::move(drow));
    }
    return write_out(out_path, out.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of twisted crossed products and their module categories"};
    app.require_subcommand(1);

    std::string config_path, out_path, in_path, format = "text", report_format = "json";
    std::vector<std::string> suites;
    std::optional<std::uint64_t> seed;
    std::optional<int> max_rank;

    auto* validate = app.add_subcommand("validate", "check the twist tables of an instance");
    validate->add_option("config", config_path, "instance file")->required();

    auto* table = app.add_subcommand("table", "emit the basis multiplication table as JSON");
    table->add_option("config", config_path, "instance file")->required();
    table->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* check = app.add_subcommand("check", "run verification suites");
    check->add_option("config", config_path, "instance file")->required();
    check->add_option("--suite", suites, "suites to run (default all)")->delimiter(',');
    check->add_option("--seed", seed, "seed override");
    check->add_option("--max-rank", max_rank, "module rank bound override");
    check->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* alpha = app.add_subcommand(
        "alpha", "print the R*G matrix of a one-object colimit morphism (JSON in/out)");
    alpha->add_option("config", config_path, "instance file")->required();
    alpha->add_option("-i,--in", in_path, "morphism JSON (default stdin)");
    alpha->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* report = app.add_subcommand("report", "run every suite and emit a JSON report");
    report->add_option("config", config_path, "instance file")->required();
    report->add_option("--seed", seed, "seed override");
    report->add_option("--max-rank", max_rank, "module rank bound override");
    report->add_option("--format", report_format, "json or text")
        ->check(CLI::IsMember({"text", "json"}));
    report->add_option("-o,--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        xprod::InstanceConfig cfg = xprod::load_config(config_path);
        if (seed) cfg.seed = *seed;
        if (max_rank) cfg.max_rank = *max_rank;

        if (app.got_subcommand(validate)) return cmd_validate(cfg);
        if (app.got_subcommand(table)) return cmd_table(cfg, out_path);
        if (app.got_subcommand(check))
            return cmd_check(cfg, suites, !suites.empty(), format, out_path);
        if (app.got_subcommand(alpha)) return cmd_alpha(cfg, in_path, out_path);
        if (app.got_subcommand(report)) return cmd_check(cfg, {}, false, report_format, out_path);
    } catch (const xprod::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const xprod::SuiteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
