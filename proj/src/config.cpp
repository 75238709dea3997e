#include "xprod/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "json.hpp"

namespace xprod {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& ptr, const std::string& msg) {
    throw ConfigError(msg, ptr.empty() ? "/" : ptr);
}

void check_keys(const json& j, const std::string& ptr,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (item.key() == a) ok = true;
        if (!ok) fail(ptr + "/" + item.key(), "unknown key");
    }
}

const json& need(const json& j, const std::string& ptr, const char* key) {
    if (!j.contains(key)) fail(ptr, std::string("missing required key \"") + key + "\"");
    return j.at(key);
}

int get_int(const json& j, const std::string& ptr, long long lo, long long hi) {
    if (!j.is_number_integer()) fail(ptr, "expected an integer");
    long long v = j.get<long long>();
    if (v < lo || v > hi)
        fail(ptr, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
    return (int)v;
}

std::vector<int> int_array(const json& j, const std::string& ptr, long long lo, long long hi,
                           int len) {
    if (!j.is_array()) fail(ptr, "expected an array");
    if (len >= 0 && (int)j.size() != len)
        fail(ptr, "expected " + std::to_string(len) + " entries, found " +
                      std::to_string(j.size()));
    std::vector<int> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(get_int(j[i], ptr + "/" + std::to_string(i), lo, hi));
    return out;
}

// nested arrays flattened row-major, every row of length `cols`
std::vector<int> int_matrix(const json& j, const std::string& ptr, long long lo, long long hi,
                            int rows, int cols) {
    if (!j.is_array()) fail(ptr, "expected an array of rows");
    if (rows >= 0 && (int)j.size() != rows)
        fail(ptr, "expected " + std::to_string(rows) + " rows, found " +
                      std::to_string(j.size()));
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto row = int_array(j[i], ptr + "/" + std::to_string(i), lo, hi, cols);
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

FiniteGroup parse_group(const json& j, const std::string& ptr) {
    if (!j.is_object()) fail(ptr, "expected an object");
    std::string type = need(j, ptr, "type").is_string() ? j.at("type").get<std::string>() : "";
    if (type == "cyclic") {
        check_keys(j, ptr, {"type", "n"});
        return FiniteGroup::cyclic(get_int(need(j, ptr, "n"), ptr + "/n", 1, 64));
    }
    if (type == "table") {
        check_keys(j, ptr, {"type", "mul"});
        const json& mul = need(j, ptr, "mul");
        if (!mul.is_array() || mul.empty()) fail(ptr + "/mul", "expected a nonempty array");
        int n = (int)mul.size();
        if (n > 64) fail(ptr + "/mul", "group order exceeds 64");
        std::vector<std::vector<int>> rows;
        for (int i = 0; i < n; ++i)
            rows.push_back(int_array(mul[i], ptr + "/mul/" + std::to_string(i), 0, n - 1, n));
        try {
            return FiniteGroup::from_table(rows);
        } catch (const std::invalid_argument& ex) {
            fail(ptr + "/mul", ex.what());
        }
    }
    fail(ptr + "/type", "expected \"cyclic\" or \"table\"");
}

FiniteRing parse_ring(const json& j, const std::string& ptr) {
    if (!j.is_object()) fail(ptr, "expected an object");
    std::string type = need(j, ptr, "type").is_string() ? j.at("type").get<std::string>() : "";
    try {
        if (type == "zmod") {
            check_keys(j, ptr, {"type", "n"});
            return FiniteRing::zmod(get_int(need(j, ptr, "n"), ptr + "/n", 2, 65536));
        }
        if (type == "poly") {
            check_keys(j, ptr, {"type", "p", "modulus"});
            int p = get_int(need(j, ptr, "p"), ptr + "/p", 2, 64);
            auto f = int_array(need(j, ptr, "modulus"), ptr + "/modulus", 0, p - 1, -1);
            return FiniteRing::poly_quotient(p, f);
        }
        if (type == "table") {
            check_keys(j, ptr, {"type", "add", "mul"});
            const json& add = need(j, ptr, "add");
            if (!add.is_array() || add.empty()) fail(ptr + "/add", "expected a nonempty array");
            int n = (int)add.size();
            if (n > 64) fail(ptr + "/add", "ring size exceeds 64");
            auto addf = int_matrix(add, ptr + "/add", 0, n - 1, n, n);
            auto mulf = int_matrix(need(j, ptr, "mul"), ptr + "/mul", 0, n - 1, n, n);
            return FiniteRing::from_tables(addf, mulf);
        }
        if (type == "group_ring") {
            check_keys(j, ptr, {"type", "coeff", "group"});
            FiniteRing coeff = parse_ring(need(j, ptr, "coeff"), ptr + "/coeff");
            FiniteGroup h = parse_group(need(j, ptr, "group"), ptr + "/group");
            return FiniteRing::group_ring(coeff, h);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& ex) {
        fail(ptr, ex.what());
    }
    fail(ptr + "/type", "expected \"zmod\", \"poly\", \"table\" or \"group_ring\"");
}

// "identity", an image table, or {"type": "power", "k": k}
std::vector<int> parse_bar(const json& j, const std::string& ptr, const FiniteRing& r) {
    if (j.is_string()) {
        if (j.get<std::string>() != "identity")
            fail(ptr, "the only named involution is \"identity\"");
        std::vector<int> id(r.size());
        for (int i = 0; i < r.size(); ++i) id[i] = i;
        return id;
    }
    if (j.is_array()) return int_array(j, ptr, 0, r.size() - 1, r.size());
    if (j.is_object()) {
        check_keys(j, ptr, {"type", "k"});
        if (!need(j, ptr, "type").is_string() || j.at("type").get<std::string>() != "power")
            fail(ptr + "/type", "expected \"power\"");
        int k = get_int(need(j, ptr, "k"), ptr + "/k", 1, 1 << 20);
        return power_map(r, k);
    }
    fail(ptr, "expected \"identity\", an image table, or {\"type\": \"power\", \"k\": k}");
}

InstanceConfig from_json(const json& root) {
    if (!root.is_object()) fail("", "the instance must be a JSON object");
    check_keys(root, "",
               {"name", "ring", "group", "c", "tau", "bar", "w", "v", "options", "extension"});

    InstanceConfig cfg;
    if (root.contains("name")) {
        if (!root.at("name").is_string()) fail("/name", "expected a string");
        cfg.name = root.at("name").get<std::string>();
    }
    if (root.contains("options")) {
        const json& o = root.at("options");
        if (!o.is_object()) fail("/options", "expected an object");
        check_keys(o, "/options", {"max_rank", "seed"});
        if (o.contains("max_rank"))
            cfg.max_rank = get_int(o.at("max_rank"), "/options/max_rank", 1, 16);
        if (o.contains("seed")) {
            const json& s = o.at("seed");
            if (!s.is_number_integer() || s.get<long long>() < 0)
                fail("/options/seed", "expected a non-negative integer");
            cfg.seed = s.get<std::uint64_t>();
        }
    }

    if (root.contains("extension")) {
        for (const char* k : {"ring", "group", "c", "tau", "bar", "w"})
            if (root.contains(k))
                fail(std::string("/") + k, "not allowed together with \"extension\"");
        const json& e = root.at("extension");
        if (!e.is_object()) fail("/extension", "expected an object");
        check_keys(e, "/extension",
                   {"coeff", "coeff_bar", "h", "g", "q", "incl", "proj", "section", "w1"});
        ExtensionData ext;
        ext.coeff = parse_ring(need(e, "/extension", "coeff"), "/extension/coeff");
        if (e.contains("coeff_bar"))
            ext.coeff_bar = parse_bar(e.at("coeff_bar"), "/extension/coeff_bar", ext.coeff);
        ext.H = parse_group(need(e, "/extension", "h"), "/extension/h");
        ext.G = parse_group(need(e, "/extension", "g"), "/extension/g");
        ext.Q = parse_group(need(e, "/extension", "q"), "/extension/q");
        ext.incl = int_array(need(e, "/extension", "incl"), "/extension/incl", 0, ext.G.m - 1,
                             ext.H.m);
        ext.proj = int_array(need(e, "/extension", "proj"), "/extension/proj", 0, ext.Q.m - 1,
                             ext.G.m);
        ext.section = int_array(need(e, "/extension", "section"), "/extension/section", 0,
                                ext.G.m - 1, ext.Q.m);
        std::optional<std::vector<int>> w1;
        if (e.contains("w1"))
            w1 = int_array(e.at("w1"), "/extension/w1", 0, ext.coeff.size() - 1, ext.Q.m);
        try {
            cfg.twist = twist_from_extension(ext);
            if (w1) set_w_from_w1(cfg.twist, ext, *w1);
        } catch (const std::invalid_argument& ex) {
            fail("/extension", ex.what());
        }
        cfg.ext = std::move(ext);
        cfg.w1 = std::move(w1);
    } else {
        FiniteRing r = parse_ring(need(root, "", "ring"), "/ring");
        FiniteGroup g = parse_group(need(root, "", "group"), "/group");

        std::vector<std::vector<int>> c_tables;
        if (root.contains("c")) {
            const json& c = root.at("c");
            if (!c.is_array() || (int)c.size() != g.m)
                fail("/c", "expected one automorphism table per group element");
            for (int i = 0; i < g.m; ++i) {
                auto tab = int_array(c[i], "/c/" + std::to_string(i), 0, r.size() - 1, r.size());
                if (!is_automorphism(r, tab))
                    fail("/c/" + std::to_string(i), "not a ring automorphism");
                c_tables.push_back(std::move(tab));
            }
        } else {
            c_tables = TwistData::trivial_c(g, r);
        }

        std::vector<int> tau_flat(g.m * g.m, r.one());
        if (root.contains("tau"))
            tau_flat = int_matrix(root.at("tau"), "/tau", 0, r.size() - 1, g.m, g.m);

        std::optional<std::vector<int>> bar, w;
        if (root.contains("bar")) bar = parse_bar(root.at("bar"), "/bar", r);
        if (root.contains("w")) {
            if (!bar) fail("/w", "\"w\" requires \"bar\"");
            w = int_array(root.at("w"), "/w", 0, r.size() - 1, g.m);
        }

        std::optional<SignHom> v;
        if (root.contains("v")) {
            auto vals = int_array(root.at("v"), "/v", -1, 1, g.m);
            SignHom sh{vals};
            try {
                sh.validate(g);
            } catch (const std::invalid_argument& ex) {
                fail("/v", ex.what());
            }
            v = sh;
        }

        try {
            cfg.twist = TwistData::make(std::move(g), std::move(r), std::move(c_tables),
                                        std::move(tau_flat), std::move(bar), std::move(w),
                                        std::move(v));
        } catch (const std::invalid_argument& ex) {
            fail("", ex.what());
        }
    }
    return cfg;
}

}  // namespace

InstanceConfig load_config_text(const std::string& text, const std::string& source) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& ex) {
        std::size_t byte = ex.byte > 0 ? ex.byte - 1 : 0;
        int line = 1, col = 1;
        for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ConfigError(std::string("JSON parse error in ") + source + ": " + ex.what(),
                          "line " + std::to_string(line) + ", column " + std::to_string(col));
    }
    return from_json(root);
}

InstanceConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open instance file", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config_text(buf.str(), path);
}

}  // namespace xprod
