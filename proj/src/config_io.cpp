#include "mzeta/config_io.hpp"

#include <json.hpp>

#include "mzeta/errors.hpp"
#include "mzeta/expr.hpp"

namespace mzeta {

namespace {

using json = nlohmann::ordered_json;

void check_keys(const json& obj, const std::vector<std::string>& allowed, const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const auto& a : allowed)
            if (key == a) ok = true;
        if (!ok) throw SchemaError("unknown key '" + key + "'", path);
    }
}

const json& require_key(const json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError("missing required key '" + key + "'", path);
    return *it;
}

long long as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw SchemaError("expected an integer", path);
    return v.get<long long>();
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError("expected a string", path);
    return v.get<std::string>();
}

const json& as_object(const json& v, const std::string& path) {
    if (!v.is_object()) throw SchemaError("expected an object", path);
    return v;
}

const json& as_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError("expected an array", path);
    return v;
}

std::set<std::string> id_set(const json& v, const std::string& path) {
    std::set<std::string> out;
    for (size_t i = 0; i < as_array(v, path).size(); ++i)
        out.insert(as_string(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

RingElem expr_value(const json& v, const std::string& path) {
    if (v.is_number_integer()) return RingElem(Int(v.get<long long>()));
    if (!v.is_string()) throw SchemaError("expected an expression string or integer", path);
    try {
        return parse_ring_elem(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()), path, e.offset());
    }
}

Component parse_component(const json& v, const std::string& path) {
    const json& obj = as_object(v, path);
    check_keys(obj, {"id", "m", "nu"}, path);
    Component c;
    c.id = as_string(require_key(obj, "id", path), path + ".id");
    if (c.id.empty()) throw SchemaError("component id must be nonempty", path + ".id");
    long long m = as_int(require_key(obj, "m", path), path + ".m");
    if (m < 1)
        throw SchemaError("finite-type rule requires m >= 1 (got " + std::to_string(m) + ")",
                          path + ".m");
    c.m = static_cast<int>(m);
    c.nu = static_cast<int>(as_int(require_key(obj, "nu", path), path + ".nu"));
    return c;
}

Stratum parse_stratum(const json& v, const std::string& path) {
    const json& obj = as_object(v, path);
    check_keys(obj, {"components", "cover", "geom"}, path);
    Stratum s;
    s.comps = id_set(require_key(obj, "components", path), path + ".components");
    s.cover = expr_value(require_key(obj, "cover", path), path + ".cover");
    s.geom = expr_value(require_key(obj, "geom", path), path + ".geom");
    return s;
}

BlowupSpec parse_blowup(const json& v, const std::string& path) {
    const json& obj = as_object(v, path);
    check_keys(obj, {"center_in", "codim", "transversal", "center_strata", "new_id"}, path);
    BlowupSpec spec;
    spec.center_in = id_set(require_key(obj, "center_in", path), path + ".center_in");
    spec.codim = static_cast<int>(as_int(require_key(obj, "codim", path), path + ".codim"));
    if (obj.contains("transversal")) spec.transversal = id_set(obj["transversal"], path + ".transversal");
    spec.new_id = as_string(require_key(obj, "new_id", path), path + ".new_id");
    if (obj.contains("center_strata")) {
        const json& arr = as_array(obj["center_strata"], path + ".center_strata");
        for (size_t i = 0; i < arr.size(); ++i) {
            std::string p = path + ".center_strata[" + std::to_string(i) + "]";
            const json& entry = as_object(arr[i], p);
            check_keys(entry, {"extra", "cover", "geom"}, p);
            std::set<std::string> extra = id_set(require_key(entry, "extra", p), p + ".extra");
            if (spec.center_strata.count(extra))
                throw SchemaError("duplicate center stratum key", p + ".extra");
            CenterClasses classes;
            classes.cover = expr_value(require_key(entry, "cover", p), p + ".cover");
            classes.geom = expr_value(require_key(entry, "geom", p), p + ".geom");
            spec.center_strata.emplace(std::move(extra), std::move(classes));
        }
    }
    return spec;
}

json render_expr(const RingElem& e) { return e.str(); }

json render_ids(const std::set<std::string>& ids) {
    json arr = json::array();
    for (const auto& id : ids) arr.push_back(id);
    return arr;
}

} // namespace

std::pair<int, int> line_col(const std::string& text, long offset) {
    int line = 1, col = 1;
    for (long i = 0; i < offset && i < static_cast<long>(text.size()); ++i) {
        if (text[static_cast<size_t>(i)] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ConfigDocument parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, static_cast<long>(e.byte) - 1);
        throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + e.what(),
                         "", static_cast<long>(e.byte) - 1);
    }

    const json& root = as_object(doc, "$");
    check_keys(root,
               {"ambient_dim", "components", "strata", "selection", "blowups", "hodge_table",
                "chi_table"},
               "$");

    ConfigDocument out;
    long long dim = as_int(require_key(root, "ambient_dim", "$"), "$.ambient_dim");
    if (dim < 1) throw SchemaError("ambient_dim must be >= 1", "$.ambient_dim");
    out.config.ambient_dim = static_cast<int>(dim);

    const json& comps = as_array(require_key(root, "components", "$"), "$.components");
    for (size_t i = 0; i < comps.size(); ++i)
        out.config.components.push_back(
            parse_component(comps[i], "$.components[" + std::to_string(i) + "]"));

    const json& strata = as_array(require_key(root, "strata", "$"), "$.strata");
    for (size_t i = 0; i < strata.size(); ++i)
        out.config.strata.push_back(parse_stratum(strata[i], "$.strata[" + std::to_string(i) + "]"));

    out.config.selection = id_set(require_key(root, "selection", "$"), "$.selection");

    if (root.contains("blowups")) {
        const json& arr = as_array(root["blowups"], "$.blowups");
        for (size_t i = 0; i < arr.size(); ++i)
            out.blowups.push_back(parse_blowup(arr[i], "$.blowups[" + std::to_string(i) + "]"));
    }
    if (root.contains("hodge_table")) {
        const json& tbl = as_object(root["hodge_table"], "$.hodge_table");
        for (const auto& [key, value] : tbl.items()) {
            std::string p = "$.hodge_table." + key;
            if (value.is_number_integer()) {
                out.hodge_table.emplace(key, QPoly(Rat(value.get<long long>())));
            } else if (value.is_string()) {
                try {
                    out.hodge_table.emplace(key, parse_qpoly(value.get<std::string>()));
                } catch (const ParseError& e) {
                    throw ParseError(std::string(e.what()), p, e.offset());
                }
            } else {
                throw SchemaError("expected an expression string or integer", p);
            }
        }
    }
    if (root.contains("chi_table")) {
        const json& tbl = as_object(root["chi_table"], "$.chi_table");
        for (const auto& [key, value] : tbl.items())
            out.chi_table.emplace(key, Rat(as_int(value, "$.chi_table." + key)));
    }

    out.config.canonicalize();
    return out;
}

std::string format_config(const ConfigDocument& doc) {
    json root = json::object();
    root["ambient_dim"] = doc.config.ambient_dim;

    json comps = json::array();
    for (const auto& c : doc.config.components)
        comps.push_back(json{{"id", c.id}, {"m", c.m}, {"nu", c.nu}});
    root["components"] = std::move(comps);

    DivisorConfiguration canonical = doc.config;
    canonical.canonicalize();
    json strata = json::array();
    for (const auto& s : canonical.strata)
        strata.push_back(json{{"components", render_ids(s.comps)},
                              {"cover", render_expr(s.cover)},
                              {"geom", render_expr(s.geom)}});
    root["strata"] = std::move(strata);
    root["selection"] = render_ids(doc.config.selection);

    if (!doc.blowups.empty()) {
        json arr = json::array();
        for (const auto& b : doc.blowups) {
            json obj = json::object();
            obj["center_in"] = render_ids(b.center_in);
            obj["codim"] = b.codim;
            obj["transversal"] = render_ids(b.transversal);
            if (!b.center_strata.empty()) {
                json cs = json::array();
                for (const auto& [extra, classes] : b.center_strata)
                    cs.push_back(json{{"extra", render_ids(extra)},
                                      {"cover", render_expr(classes.cover)},
                                      {"geom", render_expr(classes.geom)}});
                obj["center_strata"] = std::move(cs);
            }
            obj["new_id"] = b.new_id;
            arr.push_back(std::move(obj));
        }
        root["blowups"] = std::move(arr);
    }
    if (!doc.hodge_table.empty()) {
        json tbl = json::object();
        for (const auto& [key, value] : doc.hodge_table) tbl[key] = value.str();
        root["hodge_table"] = std::move(tbl);
    }
    if (!doc.chi_table.empty()) {
        json tbl = json::object();
        for (const auto& [key, value] : doc.chi_table) {
            if (boost::multiprecision::denominator(value) != 1)
                throw DomainError("chi_table values must be integers");
            tbl[key] = boost::multiprecision::numerator(value).convert_to<long long>();
        }
        root["chi_table"] = std::move(tbl);
    }
    return root.dump(2) + "\n";
}

} // namespace mzeta
