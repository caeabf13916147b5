#include "chordatlas/io.hpp"

#include <algorithm>
#include <sstream>

#include "chordatlas/error.hpp"
#include "json.hpp"

namespace chordatlas {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::Parse, e.what());
    }
}

std::vector<int> int_array(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) fail(ErrorCode::Parse, std::string("missing array '") + key + "'");
    std::vector<int> out;
    for (auto& v : j[key]) {
        if (!v.is_number_integer()) fail(ErrorCode::Parse, std::string("'") + key + "' must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

bool looks_like_json(const std::string& text) {
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && text[p] == '{';
}

} // namespace

std::string diagram_to_text(const Diagram& d) {
    std::string out;
    for (auto [a, b] : d.chords()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(a) + "-" + std::to_string(b);
    }
    return out;
}

std::string diagram_to_json(const Diagram& d) {
    json pairs = json::array();
    for (auto [a, b] : d.chords()) pairs.push_back({a, b});
    return json{{"pairs", pairs}}.dump();
}

std::string diagram_to_dot(const Diagram& d) {
    std::ostringstream os;
    os << "graph diagram {\n  rankdir=LR;\n  node [shape=circle, width=0.3];\n";
    for (int p = 0; p < d.points(); ++p) os << "  p" << p << " [label=\"" << p << "\"];\n";
    for (int p = 0; p + 1 < d.points(); ++p) os << "  p" << p << " -- p" << p + 1 << " [style=invis];\n";
    int c = 0;
    for (auto [a, b] : d.chords()) {
        os << "  p" << a << " -- p" << b << " [constraint=false";
        if (c++ == 0) os << ", penwidth=2, label=\"root\"";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

Diagram parse_diagram(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    if (looks_like_json(text)) {
        json j = parse_json(text);
        if (!j.contains("pairs") || !j["pairs"].is_array()) fail(ErrorCode::Parse, "diagram JSON needs a 'pairs' array");
        for (auto& p : j["pairs"]) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
                fail(ErrorCode::Parse, "each pair must be [a, b]");
            pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
        }
    } else {
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) {
            int a = 0, b = 0;
            char dash = 0;
            std::istringstream ts(tok);
            if (!(ts >> a >> dash >> b) || dash != '-' || ts.peek() != EOF) fail(ErrorCode::Parse, "bad chord '" + tok + "'");
            pairs.emplace_back(a, b);
        }
    }
    return Diagram::from_pairs(pairs);
}

std::string map_to_json(const CombMap& m) {
    return json{{"sigma", m.sigma_perm()}, {"alpha", m.alpha_perm()}, {"root", m.root()}}.dump();
}

namespace {

std::string cycles(const std::vector<int>& perm) {
    std::string out;
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        out += '(';
        int h = static_cast<int>(s);
        bool first = true;
        do {
            if (!first) out += ' ';
            first = false;
            out += std::to_string(h);
            seen[h] = 1;
            h = perm[h];
        } while (h != static_cast<int>(s));
        out += ')';
    }
    return out;
}

} // namespace

std::string map_to_text(const CombMap& m) {
    return "sigma=" + cycles(m.sigma_perm()) + " alpha=" + cycles(m.alpha_perm()) + " root=" + std::to_string(m.root());
}

std::string map_to_dot(const CombMap& m) {
    auto vtx = m.vertex_of();
    std::ostringstream os;
    os << "graph map {\n  node [shape=record];\n";
    std::vector<char> done(m.vertex_count(), 0);
    for (int h = 0; h < m.half_edges(); ++h) {
        int v = vtx[h];
        if (done[v]) continue;
        done[v] = 1;
        // ports in counterclockwise order, starting from the smallest half-edge
        int start = h;
        os << "  v" << v << " [label=\"";
        int k = start;
        bool first = true;
        do {
            if (!first) os << '|';
            first = false;
            os << "<h" << k << "> " << k;
            k = m.sigma(k);
        } while (k != start);
        os << '"';
        if (v == vtx[m.root()]) os << ", root=\"h" << m.root() << "\", peripheries=2";
        os << "];\n";
    }
    for (int h = 0; h < m.half_edges(); ++h) {
        int g = m.alpha(h);
        if (g <= h) continue;
        os << "  v" << vtx[h] << ":h" << h << " -- v" << vtx[g] << ":h" << g << ";\n";
    }
    os << "}\n";
    return os.str();
}

CombMap parse_map(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) fail(ErrorCode::Parse, "map JSON must be an object");
    if (!j.contains("root") || !j["root"].is_number_integer()) fail(ErrorCode::Parse, "map JSON needs an integer 'root'");
    return CombMap::from_permutations(int_array(j, "sigma"), int_array(j, "alpha"), j["root"].get<int>());
}

ObjectKind detect_kind(const std::string& text) {
    if (!looks_like_json(text)) return ObjectKind::Diagram;
    return parse_json(text).contains("sigma") ? ObjectKind::Map : ObjectKind::Diagram;
}

std::string export_diagram(const Diagram& d, const std::string& format) {
    if (format == "json") return diagram_to_json(d);
    if (format == "dot") return diagram_to_dot(d);
    if (format == "arcs-text") return diagram_to_text(d);
    fail(ErrorCode::UnknownFormat, "'" + format + "' (expected json, dot or arcs-text)");
}

std::string export_map(const CombMap& m, const std::string& format) {
    if (format == "json") return map_to_json(m);
    if (format == "dot") return map_to_dot(m);
    if (format == "arcs-text") return map_to_text(m);
    fail(ErrorCode::UnknownFormat, "'" + format + "' (expected json, dot or arcs-text)");
}

std::string profile_to_json(const StatProfile& p) {
    json j{{"n", p.n}, {"terminals", p.terminals}, {"b", p.b}, {"gaps", p.gaps}, {"omega", p.omega}};
    if (p.top_count) j["top_count"] = *p.top_count;
    if (p.nu) j["nu"] = *p.nu;
    if (p.crossings) j["crossings"] = *p.crossings;
    if (p.vertices) j["vertices"] = *p.vertices;
    if (p.rid) j["rid"] = *p.rid;
    if (p.in_degrees) j["in_degrees"] = *p.in_degrees;
    if (p.genus) j["genus"] = *p.genus;
    return j.dump();
}

std::string poly_to_json(const Poly& p) {
    std::vector<int> vars;
    for (auto& [m, c] : p.terms())
        for (auto [v, e] : m)
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end(), [](int a, int b) { return var_name(a) < var_name(b); });
    json names = json::array();
    for (int v : vars) names.push_back(var_name(v));
    json coeffs = json::object();
    for (auto& [m, c] : p.terms()) {
        std::vector<int> exps(vars.size(), 0);
        for (auto [v, e] : m) exps[std::find(vars.begin(), vars.end(), v) - vars.begin()] = e;
        coeffs[json(exps).dump()] = c.get_str();
    }
    return json{{"variables", names}, {"coefficients", coeffs}}.dump();
}

std::string report_to_json(const Report& r) {
    return json{{"name", r.name}, {"n", r.n}, {"checked", r.checked}, {"violations", r.violations}, {"ok", r.ok()},
                {"details", r.details}}
        .dump();
}

} // namespace chordatlas
