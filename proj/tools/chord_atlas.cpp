#include <chordatlas.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

struct CliError {
    int code;
    std::string message;
};

void check(ca_status s) {
    if (s == CA_OK) return;
    bool usage = s == CA_PARSE || s == CA_UNKNOWN_SUITE || s == CA_UNKNOWN_FORMAT || s == CA_INVALID_ARGUMENT ||
                 s == CA_BUDGET_EXCEEDED;
    throw CliError{usage ? kUsage : kFail, ca_last_error()};
}

// Takes ownership of a library string.
std::string take(char* s) {
    std::string out(s);
    ca_free(s);
    return out;
}

// "-" reads stdin, "@path" reads a file, anything else is the object itself.
std::string read_object(const std::string& arg) {
    if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw CliError{kUsage, "cannot read " + arg.substr(1)};
        return {std::istreambuf_iterator<char>(in), {}};
    }
    return arg;
}

bool is_map_text(const std::string& text) { return text.find("\"sigma\"") != std::string::npos; }

struct Diagram {
    ca_diagram* p = nullptr;
    explicit Diagram(const std::string& text) { check(ca_diagram_parse(text.c_str(), &p)); }
    Diagram() = default;
    Diagram(const Diagram&) = delete;
    ~Diagram() { ca_diagram_free(p); }
};

struct Map {
    ca_map* p = nullptr;
    explicit Map(const std::string& text) { check(ca_map_parse(text.c_str(), &p)); }
    Map() = default;
    Map(const Map&) = delete;
    ~Map() { ca_map_free(p); }
};

std::string export_diagram(const ca_diagram* d, const std::string& format) {
    char* out = nullptr;
    check(ca_diagram_export(d, format.c_str(), &out));
    return take(out);
}

std::string export_map(const ca_map* m, const std::string& format) {
    char* out = nullptr;
    check(ca_map_export(m, format.c_str(), &out));
    return take(out);
}

std::string trim_newline(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

struct EnumState {
    std::string format;
    bool count_only = false;
    long count = 0;
};

int print_diagram(const ca_diagram* d, void* user) {
    auto* st = static_cast<EnumState*>(user);
    ++st->count;
    if (!st->count_only) std::cout << trim_newline(export_diagram(d, st->format)) << '\n';
    return 0;
}

int print_map(const ca_map* m, void* user) {
    auto* st = static_cast<EnumState*>(user);
    ++st->count;
    if (!st->count_only) std::cout << trim_newline(export_map(m, st->format)) << '\n';
    return 0;
}

void print_report_text(const json& j) {
    std::cout << j["suite"].get<std::string>() << " (n <= " << j["nmax"] << "): " << (j["ok"].get<bool>() ? "PASS" : "FAIL")
              << '\n';
    for (auto& p : j["properties"]) {
        std::cout << "  " << (p["ok"].get<bool>() ? "pass" : "FAIL") << "  " << p["name"].get<std::string>() << "  checked "
                  << p["checked"] << ", violations " << p["violations"] << '\n';
        for (auto& d : p["details"]) std::cout << "        " << d.get<std::string>() << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chord diagrams, rooted maps, the bijections between them, and their generating functions."};
    app.require_subcommand(1);
    ca_options opt;
    ca_options_default(&opt);
    bool allow_large = false;
    app.add_flag("--allow-large", allow_large, "Allow sizes above the default budgets");
    app.add_option("--seed", opt.seed, "Seed for randomized checks");
    app.add_option("--threads", opt.threads, "Worker threads for verification suites (0: all cores)");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "List all objects of a size in deterministic order");
    std::string family, cls = "all", en_format = "arcs-text";
    int en_n = 0;
    bool en_count = false;
    en->add_option("family", family, "diagrams or maps")->required()->check(CLI::IsMember({"diagrams", "maps"}));
    en->add_option("n", en_n, "Size")->required()->check(CLI::PositiveNumber);
    en->add_option("--class", cls, "diagrams: all, connected, indecomposable; maps: all, bridgeless, planar");
    en->add_option("--format", en_format, "json, dot or arcs-text (maps print cycles for arcs-text)");
    en->add_flag("--count", en_count, "Print only the number of objects");

    // bijections
    std::string object, bij = "phi", bij_format = "json";
    auto* m2d = app.add_subcommand("map-to-diagram", "Apply phi (or theta on bridgeless maps) to a map");
    m2d->add_option("map", object, "Map JSON, - for stdin, or @file")->required();
    m2d->add_option("--bijection", bij, "phi or theta")->check(CLI::IsMember({"phi", "theta"}));
    m2d->add_option("--format", bij_format, "json, dot or arcs-text");
    auto* d2m = app.add_subcommand("diagram-to-map", "Apply the inverse bijection to a diagram");
    d2m->add_option("diagram", object, "Diagram JSON or text, - for stdin, or @file")->required();
    d2m->add_option("--bijection", bij, "phi or theta")->check(CLI::IsMember({"phi", "theta"}));
    d2m->add_option("--format", bij_format, "json, dot or arcs-text");

    // stats
    auto* st = app.add_subcommand("stats", "Statistic profile of a diagram or map as JSON");
    std::string order = "peeling";
    st->add_option("object", object, "Diagram or map, - for stdin, or @file")->required();
    st->add_option("--order", order, "Diagram order: intersection, peeling, first-endpoint");

    // series
    auto* se = app.add_subcommand("series", "Generating series B or C by chord count and top chords");
    std::string which, se_format = "text";
    int zmax = 3;
    bool crossings = false;
    se->add_option("which", which, "B (indecomposable) or C (connected)")->required()->check(CLI::IsMember({"B", "C"}));
    se->add_option("--zmax", zmax, "Highest power of z")->check(CLI::NonNegativeNumber);
    se->add_flag("--crossings", crossings, "Keep the crossing variable v");
    se->add_option("--format", se_format, "text or json");

    // qft
    auto* qf = app.add_subcommand("qft", "Weighted series G(x, L) and the identities around it");
    ca_qft_request req;
    ca_qft_request_default(&req);
    std::string q_order = "nu", side = "diagram", q_check;
    std::vector<std::string> specs;
    qf->add_option("--s", req.s, "Parameter s of the equation")->check(CLI::PositiveNumber);
    qf->add_option("--xmax", req.xmax, "Truncation in x")->check(CLI::PositiveNumber);
    qf->add_option("--lmax", req.lmax, "Truncation in L")->check(CLI::PositiveNumber);
    qf->add_option("--order", q_order, "nu, omega-inter or omega-peel")->check(CLI::IsMember({"nu", "omega-inter", "omega-peel"}));
    qf->add_option("--side", side, "diagram, map or both")->check(CLI::IsMember({"diagram", "map", "both"}));
    qf->add_option("--specialize", specs, "Fix a coefficient: \"k,i=value\" (repeatable)");
    qf->add_option("--check", q_check, "dse-simple, dse-general, crazy or map-identity")
        ->check(CLI::IsMember({"dse-simple", "dse-general", "crazy", "map-identity"}));

    // verify
    auto* ve = app.add_subcommand("verify", "Run a verification suite (exit 0 pass, 1 failure, 2 usage)");
    std::string suite;
    int ve_n = 0;
    bool ve_json = false;
    ve->add_option("suite", suite, ca_suite_names())->required();
    ve->add_option("nmax", ve_n, "Size bound (defaults per suite)");
    ve->add_flag("--json", ve_json, "Print the report as JSON");

    // export
    auto* ex = app.add_subcommand("export", "Render a diagram or map");
    std::string ex_format = "arcs-text";
    ex->add_option("object", object, "Diagram or map, - for stdin, or @file")->required();
    ex->add_option("--format", ex_format, "json, dot or arcs-text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    opt.allow_large = allow_large;

    try {
        if (*en) {
            EnumState state{en_format, en_count, 0};
            if (family == "diagrams")
                check(ca_enumerate_diagrams(en_n, cls.c_str(), &opt, print_diagram, &state));
            else
                check(ca_enumerate_maps(en_n, cls.c_str(), &opt, print_map, &state));
            if (en_count) std::cout << state.count << '\n';
        } else if (*m2d) {
            Map m(read_object(object));
            Diagram d;
            check(bij == "phi" ? ca_phi(m.p, &d.p) : ca_theta(m.p, &d.p));
            std::cout << trim_newline(export_diagram(d.p, bij_format)) << '\n';
        } else if (*d2m) {
            Diagram d(read_object(object));
            Map m;
            check(bij == "phi" ? ca_phi_inv(d.p, &m.p) : ca_theta_inv(d.p, &m.p));
            std::cout << trim_newline(export_map(m.p, bij_format)) << '\n';
        } else if (*st) {
            std::string text = read_object(object);
            char* out = nullptr;
            if (is_map_text(text)) {
                Map m(text);
                check(ca_map_stats(m.p, &out));
            } else {
                Diagram d(text);
                check(ca_diagram_stats(d.p, order.c_str(), &out));
            }
            std::cout << take(out) << '\n';
        } else if (*se) {
            char* out = nullptr;
            check(ca_series(which.c_str(), zmax, crossings, &opt, se_format.c_str(), &out));
            std::cout << take(out) << '\n';
        } else if (*qf) {
            std::string joined;
            for (auto& s : specs) joined += (joined.empty() ? "" : ";") + s;
            req.order = q_order.c_str();
            req.side = side.c_str();
            req.specialize = joined.empty() ? nullptr : joined.c_str();
            req.check = q_check.empty() ? nullptr : q_check.c_str();
            char* out = nullptr;
            int passed = 0;
            check(ca_qft(&req, &opt, &out, &passed));
            std::cout << json::parse(take(out)).dump(2) << '\n';
            if (!q_check.empty() || side == "both") return passed ? 0 : kFail;
        } else if (*ve) {
            if (ve_n == 0) ve_n = suite == "qft" ? 5 : suite == "commutation" ? 4 : 6;
            char* out = nullptr;
            int passed = 0;
            check(ca_verify(suite.c_str(), ve_n, &opt, &out, &passed));
            json j = json::parse(take(out));
            if (ve_json)
                std::cout << j.dump(2) << '\n';
            else
                print_report_text(j);
            return passed ? 0 : kFail;
        } else if (*ex) {
            std::string text = read_object(object);
            if (is_map_text(text)) {
                Map m(text);
                std::cout << trim_newline(export_map(m.p, ex_format)) << '\n';
            } else {
                Diagram d(text);
                std::cout << trim_newline(export_diagram(d.p, ex_format)) << '\n';
            }
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    }
    return 0;
}
