#include "chordatlas.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>

#include "chordatlas/bijection.hpp"
#include "chordatlas/enumerate.hpp"
#include "chordatlas/error.hpp"
#include "chordatlas/genfun.hpp"
#include "chordatlas/io.hpp"
#include "chordatlas/qft.hpp"
#include "chordatlas/statistics.hpp"
#include "chordatlas/suites.hpp"
#include "json.hpp"

using namespace chordatlas;
using nlohmann::json;

struct ca_diagram {
    Diagram d;
};
struct ca_map {
    CombMap m;
};

namespace {

thread_local std::string last_error;

template <class F>
ca_status guard(F&& f) {
    try {
        f();
        last_error.clear();
        return CA_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return static_cast<ca_status>(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return CA_INTERNAL;
    }
}

ca_status invalid(const char* what) {
    last_error = what;
    return CA_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Budget budget_of(const ca_options* opt) {
    if (!opt) return default_budget();
    Budget b;
    b.diagrams = opt->diagrams;
    b.maps = opt->maps;
    b.qft = opt->qft;
    b.allow_large = opt->allow_large != 0;
    return b;
}

// "k,i=value;k,i=value"
std::map<std::pair<int, int>, mpq_class> parse_specializations(const char* text) {
    std::map<std::pair<int, int>, mpq_class> out;
    if (!text) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" ") == std::string::npos) continue;
        int k = 0, i = 0;
        char comma = 0, eq = 0;
        std::string value;
        std::istringstream is(item);
        if (!(is >> k >> comma >> i >> eq >> value) || comma != ',' || eq != '=' || k < 1 || i < 0)
            fail(ErrorCode::Parse, "bad specialization '" + item + "' (expected k,i=value)");
        try {
            mpq_class v(value);
            v.canonicalize();
            out[{k, i}] = v;
        } catch (const std::invalid_argument&) {
            fail(ErrorCode::Parse, "bad value in '" + item + "'");
        }
    }
    return out;
}

json report_json(const Report& r) { return json::parse(report_to_json(r)); }

json series_json(const Poly& p) {
    json j = json::parse(poly_to_json(p));
    j["text"] = p.str();
    return j;
}

} // namespace

extern "C" {

void ca_options_default(ca_options* out) {
    if (!out) return;
    Budget b = default_budget();
    out->diagrams = b.diagrams;
    out->maps = b.maps;
    out->qft = b.qft;
    out->allow_large = 0;
    out->seed = SuiteOptions{}.seed;
    out->threads = 0;
}

const char* ca_last_error(void) { return last_error.c_str(); }

const char* ca_status_name(ca_status s) {
    if (s == CA_OK) return "Ok";
    if (s == CA_INVALID_ARGUMENT) return "InvalidArgument";
    return error_name(static_cast<ErrorCode>(s));
}

void ca_free(char* s) { std::free(s); }

ca_status ca_diagram_parse(const char* text, ca_diagram** out) {
    if (!text || !out) return invalid("null argument");
    return guard([&] { *out = new ca_diagram{parse_diagram(text)}; });
}

void ca_diagram_free(ca_diagram* d) { delete d; }
int ca_diagram_size(const ca_diagram* d) { return d ? d->d.size() : 0; }
int ca_diagram_is_connected(const ca_diagram* d) { return d && is_connected(d->d); }
int ca_diagram_is_indecomposable(const ca_diagram* d) { return d && is_indecomposable(d->d); }

ca_status ca_diagram_export(const ca_diagram* d, const char* format, char** out) {
    if (!d || !format || !out) return invalid("null argument");
    return guard([&] { *out = dup(export_diagram(d->d, format)); });
}

ca_status ca_map_parse(const char* text, ca_map** out) {
    if (!text || !out) return invalid("null argument");
    return guard([&] {
        auto m = parse_map(text);
        if (!m.closed()) fail(ErrorCode::RootNotFixed, "only the root may be a dangling half-edge");
        *out = new ca_map{m};
    });
}

void ca_map_free(ca_map* m) { delete m; }
int ca_map_size(const ca_map* m) { return m ? m->m.size() : 0; }
int ca_map_is_bridgeless(const ca_map* m) { return m && is_bridgeless(m->m); }
int ca_map_is_planar(const ca_map* m) { return m && is_planar(m->m); }
int ca_map_isomorphic(const ca_map* a, const ca_map* b) { return a && b && canonical_code(a->m) == canonical_code(b->m); }

ca_status ca_map_export(const ca_map* m, const char* format, char** out) {
    if (!m || !format || !out) return invalid("null argument");
    return guard([&] { *out = dup(export_map(m->m, format)); });
}

ca_status ca_phi(const ca_map* m, ca_diagram** out) {
    if (!m || !out) return invalid("null argument");
    return guard([&] { *out = new ca_diagram{phi(m->m)}; });
}

ca_status ca_phi_inv(const ca_diagram* d, ca_map** out) {
    if (!d || !out) return invalid("null argument");
    return guard([&] {
        if (!is_indecomposable(d->d)) fail(ErrorCode::NotIndecomposable, "phi^-1 needs an indecomposable diagram");
        *out = new ca_map{phi_inv(d->d)};
    });
}

ca_status ca_theta(const ca_map* m, ca_diagram** out) {
    if (!m || !out) return invalid("null argument");
    return guard([&] { *out = new ca_diagram{theta(m->m)}; });
}

ca_status ca_theta_inv(const ca_diagram* d, ca_map** out) {
    if (!d || !out) return invalid("null argument");
    return guard([&] { *out = new ca_map{theta_inv(d->d)}; });
}

ca_status ca_enumerate_diagrams(int n, const char* cls, const ca_options* opt, ca_diagram_cb cb, void* user) {
    if (!cb) return invalid("null callback");
    return guard([&] {
        auto c = parse_diagram_class(cls ? cls : "all");
        for (auto& d : enumerate_diagrams(n, c, budget_of(opt))) {
            ca_diagram h{d};
            if (cb(&h, user)) break;
        }
    });
}

ca_status ca_enumerate_maps(int n, const char* cls, const ca_options* opt, ca_map_cb cb, void* user) {
    if (!cb) return invalid("null callback");
    return guard([&] {
        auto c = parse_map_class(cls ? cls : "all");
        for (auto& m : enumerate_maps(n, c, budget_of(opt))) {
            ca_map h{m};
            if (cb(&h, user)) break;
        }
    });
}

ca_status ca_diagram_stats(const ca_diagram* d, const char* order, char** json_out) {
    if (!d || !json_out) return invalid("null argument");
    return guard([&] {
        auto kind = parse_order(order ? order : "peeling");
        StatProfile p = stat_profile_diagram(d->d);
        json j = json::parse(profile_to_json(p));
        // the profile is defined on the peeling order; other orders add their own ranks
        auto o = make_order(d->d, kind);
        j["order"] = order_name(kind);
        j["order_sequence"] = o.sequence;
        j["order_terminals"] = terminal_positions(d->d, o);
        if (is_indecomposable(d->d)) j["order_omega"] = omega_vector(d->d, o);
        *json_out = dup(j.dump());
    });
}

ca_status ca_map_stats(const ca_map* m, char** json_out) {
    if (!m || !json_out) return invalid("null argument");
    return guard([&] { *json_out = dup(profile_to_json(stat_profile_map(m->m))); });
}

ca_status ca_series(const char* which, int zmax, int crossings, const ca_options* opt, const char* format, char** out) {
    if (!which || !format || !out) return invalid("null argument");
    return guard([&] {
        std::string w = which;
        if (w != "B" && w != "C") fail(ErrorCode::Parse, "series must be B or C");
        std::string f = format;
        if (f != "text" && f != "json") fail(ErrorCode::UnknownFormat, "'" + f + "' (expected text or json)");
        Budget b = budget_of(opt);
        Poly p = w == "B" ? series_B(zmax, b) : series_C(zmax, b);
        if (!crossings) p = p.subs("v", Poly(1));
        *out = dup(f == "text" ? p.str() : poly_to_json(p));
    });
}

void ca_qft_request_default(ca_qft_request* out) {
    if (!out) return;
    QftConfig cfg;
    *out = {cfg.s, cfg.xmax, cfg.lmax, "nu", "diagram", nullptr, nullptr};
}

ca_status ca_qft(const ca_qft_request* req, const ca_options* opt, char** json_out, int* passed) {
    if (!req || !json_out) return invalid("null argument");
    return guard([&] {
        Budget b = budget_of(opt);
        QftConfig cfg{req->s, req->xmax, req->lmax, 0};
        if (cfg.s < 1 || cfg.xmax < 1 || cfg.lmax < 1) fail(ErrorCode::Parse, "s, xmax and lmax must be positive");
        IndexKind kind = parse_index(req->order ? req->order : "nu");
        std::string side = req->side ? req->side : "diagram";
        if (side != "diagram" && side != "map" && side != "both") fail(ErrorCode::Parse, "side must be diagram, map or both");
        auto values = parse_specializations(req->specialize);
        ASymbol a = values.empty() ? ASymbol(a_symbol) : specialized(values);
        json j{{"s", cfg.s}, {"xmax", cfg.xmax}, {"lmax", cfg.lmax}, {"order", index_name(kind)}, {"side", side}};
        bool ok = true;
        std::string check = req->check ? req->check : "";
        if (check.empty()) {
            std::optional<Poly> gd, gm;
            if (side != "map") gd = G_series_diagrams(cfg, kind, a, b);
            if (side != "diagram") gm = G_series_maps(cfg, a, b);
            for (Poly* p : {gd ? &*gd : nullptr, gm ? &*gm : nullptr})
                if (p) p->cap("L", cfg.lmax);
            if (gd) j["diagram"] = series_json(*gd);
            if (gm) j["map"] = series_json(*gm);
            if (gd && gm) {
                j["agree"] = *gd == *gm;
                ok = *gd == *gm;
            }
        } else {
            std::vector<Report> reports;
            if (check == "dse-simple") {
                // a(1, i) plays f_i
                auto f = [values](int k, int i) {
                    if (k != 1) return Poly();
                    auto it = values.find({1, i});
                    return it == values.end() ? Poly::variable("f_" + std::to_string(i)) : Poly(it->second);
                };
                reports.push_back(dse_verify_simple(cfg.xmax, cfg.lmax, f, b));
            } else if (check == "dse-general") {
                reports.push_back(dse_verify_general(cfg, a, b));
            } else if (check == "crazy") {
                reports.push_back(crazy_formula_check(cfg.s, cfg.xmax - 1, kind, b));
            } else if (check == "map-identity") {
                reports.push_back(map_identity_check(cfg, 4, false, b));
                reports.push_back(map_identity_check(cfg, 4, true, b));
                reports.push_back(map_combination_check(std::min(cfg.xmax, b.maps), b));
            } else {
                fail(ErrorCode::UnknownSuite, "unknown check '" + check + "'");
            }
            json rs = json::array();
            for (auto& r : reports) {
                rs.push_back(report_json(r));
                ok = ok && r.ok();
            }
            j["check"] = check;
            j["reports"] = rs;
        }
        j["ok"] = ok;
        if (passed) *passed = ok;
        *json_out = dup(j.dump());
    });
}

ca_status ca_verify(const char* suite, int nmax, const ca_options* opt, char** json_out, int* passed) {
    if (!suite || !json_out) return invalid("null argument");
    return guard([&] {
        SuiteOptions o;
        o.budget = budget_of(opt);
        if (opt) {
            o.seed = opt->seed;
            o.threads = opt->threads;
        }
        auto r = run_suite(suite, nmax, o);
        if (passed) *passed = r.ok();
        *json_out = dup(suite_report_to_json(r));
    });
}

const char* ca_suite_names(void) {
    static const std::string names = [] {
        std::string s;
        for (auto& n : suite_names()) s += (s.empty() ? "" : " ") + n;
        return s;
    }();
    return names.c_str();
}

} // extern "C"
