/* Exercises the C interface from plain C. */
#include <chordatlas.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                    \
    do {                                                                \
        if (!(cond)) {                                                  \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                 \
        }                                                               \
    } while (0)

static int count_cb(const ca_diagram* d, void* user) {
    (void)d;
    ++*(long*)user;
    return 0;
}

static int count_map_cb(const ca_map* m, void* user) {
    long* n = (long*)user;
    ca_diagram* d = NULL;
    ca_map* back = NULL;
    ++n[0];
    /* phi round trip through the interface */
    if (ca_phi(m, &d) == CA_OK && ca_phi_inv(d, &back) == CA_OK && ca_map_isomorphic(m, back)) ++n[1];
    ca_map_free(back);
    ca_diagram_free(d);
    return 0;
}

int main(void) {
    ca_options opt;
    ca_options_default(&opt);

    ca_diagram* d = NULL;
    char* s = NULL;
    EXPECT(ca_diagram_parse("{\"pairs\": [[0, 1]]}", &d) == CA_OK);
    EXPECT(ca_diagram_size(d) == 1);
    EXPECT(ca_diagram_export(d, "arcs-text", &s) == CA_OK);
    EXPECT(s && strcmp(s, "0-1") == 0);
    ca_free(s);
    EXPECT(ca_diagram_export(d, "png", &s) == CA_UNKNOWN_FORMAT);
    EXPECT(strlen(ca_last_error()) > 0);

    ca_map* m = NULL;
    EXPECT(ca_phi_inv(d, &m) == CA_OK);
    EXPECT(ca_map_size(m) == 1);
    EXPECT(ca_map_export(m, "json", &s) == CA_OK);
    EXPECT(s && strcmp(s, "{\"alpha\":[0],\"root\":0,\"sigma\":[0]}") == 0);
    ca_free(s);
    ca_map_free(m);
    ca_diagram_free(d);

    d = NULL;
    EXPECT(ca_diagram_parse("0-2 1-2", &d) == CA_DUPLICATE_POINT);
    EXPECT(d == NULL);
    EXPECT(ca_diagram_parse("0-3 1-6 2-4 5-7", &d) == CA_OK);
    EXPECT(ca_diagram_is_connected(d));
    EXPECT(ca_diagram_stats(d, "intersection", &s) == CA_OK);
    EXPECT(s && strstr(s, "\"nu\":[0,0,2,1]") != NULL);
    ca_free(s);
    EXPECT(ca_theta_inv(d, &m) == CA_OK);
    EXPECT(ca_map_is_bridgeless(m));
    ca_map_free(m);
    ca_diagram_free(d);

    EXPECT(ca_map_parse("{\"sigma\": [1, 0], \"alpha\": [0, 1], \"root\": 0}", &m) == CA_ROOT_NOT_FIXED);
    EXPECT(ca_map_parse("{\"sigma\": [0, 1", &m) == CA_PARSE);

    long count = 0;
    EXPECT(ca_enumerate_diagrams(5, "connected", &opt, count_cb, &count) == CA_OK);
    EXPECT(count == 248);
    long maps[2] = {0, 0};
    EXPECT(ca_enumerate_maps(4, "all", &opt, count_map_cb, maps) == CA_OK);
    EXPECT(maps[0] == 74 && maps[1] == 74);
    EXPECT(ca_enumerate_diagrams(opt.diagrams + 1, "all", &opt, count_cb, &count) == CA_BUDGET_EXCEEDED);

    EXPECT(ca_series("C", 2, 0, &opt, "text", &s) == CA_OK);
    EXPECT(s && strcmp(s, "u + u^2*z + 2*u^2*z^2 + 2*u^3*z^2") == 0);
    ca_free(s);

    ca_qft_request req;
    ca_qft_request_default(&req);
    req.xmax = 1;
    req.lmax = 2;
    int passed = 0;
    EXPECT(ca_qft(&req, &opt, &s, &passed) == CA_OK);
    EXPECT(s && strstr(s, "1 + L*a_{1,0}*x") != NULL);
    ca_free(s);
    req.xmax = 3;
    req.check = "dse-general";
    EXPECT(ca_qft(&req, &opt, &s, &passed) == CA_OK);
    EXPECT(passed == 1);
    ca_free(s);
    req.specialize = "1,0=x";
    EXPECT(ca_qft(&req, &opt, &s, &passed) == CA_PARSE);

    EXPECT(ca_verify("counts", 4, &opt, &s, &passed) == CA_OK);
    EXPECT(passed == 1);
    ca_free(s);
    EXPECT(ca_verify("nope", 4, &opt, &s, &passed) == CA_UNKNOWN_SUITE);
    EXPECT(strstr(ca_suite_names(), "nu-omega") != NULL);

    if (failures) fprintf(stderr, "%d failures\n", failures);
    return failures ? 1 : 0;
}
