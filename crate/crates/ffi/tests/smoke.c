#include <stdio.h>
#include <string.h>

#include "domcount.h"

#define CHECK(cond)                                                    \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond,     \
                    dc_last_error() ? dc_last_error() : "no error");   \
            return 1;                                                  \
        }                                                              \
    } while (0)

int main(void) {
    DcGraph *g = NULL;
    char *out = NULL;

    CHECK(dc_graph_from_family("complete:3", &g) == DC_STATUS_OK);
    CHECK(dc_count_structure(g, "ds", &out) == DC_STATUS_OK);
    CHECK(strcmp(out, "7") == 0);
    dc_string_free(out);

    CHECK(dc_count_legal(g, "proper", 2, true, NULL, &out) == DC_STATUS_OK);
    CHECK(strcmp(out, "6") == 0);
    dc_string_free(out);

    CHECK(dc_bound_check(g, "ds", &out) == DC_STATUS_OK);
    CHECK(strstr(out, "\"verdict\":\"equality\"") != NULL);
    dc_string_free(out);
    dc_graph_free(g);

    CHECK(dc_graph_from_graph6("not graph6 \x01", &g) == DC_STATUS_INVALID_INPUT);
    CHECK(dc_last_error() != NULL);

    puts("ok");
    return 0;
}
