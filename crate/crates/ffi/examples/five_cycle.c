/* Build: cc five_cycle.c -I../include -L../../../target/release -lcmpowers_ffi */
#include <stdio.h>
#include "cmpowers.h"

int main(void) {
    const uint32_t edges[] = {1, 2, 2, 3, 3, 4, 4, 5, 1, 5};
    CmpGraph *g = NULL;
    if (cmp_graph_new(5, edges, 5, &g) != CMP_STATUS_OK) {
        fprintf(stderr, "error: %s\n", cmp_last_error_message());
        return 1;
    }
    int32_t diameter = 0;
    cmp_graph_diameter(g, &diameter);
    printf("diameter %d\n", diameter);
    for (uint32_t m = 1; m <= 3; m++) {
        CmpIdeal *sym = NULL;
        size_t depth = 0, dim = 0;
        bool cm = false;
        cmp_symbolic_power(g, m, &sym);
        cmp_ideal_depth(sym, &depth);
        cmp_ideal_krull_dim(sym, &dim);
        cmp_ideal_is_cohen_macaulay(sym, &cm);
        printf("m=%u depth %zu dim %zu cm %s\n", m, depth, dim, cm ? "yes" : "no");
        cmp_ideal_free(sym);
    }
    CmpGraph *bad = NULL;
    if (cmp_graph_parse("n 4\n1 2\n", &bad) != CMP_STATUS_OK) {
        printf("rejected: %s\n", cmp_last_error_message());
    }
    cmp_graph_free(g);
    return 0;
}
