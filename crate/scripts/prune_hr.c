#include "gtools.h"
/* reject if the last vertex lies in an induced P3+K1 (PRUNE_H) or K2+2K1 (PRUNE_R) */
static int adj(graph *g, int a, int b) { return ISELEMENT(GRAPHROW(g,a,1), b) != 0; }
static int is_h(graph *g, int *v) {
    int e = 0, deg[4] = {0,0,0,0};
    for (int i = 0; i < 4; ++i) for (int j = i+1; j < 4; ++j)
        if (adj(g, v[i], v[j])) { ++e; ++deg[i]; ++deg[j]; }
    if (e != 2) return 0;
    int z = 0, two = 0;
    for (int i = 0; i < 4; ++i) { if (deg[i] == 0) ++z; if (deg[i] == 2) ++two; }
    return z == 1 && two == 1;
}
static int is_r(graph *g, int *v) {
    int e = 0;
    for (int i = 0; i < 4; ++i) for (int j = i+1; j < 4; ++j)
        if (adj(g, v[i], v[j])) ++e;
    return e == 1;
}
static int scan(graph *g, int n, int (*pat)(graph*, int*)) {
    int v[4]; v[3] = n - 1;
    for (v[0] = 0; v[0] < n-1; ++v[0]) for (v[1] = v[0]+1; v[1] < n-1; ++v[1])
        for (v[2] = v[1]+1; v[2] < n-1; ++v[2]) if (pat(g, v)) return 1;
    return 0;
}
int prune_h(graph *g, int n, int maxn) { return n >= 4 && scan(g, n, is_h); }
int prune_r(graph *g, int n, int maxn) { return n >= 4 && scan(g, n, is_r); }
