#include <stdio.h>
#include "comrade.h"
int main(void) {
    const char *b[] = {"0","-1","1","3"}, *al[] = {"1","5","2"}, *g[] = {"2","3","5"}, *a[] = {"1","-1"};
    ComradeHandle *h = NULL;
    if (comrade_matrix_new(4, b, al, g, a, &h) != COMRADE_STATUS_OK) return 1;
    char *d = NULL;
    if (comrade_det(h, COMRADE_MODE_EXACT, &d) != COMRADE_STATUS_ZERO_PIVOT) return 2;
    printf("exact: %s\n", comrade_last_error_message());
    comrade_det(h, COMRADE_MODE_SYMBOLIC, &d);
    InverseHandle *inv = NULL;
    comrade_invert(h, COMRADE_MODE_SYMBOLIC, &inv);
    char *e = NULL;
    comrade_inverse_entry(inv, 0, 2, &e);
    printf("det %s, S13 %s\n", d, e);
    comrade_string_free(d); comrade_string_free(e);
    comrade_inverse_free(inv); comrade_matrix_free(h);
    return 0;
}
