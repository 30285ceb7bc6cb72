#include <stdint.h>
#include <stdio.h>
#include <string.h>

#include "nichols.h"

int main(void) {
    NicholsBraiding *b = NULL;
    if (nichols_braiding_new("fixture:diagonal-minus1-dim3", &b) != NICHOLS_STATUS_OK) {
        fprintf(stderr, "%s\n", nichols_last_error());
        return 10;
    }
    size_t dims[5];
    if (nichols_dims_compute(b, 4, 0, dims, 5) != NICHOLS_STATUS_OK) return 11;
    nichols_braiding_free(b);
    printf("%zu %zu %zu %zu %zu\n", dims[0], dims[1], dims[2], dims[3], dims[4]);

    char *out = NULL;
    int code = -1;
    const char *job = "{\"command\":\"cover-check\",\"input\":\"fixture:s3-transpositions-minus1\",\"d\":1,\"N\":2}";
    if (nichols_run_job(job, &out, &code) != NICHOLS_STATUS_OK) return 12;
    int mismatch = strstr(out, "\"mismatch\"") != NULL;
    nichols_string_free(out);
    printf("exit %d mismatch %d\n", code, mismatch);

    if (nichols_braiding_new("{\"rack\":{\"size\":2,\"op\":[[0,0],[1,1]]},\"q\":[[1,1],[1,1]]}", &b) != NICHOLS_STATUS_INVALID_INPUT) return 13;
    printf("error %s\n", nichols_last_error() ? "set" : "unset");
    return 0;
}
