#include <stdio.h>
#include <string.h>
#include "leibniz.h"

static const char *R4 = "{\"kind\": \"tensor2\", \"dim\": 4, \"terms\": [[3, 1, \"1\"], [4, 2, \"1\"]]}";

int main(void) {
    LbAlgebra *alg = NULL;
    LbTensor2 *r = NULL;
    LbClassification c;
    char *json = NULL;

    if (lb_algebra_fixture("e4", &alg) != LB_STATUS_OK) return 1;
    if (lb_algebra_dim(alg) != 4) return 2;
    if (lb_tensor2_from_json(R4, &r) != LB_STATUS_OK) return 3;
    if (lb_classify(alg, r, &c) != LB_STATUS_OK) return 4;
    if (!c.quasi_triangular || c.triangular || !c.factorizable) return 5;
    if (lb_quadratic_rb_from_factorizable(alg, r, "-1", &json) != LB_STATUS_OK) return 6;
    printf("%s\n", json);
    lb_string_free(json);
    LbAlgebra *missing = NULL;
    if (lb_algebra_fixture("nope", &missing) != LB_STATUS_UNKNOWN_FIXTURE || missing != NULL) return 7;
    if (strlen(lb_last_error_message()) == 0) return 8;
    lb_tensor2_free(r);
    lb_algebra_free(alg);
    return 0;
}
