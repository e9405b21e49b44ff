/* Compiled as C to keep the public header C-clean. */
#include <ddm/ddm.h>
#include <stdio.h>

int main(void) {
  ddm_extents* s = NULL;
  ddm_extents* u = NULL;
  ddm_report* r = NULL;
  ddm_match_options opts;
  const double a[2] = {0.0, 5.0};
  const double b[2] = {5.0, 9.0};

  if (ddm_extents_create(DDM_SUBSCRIPTION, 1, &s) != DDM_OK) return 1;
  if (ddm_extents_create(DDM_UPDATE, 1, &u) != DDM_OK) return 1;
  ddm_extents_append(s, a, NULL);
  ddm_extents_append(u, b, NULL);
  ddm_match_options_init(&opts);
  if (ddm_match(s, u, &opts, &r) != DDM_OK) {
    fprintf(stderr, "%s\n", ddm_last_error());
    return 1;
  }
  const int ok = ddm_report_count(r) == 1;
  ddm_report_destroy(r);
  ddm_extents_destroy(s);
  ddm_extents_destroy(u);
  return ok ? 0 : 1;
}
