/* Compiles the public header as C and makes one call of each kind. */
#include <stdio.h>
#include <string.h>

#include "padic_hyper/padic_hyper.h"

int main(void) {
  ph_context* ctx = NULL;
  char buf[128];
  size_t len = 0;
  ph_count_result r;
  int64_t lambda = 2;
  ph_sweep_config cfg;
  ph_report* rep = NULL;
  ph_summary s;

  if (ph_context_create(5, 3, NULL, &ctx) != PH_OK) return 1;
  if (ph_gfun(ctx, "1/2,1/2", "0,0", 2, buf, sizeof buf, &len, NULL) != PH_OK) return 1;
  ph_context_destroy(ctx);

  if (ph_count(5, "dik", &lambda, 1, 1, &r) != PH_OK || r.trace != 0) return 1;

  ph_sweep_config_init(&cfg);
  cfg.identity = "thm-1.1";
  cfg.p_max = 7;
  if (ph_sweep(&cfg, &rep) != PH_OK) return 1;
  if (ph_report_summary(rep, &s, NULL) != PH_OK || s.failed != 0) return 1;
  ph_report_destroy(rep);
  printf("ok %s\n", buf);
  return 0;
}
