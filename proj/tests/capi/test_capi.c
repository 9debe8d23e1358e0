#include <stdio.h>
#include <string.h>

#include "psiq/psiq.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

int main(void) {
  psiq_specs* specs = NULL;
  psiq_report* report = NULL;
  char* text = NULL;

  EXPECT(strlen(psiq_version()) > 0);
  EXPECT(strcmp(psiq_suite_name(0), "elliptic-identities") == 0);

  EXPECT(psiq_specs_parse("{\"kind\":\"genus2\",\"lambda\":[\"0\",\"0\",\"0\",\"0\",\"0\"]}", &specs) ==
         PSIQ_ERR_SINGULAR);
  EXPECT(specs == NULL);
  EXPECT(strlen(psiq_last_error()) > 0);
  EXPECT(psiq_specs_parse("{\"kind\":\"elliptic\",\"g2\":\"x\",\"g3\":\"1\"}", &specs) == PSIQ_ERR_RATIONAL);
  EXPECT(psiq_specs_parse("{\"kind\":\"elliptic\",\"g2\":\"4\",\"g3\":\"1\",\"point\":[\"0\",\"0\"]}", &specs) ==
         PSIQ_ERR_OFF_CURVE);
  EXPECT(psiq_specs_parse("[", &specs) == PSIQ_ERR_DOCUMENT);
  EXPECT(psiq_specs_parse(NULL, &specs) == PSIQ_ERR_ARGUMENT);

  EXPECT(psiq_specs_parse("{\"kind\":\"elliptic\",\"g2\":\"4\",\"g3\":\"1\"}", &specs) == PSIQ_OK);
  EXPECT(psiq_specs_count(specs) == 1);
  EXPECT(psiq_elliptic_psi(specs, 0, 2, &text) == PSIQ_OK);
  EXPECT(text && strcmp(text, "((-1))*y") == 0);
  psiq_string_free(text);
  EXPECT(psiq_genus2_alpha_at(specs, 0, 4, "0", &text) == PSIQ_ERR_ARGUMENT);

  psiq_options o = psiq_default_options();
  EXPECT(o.n_max == 10);
  EXPECT(psiq_run_suite(specs, "no-such-suite", &o, &report) == PSIQ_ERR_SUITE);
  EXPECT(psiq_run_suite(specs, "g2-calibrate", &o, &report) == PSIQ_ERR_SUITE);
  EXPECT(report == NULL);
  EXPECT(psiq_run_suite(specs, "elliptic-identities", &o, &report) == PSIQ_OK);
  EXPECT(psiq_report_passed(report) == 1);
  EXPECT(psiq_report_emit(report, "csv", &text) == PSIQ_OK);
  EXPECT(text && strncmp(text, "suite,identity,index,residual,exact_flag\n", 41) == 0);
  psiq_string_free(text);
  EXPECT(psiq_report_emit(report, "xml", &text) == PSIQ_ERR_ARGUMENT);
  psiq_report_free(report);
  psiq_specs_free(specs);

  EXPECT(psiq_specs_parse("{\"kind\":\"genus2\",\"lambda\":[\"0\",\"1\",\"0\",\"0\",\"0\"]}", &specs) == PSIQ_OK);
  EXPECT(psiq_genus2_alpha_at(specs, 0, 4, "0", &text) == PSIQ_OK);
  EXPECT(text && strcmp(text, "2") == 0);
  psiq_string_free(text);
  EXPECT(psiq_genus2_kappa(3, &text) == PSIQ_OK);
  EXPECT(text && strcmp(text, "4") == 0);
  psiq_string_free(text);
  EXPECT(psiq_run_suite(specs, "g2-dp1", &o, &report) == PSIQ_CHECK_FAILED);
  EXPECT(report != NULL);
  EXPECT(psiq_report_passed(report) == 0);
  psiq_report_free(report);
  psiq_specs_free(specs);

  EXPECT(psiq_specs_random(PSIQ_GENUS2, 2, 5, &specs) == PSIQ_OK);
  EXPECT(psiq_specs_count(specs) == 2);
  psiq_specs_free(specs);
  EXPECT(psiq_specs_random(PSIQ_GENUS2, 0, 5, &specs) == PSIQ_ERR_ARGUMENT);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  return failures ? 1 : 0;
}
