// Copyright 2026 The entqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the entqkd library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an eqkd_status; on
 * failure a message describing the error is available from eqkd_last_error()
 * on the calling thread until the next failing call. Strings returned through
 * char** out-parameters are heap allocated and released with
 * eqkd_string_free().
 */
#ifndef ENTQKD_H
#define ENTQKD_H

#include <stddef.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  ifdef ENTQKD_BUILDING
#    define ENTQKD_API __declspec(dllexport)
#  else
#    define ENTQKD_API __declspec(dllimport)
#  endif
#else
#  define ENTQKD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eqkd_status {
  EQKD_OK = 0,
  EQKD_ERR_USAGE = 1,      /* argument outside the documented domain */
  EQKD_ERR_VALIDATION = 2, /* input failed a schema or invariant check */
  EQKD_ERR_NUMERIC = 3,    /* numerical routine failed to converge */
  EQKD_ERR_INTERNAL = 4    /* anything else (allocation failure, bug) */
} eqkd_status;

typedef enum eqkd_verdict {
  EQKD_NOT_DETECTED = 0,
  EQKD_DETECTED = 1
} eqkd_verdict;

typedef struct eqkd_distribution eqkd_distribution;
typedef struct eqkd_detection eqkd_detection;
typedef struct eqkd_tripartite eqkd_tripartite;

ENTQKD_API const char* eqkd_version(void);
ENTQKD_API const char* eqkd_last_error(void);
ENTQKD_API void eqkd_string_free(char* s);

/* ---- distributions ------------------------------------------------------ */

/*
 * Simulates the correlation phase. Specs:
 *   protocol  "four-state" | "six-state"
 *   source    "phi-plus" | "phi-minus" | "psi-plus" | "psi-minus" | "mixed" | "werner:<p>"
 *   channel   "identity" | "rotation:<angle>" | "depolarizing:<p>"
 *   attack    "none" | "intercept-resend:<bases>"
 * NULL source/channel/attack select phi-plus/identity/none. When out_eve is
 * non-NULL it receives Eve's joint table P(A,B,E) for an attack, or NULL
 * when no attack was configured.
 */
ENTQKD_API eqkd_status eqkd_simulate(const char* protocol, const char* source,
                                     const char* channel, const char* attack,
                                     eqkd_distribution** out_dist, eqkd_tripartite** out_eve);

ENTQKD_API eqkd_status eqkd_distribution_from_json(const char* text, eqkd_distribution** out);
ENTQKD_API eqkd_status eqkd_distribution_to_json(const eqkd_distribution* dist, char** out);
/* 1 for six-state, 0 for four-state. */
ENTQKD_API eqkd_status eqkd_distribution_is_six_state(const eqkd_distribution* dist, int* out);
/* basis in 'x', 'y', 'z'; outcomes +1 / -1. */
ENTQKD_API eqkd_status eqkd_distribution_probability(const eqkd_distribution* dist, char basis_a,
                                                     int a, char basis_b, int b, double* out);
ENTQKD_API eqkd_status eqkd_distribution_qber(const eqkd_distribution* dist, double* out);
ENTQKD_API void eqkd_distribution_free(eqkd_distribution* dist);

/* ---- detection ---------------------------------------------------------- */

/* Four-state data: Omega eigendecomposition. Six-state data: tomography + PPT. */
ENTQKD_API eqkd_status eqkd_detect(const eqkd_distribution* dist, double tol,
                                   eqkd_detection** out);
/* Brute-force search over the real-generator family (four-state data). */
ENTQKD_API eqkd_status eqkd_grid_search(const eqkd_distribution* dist, int resolution,
                                        double tol, eqkd_detection** out);

ENTQKD_API eqkd_verdict eqkd_detection_verdict(const eqkd_detection* det);
ENTQKD_API double eqkd_detection_value(const eqkd_detection* det);
ENTQKD_API double eqkd_detection_margin(const eqkd_detection* det);
ENTQKD_API double eqkd_detection_min_eigenvalue(const eqkd_detection* det);
/* Row-major c_ij over {0,x,y,z}^2. EQKD_ERR_USAGE when no witness exists. */
ENTQKD_API eqkd_status eqkd_detection_witness_coefficients(const eqkd_detection* det,
                                                           double out[16]);
ENTQKD_API eqkd_status eqkd_detection_report_json(const eqkd_detection* det,
                                                  const eqkd_distribution* dist,
                                                  int emit_pseudo_mixture, char** out);
ENTQKD_API void eqkd_detection_free(eqkd_detection* det);

/* Six-state data only. *entangled is set to 1 when the reconstruction is NPT. */
ENTQKD_API eqkd_status eqkd_tomography_json(const eqkd_distribution* dist, double tol,
                                            int* entangled, char** out);

/* ---- sweeps and parsing ------------------------------------------------- */

ENTQKD_API eqkd_status eqkd_parse_angle(const char* text, double* out);
ENTQKD_API eqkd_status eqkd_scan_csv(double theta_from, double theta_to, int points, double tol,
                                     char** out);

/* ---- classical tables --------------------------------------------------- */

ENTQKD_API eqkd_status eqkd_tripartite_from_json(const char* text, eqkd_tripartite** out);
ENTQKD_API eqkd_status eqkd_tripartite_to_json(const eqkd_tripartite* t, char** out);
ENTQKD_API eqkd_status eqkd_tripartite_mutual_information(const eqkd_tripartite* t, double* out);
ENTQKD_API eqkd_status eqkd_tripartite_cmi(const eqkd_tripartite* t, double* out);
/* Report over candidate extensions of one P(A,B): I(A;B), each I(A;B|E), min. */
ENTQKD_API eqkd_status eqkd_info_report_json(const eqkd_tripartite* const* candidates,
                                             size_t count, char** out);
ENTQKD_API void eqkd_tripartite_free(eqkd_tripartite* t);

#ifdef __cplusplus
}
#endif

#endif /* ENTQKD_H */
