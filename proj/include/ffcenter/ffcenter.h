#ifndef FFCENTER_H
#define FFCENTER_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FFCENTER_BUILDING)
#define FFC_API __attribute__((visibility("default")))
#else
#define FFC_API
#endif

typedef enum ffc_status {
    FFC_OK = 0,
    FFC_INVALID_ARGUMENT = 1,
    FFC_OUT_OF_RANGE = 2,
    FFC_DOMAIN_ERROR = 3,
    FFC_INTERNAL_ERROR = 4
} ffc_status;

typedef enum ffc_case { FFC_ORTHOGONAL = 0, FFC_SYMPLECTIC = 1 } ffc_case;

/* g_N with its antidiagonal form at a level; level NULL means critical */
typedef struct ffc_algebra ffc_algebra;

/* Every char** output is a JSON payload owned by the caller, released with ffc_string_free.
   Rationals are "p/q" strings. pass is set by the checking calls. */

FFC_API ffc_status ffc_algebra_create(ffc_case c, int N, const char* level, ffc_algebra** out);
FFC_API void ffc_algebra_destroy(ffc_algebra* alg);
/* {"case", "N", "level"} */
FFC_API ffc_status ffc_algebra_describe(const ffc_algebra* alg, char** out);

FFC_API ffc_status ffc_phi(const ffc_algebra* alg, int m, char** out);
FFC_API ffc_status ffc_pfaffian(const ffc_algebra* alg, char** out);
/* every coefficient phi_{mk}, k = 0..m */
FFC_API ffc_status ffc_verify_ss(const ffc_algebra* alg, int m, int* pass, char** out);
FFC_API ffc_status ffc_verify_pfaffian(const ffc_algebra* alg, int* pass, char** out);
FFC_API ffc_status ffc_hc_leading(ffc_case c, int N, int m, char** out);

/* manifest: {algebra, N or n, B, modules: [{type: "vector", point}], m, order} */
FFC_API ffc_status ffc_gaudin(const char* manifest, int* pass, char** out);
/* b: n diagonal entries of B as rational strings; count 0 selects b_i = (2i-1)/(i+1) */
FFC_API ffc_status ffc_shift_of_argument(const ffc_algebra* alg, const char* const* b, int count, int* pass, char** out);
FFC_API ffc_status ffc_yangian(const ffc_algebra* alg, int m, int order, int bound, const char* const* b, int count, int* pass,
                               char** out);
FFC_API ffc_status ffc_brauer_check(int max_m, int* pass, char** out);

FFC_API void ffc_string_free(char* s);
/* message of the last failed call on this thread, "" if none */
FFC_API const char* ffc_last_error_message(void);
FFC_API const char* ffc_status_name(ffc_status s);

#ifdef __cplusplus
}
#endif

#endif
