#ifndef YOUNGBOOK_H
#define YOUNGBOOK_H

/* C interface to the youngbook library. Handles are opaque; every function
 * returns a status code and, on failure, leaves a message retrievable with
 * ybk_last_error() on the calling thread. Strings returned through char**
 * are allocated with malloc and released with ybk_string_free(). Exact
 * values are decimal strings ("p" or "p/q"). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define YBK_API __attribute__((visibility("default")))
#else
#define YBK_API
#endif

typedef enum ybk_status {
    YBK_OK = 0,
    YBK_INVALID_ARGUMENT = 1,
    YBK_SHAPE = 2,
    YBK_CONSTRAINT = 3,
    YBK_BUDGET = 4,
    YBK_INTEGRALITY = 5,
    YBK_PARSE = 6,
    YBK_INTERNAL = 7
} ybk_status;

typedef enum ybk_kind { YBK_SELBERG = 0, YBK_YOUNG = 1 } ybk_kind;

typedef enum ybk_case_status { YBK_CASE_PASS = 0, YBK_CASE_FAIL = 1, YBK_CASE_ERRATUM = 2 } ybk_case_status;

typedef struct ybk_book ybk_book;
typedef struct ybk_enum ybk_enum;
typedef struct ybk_poly ybk_poly;
typedef struct ybk_report ybk_report;

YBK_API const char* ybk_last_error(void);
YBK_API const char* ybk_status_name(ybk_status status);
YBK_API void ybk_string_free(char* text);

/* Closed-form counts. Compositions are passed as two arrays of `pages`
 * entries. */
YBK_API ybk_status ybk_count_sp(int n, int r, int s, int m, char** value);
YBK_API ybk_status ybk_count_sb(int n, int m, char** value);
YBK_API ybk_status ybk_count_yb(int n, int m, char** value);
YBK_API ybk_status ybk_count_yb_nrs(int n, const int* r, const int* s, size_t pages, char** value);
YBK_API ybk_status ybk_count_yb_ars(int k, int n, const int* r, const int* s, size_t pages, char** value);
/* Standard tableaux of a page given in the shape DSL. Straight and shifted
 * shapes use hook products, skew shapes the determinant, anything else the
 * down-set count of the row/column order. */
YBK_API ybk_status ybk_count_syt(const char* shape, uint64_t state_budget, char** value);

YBK_API ybk_status ybk_book_parse(const char* text, ybk_book** book);
YBK_API void ybk_book_free(ybk_book* book);
YBK_API size_t ybk_book_cells(const ybk_book* book);
YBK_API size_t ybk_book_pages(const ybk_book* book);
YBK_API ybk_status ybk_book_describe(const ybk_book* book, char** text);
/* Position of a global element. Diagonals report page -1 and their diagonal
 * index in `row` and `col`. */
YBK_API ybk_status ybk_book_element(const ybk_book* book, size_t element, int* page, int* row, int* col);
YBK_API ybk_status ybk_book_count(const ybk_book* book, ybk_kind kind, uint64_t state_budget, char** value);
YBK_API ybk_status ybk_book_gap_polynomial(const ybk_book* book, ybk_kind kind, uint64_t state_budget,
                                           ybk_poly** poly);

/* Streams valid fillings of a book, or Selberg permutations. `limit` of 0
 * means no limit, in which case the cell budget applies. */
YBK_API ybk_status ybk_enum_fillings(const ybk_book* book, ybk_kind kind, size_t cell_budget, uint64_t limit,
                                     ybk_enum** stream);
YBK_API ybk_status ybk_enum_permutations(int n, int r, int s, int m, size_t cell_budget, uint64_t limit,
                                         ybk_enum** stream);
/* Writes the next item as text ("" once the stream is exhausted, with
 * *done set). Fillings print one page per line, rows separated by '/'. */
YBK_API ybk_status ybk_enum_next(ybk_enum* stream, char** text, int* done);
/* Fillings only: label of each global element, `capacity` >= book cells. */
YBK_API ybk_status ybk_enum_next_labels(ybk_enum* stream, int* labels, size_t capacity, int* done);
YBK_API void ybk_enum_free(ybk_enum* stream);

YBK_API ybk_status ybk_genfun_sb(int n, int m, ybk_poly** poly);
YBK_API ybk_status ybk_genfun_yb(int n, int m, ybk_poly** poly);
YBK_API ybk_status ybk_genfun_sb_nrs(int n, const int* r, const int* s, size_t pages, int minus, ybk_poly** poly);
YBK_API ybk_status ybk_genfun_yb_nrs(int n, const int* r, const int* s, size_t pages, ybk_poly** poly);
YBK_API void ybk_poly_free(ybk_poly* poly);
YBK_API size_t ybk_poly_variables(const ybk_poly* poly);
YBK_API int ybk_poly_first_index(const ybk_poly* poly);
YBK_API ybk_status ybk_poly_text(const ybk_poly* poly, char** text);
YBK_API ybk_status ybk_poly_json(const ybk_poly* poly, char** text);
/* Plain coefficient of t^e, e given for every variable. */
YBK_API ybk_status ybk_poly_coefficient(const ybk_poly* poly, const int* exponents, size_t count, char** value);
/* Coefficient times the product of the exponent factorials. */
YBK_API ybk_status ybk_poly_gap_count(const ybk_poly* poly, const long* gaps, size_t count, char** value);
YBK_API ybk_status ybk_poly_exp_moment(const ybk_poly* poly, char** value);

/* Gamma product for parameters given as rationals ("3", "1/2"). The value
 * is "c" or "c * pi^(k/2)". */
YBK_API ybk_status ybk_selberg(int n, const char* alpha, const char* beta, const char* gamma, char** value);

/* "p1^e1·p2^e2..." by trial division up to 10^6; a remaining cofactor is
 * appended as is. */
YBK_API ybk_status ybk_factorize(const char* decimal, char** text);

typedef struct ybk_verify_options {
    int max_n;
    int max_m;
    int max_rs;
    size_t cell_budget;
    uint64_t state_budget;
    int max_alphabet;
} ybk_verify_options;

typedef struct ybk_case_view {
    const char* identity;
    const char* check;
    const char* params;
    const char* lhs;
    const char* rhs;
    const char* note;
    ybk_case_status status;
} ybk_case_view;

YBK_API void ybk_verify_defaults(ybk_verify_options* options);
YBK_API size_t ybk_identity_count(void);
YBK_API const char* ybk_identity_name(size_t index);
/* `name` is an identity name or "all". */
YBK_API ybk_status ybk_verify(const char* name, const ybk_verify_options* options, ybk_report** report);
YBK_API size_t ybk_report_size(const ybk_report* report);
/* Views stay valid until the report is freed. */
YBK_API ybk_status ybk_report_case(const ybk_report* report, size_t index, ybk_case_view* view);
YBK_API size_t ybk_report_count(const ybk_report* report, ybk_case_status status);
YBK_API void ybk_report_free(ybk_report* report);

#ifdef __cplusplus
}
#endif

#endif
