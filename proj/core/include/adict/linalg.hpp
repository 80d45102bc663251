#pragma once

#include "adict/field.hpp"

#include <vector>

namespace adict {

// dense exact matrix, row-major
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, Scalar(0)) {}
    Scalar& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const Scalar& at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

Mat mat_identity(int n);
Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
Mat mat_add(const Field& F, const Mat& A, const Mat& B);
Mat mat_sub(const Field& F, const Mat& A, const Mat& B);
Mat mat_scale(const Field& F, const Scalar& c, const Mat& A);
bool mat_is_zero(const Mat& A);
Mat mat_hcat(const Mat& A, const Mat& B);
Mat mat_from_cols(int rows, const std::vector<std::vector<Scalar>>& cols);
std::vector<Scalar> mat_col(const Mat& A, int c);
std::vector<Scalar> mat_apply(const Field& F, const Mat& A, const std::vector<Scalar>& v);

long mat_rank(const Field& F, Mat A);            // by value: eliminates in place
Mat mat_nullspace(const Field& F, const Mat& A); // kernel basis as columns
// one solution of Ax = b (free variables set to 0); false if inconsistent
bool mat_solve(const Field& F, const Mat& A, const std::vector<Scalar>& b,
               std::vector<Scalar>* x);
// X with A X = B, column by column; false if any column is inconsistent
bool mat_solve_mat(const Field& F, const Mat& A, const Mat& B, Mat* X);
bool mat_invertible(const Field& F, const Mat& A);

/* Tracked subquotient numer/denom of a coordinate space F^ambient.
 * Built by echelonizing denom columns first, then numer columns; numer
 * columns that enlarge the span become the representative basis.  Any
 * vector of the numer span can then be written in representative
 * coordinates, which is exactly what induced maps on cohomology need. */
struct Subquotient {
    int ambient = 0;
    int dim = 0;
    std::vector<std::vector<Scalar>> cols;  // echelon columns, pivot entry 1
    std::vector<int> pivots;                // pivot row per column
    std::vector<std::vector<Scalar>> repc;  // class of each column over the reps
    std::vector<std::vector<Scalar>> reps;  // representative vectors in F^ambient
};

Subquotient make_subquotient(const Field& F, int ambient, const Mat& denom_cols,
                             const Mat& numer_cols);
// coordinates of [v] over the representatives; throws std::logic_error if v
// lies outside denom + numer
std::vector<Scalar> sq_coords(const Field& F, const Subquotient& S,
                              std::vector<Scalar> v);

}  // namespace adict
