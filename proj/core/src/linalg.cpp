#include "adict/linalg.hpp"

#include <stdexcept>

namespace adict {

Mat mat_identity(int n) {
    Mat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = Scalar(1);
    return I;
}

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::logic_error("mat_mul: shape mismatch");
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (is_zero(A.at(i, k))) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(A.at(i, k), B.at(k, j)));
        }
    return C;
}

Mat mat_add(const Field& F, const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw std::logic_error("mat_add: shape mismatch");
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

Mat mat_sub(const Field& F, const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw std::logic_error("mat_sub: shape mismatch");
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
    return C;
}

Mat mat_scale(const Field& F, const Scalar& c, const Mat& A) {
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.mul(c, A.a[i]);
    return C;
}

bool mat_is_zero(const Mat& A) {
    for (const auto& x : A.a)
        if (!is_zero(x)) return false;
    return true;
}

Mat mat_hcat(const Mat& A, const Mat& B) {
    if (A.rows != B.rows) throw std::logic_error("mat_hcat: row mismatch");
    Mat C(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

Mat mat_from_cols(int rows, const std::vector<std::vector<Scalar>>& cols) {
    Mat C(rows, (int)cols.size());
    for (int j = 0; j < C.cols; ++j) {
        if ((int)cols[j].size() != rows)
            throw std::logic_error("mat_from_cols: column length mismatch");
        for (int i = 0; i < rows; ++i) C.at(i, j) = cols[j][i];
    }
    return C;
}

std::vector<Scalar> mat_col(const Mat& A, int c) {
    std::vector<Scalar> v(A.rows);
    for (int i = 0; i < A.rows; ++i) v[i] = A.at(i, c);
    return v;
}

std::vector<Scalar> mat_apply(const Field& F, const Mat& A,
                              const std::vector<Scalar>& v) {
    if ((int)v.size() != A.cols) throw std::logic_error("mat_apply: shape mismatch");
    std::vector<Scalar> r(A.rows, Scalar(0));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (!is_zero(A.at(i, j)))
                r[i] = F.add(r[i], F.mul(A.at(i, j), v[j]));
    return r;
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(const Field& F, Mat& A) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int p = -1;
        for (int i = r; i < A.rows; ++i)
            if (!is_zero(A.at(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(p, j), A.at(r, j));
        Scalar inv = F.inv(A.at(r, c));
        for (int j = 0; j < A.cols; ++j) A.at(r, j) = F.mul(inv, A.at(r, j));
        for (int i = 0; i < A.rows; ++i) {
            if (i == r || is_zero(A.at(i, c))) continue;
            Scalar f = A.at(i, c);
            for (int j = 0; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

long mat_rank(const Field& F, Mat A) { return (long)rref(F, A).size(); }

Mat mat_nullspace(const Field& F, const Mat& A) {
    Mat R = A;
    std::vector<int> piv = rref(F, R);
    std::vector<char> is_piv(A.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<Scalar>> basis;
    for (int c = 0; c < A.cols; ++c) {
        if (is_piv[c]) continue;
        std::vector<Scalar> v(A.cols, Scalar(0));
        v[c] = Scalar(1);
        for (size_t k = 0; k < piv.size(); ++k)
            v[piv[k]] = F.neg(R.at((int)k, c));
        basis.push_back(std::move(v));
    }
    return mat_from_cols(A.cols, basis);
}

bool mat_solve(const Field& F, const Mat& A, const std::vector<Scalar>& b,
               std::vector<Scalar>* x) {
    if ((int)b.size() != A.rows) throw std::logic_error("mat_solve: shape mismatch");
    Mat Aug = mat_hcat(A, mat_from_cols(A.rows, {b}));
    std::vector<int> piv = rref(F, Aug);
    for (int c : piv)
        if (c == A.cols) return false;  // pivot in the augmented column
    if (x) {
        x->assign(A.cols, Scalar(0));
        for (size_t k = 0; k < piv.size(); ++k) (*x)[piv[k]] = Aug.at((int)k, A.cols);
    }
    return true;
}

bool mat_solve_mat(const Field& F, const Mat& A, const Mat& B, Mat* X) {
    if (A.rows != B.rows) throw std::logic_error("mat_solve_mat: shape mismatch");
    Mat out(A.cols, B.cols);
    for (int j = 0; j < B.cols; ++j) {
        std::vector<Scalar> x;
        if (!mat_solve(F, A, mat_col(B, j), &x)) return false;
        for (int i = 0; i < A.cols; ++i) out.at(i, j) = x[i];
    }
    if (X) *X = std::move(out);
    return true;
}

bool mat_invertible(const Field& F, const Mat& A) {
    return A.rows == A.cols && mat_rank(F, A) == A.rows;
}

namespace {

// reduce v (and its class tracking) against the echelon columns
void sq_reduce(const Field& F, const Subquotient& S, std::vector<Scalar>& v,
               std::vector<Scalar>& acc) {
    for (size_t j = 0; j < S.cols.size(); ++j) {
        const Scalar& c = v[S.pivots[j]];
        if (is_zero(c)) continue;
        Scalar f = c;  // pivot entries are 1
        for (int i = 0; i < S.ambient; ++i)
            v[i] = F.sub(v[i], F.mul(f, S.cols[j][i]));
        for (size_t r = 0; r < acc.size(); ++r)
            acc[r] = F.add(acc[r], F.mul(f, S.repc[j][r]));
    }
}

int first_nonzero(const std::vector<Scalar>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) return (int)i;
    return -1;
}

}  // namespace

Subquotient make_subquotient(const Field& F, int ambient, const Mat& denom_cols,
                             const Mat& numer_cols) {
    if ((denom_cols.cols && denom_cols.rows != ambient) ||
        (numer_cols.cols && numer_cols.rows != ambient))
        throw std::logic_error("make_subquotient: ambient mismatch");
    Subquotient S;
    S.ambient = ambient;
    auto insert = [&](std::vector<Scalar> v, bool rep_candidate) {
        std::vector<Scalar> acc((size_t)S.dim, Scalar(0));
        sq_reduce(F, S, v, acc);
        int p = first_nonzero(v);
        if (p < 0) return;
        Scalar inv = F.inv(v[p]);
        for (auto& e : v) e = F.mul(inv, e);
        std::vector<Scalar> cls((size_t)S.dim + (rep_candidate ? 1 : 0), Scalar(0));
        if (rep_candidate) {
            // the normalized residue itself is the new representative
            S.reps.push_back(v);
            S.dim += 1;
            for (auto& rc : S.repc) rc.resize((size_t)S.dim, Scalar(0));
            cls.assign((size_t)S.dim, Scalar(0));
            cls[(size_t)S.dim - 1] = Scalar(1);
        }
        S.cols.push_back(std::move(v));
        S.pivots.push_back(p);
        S.repc.push_back(std::move(cls));
    };
    for (int j = 0; j < denom_cols.cols; ++j) insert(mat_col(denom_cols, j), false);
    for (int j = 0; j < numer_cols.cols; ++j) insert(mat_col(numer_cols, j), true);
    return S;
}

std::vector<Scalar> sq_coords(const Field& F, const Subquotient& S,
                              std::vector<Scalar> v) {
    if ((int)v.size() != S.ambient) throw std::logic_error("sq_coords: shape mismatch");
    std::vector<Scalar> acc((size_t)S.dim, Scalar(0));
    sq_reduce(F, S, v, acc);
    if (first_nonzero(v) >= 0)
        throw std::logic_error("sq_coords: vector outside the tracked span");
    return acc;
}

}  // namespace adict
