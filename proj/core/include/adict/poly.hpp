#pragma once

#include <vector>

#include "adict/field.hpp"

namespace adict {

/* Sparse multivariate polynomials.  Exponent vectors are plain int vectors
 * of length nvars; terms are kept strictly sorted, leading term first, in
 * graded reverse lexicographic order on raw exponents (unit weights).  The
 * Z-grading of a ring uses a separate weight vector; see ring.hpp.  Keeping
 * the monomial order weight-free makes it a global order even for rings
 * carrying negative-weight inverse variables, so Buchberger always
 * terminates there. */

using Exps = std::vector<int>;

// grevlex: higher total degree wins; on ties the monomial with the SMALLER
// exponent in the last differing position is the LARGER one.
// Returns -1 (a < b), 0, or 1 (a > b).
int cmp_grevlex(const Exps& a, const Exps& b);

long total_deg(const Exps& e);
long weighted_deg(const Exps& e, const std::vector<int>& weights);
bool divides(const Exps& a, const Exps& b);      // a | b componentwise
Exps exp_add(const Exps& a, const Exps& b);
Exps exp_sub(const Exps& a, const Exps& b);      // requires b | a
Exps exp_lcm(const Exps& a, const Exps& b);

struct Term {
    Exps exp;
    Scalar c;
};

struct Poly {
    std::vector<Term> t;  // strictly descending grevlex; no zero coefficients

    bool is_zero() const { return t.empty(); }
    const Term& lt() const { return t.front(); }  // leading term
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.t.size() != b.t.size()) return false;
        for (size_t i = 0; i < a.t.size(); ++i)
            if (a.t[i].exp != b.t[i].exp || a.t[i].c != b.t[i].c) return false;
        return true;
    }
};

Poly poly_zero();
Poly poly_const(const Field& F, const Scalar& c, int nvars);
Poly poly_var(const Field& F, int var, int nvars, int power = 1);
Poly poly_term(const Field& F, const Scalar& c, const Exps& e);

// collapse an unsorted term list into canonical form
Poly poly_collect(const Field& F, std::vector<Term> terms);

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_neg(const Field& F, const Poly& a);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Scalar& c, const Poly& a);
Poly poly_mul_term(const Field& F, const Poly& a, const Scalar& c, const Exps& e);
Poly poly_pow(const Field& F, const Poly& a, int k);

// true iff every term has the same weighted degree; degree returned through
// deg_out (0 for the zero polynomial)
bool poly_homogeneous(const Poly& a, const std::vector<int>& weights, long* deg_out);

// substitute: vars[i] of the source maps to images[i] (polynomials over the
// target ring's variable set with nvars_out variables)
Poly poly_subst(const Field& F, const Poly& a, const std::vector<Poly>& images,
                int nvars_out);

// rename/extend variables: exponent j of the source goes to position map[j]
// in a vector of length nvars_out (an injective index map)
Poly poly_reindex(const Poly& a, const std::vector<int>& map, int nvars_out);

std::string poly_str(const Field& F, const Poly& a,
                     const std::vector<std::string>& var_names);

}  // namespace adict
