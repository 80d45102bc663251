#pragma once

#include <optional>

#include "adict/poly.hpp"

namespace adict {

/* Buchberger engine for submodules of free modules P^r over a free
 * polynomial ring P, with expression tracking and syzygy extraction.
 * Ring-relation handling (quotient rings) lives a layer up (ring.hpp):
 * callers append relation multiples of the free generators ("padding")
 * and project results back.
 *
 * Module term order: TOP — grevlex on the monomial first, ties broken by
 * component (smaller component index = larger term).  With rank 1 this is
 * plain grevlex, so the ideal case is the rank-1 special case throughout. */

struct ModTerm {
    int comp;
    Exps exp;
    Scalar c;
};

// -1 / 0 / 1 comparison of (comp, exp) under the module order
int cmp_modterm(const ModTerm& a, const ModTerm& b);

struct ModElem {
    std::vector<ModTerm> t;  // strictly descending; no zero coefficients

    bool is_zero() const { return t.empty(); }
    const ModTerm& lt() const { return t.front(); }
    friend bool operator==(const ModElem& a, const ModElem& b) {
        if (a.t.size() != b.t.size()) return false;
        for (size_t i = 0; i < a.t.size(); ++i)
            if (a.t[i].comp != b.t[i].comp || a.t[i].exp != b.t[i].exp ||
                a.t[i].c != b.t[i].c)
                return false;
        return true;
    }
};

ModElem me_zero();
ModElem me_from_poly(int comp, const Poly& p);
ModElem me_collect(const Field& F, std::vector<ModTerm> terms);
ModElem me_add(const Field& F, const ModElem& a, const ModElem& b);
ModElem me_sub(const Field& F, const ModElem& a, const ModElem& b);
ModElem me_neg(const Field& F, const ModElem& a);
ModElem me_scale(const Field& F, const Scalar& c, const ModElem& a);
ModElem me_mul_term(const Field& F, const Scalar& c, const Exps& e, const ModElem& a);
ModElem me_mul_poly(const Field& F, const Poly& p, const ModElem& a);
Poly me_component(const ModElem& a, int comp, int nvars);
std::vector<Poly> me_to_vec(const ModElem& a, int rank, int nvars);
ModElem me_from_vec(const std::vector<Poly>& v);

// Reduction-step counter, used by the CLI's --max-gb-steps resource bound.
// A StepBudget of 0 means unlimited.
struct StepBudget {
    long limit = 0;
    long used = 0;
    void tick();  // throws ResourceExhausted beyond the limit
};
StepBudget& gb_budget();  // process-global, reset per CLI task

struct ResourceExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModGB {
    int nvars = 0;
    int rank = 1;
    std::vector<ModElem> g;     // reduced GB, sorted ascending by leading term
    bool tracked = false;
    std::vector<ModElem> expr;  // expr[k]: g[k] as combination of the inputs
                                //   (components index the input list)
    std::vector<ModElem> syz;   // generators of the input syzygy module
};

// Full Buchberger run.  With track=true, expression vectors and a complete
// generating set of input syzygies are produced (all S-pairs processed).
ModGB module_gb(const Field& F, int nvars, int rank,
                const std::vector<ModElem>& gens, bool track);

// Normal form of v against gb.g (fully reduced).  With combo != nullptr the
// quotients are returned: v = sum_k combo_k g_k + result, combo components
// indexing gb.g.
ModElem gb_reduce(const Field& F, int nvars, const ModElem& v,
                  const std::vector<ModElem>& gbv, ModElem* combo = nullptr);

// Rank-1 conveniences.
std::vector<Poly> ideal_gb(const Field& F, int nvars, const std::vector<Poly>& gens);
Poly poly_nf(const Field& F, int nvars, const Poly& p, const std::vector<Poly>& gb);

}  // namespace adict
