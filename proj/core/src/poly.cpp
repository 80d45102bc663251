#include "adict/poly.hpp"

#include <algorithm>
#include <sstream>

namespace adict {

int cmp_grevlex(const Exps& a, const Exps& b) {
    long da = total_deg(a), db = total_deg(b);
    if (da != db) return da < db ? -1 : 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

long total_deg(const Exps& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

long weighted_deg(const Exps& e, const std::vector<int>& weights) {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * weights[i];
    return d;
}

bool divides(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps exp_add(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exps exp_sub(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exps exp_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Poly poly_zero() { return Poly{}; }

Poly poly_const(const Field& F, const Scalar& c, int nvars) {
    Scalar v = F.norm(c);
    if (is_zero(v)) return poly_zero();
    return Poly{{Term{Exps(nvars, 0), v}}};
}

Poly poly_var(const Field& F, int var, int nvars, int power) {
    Exps e(nvars, 0);
    e[var] = power;
    return Poly{{Term{std::move(e), F.norm(Scalar(1))}}};
}

Poly poly_term(const Field& F, const Scalar& c, const Exps& e) {
    Scalar v = F.norm(c);
    if (is_zero(v)) return poly_zero();
    return Poly{{Term{e, v}}};
}

Poly poly_collect(const Field& F, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return cmp_grevlex(a.exp, b.exp) > 0;  // descending
    });
    Poly r;
    for (auto& t : terms) {
        if (!r.t.empty() && r.t.back().exp == t.exp) {
            r.t.back().c = F.add(r.t.back().c, t.c);
            if (is_zero(r.t.back().c)) r.t.pop_back();
        } else {
            Scalar v = F.norm(t.c);
            if (!is_zero(v)) r.t.push_back(Term{std::move(t.exp), std::move(v)});
        }
    }
    return r;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    Poly r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = cmp_grevlex(a.t[i].exp, b.t[j].exp);
        if (c > 0) {
            r.t.push_back(a.t[i++]);
        } else if (c < 0) {
            r.t.push_back(b.t[j++]);
        } else {
            Scalar s = F.add(a.t[i].c, b.t[j].c);
            if (!is_zero(s)) r.t.push_back(Term{a.t[i].exp, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
    return r;
}

Poly poly_neg(const Field& F, const Poly& a) {
    Poly r = a;
    for (auto& t : r.t) t.c = F.neg(t.c);
    return r;
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    return poly_add(F, a, poly_neg(F, b));
}

Poly poly_mul_term(const Field& F, const Poly& a, const Scalar& c, const Exps& e) {
    Scalar v = F.norm(c);
    if (is_zero(v) || a.is_zero()) return poly_zero();
    Poly r;
    r.t.reserve(a.t.size());
    for (const auto& t : a.t) {
        Scalar s = F.mul(t.c, v);
        if (!is_zero(s)) r.t.push_back(Term{exp_add(t.exp, e), std::move(s)});
    }
    return r;  // term-multiplication preserves the order
}

Poly poly_scale(const Field& F, const Scalar& c, const Poly& a) {
    if (a.is_zero()) return poly_zero();
    return poly_mul_term(F, a, c, Exps(a.t.front().exp.size(), 0));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return poly_zero();
    std::vector<Term> acc;
    acc.reserve(a.t.size() * b.t.size());
    for (const auto& ta : a.t)
        for (const auto& tb : b.t)
            acc.push_back(Term{exp_add(ta.exp, tb.exp), F.mul(ta.c, tb.c)});
    return poly_collect(F, std::move(acc));
}

Poly poly_pow(const Field& F, const Poly& a, int k) {
    int nv = a.is_zero() ? 0 : static_cast<int>(a.t.front().exp.size());
    Poly r = poly_const(F, Scalar(1), nv);
    for (int i = 0; i < k; ++i) r = poly_mul(F, r, a);
    return r;
}

bool poly_homogeneous(const Poly& a, const std::vector<int>& weights, long* deg_out) {
    if (a.is_zero()) {
        if (deg_out) *deg_out = 0;
        return true;
    }
    long d = weighted_deg(a.t.front().exp, weights);
    for (const auto& t : a.t)
        if (weighted_deg(t.exp, weights) != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

Poly poly_subst(const Field& F, const Poly& a, const std::vector<Poly>& images,
                int nvars_out) {
    Poly r = poly_zero();
    for (const auto& t : a.t) {
        Poly m = poly_const(F, t.c, nvars_out);
        for (size_t v = 0; v < t.exp.size(); ++v)
            for (int k = 0; k < t.exp[v]; ++k) m = poly_mul(F, m, images[v]);
        r = poly_add(F, r, m);
    }
    return r;
}

Poly poly_reindex(const Poly& a, const std::vector<int>& map, int nvars_out) {
    std::vector<Term> acc;
    acc.reserve(a.t.size());
    for (const auto& t : a.t) {
        Exps e(nvars_out, 0);
        for (size_t v = 0; v < t.exp.size(); ++v) e[map[v]] = t.exp[v];
        acc.push_back(Term{std::move(e), t.c});
    }
    // an injective reindex keeps terms distinct but can reorder them
    std::sort(acc.begin(), acc.end(), [](const Term& x, const Term& y) {
        return cmp_grevlex(x.exp, y.exp) > 0;
    });
    return Poly{std::move(acc)};
}

std::string poly_str(const Field& F, const Poly& a,
                     const std::vector<std::string>& var_names) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : a.t) {
        Scalar c = t.c;
        bool neg = !F.is_fp() && sgn(c) < 0;
        if (first) {
            if (neg) os << "-", c = -c;
        } else {
            os << (neg ? " - " : " + ");
            if (neg) c = -c;
        }
        first = false;
        bool has_var = total_deg(t.exp) != 0;
        if (!has_var || !is_one(c)) {
            os << F.str(c);
            if (has_var) os << "*";
        }
        bool fv = true;
        for (size_t v = 0; v < t.exp.size(); ++v) {
            if (t.exp[v] == 0) continue;
            if (!fv) os << "*";
            fv = false;
            os << var_names[v];
            if (t.exp[v] != 1) os << "^" << t.exp[v];
        }
    }
    return os.str();
}

}  // namespace adict
