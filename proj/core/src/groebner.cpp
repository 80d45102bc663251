#include "adict/groebner.hpp"

#include <algorithm>
#include <map>

namespace adict {

int cmp_modterm(const ModTerm& a, const ModTerm& b) {
    int c = cmp_grevlex(a.exp, b.exp);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
}

ModElem me_zero() { return {}; }

ModElem me_from_poly(int comp, const Poly& p) {
    ModElem r;
    r.t.reserve(p.t.size());
    for (const auto& tm : p.t) r.t.push_back({comp, tm.exp, tm.c});
    return r;
}

ModElem me_collect(const Field& F, std::vector<ModTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const ModTerm& a, const ModTerm& b) { return cmp_modterm(a, b) > 0; });
    ModElem r;
    for (auto& tm : terms) {
        Scalar c = F.norm(tm.c);
        if (is_zero(c)) continue;
        if (!r.t.empty() && r.t.back().comp == tm.comp && r.t.back().exp == tm.exp) {
            Scalar s = F.add(r.t.back().c, c);
            if (is_zero(s))
                r.t.pop_back();
            else
                r.t.back().c = s;
        } else {
            r.t.push_back({tm.comp, std::move(tm.exp), std::move(c)});
        }
    }
    return r;
}

ModElem me_add(const Field& F, const ModElem& a, const ModElem& b) {
    ModElem r;
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = cmp_modterm(a.t[i], b.t[j]);
        if (c > 0)
            r.t.push_back(a.t[i++]);
        else if (c < 0)
            r.t.push_back(b.t[j++]);
        else {
            Scalar s = F.add(a.t[i].c, b.t[j].c);
            if (!is_zero(s)) r.t.push_back({a.t[i].comp, a.t[i].exp, s});
            ++i, ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
    return r;
}

ModElem me_neg(const Field& F, const ModElem& a) {
    ModElem r = a;
    for (auto& tm : r.t) tm.c = F.neg(tm.c);
    return r;
}

ModElem me_sub(const Field& F, const ModElem& a, const ModElem& b) {
    return me_add(F, a, me_neg(F, b));
}

ModElem me_scale(const Field& F, const Scalar& c, const ModElem& a) {
    if (is_zero(c)) return {};
    ModElem r = a;
    for (auto& tm : r.t) tm.c = F.mul(tm.c, c);
    return r;
}

ModElem me_mul_term(const Field& F, const Scalar& c, const Exps& e, const ModElem& a) {
    if (is_zero(c)) return {};
    ModElem r = a;  // grevlex is translation-invariant, so term order is preserved
    for (auto& tm : r.t) {
        tm.exp = exp_add(tm.exp, e);
        tm.c = F.mul(tm.c, c);
    }
    return r;
}

ModElem me_mul_poly(const Field& F, const Poly& p, const ModElem& a) {
    ModElem r;
    for (const auto& tm : p.t) r = me_add(F, r, me_mul_term(F, tm.c, tm.exp, a));
    return r;
}

Poly me_component(const ModElem& a, int comp, int nvars) {
    (void)nvars;
    Poly p;
    for (const auto& tm : a.t)
        if (tm.comp == comp) p.t.push_back({tm.exp, tm.c});
    return p;
}

std::vector<Poly> me_to_vec(const ModElem& a, int rank, int nvars) {
    std::vector<Poly> v(rank);
    for (const auto& tm : a.t) {
        if (tm.comp < 0 || tm.comp >= rank)
            throw std::logic_error("me_to_vec: component out of range");
        v[tm.comp].t.push_back({tm.exp, tm.c});
    }
    (void)nvars;
    return v;
}

ModElem me_from_vec(const std::vector<Poly>& v) {
    std::vector<ModTerm> terms;
    for (size_t c = 0; c < v.size(); ++c)
        for (const auto& tm : v[c].t) terms.push_back({(int)c, tm.exp, tm.c});
    // components carry disjoint term sets: no collection over a field needed,
    // but sorting is
    std::sort(terms.begin(), terms.end(),
              [](const ModTerm& a, const ModTerm& b) { return cmp_modterm(a, b) > 0; });
    ModElem r;
    r.t = std::move(terms);
    return r;
}

void StepBudget::tick() {
    ++used;
    if (limit > 0 && used > limit)
        throw ResourceExhausted("reduction step budget exhausted (" +
                                std::to_string(limit) + " steps)");
}

StepBudget& gb_budget() {
    static StepBudget b;
    return b;
}

ModElem gb_reduce(const Field& F, int nvars, const ModElem& v,
                  const std::vector<ModElem>& gbv, ModElem* combo) {
    (void)nvars;
    if (combo) *combo = {};
    ModElem r = v;
    std::vector<ModTerm> combo_terms;
    size_t i = 0;
    while (i < r.t.size()) {
        bool reduced = false;
        for (size_t k = 0; k < gbv.size(); ++k) {
            const ModElem& g = gbv[k];
            if (g.is_zero()) continue;
            const ModTerm& glt = g.lt();
            if (glt.comp != r.t[i].comp || !divides(glt.exp, r.t[i].exp)) continue;
            gb_budget().tick();
            Scalar q = F.div(r.t[i].c, glt.c);
            Exps m = exp_sub(r.t[i].exp, glt.exp);
            if (combo) combo_terms.push_back({(int)k, m, q});
            // subtraction cancels term i and introduces only strictly smaller
            // terms; earlier terms are untouched, so rescan from position i
            r = me_sub(F, r, me_mul_term(F, q, m, g));
            reduced = true;
            break;
        }
        if (!reduced) ++i;
    }
    if (combo) *combo = me_collect(F, std::move(combo_terms));
    return r;
}

namespace {

struct Pair {
    size_t i, j;  // indices into the working basis, i < j
    Exps lcm;
};

// deterministic normal strategy: smallest lcm first, then by indices
bool pair_less(const Pair& a, const Pair& b) {
    int c = cmp_grevlex(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

struct Engine {
    const Field& F;
    int nvars;
    int rank;
    bool track;
    std::vector<ModElem> G;
    std::vector<ModElem> expr;  // combinations of the original inputs
    std::vector<ModElem> syz;
    std::vector<Pair> pending;

    // expr_in: v as a combination of inputs (tracked mode only)
    void insert(const ModElem& v, const ModElem& expr_in) {
        ModElem combo;
        ModElem r = gb_reduce(F, nvars, v, G, track ? &combo : nullptr);
        ModElem e;
        if (track) {
            // relation candidate / expression: expr_in - sum combo_k expr[k]
            e = expr_in;
            for (const auto& tm : combo.t)
                e = me_sub(F, e, me_mul_term(F, tm.c, tm.exp, expr[tm.comp]));
        }
        if (r.is_zero()) {
            if (track && !e.is_zero()) syz.push_back(std::move(e));
            return;
        }
        Scalar lc = r.lt().c;
        if (track) expr.push_back(me_scale(F, F.inv(lc), e));
        r = me_scale(F, F.inv(lc), r);
        size_t idx = G.size();
        G.push_back(std::move(r));
        for (size_t k = 0; k < idx; ++k) {
            if (G[k].is_zero()) continue;
            if (G[k].lt().comp != G[idx].lt().comp) continue;
            pending.push_back({k, idx, exp_lcm(G[k].lt().exp, G[idx].lt().exp)});
        }
    }

    void run(const std::vector<ModElem>& gens) {
        for (size_t i = 0; i < gens.size(); ++i) {
            std::vector<ModTerm> unit;
            unit.push_back({(int)i, Exps(nvars, 0), F.from_long(1)});
            ModElem e;
            e.t = std::move(unit);
            insert(gens[i], e);
        }
        while (!pending.empty()) {
            // no pair-skipping criteria: every pair contributes its relation,
            // which the syzygy listing needs
            auto it = std::min_element(pending.begin(), pending.end(), pair_less);
            Pair p = *it;
            pending.erase(it);
            gb_budget().tick();
            const ModElem &gi = G[p.i], &gj = G[p.j];
            Exps mi = exp_sub(p.lcm, gi.lt().exp);
            Exps mj = exp_sub(p.lcm, gj.lt().exp);
            Scalar one = F.from_long(1);
            ModElem s = me_sub(F, me_mul_term(F, one, mi, gi), me_mul_term(F, one, mj, gj));
            ModElem se;
            if (track)
                se = me_sub(F, me_mul_term(F, one, mi, expr[p.i]),
                            me_mul_term(F, one, mj, expr[p.j]));
            insert(s, se);
        }
    }

    void finalize() {
        // minimalize: drop elements whose lead term another's divides
        std::vector<size_t> order(G.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return cmp_modterm(G[a].lt(), G[b].lt()) < 0;
        });
        std::vector<char> dead(G.size(), 0);
        for (size_t a : order) {
            if (dead[a]) continue;
            for (size_t b : order) {
                if (a == b || dead[b]) continue;
                const ModTerm &la = G[a].lt(), &lb = G[b].lt();
                // equal LTs cannot occur: every inserted element was fully reduced
                if (la.comp == lb.comp && divides(la.exp, lb.exp)) dead[b] = 1;
            }
        }
        std::vector<ModElem> ng, ne;
        for (size_t a : order)
            if (!dead[a]) {
                ng.push_back(G[a]);
                if (track) ne.push_back(expr[a]);
            }
        G = std::move(ng);
        expr = std::move(ne);
        // tail reduction to the reduced GB, iterated to a fixpoint
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t k = 0; k < G.size(); ++k) {
                std::vector<ModElem> others;
                std::vector<size_t> omap;
                for (size_t l = 0; l < G.size(); ++l)
                    if (l != k) {
                        others.push_back(G[l]);
                        omap.push_back(l);
                    }
                ModElem combo;
                ModElem r = gb_reduce(F, nvars, G[k], others, track ? &combo : nullptr);
                if (!(r == G[k])) {
                    if (track) {
                        ModElem e = expr[k];
                        for (const auto& tm : combo.t)
                            e = me_sub(F, e, me_mul_term(F, tm.c, tm.exp, expr[omap[tm.comp]]));
                        expr[k] = std::move(e);
                    }
                    G[k] = std::move(r);
                    changed = true;
                }
            }
        }
    }
};

}  // namespace

ModGB module_gb(const Field& F, int nvars, int rank,
                const std::vector<ModElem>& gens, bool track) {
    Engine e{F, nvars, rank, track, {}, {}, {}, {}};
    e.run(gens);
    e.finalize();
    ModGB out;
    out.nvars = nvars;
    out.rank = rank;
    out.g = std::move(e.G);
    out.tracked = track;
    out.expr = std::move(e.expr);
    out.syz = std::move(e.syz);
    return out;
}

std::vector<Poly> ideal_gb(const Field& F, int nvars, const std::vector<Poly>& gens) {
    std::vector<ModElem> v;
    for (const auto& p : gens) v.push_back(me_from_poly(0, p));
    ModGB gb = module_gb(F, nvars, 1, v, false);
    std::vector<Poly> out;
    for (const auto& g : gb.g) out.push_back(me_component(g, 0, nvars));
    return out;
}

Poly poly_nf(const Field& F, int nvars, const Poly& p, const std::vector<Poly>& gb) {
    std::vector<ModElem> v;
    for (const auto& g : gb) v.push_back(me_from_poly(0, g));
    return me_component(gb_reduce(F, nvars, me_from_poly(0, p), v), 0, nvars);
}

}  // namespace adict
