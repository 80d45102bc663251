#include "adict/koszul.hpp"

namespace adict {

ElemSeq make_sequence(RingPtr R, std::vector<Poly> a) {
    if (a.empty()) throw std::invalid_argument("sequence: empty");
    ElemSeq s;
    s.ring = std::move(R);
    for (auto& p : a) {
        Poly q = ring_nf(*s.ring, p);
        long d = 0;
        if (!poly_homogeneous(q, s.ring->weights, &d))
            throw std::invalid_argument("sequence: entry not homogeneous");
        if (!q.is_zero() && d == 0) s.ungraded = true;
        s.degs.push_back(q.is_zero() ? 0 : d);
        s.elems.push_back(std::move(q));
    }
    return s;
}

ElemSeq parse_sequence(const RingPtr& R, const std::vector<std::string>& texts) {
    std::vector<Poly> a;
    for (const auto& t : texts) a.push_back(parse_poly(*R, t));
    return make_sequence(R, std::move(a));
}

std::vector<Poly> power_products(const ElemSeq& a, int t) {
    if (t < 1) throw std::invalid_argument("power: t >= 1 required");
    std::vector<Poly> cur = {poly_const(a.ring->F, a.ring->F.from_long(1),
                                        a.ring->nvars())};
    for (int k = 0; k < t; ++k) {
        std::vector<Poly> next;
        for (const auto& p : cur)
            for (const auto& e : a.elems) next.push_back(ring_mul(*a.ring, p, e));
        cur = std::move(next);
    }
    return cur;
}

FPModule quotient_by_power(const ElemSeq& a, int t) {
    std::vector<ModElem> rels;
    for (const auto& p : power_products(a, t))
        rels.push_back(me_from_poly(0, p));
    return make_module(a.ring, {0}, std::move(rels));
}

ComplexPtr unit_complex(const RingPtr& R) {
    return single_term(free_module(R, {0}), 0);
}

TensorFamily tensor_family(const RingPtr& R, std::vector<ComplexPtr> factors) {
    if (factors.empty()) throw std::invalid_argument("tensor family: empty");
    TensorFamily fam;
    fam.seed = unit_complex(R);
    fam.factors = std::move(factors);
    fam.partial.push_back(tensor_complex(fam.seed, fam.factors[0]));
    for (size_t k = 1; k < fam.factors.size(); ++k)
        fam.partial.push_back(
            tensor_complex(fam.partial.back().cx, fam.factors[k]));
    return fam;
}

ChainMap tensor_family_map(const TensorFamily& A, const TensorFamily& B,
                           const std::vector<ChainMap>& fs) {
    if (A.factors.size() != B.factors.size() || fs.size() != A.factors.size())
        throw std::invalid_argument("tensor family map: length mismatch");
    ChainMap F = tensor_map_right(A.partial[0], B.partial[0], A.seed, fs[0]);
    for (size_t k = 1; k < fs.size(); ++k) {
        BlockComplex mid =
            tensor_complex(B.partial[k - 1].cx, A.factors[k]);
        ChainMap g1 = tensor_map_left(A.partial[k], mid, F, A.factors[k]);
        ChainMap g2 =
            tensor_map_right(mid, B.partial[k], B.partial[k - 1].cx, fs[k]);
        F = compose_chain_maps(g2, g1);
    }
    return make_chain_map(F.src, F.dst, std::move(F.comp));  // re-certified
}

// the two-term factor [A ->(p) A(d)] in indices 0, 1
static ComplexPtr two_term(const RingPtr& R, const Poly& p, long d) {
    FPModule A0 = free_module(R, {0});
    FPModule A1 = free_module(R, {-d});
    std::vector<ModElem> cols = {me_from_poly(0, p)};
    return make_complex(R, 0, {A0, A1},
                        {make_map(A0, A1, std::move(cols))});
}

ComplexPtr koszul(const ElemSeq& a) {
    std::vector<ComplexPtr> factors;
    for (int i = 0; i < a.n(); ++i)
        factors.push_back(two_term(a.ring, a.elems[(size_t)i],
                                   a.degs[(size_t)i]));
    return tensor_family(a.ring, std::move(factors)).cx();
}

KoszulTower stable_koszul_tower(const ElemSeq& a, int T) {
    if (T < 1) throw std::invalid_argument("tower: T >= 1 required");
    KoszulTower K;
    K.a = a;
    const Field& F = a.ring->F;
    for (int t = 1; t <= T; ++t) {
        std::vector<ComplexPtr> factors;
        for (int i = 0; i < a.n(); ++i) {
            const Poly& ai = a.elems[(size_t)i];
            if (ai.is_zero())
                factors.push_back(unit_complex(a.ring));
            else
                factors.push_back(two_term(a.ring, poly_pow(F, ai, t),
                                           (long)t * a.degs[(size_t)i]));
        }
        K.stage.push_back(tensor_family(a.ring, std::move(factors)));
    }
    std::vector<ComplexPtr> cxs;
    for (const auto& s : K.stage) cxs.push_back(s.cx());
    std::vector<ChainMap> trans;
    for (int t = 1; t < T; ++t) {
        std::vector<ChainMap> fs;
        for (int i = 0; i < a.n(); ++i) {
            const ComplexPtr& S = K.stage[(size_t)(t - 1)].factors[(size_t)i];
            const ComplexPtr& D = K.stage[(size_t)t].factors[(size_t)i];
            if (a.elems[(size_t)i].is_zero()) {
                fs.push_back(make_chain_map(S, D, {{0, identity_map(S->term_at(0))}}));
            } else {
                std::map<int, ModuleMap> comp;
                comp.emplace(0, identity_map(S->term_at(0)));
                comp.emplace(1, make_map(S->term_at(1), D->term_at(1),
                                         {me_from_poly(0, a.elems[(size_t)i])}));
                fs.push_back(make_chain_map(S, D, std::move(comp)));
            }
        }
        trans.push_back(
            tensor_family_map(K.stage[(size_t)(t - 1)], K.stage[(size_t)t], fs));
    }
    K.sys = make_ind_system(std::move(cxs), std::move(trans));
    return K;
}

// single-element telescope, rank j+1 in indices 0 and 1
static ComplexPtr telescope_factor(const RingPtr& R, const Poly& a, long w,
                                   int j) {
    const Field& F = R->F;
    std::vector<long> d0, d1;
    for (int i = 0; i <= j; ++i) {
        d0.push_back(i == 0 ? 0 : -(long)(i - 1) * w);
        d1.push_back(-(long)i * w);
    }
    FPModule T0 = free_module(R, d0);
    FPModule T1 = free_module(R, d1);
    Poly unit = poly_const(F, F.from_long(1), R->nvars());
    std::vector<ModElem> cols;
    cols.push_back(me_from_poly(0, unit));  // d(delta_0) = delta_0
    for (int i = 1; i <= j; ++i) {          // d(delta_i) = delta_{i-1} - a delta_i
        ModElem c = me_from_poly(i - 1, unit);
        c = me_add(F, c, me_from_poly(i, poly_neg(F, a)));
        cols.push_back(std::move(c));
    }
    return make_complex(R, 0, {T0, T1}, {make_map(T0, T1, std::move(cols))});
}

ComplexPtr telescope(const ElemSeq& a, int j) {
    if (j < 0) throw std::invalid_argument("telescope: j >= 0 required");
    std::vector<ComplexPtr> factors;
    for (int i = 0; i < a.n(); ++i)
        factors.push_back(telescope_factor(a.ring, a.elems[(size_t)i],
                                           a.degs[(size_t)i], j));
    return tensor_family(a.ring, std::move(factors)).cx();
}

TelescopeTower telescope_tower(const ElemSeq& a, int J) {
    if (J < 1) throw std::invalid_argument("tower: J >= 1 required");
    TelescopeTower T;
    T.a = a;
    for (int j = 1; j <= J; ++j) {
        std::vector<ComplexPtr> factors;
        for (int i = 0; i < a.n(); ++i)
            factors.push_back(telescope_factor(a.ring, a.elems[(size_t)i],
                                               a.degs[(size_t)i], j));
        T.stage.push_back(tensor_family(a.ring, std::move(factors)));
    }
    std::vector<ComplexPtr> cxs;
    for (const auto& s : T.stage) cxs.push_back(s.cx());
    const Field& F = a.ring->F;
    Poly unit = poly_const(F, F.from_long(1), a.ring->nvars());
    std::vector<ChainMap> trans;
    for (int j = 1; j < J; ++j) {
        std::vector<ChainMap> fs;
        for (int i = 0; i < a.n(); ++i) {
            const ComplexPtr& S = T.stage[(size_t)(j - 1)].factors[(size_t)i];
            const ComplexPtr& D = T.stage[(size_t)j].factors[(size_t)i];
            std::map<int, ModuleMap> comp;
            for (int idx = 0; idx <= 1; ++idx) {
                std::vector<ModElem> cols;
                for (int g = 0; g < S->term_at(idx).rank(); ++g)
                    cols.push_back(me_from_poly(g, unit));
                comp.emplace(idx, make_map(S->term_at(idx), D->term_at(idx),
                                           std::move(cols)));
            }
            fs.push_back(make_chain_map(S, D, std::move(comp)));
        }
        trans.push_back(
            tensor_family_map(T.stage[(size_t)(j - 1)], T.stage[(size_t)j], fs));
    }
    T.sys = make_ind_system(std::move(cxs), std::move(trans));
    return T;
}

ChainMap w_map(const TelescopeTower& tt, const KoszulTower& kt, int j) {
    if (j < 1 || j > tt.J() || j > kt.T())
        throw std::invalid_argument("w: stage out of range");
    const ElemSeq& a = tt.a;
    const Field& F = a.ring->F;
    Poly unit = poly_const(F, F.from_long(1), a.ring->nvars());
    std::vector<ChainMap> fs;
    for (int i = 0; i < a.n(); ++i) {
        const ComplexPtr& S = tt.stage[(size_t)(j - 1)].factors[(size_t)i];
        const ComplexPtr& D = kt.stage[(size_t)(j - 1)].factors[(size_t)i];
        std::map<int, ModuleMap> comp;
        {   // index 0: the coefficient of delta_0
            std::vector<ModElem> cols;
            cols.push_back(me_from_poly(0, unit));
            for (int g = 1; g < S->term_at(0).rank(); ++g)
                cols.push_back(ModElem{});
            comp.emplace(0, make_map(S->term_at(0), D->term_at(0),
                                     std::move(cols)));
        }
        if (!a.elems[(size_t)i].is_zero()) {  // index 1: delta_i -> a^{j-i}
            std::vector<ModElem> cols;
            for (int g = 0; g <= j; ++g)
                cols.push_back(me_from_poly(
                    0, poly_pow(F, a.elems[(size_t)i], j - g)));
            comp.emplace(1, make_map(S->term_at(1), D->term_at(1),
                                     std::move(cols)));
        }
        fs.push_back(make_chain_map(S, D, std::move(comp)));
    }
    return tensor_family_map(tt.stage[(size_t)(j - 1)],
                             kt.stage[(size_t)(j - 1)], fs);
}

ChainMap u_map(const TelescopeTower& tt, int j, const ComplexPtr& target) {
    if (j < 1 || j > tt.J()) throw std::invalid_argument("u: stage out of range");
    const ComplexPtr& S = tt.stage[(size_t)(j - 1)].cx();
    const Field& F = tt.a.ring->F;
    FPModule T0 = S->term_at(0);
    std::vector<ModElem> cols;
    cols.push_back(me_from_poly(0, poly_const(F, F.from_long(1),
                                              tt.a.ring->nvars())));
    for (int g = 1; g < T0.rank(); ++g) cols.push_back(ModElem{});
    std::map<int, ModuleMap> comp;
    comp.emplace(0, make_map(T0, target->term_at(0), std::move(cols)));
    return make_chain_map(S, target, std::move(comp));
}

}  // namespace adict
