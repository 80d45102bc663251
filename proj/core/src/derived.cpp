#include "adict/derived.hpp"

#include <sstream>
#include <stdexcept>

namespace adict {

AdicPair make_adic_pair(ElemSeq a, int T, int J) {
    long n = a.n();
    return make_adic_pair(std::move(a), T, J, -(n + 3), n + 3);
}

AdicPair make_adic_pair(ElemSeq a, int T, int J, long dlo, long dhi) {
    if (T < 2 || J < 2)
        throw std::invalid_argument("adic pair: T and J must be at least 2");
    if (dlo > dhi) throw std::invalid_argument("adic pair: empty window");
    AdicPair P;
    P.a = std::move(a);
    P.T = T;
    P.J = J;
    P.dlo = dlo;
    P.dhi = dhi;
    return P;
}

static Poly unit_poly(const RingPtr& R) {
    return poly_const(R->F, R->F.from_long(1), R->nvars());
}

static std::vector<ModElem> unit_cols(const FPModule& M) {
    std::vector<ModElem> cols;
    for (int g = 0; g < M.rank(); ++g)
        cols.push_back(me_from_poly(g, unit_poly(M.ring)));
    return cols;
}

// multiplication by every generator of the t-th power, bundled into one map
// whose kernel is the t-th torsion stage
static ModuleMap power_mult_map(const AdicPair& P, const FPModule& M, int t) {
    const RingPtr& R = M.ring;
    std::vector<Poly> prods = power_products(P.a, t);
    std::vector<FPModule> tws;
    for (const auto& p : prods) {
        long d = 0;
        poly_homogeneous(p, R->weights, &d);
        tws.push_back(twist(M, p.is_zero() ? 0 : d));
    }
    std::vector<const FPModule*> ptrs;
    for (const auto& m : tws) ptrs.push_back(&m);
    DirectSum D = direct_sum(R, ptrs);
    std::vector<ModElem> cols;
    for (int g = 0; g < M.rank(); ++g) {
        ModElem acc;
        for (size_t i = 0; i < prods.size(); ++i) {
            if (prods[i].is_zero()) continue;
            acc = me_add(R->F, acc,
                         ds_inject(D, (int)i, me_from_poly(g, prods[i])));
        }
        cols.push_back(std::move(acc));
    }
    return make_map(M, D.sum, std::move(cols), true);
}

// M modulo the t-th power of the ideal, on the same cover
static Quotient power_quotient(const AdicPair& P, const FPModule& M, int t) {
    std::vector<ModElem> rels = M.rels;
    for (const auto& p : power_products(P.a, t)) {
        if (p.is_zero()) continue;
        for (int g = 0; g < M.rank(); ++g) rels.push_back(me_from_poly(g, p));
    }
    Quotient q;
    q.quot = make_module(M.ring, M.gen_degs, std::move(rels));
    q.proj = make_map(M, q.quot, unit_cols(M), true);
    return q;
}

TorsionPart gamma(const AdicPair& P, const FPModule& M) {
    const RingSpec& R = *M.ring;
    Submodule prev = kernel(power_mult_map(P, M, 1));
    for (int t = 1; t < P.T; ++t) {
        Submodule next = kernel(power_mult_map(P, M, t + 1));
        // ascending chain: stabilized once the next kernel is inside this one
        std::vector<ModElem> list = prev.incl.cols;
        list.insert(list.end(), M.rels.begin(), M.rels.end());
        RModGB G = r_module_gb(R, M.rank(), list, false);
        bool stable = true;
        for (const auto& c : next.incl.cols)
            if (!r_member(R, G, c)) {
                stable = false;
                break;
            }
        if (stable) return {prev.sub, prev.incl, t};
        prev = std::move(next);
    }
    std::ostringstream os;
    os << "torsion part: kernel chain still growing at stage " << P.T
       << " (last stage has " << prev.sub.rank() << " generators)";
    throw std::runtime_error(os.str());
}

AdicTower lambda(const AdicPair& P, const FPModule& M) {
    AdicTower L;
    std::vector<FPModule> quots;
    std::vector<ModuleMap> trans;
    for (int t = 1; t <= P.T; ++t) {
        L.stage.push_back(power_quotient(P, M, t));
        L.tau.push_back(L.stage.back().proj);
        quots.push_back(L.stage.back().quot);
    }
    for (int t = 0; t + 1 < P.T; ++t)
        trans.push_back(make_map(L.stage[(size_t)(t + 1)].quot,
                                 L.stage[(size_t)t].quot,
                                 unit_cols(L.stage[(size_t)(t + 1)].quot), true));
    L.sys = pro_from_modules(quots, trans, 0);
    return L;
}

// coefficients of v on the leading k generators of the lifting basis
static std::optional<ModElem> lift_prefix(const RingSpec& R, const RModGB& G,
                                          const ModElem& v, int k) {
    auto c = r_lift(R, G, v);
    if (!c) return std::nullopt;
    c->resize((size_t)k);
    return me_from_vec(*c);
}

TorsionStageCx torsion_stage(const AdicPair& P, const ComplexPtr& M, int t) {
    const RingPtr& R = M->ring;
    std::vector<Submodule> K;
    for (int i = M->lo; i <= M->hi(); ++i)
        K.push_back(kernel(power_mult_map(P, M->term_at(i), t)));
    std::vector<FPModule> terms;
    for (const auto& k : K) terms.push_back(k.sub);
    std::vector<ModuleMap> diffs;
    for (int i = M->lo; i < M->hi(); ++i) {
        const Submodule& S = K[(size_t)(i - M->lo)];
        const Submodule& D = K[(size_t)(i - M->lo + 1)];
        FPModule amb = M->term_at(i + 1);
        std::vector<ModElem> list = D.incl.cols;
        list.insert(list.end(), amb.rels.begin(), amb.rels.end());
        RModGB G = r_module_gb(*R, amb.rank(), list, true);
        std::vector<ModElem> cols;
        for (const auto& c : S.incl.cols) {
            ModElem v = map_apply(M->diff(i), c);
            auto w = lift_prefix(*R, G, v, D.sub.rank());
            if (!w)
                throw std::logic_error(
                    "torsion stage: differential does not restrict to the kernels");
            cols.push_back(std::move(*w));
        }
        diffs.push_back(make_map(S.sub, D.sub, std::move(cols), true));
    }
    TorsionStageCx out;
    out.cx = make_complex(R, M->lo, std::move(terms), std::move(diffs), true);
    std::map<int, ModuleMap> comp;
    for (int i = M->lo; i <= M->hi(); ++i)
        comp[i] = make_map(out.cx->term_at(i), M->term_at(i),
                           K[(size_t)(i - M->lo)].incl.cols, false);
    out.incl = make_chain_map(out.cx, M, std::move(comp), true);
    return out;
}

QuotientStageCx quotient_stage(const AdicPair& P, const ComplexPtr& M, int t) {
    const RingPtr& R = M->ring;
    std::vector<Quotient> Q;
    for (int i = M->lo; i <= M->hi(); ++i)
        Q.push_back(power_quotient(P, M->term_at(i), t));
    std::vector<FPModule> terms;
    for (const auto& q : Q) terms.push_back(q.quot);
    std::vector<ModuleMap> diffs;
    for (int i = M->lo; i < M->hi(); ++i)
        diffs.push_back(make_map(Q[(size_t)(i - M->lo)].quot,
                                 Q[(size_t)(i - M->lo + 1)].quot,
                                 M->diff(i).cols, true));
    QuotientStageCx out;
    out.cx = make_complex(R, M->lo, std::move(terms), std::move(diffs), true);
    std::map<int, ModuleMap> comp;
    for (int i = M->lo; i <= M->hi(); ++i)
        comp[i] = make_map(M->term_at(i), out.cx->term_at(i),
                           Q[(size_t)(i - M->lo)].proj.cols, false);
    out.proj = make_chain_map(M, out.cx, std::move(comp), true);
    return out;
}

TorsionTowerCx torsion_tower(const AdicPair& P, const ComplexPtr& M) {
    const RingSpec& R = *M->ring;
    TorsionTowerCx T;
    for (int t = 1; t <= P.T; ++t) T.stage.push_back(torsion_stage(P, M, t));
    std::vector<ComplexPtr> cxs;
    for (const auto& s : T.stage) cxs.push_back(s.cx);
    std::vector<ChainMap> trans;
    for (int t = 0; t + 1 < P.T; ++t) {
        std::map<int, ModuleMap> comp;
        for (int i = M->lo; i <= M->hi(); ++i) {
            FPModule amb = M->term_at(i);
            const ModuleMap& big = T.stage[(size_t)(t + 1)].incl.at(i);
            std::vector<ModElem> list = big.cols;
            list.insert(list.end(), amb.rels.begin(), amb.rels.end());
            RModGB G = r_module_gb(R, amb.rank(), list, true);
            std::vector<ModElem> cols;
            for (const auto& c : T.stage[(size_t)t].incl.at(i).cols) {
                auto w = lift_prefix(R, G, c, big.src.rank());
                if (!w)
                    throw std::logic_error(
                        "torsion tower: stage inclusion failed to lift");
                cols.push_back(std::move(*w));
            }
            comp[i] = make_map(T.stage[(size_t)t].cx->term_at(i),
                               T.stage[(size_t)(t + 1)].cx->term_at(i),
                               std::move(cols), false);
        }
        trans.push_back(make_chain_map(T.stage[(size_t)t].cx,
                                       T.stage[(size_t)(t + 1)].cx,
                                       std::move(comp), true));
    }
    T.sys = make_ind_system(std::move(cxs), std::move(trans));
    return T;
}

QuotientTowerCx quotient_tower(const AdicPair& P, const ComplexPtr& M) {
    QuotientTowerCx Q;
    for (int t = 1; t <= P.T; ++t) Q.stage.push_back(quotient_stage(P, M, t));
    std::vector<ComplexPtr> cxs;
    for (const auto& s : Q.stage) cxs.push_back(s.cx);
    std::vector<ChainMap> trans;
    for (int t = 0; t + 1 < P.T; ++t) {
        std::map<int, ModuleMap> comp;
        for (int i = M->lo; i <= M->hi(); ++i)
            comp[i] = make_map(Q.stage[(size_t)(t + 1)].cx->term_at(i),
                               Q.stage[(size_t)t].cx->term_at(i),
                               unit_cols(M->term_at(i)), false);
        trans.push_back(make_chain_map(Q.stage[(size_t)(t + 1)].cx,
                                       Q.stage[(size_t)t].cx, std::move(comp),
                                       true));
    }
    Q.sys = make_pro_system(std::move(cxs), std::move(trans));
    return Q;
}

// project a tensor stage onto its index-0 block, a copy of the coefficient
// complex
static ChainMap augment_tensor(const BlockComplex& SM, const ComplexPtr& M) {
    std::map<int, ModuleMap> comp;
    for (int k = M->lo; k <= M->hi(); ++k) {
        if (!SM.cx->in_range(k)) continue;
        const BlockTerm& L = SM.layout_at(k);
        auto it = L.bidx.find({0, 0});
        if (it == L.bidx.end()) continue;
        int b = it->second;
        std::vector<ModElem> cols((size_t)L.sum.rank());
        for (int g = 0; g < L.mods[(size_t)b].rank(); ++g)
            cols[(size_t)(L.offsets[(size_t)b] + g)] =
                me_from_poly(g, unit_poly(M->ring));
        comp[k] = make_map(L.sum, M->term_at(k), std::move(cols), false);
    }
    return make_chain_map(SM.cx, M, std::move(comp), true);
}

TorsionSystem rgamma(const AdicPair& P, const ComplexPtr& M) {
    TorsionSystem S;
    S.P = P;
    S.M = M;
    S.kt = stable_koszul_tower(P.a, P.T);
    for (int t = 1; t <= P.T; ++t)
        S.stage.push_back(tensor_complex(S.kt.stage[(size_t)(t - 1)].cx(), M));
    std::vector<ComplexPtr> cxs;
    for (const auto& s : S.stage) cxs.push_back(s.cx);
    std::vector<ChainMap> trans;
    for (int t = 1; t < P.T; ++t) {
        ChainMap raw =
            tensor_map_left(S.stage[(size_t)(t - 1)], S.stage[(size_t)t],
                            S.kt.sys.maps[(size_t)(t - 1)], M);
        trans.push_back(
            make_chain_map(raw.src, raw.dst, std::move(raw.comp), true));
    }
    S.sys = make_ind_system(std::move(cxs), std::move(trans));
    for (int t = 1; t <= P.T; ++t)
        S.eps.push_back(augment_tensor(S.stage[(size_t)(t - 1)], M));
    return S;
}

ChainMap hom_unit_iso(const ComplexPtr& M, const BlockComplex& HUM) {
    std::map<int, ModuleMap> comp;
    for (int k = M->lo; k <= M->hi(); ++k) {
        if (!HUM.cx->in_range(k)) continue;
        const BlockTerm& L = HUM.layout_at(k);
        comp[k] = make_map(M->term_at(k), L.sum, unit_cols(M->term_at(k)), false);
    }
    return make_chain_map(M, HUM.cx, std::move(comp), true);
}

CompleteSystem llambda(const AdicPair& P, const ComplexPtr& M) {
    CompleteSystem S;
    S.P = P;
    S.M = M;
    S.tt = telescope_tower(P.a, P.J);
    for (int j = 1; j <= P.J; ++j)
        S.stage.push_back(hom_complex(S.tt.stage[(size_t)(j - 1)].cx(), M));
    std::vector<ComplexPtr> cxs;
    for (const auto& s : S.stage) cxs.push_back(s.cx);
    std::vector<ChainMap> trans;
    for (int j = 1; j < P.J; ++j) {
        ChainMap raw = hom_map_left(S.stage[(size_t)j], S.stage[(size_t)(j - 1)],
                                    S.tt.sys.maps[(size_t)(j - 1)], M);
        trans.push_back(
            make_chain_map(raw.src, raw.dst, std::move(raw.comp), true));
    }
    S.sys = make_pro_system(std::move(cxs), std::move(trans));
    ComplexPtr U = unit_complex(P.ring());
    BlockComplex HUM = hom_complex(U, M);
    ChainMap iso = hom_unit_iso(M, HUM);
    for (int j = 1; j <= P.J; ++j) {
        ChainMap raw = hom_map_left(HUM, S.stage[(size_t)(j - 1)],
                                    u_map(S.tt, j, U), M);
        ChainMap cert = make_chain_map(raw.src, raw.dst, std::move(raw.comp), true);
        S.tau.push_back(compose_chain_maps(cert, iso));
    }
    return S;
}

static ModElem shift_comps(const ModElem& v, int off) {
    ModElem w = v;
    for (auto& t : w.t) t.comp += off;
    return w;
}

ChainMap v_map(const TorsionSystem& S, const TorsionStageCx& G, int t) {
    const BlockComplex& T = S.stage[(size_t)(t - 1)];
    std::map<int, ModuleMap> comp;
    for (int k = G.cx->lo; k <= G.cx->hi(); ++k) {
        const BlockTerm& L = T.layout_at(k);
        int b = L.bidx.at({0, 0});
        std::vector<ModElem> cols;
        for (const auto& c : G.incl.at(k).cols)
            cols.push_back(shift_comps(c, L.offsets[(size_t)b]));
        comp[k] = make_map(G.cx->term_at(k), L.sum, std::move(cols), false);
    }
    return make_chain_map(G.cx, T.cx, std::move(comp), true);
}

ChainMap tel_projection(const CompleteSystem& S, const QuotientStageCx& Q,
                        int j) {
    const RingPtr& R = S.P.ring();
    const Field& F = R->F;
    int n = S.P.n();
    // evaluation weights on the index-0 telescope generators: weight 1 on the
    // 0-th, -a^{i-1} on the i-th, multiplied across the factors
    std::vector<std::vector<Poly>> coef;
    for (int l = 0; l < n; ++l) {
        std::vector<Poly> c = {unit_poly(R)};
        for (int i = 1; i <= j; ++i)
            c.push_back(poly_neg(
                F, ring_nf(*R, poly_pow(F, S.P.a.elems[(size_t)l], i - 1))));
        coef.push_back(std::move(c));
    }
    const BlockComplex& H = S.stage[(size_t)(j - 1)];
    std::map<int, ModuleMap> comp;
    for (int k = H.cx->lo; k <= H.cx->hi(); ++k) {
        if (!Q.cx->in_range(k)) continue;
        const BlockTerm& L = H.layout_at(k);
        std::vector<ModElem> cols((size_t)L.sum.rank());
        for (size_t b = 0; b < L.blocks.size(); ++b) {
            auto [p, u] = L.blocks[b];
            if (p != 0) continue;
            int uu = u;
            Poly c = unit_poly(R);
            for (int l = n - 1; l >= 0 && !c.is_zero(); --l) {
                int digit = uu % (j + 1);
                uu /= (j + 1);
                c = ring_mul(*R, c, coef[(size_t)l][(size_t)digit]);
            }
            if (c.is_zero()) continue;
            for (int g = 0; g < L.mods[b].rank(); ++g)
                cols[(size_t)(L.offsets[b] + g)] = me_from_poly(g, c);
        }
        comp[k] = make_map(L.sum, Q.cx->term_at(k), std::move(cols), false);
    }
    return make_chain_map(H.cx, Q.cx, std::move(comp), true);
}

LimPiece complete_piece(const CompleteSystem& S, int i, long d) {
    LimPiece L;
    L.index = i;
    L.deg = d;
    L.now = pro_piece(S.sys, i, d);
    L.below = pro_piece(S.sys, i - 1, d);
    L.lim1_interference = !L.below.lim1_zero;
    L.resolved = L.now.resolved() && L.below.lim1_zero;
    if (L.resolved) L.value = L.now.value_dim;
    return L;
}

ResolvedModule resolve_module(const FPModule& M, int max_length) {
    ResolvedModule R;
    R.res = free_resolution(M, max_length);
    int len = (int)R.res.d.size();
    std::vector<FPModule> terms;
    std::vector<ModuleMap> diffs;
    for (int q = 0; q <= len; ++q) terms.push_back(R.res.F[(size_t)(len - q)]);
    for (int q = 0; q < len; ++q) diffs.push_back(R.res.d[(size_t)(len - q - 1)]);
    R.cx = make_complex(M.ring, -len, std::move(terms), std::move(diffs), true);
    R.target = single_term(M, 0);
    std::map<int, ModuleMap> comp;
    comp[0] = make_map(R.cx->term_at(0), M, R.res.aug.cols, false);
    R.aug = make_chain_map(R.cx, R.target, std::move(comp), true);
    return R;
}

ChainMap lift_through_resolutions(const ModuleMap& f, const ResolvedModule& RM,
                                  const ResolvedModule& RN) {
    const RingSpec& R = *f.src.ring;
    int lm = (int)RM.res.d.size(), ln = (int)RN.res.d.size();
    std::vector<ModuleMap> phi;
    phi.push_back(
        make_map(RM.cx->term_at(0), RN.cx->term_at(0), f.cols, false));
    for (int m = 1; m <= lm; ++m) {
        if (m > ln) {
            ModuleMap test =
                map_compose(phi.back(), RM.res.d[(size_t)(m - 1)]);
            if (!map_is_zero(test))
                throw std::runtime_error(
                    "resolution comparison: target resolution too short for "
                    "the lift");
            break;
        }
        RModGB G = r_module_gb(R, RN.res.F[(size_t)(m - 1)].rank(),
                               RN.res.d[(size_t)(m - 1)].cols, true);
        std::vector<ModElem> cols;
        for (const auto& c : RM.res.d[(size_t)(m - 1)].cols) {
            ModElem v = map_apply(phi.back(), c);
            auto w = lift_prefix(R, G, v, RN.res.F[(size_t)m].rank());
            if (!w)
                throw std::runtime_error(
                    "resolution comparison: lift failed at an inexact or "
                    "truncated stage");
            cols.push_back(std::move(*w));
        }
        phi.push_back(make_map(RM.res.F[(size_t)m], RN.res.F[(size_t)m],
                               std::move(cols), false));
    }
    std::map<int, ModuleMap> comp;
    for (size_t m = 0; m < phi.size(); ++m)
        comp[-(int)m] = make_map(RM.cx->term_at(-(int)m), RN.cx->term_at(-(int)m),
                                 phi[m].cols, false);
    return make_chain_map(RM.cx, RN.cx, std::move(comp), true);
}

ChainMap tensor_swap(const BlockComplex& XY, const BlockComplex& YX) {
    const RingPtr& R = XY.cx->ring;
    const Field& F = R->F;
    std::map<int, ModuleMap> comp;
    for (int k = XY.cx->lo; k <= XY.cx->hi(); ++k) {
        const BlockTerm& S = XY.layout_at(k);
        const BlockTerm& D = YX.layout_at(k);
        std::vector<ModElem> cols((size_t)S.sum.rank());
        for (size_t b = 0; b < S.blocks.size(); ++b) {
            auto [p, u] = S.blocks[b];
            int q = k - p;
            bool neg = (p % 2 != 0) && (q % 2 != 0);
            Scalar sgn = F.from_long(neg ? -1 : 1);
            for (int v = 0; v < S.mods[b].rank(); ++v) {
                auto it = D.bidx.find({q, v});
                if (it == D.bidx.end())
                    throw std::logic_error("swap: mismatched block layouts");
                ModElem e;
                e.t.push_back({D.offsets[(size_t)it->second] + u,
                               Exps((size_t)R->nvars(), 0), sgn});
                cols[(size_t)(S.offsets[b] + v)] = std::move(e);
            }
        }
        comp[k] = make_map(S.sum, D.sum, std::move(cols), false);
    }
    return make_chain_map(XY.cx, YX.cx, std::move(comp), true);
}

}  // namespace adict
