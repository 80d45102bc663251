#include "adict/complex.hpp"

namespace adict {

ComplexPtr make_complex(RingPtr R, int lo, std::vector<FPModule> terms,
                        std::vector<ModuleMap> diffs, bool certify) {
    auto X = std::make_shared<BoundedComplex>();
    X->ring = std::move(R);
    X->lo = lo;
    X->terms = std::move(terms);
    X->diffs = std::move(diffs);
    if (!X->terms.empty() && X->diffs.size() != X->terms.size() - 1)
        throw std::invalid_argument("complex: need one differential per gap");
    if (certify) {
        for (size_t k = 0; k < X->diffs.size(); ++k) {
            if (!module_equal(X->diffs[k].src, X->terms[k]) ||
                !module_equal(X->diffs[k].dst, X->terms[k + 1]))
                throw std::invalid_argument("complex: differential endpoints do "
                                            "not match the terms");
            certify_map(X->diffs[k]);
        }
        for (size_t k = 0; k + 1 < X->diffs.size(); ++k)
            if (!map_is_zero(map_compose(X->diffs[k + 1], X->diffs[k])))
                throw std::invalid_argument("complex: d.d != 0 at index " +
                                            std::to_string(X->lo + (int)k));
    }
    return X;
}

ComplexPtr single_term(const FPModule& M, int at) {
    return make_complex(M.ring, at, {M}, {}, false);
}

ComplexPtr shift_complex(const ComplexPtr& X, int k) {
    std::vector<ModuleMap> diffs;
    for (const auto& d : X->diffs)
        diffs.push_back(k % 2 == 0 ? d
                                   : map_scale(X->ring->F.from_long(-1), d));
    return make_complex(X->ring, X->lo - k, X->terms, std::move(diffs), false);
}

bool all_terms_free(const BoundedComplex& X) {
    for (const auto& t : X.terms)
        if (!t.rels.empty()) return false;
    return true;
}

static ModuleMap comp_or_zero(const ChainMap& f, int i) {
    if (f.has(i)) return f.at(i);
    return zero_map(f.src->term_at(i), f.dst->term_at(i));
}

static ModuleMap diff_or_zero(const BoundedComplex& X, int i) {
    if (X.has_diff(i)) return X.diff(i);
    return zero_map(X.term_at(i), X.term_at(i + 1));
}

ChainMap make_chain_map(ComplexPtr src, ComplexPtr dst,
                        std::map<int, ModuleMap> comp, bool certify) {
    ChainMap f;
    f.src = std::move(src);
    f.dst = std::move(dst);
    f.comp = std::move(comp);
    if (certify) {
        for (const auto& [i, fi] : f.comp) {
            if (!module_equal(fi.src, f.src->term_at(i)) ||
                !module_equal(fi.dst, f.dst->term_at(i)))
                throw std::invalid_argument("chain map: component " +
                                            std::to_string(i) + " shape mismatch");
            certify_map(fi);
        }
        int lo = std::min(f.src->lo, f.dst->lo) - 1;
        int hi = std::max(f.src->hi(), f.dst->hi());
        for (int i = lo; i <= hi; ++i) {
            ModuleMap lhs = map_compose(comp_or_zero(f, i + 1), diff_or_zero(*f.src, i));
            ModuleMap rhs = map_compose(diff_or_zero(*f.dst, i), comp_or_zero(f, i));
            ModuleMap diffm = map_add(lhs, map_scale(f.src->ring->F.from_long(-1), rhs));
            if (!map_is_zero(diffm))
                throw std::invalid_argument("chain map: square at index " +
                                            std::to_string(i) + " does not commute");
        }
    }
    return f;
}

ChainMap identity_chain_map(const ComplexPtr& X) {
    std::map<int, ModuleMap> comp;
    for (int i = X->lo; i <= X->hi(); ++i)
        comp.emplace(i, identity_map(X->term_at(i)));
    return make_chain_map(X, X, std::move(comp), false);
}

ChainMap compose_chain_maps(const ChainMap& g, const ChainMap& f) {
    std::map<int, ModuleMap> comp;
    for (const auto& [i, fi] : f.comp)
        if (g.has(i)) comp.emplace(i, map_compose(g.at(i), fi));
    return make_chain_map(f.src, g.dst, std::move(comp), false);
}

bool chain_map_equal(const ChainMap& f, const ChainMap& g) {
    int lo = std::min(f.src->lo, g.src->lo);
    int hi = std::max(f.src->hi(), g.src->hi());
    const Field& F = f.src->ring->F;
    for (int i = lo; i <= hi; ++i) {
        ModuleMap a = comp_or_zero(f, i);
        ModuleMap b = comp_or_zero(g, i);
        if (!module_equal(a.src, b.src) || !module_equal(a.dst, b.dst))
            return false;
        if (!map_is_zero(map_add(a, map_scale(F.from_long(-1), b)))) return false;
    }
    return true;
}

// --- block terms -----------------------------------------------------------

static BlockTerm build_blocks(const RingPtr& R,
                              std::vector<std::pair<int, int>> ids,
                              std::vector<FPModule> mods) {
    BlockTerm T;
    T.blocks = std::move(ids);
    T.mods = std::move(mods);
    std::vector<const FPModule*> ptrs;
    for (const auto& m : T.mods) ptrs.push_back(&m);
    DirectSum S = direct_sum(R, ptrs);
    T.sum = std::move(S.sum);
    T.offsets = std::move(S.offsets);
    for (size_t b = 0; b < T.blocks.size(); ++b) T.bidx[T.blocks[b]] = (int)b;
    return T;
}

static ModElem block_inject(const BlockTerm& T, int b, const ModElem& v) {
    ModElem r = v;
    for (auto& tm : r.t) tm.comp += T.offsets[(size_t)b];
    return r;
}

// entry polynomials of a free-cover column, indexed by destination generator
static std::vector<Poly> col_entries(const ModElem& col, int rank, int nvars) {
    return me_to_vec(col, rank, nvars);
}

BlockComplex tensor_complex(const ComplexPtr& X, const ComplexPtr& Y) {
    if (!all_terms_free(*X))
        throw std::invalid_argument("tensor: left factor must have free terms");
    const RingPtr& R = X->ring;
    const Field& F = R->F;
    int lo = X->lo + Y->lo, hi = X->hi() + Y->hi();
    BlockComplex out;
    std::vector<BlockTerm> layout;
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::pair<int, int>> ids;
        std::vector<FPModule> mods;
        for (int p = std::max(X->lo, n - Y->hi()); p <= std::min(X->hi(), n - Y->lo);
             ++p) {
            FPModule Xp = X->term_at(p);
            FPModule Yq = Y->term_at(n - p);
            for (int u = 0; u < Xp.rank(); ++u) {
                ids.push_back({p, u});
                mods.push_back(twist(Yq, -Xp.gen_degs[(size_t)u]));
            }
        }
        layout.push_back(build_blocks(R, std::move(ids), std::move(mods)));
    }
    std::vector<FPModule> terms;
    for (auto& L : layout) terms.push_back(L.sum);
    std::vector<ModuleMap> diffs;
    for (int n = lo; n < hi; ++n) {
        const BlockTerm& S = layout[(size_t)(n - lo)];
        const BlockTerm& D = layout[(size_t)(n - lo + 1)];
        std::vector<ModElem> cols((size_t)S.sum.rank());
        for (size_t b = 0; b < S.blocks.size(); ++b) {
            auto [p, u] = S.blocks[b];
            int q = n - p;
            const FPModule& Mb = S.mods[b];
            for (int g = 0; g < Mb.rank(); ++g) {
                ModElem img;
                if (X->has_diff(p)) {  // d_X (x) id
                    FPModule Xp1 = X->term_at(p + 1);
                    auto entries = col_entries(X->diff(p).cols[(size_t)u],
                                               Xp1.rank(), R->nvars());
                    for (int v = 0; v < Xp1.rank(); ++v) {
                        if (entries[(size_t)v].is_zero()) continue;
                        auto it = D.bidx.find({p + 1, v});
                        if (it == D.bidx.end()) continue;
                        ModElem piece = me_from_poly(g, entries[(size_t)v]);
                        img = me_add(F, img, block_inject(D, it->second, piece));
                    }
                }
                if (Y->has_diff(q)) {  // (-1)^p id (x) d_Y
                    auto it = D.bidx.find({p, u});
                    if (it != D.bidx.end()) {
                        ModElem piece = Y->diff(q).cols[(size_t)g];
                        if (p % 2 != 0) piece = me_neg(F, piece);
                        img = me_add(F, img, block_inject(D, it->second, piece));
                    }
                }
                cols[(size_t)(S.offsets[b] + g)] = std::move(img);
            }
        }
        diffs.push_back(make_map(S.sum, D.sum, std::move(cols), false));
    }
    out.cx = make_complex(R, lo, std::move(terms), std::move(diffs), true);
    out.layout = std::move(layout);
    return out;
}

BlockComplex hom_complex(const ComplexPtr& X, const ComplexPtr& Y) {
    if (!all_terms_free(*X))
        throw std::invalid_argument("hom: contravariant slot must have free terms");
    const RingPtr& R = X->ring;
    const Field& F = R->F;
    int lo = Y->lo - X->hi(), hi = Y->hi() - X->lo;
    BlockComplex out;
    std::vector<BlockTerm> layout;
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::pair<int, int>> ids;
        std::vector<FPModule> mods;
        for (int p = std::max(X->lo, Y->lo - n); p <= std::min(X->hi(), Y->hi() - n);
             ++p) {
            FPModule Xp = X->term_at(p);
            FPModule Yq = Y->term_at(p + n);
            for (int u = 0; u < Xp.rank(); ++u) {
                ids.push_back({p, u});
                mods.push_back(twist(Yq, Xp.gen_degs[(size_t)u]));
            }
        }
        layout.push_back(build_blocks(R, std::move(ids), std::move(mods)));
    }
    std::vector<FPModule> terms;
    for (auto& L : layout) terms.push_back(L.sum);
    std::vector<ModuleMap> diffs;
    for (int n = lo; n < hi; ++n) {
        const BlockTerm& S = layout[(size_t)(n - lo)];
        const BlockTerm& D = layout[(size_t)(n - lo + 1)];
        std::vector<ModElem> cols((size_t)S.sum.rank());
        // sign of the pre-composition part: -(-1)^n
        Scalar presign = F.from_long(n % 2 == 0 ? -1 : 1);
        for (size_t b = 0; b < S.blocks.size(); ++b) {
            auto [p, u] = S.blocks[b];
            const FPModule& Mb = S.mods[b];
            for (int g = 0; g < Mb.rank(); ++g) {
                ModElem img;
                if (Y->has_diff(p + n)) {  // post-composition with d_Y
                    auto it = D.bidx.find({p, u});
                    if (it != D.bidx.end())
                        img = me_add(F, img,
                                     block_inject(D, it->second,
                                                  Y->diff(p + n).cols[(size_t)g]));
                }
                if (X->has_diff(p - 1)) {  // pre-composition with d_X
                    FPModule Xp0 = X->term_at(p - 1);
                    for (int v = 0; v < Xp0.rank(); ++v) {
                        auto entries = col_entries(X->diff(p - 1).cols[(size_t)v],
                                                   X->term_at(p).rank(), R->nvars());
                        const Poly& c = entries[(size_t)u];
                        if (c.is_zero()) continue;
                        auto it = D.bidx.find({p - 1, v});
                        if (it == D.bidx.end()) continue;
                        ModElem piece = me_from_poly(g, poly_scale(F, presign, c));
                        img = me_add(F, img, block_inject(D, it->second, piece));
                    }
                }
                cols[(size_t)(S.offsets[b] + g)] = std::move(img);
            }
        }
        diffs.push_back(make_map(S.sum, D.sum, std::move(cols), false));
    }
    out.cx = make_complex(R, lo, std::move(terms), std::move(diffs), true);
    out.layout = std::move(layout);
    return out;
}

ChainMap tensor_map_right(const BlockComplex& XY, const BlockComplex& XY2,
                          const ComplexPtr& X, const ChainMap& g) {
    std::map<int, ModuleMap> comp;
    const Field& F = X->ring->F;
    for (int n = XY.cx->lo; n <= XY.cx->hi(); ++n) {
        if (!XY2.cx->in_range(n)) continue;
        const BlockTerm& S = XY.layout_at(n);
        const BlockTerm& D = XY2.layout_at(n);
        std::vector<ModElem> cols((size_t)S.sum.rank());
        for (size_t b = 0; b < S.blocks.size(); ++b) {
            auto [p, u] = S.blocks[b];
            int q = n - p;
            if (!g.has(q)) continue;
            auto it = D.bidx.find({p, u});
            if (it == D.bidx.end()) continue;
            for (int gg = 0; gg < S.mods[b].rank(); ++gg)
                cols[(size_t)(S.offsets[b] + gg)] =
                    me_add(F, cols[(size_t)(S.offsets[b] + gg)],
                           block_inject(D, it->second, g.at(q).cols[(size_t)gg]));
        }
        comp.emplace(n, make_map(S.sum, D.sum, std::move(cols), false));
    }
    return make_chain_map(XY.cx, XY2.cx, std::move(comp), false);
}

ChainMap hom_map_right(const BlockComplex& HXY, const BlockComplex& HXY2,
                       const ComplexPtr& X, const ChainMap& g) {
    std::map<int, ModuleMap> comp;
    const Field& F = X->ring->F;
    for (int n = HXY.cx->lo; n <= HXY.cx->hi(); ++n) {
        if (!HXY2.cx->in_range(n)) continue;
        const BlockTerm& S = HXY.layout_at(n);
        const BlockTerm& D = HXY2.layout_at(n);
        std::vector<ModElem> cols((size_t)S.sum.rank());
        for (size_t b = 0; b < S.blocks.size(); ++b) {
            auto [p, u] = S.blocks[b];
            if (!g.has(p + n)) continue;
            auto it = D.bidx.find({p, u});
            if (it == D.bidx.end()) continue;
            for (int gg = 0; gg < S.mods[b].rank(); ++gg)
                cols[(size_t)(S.offsets[b] + gg)] =
                    me_add(F, cols[(size_t)(S.offsets[b] + gg)],
                           block_inject(D, it->second, g.at(p + n).cols[(size_t)gg]));
        }
        comp.emplace(n, make_map(S.sum, D.sum, std::move(cols), false));
    }
    return make_chain_map(HXY.cx, HXY2.cx, std::move(comp), false);
}

ChainMap tensor_map_left(const BlockComplex& XY, const BlockComplex& X2Y,
                         const ChainMap& h, const ComplexPtr& Y) {
    std::map<int, ModuleMap> comp;
    const RingPtr& R = Y->ring;
    const Field& F = R->F;
    for (int n = XY.cx->lo; n <= XY.cx->hi(); ++n) {
        if (!X2Y.cx->in_range(n)) continue;
        const BlockTerm& S = XY.layout_at(n);
        const BlockTerm& D = X2Y.layout_at(n);
        std::vector<ModElem> cols((size_t)S.sum.rank());
        for (size_t b = 0; b < S.blocks.size(); ++b) {
            auto [p, u] = S.blocks[b];
            if (!h.has(p)) continue;
            FPModule X2p = h.dst->term_at(p);
            auto entries = col_entries(h.at(p).cols[(size_t)u], X2p.rank(),
                                       R->nvars());
            for (int v = 0; v < X2p.rank(); ++v) {
                if (entries[(size_t)v].is_zero()) continue;
                auto it = D.bidx.find({p, v});
                if (it == D.bidx.end()) continue;
                for (int gg = 0; gg < S.mods[b].rank(); ++gg) {
                    ModElem piece = me_from_poly(gg, entries[(size_t)v]);
                    cols[(size_t)(S.offsets[b] + gg)] =
                        me_add(F, cols[(size_t)(S.offsets[b] + gg)],
                               block_inject(D, it->second, piece));
                }
            }
        }
        comp.emplace(n, make_map(S.sum, D.sum, std::move(cols), false));
    }
    return make_chain_map(XY.cx, X2Y.cx, std::move(comp), false);
}

ChainMap hom_map_left(const BlockComplex& HX2Y, const BlockComplex& HXY,
                      const ChainMap& h, const ComplexPtr& Y) {
    std::map<int, ModuleMap> comp;
    const RingPtr& R = Y->ring;
    const Field& F = R->F;
    for (int n = HX2Y.cx->lo; n <= HX2Y.cx->hi(); ++n) {
        if (!HXY.cx->in_range(n)) continue;
        const BlockTerm& S = HX2Y.layout_at(n);
        const BlockTerm& D = HXY.layout_at(n);
        std::vector<ModElem> cols((size_t)S.sum.rank());
        for (size_t b = 0; b < S.blocks.size(); ++b) {
            auto [p, uprime] = S.blocks[b];
            if (!h.has(p)) continue;
            // h_p(e_u) = sum_{u'} c_{u',u} e_{u'}
            FPModule Xp = h.src->term_at(p);
            FPModule X2p = h.dst->term_at(p);
            for (int u = 0; u < Xp.rank(); ++u) {
                auto entries = col_entries(h.at(p).cols[(size_t)u], X2p.rank(),
                                           R->nvars());
                const Poly& c = entries[(size_t)uprime];
                if (c.is_zero()) continue;
                auto it = D.bidx.find({p, u});
                if (it == D.bidx.end()) continue;
                for (int gg = 0; gg < S.mods[b].rank(); ++gg) {
                    ModElem piece = me_from_poly(gg, c);
                    cols[(size_t)(S.offsets[b] + gg)] =
                        me_add(F, cols[(size_t)(S.offsets[b] + gg)],
                               block_inject(D, it->second, piece));
                }
            }
        }
        comp.emplace(n, make_map(S.sum, D.sum, std::move(cols), false));
    }
    return make_chain_map(HX2Y.cx, HXY.cx, std::move(comp), false);
}

// --- cohomology ------------------------------------------------------------

HPiece cohomology_piece(const BoundedComplex& X, int i, long d) {
    HPiece H;
    H.index = i;
    H.deg = d;
    FPModule Mi = X.term_at(i);
    H.pb = module_piece(Mi, d);
    Mat A(0, H.pb.dim);
    if (X.has_diff(i)) {
        PieceBasis next = module_piece(X.term_at(i + 1), d);
        A = piece_matrix(X.diff(i), H.pb, next);
    }
    Mat B(H.pb.dim, 0);
    if (X.has_diff(i - 1)) {
        PieceBasis prev = module_piece(X.term_at(i - 1), d);
        B = piece_matrix(X.diff(i - 1), prev, H.pb);
    }
    Mat Z = mat_nullspace(X.ring->F, A);
    H.sq = make_subquotient(X.ring->F, H.pb.dim, B, Z);
    H.dim = H.sq.dim;
    return H;
}

Mat h_induced(const ChainMap& f, int i, long d, const HPiece& S, const HPiece& D) {
    ModuleMap fi = comp_or_zero(f, i);
    Mat P = piece_matrix(fi, S.pb, D.pb);
    std::vector<std::vector<Scalar>> cols;
    for (int r = 0; r < S.dim; ++r)
        cols.push_back(sq_coords(f.src->ring->F, D.sq,
                                 mat_apply(f.src->ring->F, P, S.sq.reps[(size_t)r])));
    return mat_from_cols(D.dim, cols);
}

std::vector<long> h_dims(const BoundedComplex& X, int i, long dlo, long dhi) {
    std::vector<long> out;
    for (long d = dlo; d <= dhi; ++d) out.push_back(cohomology_piece(X, i, d).dim);
    return out;
}

FPModule cohomology_module(const BoundedComplex& X, int i) {
    FPModule Mi = X.term_at(i);
    Submodule K{Mi, identity_map(Mi)};
    if (X.has_diff(i)) K = kernel(X.diff(i));
    if (!X.has_diff(i - 1)) return K.sub;
    // lift each image generator of d^{i-1} through the kernel inclusion
    FPModule prev = X.term_at(i - 1);
    std::vector<ModElem> gens = K.incl.cols;
    for (const auto& r : Mi.rels) gens.push_back(r);
    RModGB G = r_module_gb(*X.ring, Mi.rank(), gens, true);
    std::vector<ModElem> cols;
    for (int g = 0; g < prev.rank(); ++g) {
        auto lift = r_lift(*X.ring, G, X.diff(i - 1).cols[(size_t)g]);
        if (!lift)
            throw std::logic_error("cohomology: image escapes the kernel");
        std::vector<Poly> c(lift->begin(), lift->begin() + K.sub.rank());
        cols.push_back(me_from_vec(c));
    }
    ModuleMap into = make_map(free_module(X.ring, prev.gen_degs), K.sub,
                              std::move(cols), false);
    return cokernel(into).quot;
}

bool quasi_iso(const ChainMap& f, long dlo, long dhi,
               std::vector<QIEntry>* evidence) {
    int lo = std::min(f.src->lo, f.dst->lo);
    int hi = std::max(f.src->hi(), f.dst->hi());
    bool ok = true;
    for (int i = lo; i <= hi; ++i)
        for (long d = dlo; d <= dhi; ++d) {
            HPiece S = cohomology_piece(*f.src, i, d);
            HPiece D = cohomology_piece(*f.dst, i, d);
            bool bij = S.dim == D.dim;
            if (bij && S.dim > 0)
                bij = mat_invertible(f.src->ring->F, h_induced(f, i, d, S, D));
            ok = ok && bij;
            if (evidence) evidence->push_back({i, d, S.dim, D.dim, bij});
        }
    return ok;
}

Adjunction adjunction(const ComplexPtr& X, const ComplexPtr& Y,
                      const ComplexPtr& Z) {
    Adjunction A;
    A.tensor_xy = tensor_complex(X, Y);
    A.lhs = hom_complex(A.tensor_xy.cx, Z);
    A.hom_yz = hom_complex(Y, Z);
    A.rhs = hom_complex(X, A.hom_yz.cx);
    if (A.lhs.cx->lo != A.rhs.cx->lo || A.lhs.cx->hi() != A.rhs.cx->hi())
        throw std::logic_error("adjunction: index ranges disagree");
    const Field& F = X->ring->F;
    Poly unit = poly_const(F, F.from_long(1), X->ring->nvars());
    std::map<int, ModuleMap> comp;
    for (int n = A.lhs.cx->lo; n <= A.lhs.cx->hi(); ++n) {
        const BlockTerm& L = A.lhs.layout_at(n);
        const BlockTerm& R = A.rhs.layout_at(n);
        if (L.sum.rank() != R.sum.rank())
            throw std::logic_error("adjunction: cover sizes disagree");
        std::vector<ModElem> cols((size_t)L.sum.rank());
        std::vector<bool> hit((size_t)R.sum.rank(), false);
        for (size_t b = 0; b < L.blocks.size(); ++b) {
            auto [m, w] = L.blocks[b];
            // decode generator w of (X (x) Y)^m as (block (p,u), inner v)
            const BlockTerm& T = A.tensor_xy.layout_at(m);
            size_t tb = 0;
            while (tb + 1 < T.offsets.size() && T.offsets[tb + 1] <= w) ++tb;
            auto [p, u] = T.blocks[tb];
            int v = w - T.offsets[tb];
            int q = m - p;
            const BlockTerm& W = A.hom_yz.layout_at(p + n);
            int outer = R.offsets[(size_t)R.bidx.at({p, u})];
            int inner = W.offsets[(size_t)W.bidx.at({q, v})];
            for (int g = 0; g < L.mods[b].rank(); ++g) {
                int to = outer + inner + g;
                if (hit[(size_t)to])
                    throw std::logic_error("adjunction: generator hit twice");
                hit[(size_t)to] = true;
                cols[(size_t)(L.offsets[b] + g)] = me_from_poly(to, unit);
            }
        }
        comp.emplace(n, make_map(L.sum, R.sum, std::move(cols), true));
    }
    A.iso = make_chain_map(A.lhs.cx, A.rhs.cx, std::move(comp), true);
    return A;
}

}  // namespace adict
