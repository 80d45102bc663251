#include "adict/module.hpp"

#include <algorithm>

namespace adict {

RModGB r_module_gb(const RingSpec& R, int rank, const std::vector<ModElem>& gens,
                   bool track) {
    RModGB G;
    G.rank = rank;
    G.real = (int)gens.size();
    G.all = gens;
    for (int c = 0; c < rank; ++c)
        for (const auto& j : R.gb)
            G.all.push_back(me_from_poly(c, j));
    G.gb = module_gb(R.F, R.nvars(), rank, G.all, track);
    return G;
}

ModElem r_nf(const RingSpec& R, const RModGB& G, const ModElem& v) {
    return gb_reduce(R.F, R.nvars(), v, G.gb.g);
}

bool r_member(const RingSpec& R, const RModGB& G, const ModElem& v) {
    return r_nf(R, G, v).is_zero();
}

std::optional<std::vector<Poly>> r_lift(const RingSpec& R, const RModGB& G,
                                        const ModElem& v) {
    if (!G.gb.tracked) throw std::logic_error("r_lift: basis not tracked");
    ModElem combo;
    ModElem rem = gb_reduce(R.F, R.nvars(), v, G.gb.g, &combo);
    if (!rem.is_zero()) return std::nullopt;
    ModElem lifted;  // combination over the input list `all`
    for (const auto& tm : combo.t)
        lifted = me_add(R.F, lifted,
                        me_mul_term(R.F, tm.c, tm.exp, G.gb.expr[tm.comp]));
    std::vector<Poly> out((size_t)G.real);
    for (const auto& tm : lifted.t)
        if (tm.comp < G.real)
            out[tm.comp] = poly_add(R.F, out[tm.comp],
                                    poly_term(R.F, tm.c, tm.exp));
    for (auto& p : out) p = ring_nf(R, p);
    return out;
}

static ModElem me_ring_nf(const RingSpec& R, int rank, const ModElem& v) {
    std::vector<Poly> comps = me_to_vec(v, rank, R.nvars());
    for (auto& p : comps) p = ring_nf(R, p);
    return me_from_vec(comps);
}

static ModElem me_restrict(const ModElem& v, int below) {
    ModElem r;
    for (const auto& tm : v.t)
        if (tm.comp < below) r.t.push_back(tm);
    return r;
}

std::vector<ModElem> r_syzygies(const RingSpec& R, int rank,
                                const std::vector<ModElem>& gens) {
    RModGB G = r_module_gb(R, rank, gens, true);
    std::vector<ModElem> out;
    for (const auto& s : G.gb.syz) {
        ModElem a = me_ring_nf(R, G.real, me_restrict(s, G.real));
        if (a.is_zero()) continue;
        out.push_back(me_scale(R.F, R.F.inv(a.lt().c), a));  // monic
    }
    return out;
}

static std::vector<ModElem> minimalize_ctx(const RingSpec& R, int rank,
                                           std::vector<ModElem> gens,
                                           const std::vector<ModElem>* context) {
    for (size_t i = 0; i < gens.size();) {
        std::vector<ModElem> others;
        for (size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        if (context)
            others.insert(others.end(), context->begin(), context->end());
        RModGB G = r_module_gb(R, rank, others, false);
        if (r_member(R, G, gens[i]))
            gens.erase(gens.begin() + (long)i);
        else
            ++i;
    }
    return gens;
}

std::vector<ModElem> minimalize_gens(const RingSpec& R, int rank,
                                     std::vector<ModElem> gens) {
    return minimalize_ctx(R, rank, std::move(gens), nullptr);
}

// --- modules ---------------------------------------------------------------

const RModGB& rel_gb(const FPModule& M) {
    if (!M.rel_gb_cache)
        M.rel_gb_cache = std::make_shared<RModGB>(
            r_module_gb(*M.ring, M.rank(), M.rels, true));
    return *M.rel_gb_cache;
}

std::optional<long> elem_degree(const FPModule& M, const ModElem& v) {
    std::optional<long> deg;
    for (const auto& tm : v.t) {
        long d = weighted_deg(tm.exp, M.ring->weights) + M.gen_degs[tm.comp];
        if (deg && *deg != d)
            throw std::logic_error("elem_degree: inhomogeneous element");
        deg = d;
    }
    return deg;
}

FPModule free_module(RingPtr R, std::vector<long> gen_degs) {
    FPModule M;
    M.ring = std::move(R);
    M.gen_degs = std::move(gen_degs);
    return M;
}

FPModule make_module(RingPtr R, std::vector<long> gen_degs,
                     std::vector<ModElem> rels) {
    FPModule M;
    M.ring = std::move(R);
    M.gen_degs = std::move(gen_degs);
    for (auto& c : rels) {
        ModElem v = me_ring_nf(*M.ring, M.rank(), c);
        if (v.is_zero()) continue;
        for (const auto& tm : v.t)
            if (tm.comp < 0 || tm.comp >= M.rank())
                throw std::invalid_argument("make_module: relation component range");
        auto d = elem_degree(M, v);  // throws on inhomogeneity
        M.rels.push_back(std::move(v));
        M.rel_degs.push_back(*d);
    }
    return M;
}

FPModule zero_module(RingPtr R) { return free_module(std::move(R), {}); }

bool is_zero_module(const FPModule& M) {
    const RModGB& G = rel_gb(M);
    for (int i = 0; i < M.rank(); ++i) {
        ModElem e;
        e.t.push_back({i, Exps(M.ring->nvars(), 0), M.ring->F.from_long(1)});
        if (!r_member(*M.ring, G, e)) return false;
    }
    return true;
}

bool module_equal(const FPModule& A, const FPModule& B) {
    if (!ring_equal(*A.ring, *B.ring) || A.gen_degs != B.gen_degs) return false;
    if (A.rels.size() != B.rels.size()) return false;
    for (size_t i = 0; i < A.rels.size(); ++i)
        if (!(A.rels[i] == B.rels[i])) return false;
    return true;
}

FPModule twist(const FPModule& M, long k) {
    FPModule T = M;
    T.rel_gb_cache.reset();
    for (auto& d : T.gen_degs) d -= k;
    for (auto& d : T.rel_degs) d -= k;
    return T;
}

DirectSum direct_sum(RingPtr R, const std::vector<const FPModule*>& blocks) {
    DirectSum S;
    std::vector<long> degs;
    std::vector<ModElem> rels;
    int off = 0;
    for (const FPModule* B : blocks) {
        if (!ring_equal(*R, *B->ring))
            throw std::invalid_argument("direct_sum: ring mismatch");
        S.offsets.push_back(off);
        degs.insert(degs.end(), B->gen_degs.begin(), B->gen_degs.end());
        for (const auto& c : B->rels) {
            ModElem v = c;
            for (auto& tm : v.t) tm.comp += off;
            rels.push_back(std::move(v));
        }
        off += B->rank();
    }
    S.sum = make_module(std::move(R), std::move(degs), std::move(rels));
    return S;
}

ModElem ds_inject(const DirectSum& S, int block, const ModElem& v) {
    ModElem r = v;
    for (auto& tm : r.t) tm.comp += S.offsets[block];
    return r;
}

ModElem ds_project(const DirectSum& S, int block, int block_rank, const ModElem& v) {
    int off = S.offsets[block];
    ModElem r;
    for (const auto& tm : v.t)
        if (tm.comp >= off && tm.comp < off + block_rank) {
            ModTerm t2 = tm;
            t2.comp -= off;
            r.t.push_back(t2);
        }
    return r;
}

// --- maps ------------------------------------------------------------------

ModElem map_apply(const ModuleMap& f, const ModElem& v) {
    ModElem acc;
    for (const auto& tm : v.t)
        acc = me_add(f.dst.ring->F, acc,
                     me_mul_term(f.dst.ring->F, tm.c, tm.exp, f.cols[tm.comp]));
    return me_ring_nf(*f.dst.ring, f.dst.rank(), acc);
}

void certify_map(const ModuleMap& f) {
    if ((int)f.cols.size() != f.src.rank())
        throw std::invalid_argument("map: column count mismatch");
    if (!ring_equal(*f.src.ring, *f.dst.ring))
        throw std::invalid_argument("map: ring mismatch");
    for (int j = 0; j < f.src.rank(); ++j) {
        auto d = elem_degree(f.dst, f.cols[j]);
        if (d && *d != f.src.gen_degs[j])
            throw std::invalid_argument("map: column " + std::to_string(j) +
                                        " has degree " + std::to_string(*d) +
                                        ", generator has " +
                                        std::to_string(f.src.gen_degs[j]));
    }
    const RModGB& G = rel_gb(f.dst);
    for (const auto& r : f.src.rels) {
        ModElem img = map_apply(f, r);
        if (!r_member(*f.dst.ring, G, img))
            throw std::invalid_argument("map: source relation not sent into "
                                        "destination relations");
    }
}

ModuleMap make_map(FPModule src, FPModule dst, std::vector<ModElem> cols,
                   bool certify) {
    ModuleMap f{std::move(src), std::move(dst), {}};
    f.cols.reserve(cols.size());
    for (auto& c : cols)
        f.cols.push_back(me_ring_nf(*f.dst.ring, f.dst.rank(), c));
    if (certify) certify_map(f);
    return f;
}

ModuleMap identity_map(const FPModule& M) {
    std::vector<ModElem> cols;
    for (int i = 0; i < M.rank(); ++i) {
        ModElem e;
        e.t.push_back({i, Exps(M.ring->nvars(), 0), M.ring->F.from_long(1)});
        cols.push_back(std::move(e));
    }
    return make_map(M, M, std::move(cols), false);
}

ModuleMap zero_map(FPModule src, FPModule dst) {
    std::vector<ModElem> cols((size_t)src.rank());
    return make_map(std::move(src), std::move(dst), std::move(cols), false);
}

ModuleMap mult_map(const FPModule& src, const FPModule& dst, const Poly& p) {
    std::vector<ModElem> cols;
    for (int i = 0; i < src.rank(); ++i) cols.push_back(me_from_poly(i, p));
    return make_map(src, dst, std::move(cols), true);
}

ModuleMap map_compose(const ModuleMap& g, const ModuleMap& f) {
    std::vector<ModElem> cols;
    for (const auto& c : f.cols) cols.push_back(map_apply(g, c));
    return make_map(f.src, g.dst, std::move(cols), false);
}

ModuleMap map_add(const ModuleMap& f, const ModuleMap& g) {
    std::vector<ModElem> cols;
    for (size_t j = 0; j < f.cols.size(); ++j)
        cols.push_back(me_add(f.dst.ring->F, f.cols[j], g.cols[j]));
    return make_map(f.src, f.dst, std::move(cols), false);
}

ModuleMap map_scale(const Scalar& c, const ModuleMap& f) {
    std::vector<ModElem> cols;
    for (const auto& col : f.cols)
        cols.push_back(me_scale(f.dst.ring->F, c, col));
    return make_map(f.src, f.dst, std::move(cols), false);
}

ModuleMap map_twist(const ModuleMap& f, long k) {
    return make_map(twist(f.src, k), twist(f.dst, k), f.cols, false);
}

bool map_is_zero(const ModuleMap& f) {
    const RModGB& G = rel_gb(f.dst);
    for (const auto& c : f.cols)
        if (!r_member(*f.dst.ring, G, c)) return false;
    return true;
}

Submodule kernel(const ModuleMap& f) {
    const RingSpec& R = *f.dst.ring;
    std::vector<ModElem> list = f.cols;
    list.insert(list.end(), f.dst.rels.begin(), f.dst.rels.end());
    std::vector<ModElem> syz = r_syzygies(R, f.dst.rank(), list);
    std::vector<ModElem> gens;
    for (const auto& s : syz) {
        ModElem a = me_restrict(s, f.src.rank());
        if (!a.is_zero()) gens.push_back(std::move(a));
    }
    gens = minimalize_ctx(R, f.src.rank(), std::move(gens), &f.src.rels);
    std::vector<long> degs;
    for (const auto& g : gens) degs.push_back(*elem_degree(f.src, g));
    // relations of the kernel: combinations of the generators lying in the
    // span of the ambient module's relations
    std::vector<ModElem> list2 = gens;
    list2.insert(list2.end(), f.src.rels.begin(), f.src.rels.end());
    std::vector<ModElem> syz2 = r_syzygies(R, f.src.rank(), list2);
    std::vector<ModElem> krels;
    for (const auto& s : syz2) {
        ModElem a = me_restrict(s, (int)gens.size());
        if (!a.is_zero()) krels.push_back(std::move(a));
    }
    Submodule out;
    out.sub = make_module(f.src.ring, std::move(degs), std::move(krels));
    out.incl = make_map(out.sub, f.src, std::move(gens), true);
    return out;
}

Quotient cokernel(const ModuleMap& f) {
    std::vector<ModElem> rels = f.dst.rels;
    rels.insert(rels.end(), f.cols.begin(), f.cols.end());
    Quotient q;
    q.quot = make_module(f.dst.ring, f.dst.gen_degs, std::move(rels));
    q.proj = identity_map(f.dst);
    q.proj.dst = q.quot;
    return q;
}

// --- free resolutions ------------------------------------------------------

Resolution free_resolution(const FPModule& M, int length) {
    Resolution res;
    res.F.push_back(free_module(M.ring, M.gen_degs));
    {
        std::vector<ModElem> cols;
        for (int i = 0; i < M.rank(); ++i) {
            ModElem e;
            e.t.push_back({i, Exps(M.ring->nvars(), 0), M.ring->F.from_long(1)});
            cols.push_back(std::move(e));
        }
        res.aug = make_map(res.F[0], M, std::move(cols), false);
    }
    std::vector<ModElem> cur = minimalize_gens(*M.ring, M.rank(), M.rels);
    for (int k = 0; k < length; ++k) {
        if (cur.empty()) {
            res.complete = true;
            break;
        }
        std::vector<long> degs;
        for (const auto& c : cur) degs.push_back(*elem_degree(res.F[k], c));
        res.F.push_back(free_module(M.ring, degs));
        res.d.push_back(make_map(res.F[k + 1], res.F[k], cur, false));
        cur = minimalize_gens(*M.ring, res.F[k].rank(),
                              r_syzygies(*M.ring, res.F[k].rank(), cur));
    }
    if (cur.empty()) res.complete = true;
    return res;
}

// --- graded pieces ---------------------------------------------------------

PieceBasis module_piece(const FPModule& M, long deg) {
    const RingSpec& R = *M.ring;
    PieceBasis P;
    P.deg = deg;
    for (int i = 0; i < M.rank(); ++i)
        for (const auto& m : std_monomials(R, deg - M.gen_degs[i])) {
            P.index[{i, m}] = (int)P.cover.size();
            P.cover.push_back({i, m});
        }
    int n = (int)P.cover.size();
    std::vector<std::vector<Scalar>> denom;
    for (size_t j = 0; j < M.rels.size(); ++j)
        for (const auto& m : std_monomials(R, deg - M.rel_degs[j])) {
            ModElem v = me_ring_nf(R, M.rank(),
                                   me_mul_term(R.F, R.F.from_long(1), m, M.rels[j]));
            std::vector<Scalar> col((size_t)n, Scalar(0));
            for (const auto& tm : v.t) {
                auto it = P.index.find({tm.comp, tm.exp});
                if (it == P.index.end())
                    throw std::logic_error("module_piece: monomial outside basis");
                col[(size_t)it->second] = tm.c;
            }
            denom.push_back(std::move(col));
        }
    P.sq = make_subquotient(R.F, n, mat_from_cols(n, denom), mat_identity(n));
    P.dim = P.sq.dim;
    return P;
}

std::vector<Scalar> elem_coords(const FPModule& M, const PieceBasis& P,
                                const ModElem& v) {
    std::vector<Scalar> cov((size_t)P.cover.size(), Scalar(0));
    for (const auto& tm : v.t) {
        auto it = P.index.find({tm.comp, tm.exp});
        if (it == P.index.end())
            throw std::logic_error("elem_coords: element not in normal form or "
                                   "wrong degree");
        cov[(size_t)it->second] = tm.c;
    }
    return sq_coords(M.ring->F, P.sq, std::move(cov));
}

ModElem coords_elem(const FPModule& M, const PieceBasis& P,
                    const std::vector<Scalar>& v) {
    std::vector<ModTerm> terms;
    for (size_t t = 0; t < v.size(); ++t)
        if (!is_zero(v[t]))
            terms.push_back({P.cover[t].first, P.cover[t].second, v[t]});
    return me_collect(M.ring->F, std::move(terms));
}

ModElem piece_rep_elem(const FPModule& M, const PieceBasis& P, int r) {
    return coords_elem(M, P, P.sq.reps[(size_t)r]);
}

Mat piece_matrix(const ModuleMap& f, const PieceBasis& Psrc, const PieceBasis& Pdst) {
    std::vector<std::vector<Scalar>> cols;
    for (int r = 0; r < Psrc.dim; ++r) {
        ModElem img = map_apply(f, piece_rep_elem(f.src, Psrc, r));
        cols.push_back(elem_coords(f.dst, Pdst, img));
    }
    return mat_from_cols(Pdst.dim, cols);
}

std::vector<long> graded_dims(const FPModule& M, long lo, long hi) {
    std::vector<long> dims;
    for (long d = lo; d <= hi; ++d) dims.push_back(module_piece(M, d).dim);
    return dims;
}

}  // namespace adict
