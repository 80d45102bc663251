#include "adict/cech.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace adict {

static std::vector<std::vector<int>> subsets_of_size(int n, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // lex enumeration by recursion on the smallest member
    std::function<void(int)> rec = [&](int start) {
        if ((int)cur.size() == p) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

static std::string inv_name(const std::vector<int>& S) {
    std::string s = "inv";
    for (int i : S) s += std::to_string(i);
    return s;
}

CechComplex cech_complex(const ElemSeq& a) {
    const RingPtr& base = a.ring;
    const Field& F = base->F;
    const int n = a.n();
    const int nv = base->nvars();
    Poly one = poly_const(F, F.from_long(1), nv);

    CechComplex C;
    C.a = a;
    std::map<std::vector<int>, int> pos;  // subset -> index in its level
    for (int p = 0; p <= n; ++p) {
        std::vector<CechTerm> lvl;
        for (auto& S : subsets_of_size(n, p)) {
            CechTerm t;
            t.subset = S;
            Poly f = one;
            for (int i : S) f = ring_mul(*base, f, a.elems[(size_t)i]);
            if (S.empty())
                t.ring = base;
            else if (f.is_zero())
                t.ring = make_quotient(base, {one}, "");  // collapsed term
            else
                t.ring = localize_ring(base, f, inv_name(S), "");
            std::vector<Poly> images;
            for (int k = 0; k < nv; ++k)
                images.push_back(poly_var(F, k, t.ring->nvars()));
            t.from_base = make_hom(base, t.ring, std::move(images));
            pos.emplace(std::move(S), (int)lvl.size());
            lvl.push_back(std::move(t));
        }
        C.level.push_back(std::move(lvl));
    }

    for (int p = 0; p < n; ++p) {
        for (int s = 0; s < (int)C.level[(size_t)p].size(); ++s) {
            const CechTerm& src = C.level[(size_t)p][(size_t)s];
            for (int i = 0; i < n; ++i) {
                if (std::find(src.subset.begin(), src.subset.end(), i) !=
                    src.subset.end())
                    continue;
                std::vector<int> T = src.subset;
                T.insert(std::upper_bound(T.begin(), T.end(), i), i);
                const CechTerm& dst = C.level[(size_t)(p + 1)][(size_t)pos.at(T)];
                int before = 0;
                for (int j : src.subset)
                    if (j < i) ++before;
                std::vector<Poly> images;
                for (int k = 0; k < nv; ++k)
                    images.push_back(poly_var(F, k, dst.ring->nvars()));
                if (src.ring->nvars() > nv) {
                    // old inverse 1/f_S becomes a_i * 1/f_T, or 0 in a
                    // collapsed target
                    Poly im = poly_zero();
                    if (dst.ring->nvars() > nv) {
                        Poly ai = a.elems[(size_t)i];
                        for (auto& tm : ai.t) tm.exp.push_back(0);
                        im = poly_mul(F, ai, poly_var(F, nv, nv + 1));
                    }
                    images.push_back(std::move(im));
                }
                CechArrow ar;
                ar.p = p;
                ar.src = s;
                ar.dst = pos.at(T);
                ar.sign = before % 2 == 0 ? 1 : -1;
                ar.map = make_hom(src.ring, dst.ring, std::move(images));
                C.arrows.push_back(std::move(ar));
            }
        }
    }
    return C;
}

Mat hom_piece_matrix(const RingHom& h, long d) {
    const Field& F = h.src->F;
    const auto& sm = std_monomials(*h.src, d);
    const auto& dm = std_monomials(*h.dst, d);
    std::map<Exps, int> idx;
    for (size_t i = 0; i < dm.size(); ++i) idx.emplace(dm[i], (int)i);
    Mat M((int)dm.size(), (int)sm.size());
    for (size_t j = 0; j < sm.size(); ++j) {
        Poly im = h.apply(poly_term(F, F.from_long(1), sm[j]));
        for (const auto& tm : im.t) {
            auto it = idx.find(tm.exp);
            if (it == idx.end())
                throw std::logic_error("piece matrix: image leaves the piece");
            M.at(it->second, (int)j) = tm.c;
        }
    }
    return M;
}

std::vector<long> cech_level_dims(const CechComplex& C, int p, long dlo,
                                  long dhi) {
    std::vector<long> out;
    for (long d = dlo; d <= dhi; ++d) {
        long s = 0;
        if (p >= 0 && p <= C.n())
            for (const auto& t : C.level[(size_t)p])
                s += ring_piece_dim(*t.ring, d);
        out.push_back(s);
    }
    return out;
}

// the level-(p+1) x level-p differential on one graded piece
static Mat level_diff_piece(const CechComplex& C, int p, long d) {
    const Field& F = C.a.ring->F;
    auto offsets = [&](int lv) {
        std::vector<int> off = {0};
        for (const auto& t : C.level[(size_t)lv])
            off.push_back(off.back() + (int)std_monomials(*t.ring, d).size());
        return off;
    };
    std::vector<int> so = offsets(p), dof = offsets(p + 1);
    Mat D(dof.back(), so.back());
    for (const auto& ar : C.arrows) {
        if (ar.p != p) continue;
        Mat B = hom_piece_matrix(ar.map, d);
        for (int r = 0; r < B.rows; ++r)
            for (int c = 0; c < B.cols; ++c) {
                Scalar v = B.at(r, c);
                if (ar.sign < 0) v = F.neg(v);
                D.at(dof[(size_t)ar.dst] + r, so[(size_t)ar.src] + c) = v;
            }
    }
    return D;
}

std::vector<long> cech_piece_h_dims(const CechComplex& C, int i, long dlo,
                                    long dhi) {
    const Field& F = C.a.ring->F;
    std::vector<long> out;
    for (long d = dlo; d <= dhi; ++d) {
        if (i < 0 || i > C.n()) {
            out.push_back(0);
            continue;
        }
        long dim = 0;
        for (const auto& t : C.level[(size_t)i])
            dim += (long)std_monomials(*t.ring, d).size();
        long rin = i > 0 ? mat_rank(F, level_diff_piece(C, i - 1, d)) : 0;
        long rout = i < C.n() ? mat_rank(F, level_diff_piece(C, i, d)) : 0;
        out.push_back(dim - rin - rout);
    }
    return out;
}

std::vector<long> cech_h_dims(const ElemSeq& a, int i, long dlo, long dhi) {
    if (!a.ring->is_free())
        throw std::invalid_argument("closed form: base ring must be free");
    long s = 0;
    std::set<int> seen;
    for (const auto& e : a.elems) {
        if (e.t.size() != 1 || total_deg(e.lt().exp) != 1)
            throw std::invalid_argument("closed form: entries must be variables");
        int v = -1;
        for (int k = 0; k < a.ring->nvars(); ++k)
            if (e.lt().exp[(size_t)k] == 1) v = k;
        if (!seen.insert(v).second)
            throw std::invalid_argument("closed form: repeated variable");
        s += a.ring->weights[(size_t)v];
    }
    std::vector<long> out;
    for (long d = dlo; d <= dhi; ++d)
        out.push_back(i == a.n() ? ring_piece_dim(*a.ring, -d - s) : 0);
    return out;
}

}  // namespace adict
