#include "adict/tower.hpp"

namespace adict {

static void check_shape(size_t stages, size_t maps) {
    if (stages == 0) throw std::invalid_argument("tower: no stages");
    if (maps + 1 != stages)
        throw std::invalid_argument("tower: need one transition per gap");
}

IndSystem make_ind_system(std::vector<ComplexPtr> stages,
                          std::vector<ChainMap> maps) {
    check_shape(stages.size(), maps.size());
    for (size_t t = 0; t + 1 < stages.size(); ++t)
        if (maps[t].src != stages[t] || maps[t].dst != stages[t + 1])
            throw std::invalid_argument("tower: transition endpoints mismatch");
    return {std::move(stages), std::move(maps)};
}

ProSystem make_pro_system(std::vector<ComplexPtr> stages,
                          std::vector<ChainMap> maps) {
    check_shape(stages.size(), maps.size());
    for (size_t t = 0; t + 1 < stages.size(); ++t)
        if (maps[t].src != stages[t + 1] || maps[t].dst != stages[t])
            throw std::invalid_argument("tower: transition endpoints mismatch");
    return {std::move(stages), std::move(maps)};
}

IndSystem ind_from_modules(const std::vector<FPModule>& stages,
                           const std::vector<ModuleMap>& maps, int at) {
    std::vector<ComplexPtr> cx;
    for (const auto& M : stages) cx.push_back(single_term(M, at));
    std::vector<ChainMap> cm;
    for (size_t t = 0; t < maps.size(); ++t)
        cm.push_back(make_chain_map(cx[t], cx[t + 1], {{at, maps[t]}}));
    return make_ind_system(std::move(cx), std::move(cm));
}

ProSystem pro_from_modules(const std::vector<FPModule>& stages,
                           const std::vector<ModuleMap>& maps, int at) {
    std::vector<ComplexPtr> cx;
    for (const auto& M : stages) cx.push_back(single_term(M, at));
    std::vector<ChainMap> cm;
    for (size_t t = 0; t < maps.size(); ++t)
        cm.push_back(make_chain_map(cx[t + 1], cx[t], {{at, maps[t]}}));
    return make_pro_system(std::move(cx), std::move(cm));
}

// trailing-run analysis shared by both directions; pro = transitions reversed
static void analyze(TowerReport& R, const Field& F, bool pro) {
    int T = (int)R.dims.size();
    std::vector<bool> bij, surj;
    for (int t = 0; t + 1 < T; ++t) {
        const Mat& M = R.trans[(size_t)t];
        long rk = mat_rank(F, M);
        bool b = M.rows == M.cols && rk == M.rows;
        bool s = rk == M.rows;  // onto the target
        bij.push_back(b);
        surj.push_back(s);
    }
    int s = T;  // 1-based stage from which on all transitions are bijective
    while (s >= 2 && bij[(size_t)(s - 2)]) --s;
    if (T - s >= 2) {
        R.stabilized_at = s;
        R.value_dim = R.dims.back();
    }
    if (pro) {
        int u = T;
        while (u >= 2 && surj[(size_t)(u - 2)]) --u;
        if (u < T) {
            R.surjective_from = u;
            R.lim1_zero = true;
        }
    }
}

TowerReport ind_piece(const IndSystem& S, int i, long d) {
    TowerReport R;
    R.index = i;
    R.deg = d;
    std::vector<HPiece> H;
    for (const auto& X : S.stages) {
        H.push_back(cohomology_piece(*X, i, d));
        R.dims.push_back(H.back().dim);
    }
    for (int t = 0; t + 1 < S.T(); ++t)
        R.trans.push_back(
            h_induced(S.maps[(size_t)t], i, d, H[(size_t)t], H[(size_t)t + 1]));
    analyze(R, S.stages[0]->ring->F, false);
    return R;
}

TowerReport pro_piece(const ProSystem& S, int i, long d) {
    TowerReport R;
    R.index = i;
    R.deg = d;
    std::vector<HPiece> H;
    for (const auto& X : S.stages) {
        H.push_back(cohomology_piece(*X, i, d));
        R.dims.push_back(H.back().dim);
    }
    // trans[t]: stage t+2 -> stage t+1 (the inverse-system structure maps)
    for (int t = 0; t + 1 < S.T(); ++t)
        R.trans.push_back(
            h_induced(S.maps[(size_t)t], i, d, H[(size_t)t + 1], H[(size_t)t]));
    analyze(R, S.stages[0]->ring->F, true);
    return R;
}

std::vector<TowerReport> ind_window(const IndSystem& S, int i, long dlo,
                                    long dhi) {
    std::vector<TowerReport> out;
    for (long d = dlo; d <= dhi; ++d) out.push_back(ind_piece(S, i, d));
    return out;
}

std::vector<TowerReport> pro_window(const ProSystem& S, int i, long dlo,
                                    long dhi) {
    std::vector<TowerReport> out;
    for (long d = dlo; d <= dhi; ++d) out.push_back(pro_piece(S, i, d));
    return out;
}

}  // namespace adict
