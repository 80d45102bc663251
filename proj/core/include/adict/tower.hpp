#pragma once

#include "adict/complex.hpp"

namespace adict {

/* Directed and inverse towers of bounded complexes, observed stagewise.
 * Nothing infinite is ever materialized: a tower is stages 1..T plus
 * transition chain maps, and every question about its limit is answered
 * per (cohomological index, internal degree) with an explicit stabilization
 * certificate or an honest "not resolved by stage T" flag. */

struct IndSystem {
    std::vector<ComplexPtr> stages;  // t = 1..T
    std::vector<ChainMap> maps;      // maps[t-1]: stage t -> stage t+1
    int T() const { return (int)stages.size(); }
};

struct ProSystem {
    std::vector<ComplexPtr> stages;  // t = 1..T
    std::vector<ChainMap> maps;      // maps[t-1]: stage t+1 -> stage t
    int T() const { return (int)stages.size(); }
};

IndSystem make_ind_system(std::vector<ComplexPtr> stages,
                          std::vector<ChainMap> maps);
ProSystem make_pro_system(std::vector<ComplexPtr> stages,
                          std::vector<ChainMap> maps);

// module towers, embedded as single-term complexes at a fixed index
IndSystem ind_from_modules(const std::vector<FPModule>& stages,
                           const std::vector<ModuleMap>& maps, int at = 0);
ProSystem pro_from_modules(const std::vector<FPModule>& stages,
                           const std::vector<ModuleMap>& maps, int at = 0);

/* One (index, degree) slice of a tower's cohomology: stage dimensions, the
 * induced transition matrices, and the stabilization verdict.  Stabilization
 * at stage s means every observed transition from stage s on is bijective,
 * witnessed by at least two consecutive bijective transitions; the limit or
 * colimit dimension is then the stable value.  value_dim = -1 means the
 * tower did not resolve within the observed stages. */
struct TowerReport {
    int index = 0;
    long deg = 0;
    std::vector<int> dims;     // per stage
    std::vector<Mat> trans;    // induced maps between consecutive stages
    int stabilized_at = -1;    // 1-based stage; -1 if not observed
    int value_dim = -1;        // colim (ind) / lim (pro) dimension
    // inverse towers only: trailing surjectivity from this stage on
    // certifies a vanishing derived limit
    int surjective_from = -1;
    bool lim1_zero = false;

    bool resolved() const { return stabilized_at > 0; }
};

TowerReport ind_piece(const IndSystem& S, int i, long d);
TowerReport pro_piece(const ProSystem& S, int i, long d);
std::vector<TowerReport> ind_window(const IndSystem& S, int i, long dlo,
                                    long dhi);
std::vector<TowerReport> pro_window(const ProSystem& S, int i, long dlo,
                                    long dhi);

}  // namespace adict
