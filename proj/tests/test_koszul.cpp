#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adict/koszul.hpp"

using namespace adict;

static ModElem col(const RingPtr& R, const std::vector<std::string>& entries) {
    std::vector<Poly> v;
    for (const auto& e : entries) v.push_back(parse_poly(R->F, R->vars, e));
    return me_from_vec(v);
}

TEST_CASE("element sequences and ideal powers") {
    Field Q;
    auto A = make_poly_ring(Q, {"x", "y"}, {1, 1}, "");

    ElemSeq a = parse_sequence(A, {"x", "y"});
    CHECK(a.n() == 2);
    CHECK(a.degs == std::vector<long>{1, 1});
    CHECK_FALSE(a.ungraded);

    CHECK_THROWS_AS(parse_sequence(A, {"x + y^2"}), std::invalid_argument);
    CHECK_THROWS_AS(make_sequence(A, {}), std::invalid_argument);

    ElemSeq z = parse_sequence(A, {"0", "x"});
    CHECK(z.degs == std::vector<long>{0, 1});
    CHECK_FALSE(z.ungraded);  // a zero entry carries no degree constraint

    ElemSeq u = parse_sequence(A, {"2"});
    CHECK(u.ungraded);  // nonzero degree-0 entry

    CHECK(power_products(a, 1).size() == 2);
    CHECK(power_products(a, 2).size() == 4);
    CHECK_THROWS_AS(power_products(a, 0), std::invalid_argument);

    // A/(x,y)^2 has monomial basis 1, x, y
    FPModule M = quotient_by_power(a, 2);
    CHECK(graded_dims(M, 0, 3) == std::vector<long>{1, 2, 0, 0});
    CHECK(graded_dims(quotient_by_power(a, 1), 0, 2) ==
          std::vector<long>{1, 0, 0});
}

TEST_CASE("finite Koszul complexes") {
    Field Q;
    auto A1 = make_poly_ring(Q, {"x"}, {1}, "");
    auto A2 = make_poly_ring(Q, {"x", "y"}, {1, 1}, "");

    // one regular element: cohomology concentrated on top
    ComplexPtr K = koszul(parse_sequence(A1, {"x"}));
    CHECK(K->lo == 0);
    CHECK(K->hi() == 1);
    CHECK(h_dims(*K, 0, -1, 2) == std::vector<long>{0, 0, 0, 0});
    CHECK(h_dims(*K, 1, -1, 1) == std::vector<long>{1, 0, 0});

    // the zero element: zero differential, both cohomologies the full ring
    ComplexPtr K0 = koszul(parse_sequence(A1, {"0"}));
    CHECK(h_dims(*K0, 0, 0, 2) == std::vector<long>{1, 1, 1});
    CHECK(h_dims(*K0, 1, 0, 2) == std::vector<long>{1, 1, 1});

    // a regular pair: ranks (1,2,1), residue field on top
    ComplexPtr Kxy = koszul(parse_sequence(A2, {"x", "y"}));
    CHECK(Kxy->term_at(0).rank() == 1);
    CHECK(Kxy->term_at(1).rank() == 2);
    CHECK(Kxy->term_at(2).rank() == 1);
    CHECK(h_dims(*Kxy, 0, -2, 2) == std::vector<long>{0, 0, 0, 0, 0});
    CHECK(h_dims(*Kxy, 1, -2, 2) == std::vector<long>{0, 0, 0, 0, 0});
    CHECK(h_dims(*Kxy, 2, -2, 0) == std::vector<long>{1, 0, 0});

    // mixed zero entry keeps the honest two-term factor
    ComplexPtr Kz = koszul(parse_sequence(A1, {"x", "0"}));
    CHECK(Kz->term_at(1).rank() == 2);
    CHECK(h_dims(*Kz, 0, 0, 2) == std::vector<long>{0, 0, 0});
    CHECK(h_dims(*Kz, 2, -1, 1) == std::vector<long>{1, 0, 0});
}

TEST_CASE("stable Koszul tower") {
    Field Q;
    auto A = make_poly_ring(Q, {"x"}, {1}, "");
    ElemSeq ax = parse_sequence(A, {"x"});

    KoszulTower kt = stable_koszul_tower(ax, 5);
    CHECK(kt.T() == 5);
    // stage t is A ->(x^t) A(t)
    CHECK(kt.sys.stages[2]->term_at(1).gen_degs == std::vector<long>{-3});

    // colim H^1 is the tail of the Laurent ring: one dimension in each
    // negative degree, nothing in degree >= 0
    for (long d = -3; d <= -1; ++d) {
        TowerReport r = ind_piece(kt.sys, 1, d);
        CHECK(r.resolved());
        CHECK(r.value_dim == 1);
    }
    CHECK(ind_piece(kt.sys, 1, 0).value_dim == 0);
    CHECK(ind_piece(kt.sys, 0, -2).value_dim == 0);  // H^0 vanishes stagewise

    // dual route: stage t agrees with the reindexed dual of the Koszul
    // complex on the t-th powers, up to the determinant twist of the duality
    // (here t * (deg x + deg y) = 4)
    auto A2 = make_poly_ring(Q, {"x", "y"}, {1, 1}, "");
    ComplexPtr Kpow = koszul(parse_sequence(A2, {"x^2", "y^2"}));
    ComplexPtr D = shift_complex(hom_complex(Kpow, unit_complex(A2)).cx, -2);
    CHECK(D->lo == 0);
    CHECK(D->hi() == 2);
    KoszulTower kt2 = stable_koszul_tower(parse_sequence(A2, {"x", "y"}), 2);
    ComplexPtr S2 = kt2.sys.stages[1];
    for (int i = 0; i <= 2; ++i)
        CHECK(h_dims(*D, i, -1, 4) == h_dims(*S2, i, -5, 0));
    CHECK(h_dims(*D, 2, 0, 2) == std::vector<long>{1, 2, 1});

    // unit entry: every stage acyclic
    KoszulTower ku = stable_koszul_tower(parse_sequence(A, {"1"}), 3);
    for (int t = 0; t < 3; ++t) {
        CHECK(h_dims(*ku.sys.stages[(size_t)t], 0, -1, 2) ==
              std::vector<long>{0, 0, 0, 0});
        CHECK(h_dims(*ku.sys.stages[(size_t)t], 1, -1, 2) ==
              std::vector<long>{0, 0, 0, 0});
    }

    // zero entry contributes the ring itself: same tower as without it
    KoszulTower kz = stable_koszul_tower(parse_sequence(A, {"x", "0"}), 3);
    CHECK(kz.sys.stages[0]->hi() == 1);  // not a three-term complex
    CHECK(kz.sys.stages[0]->term_at(1).rank() == 1);
    CHECK(ind_piece(kz.sys, 1, -1).value_dim == 1);
    CHECK(ind_piece(kz.sys, 2, -2).value_dim == 0);
}

TEST_CASE("telescopes") {
    Field Q;
    auto A = make_poly_ring(Q, {"x"}, {1}, "");
    ElemSeq ax = parse_sequence(A, {"x"});

    // stage 1 on one element: the quoted differential on delta_0, delta_1
    ComplexPtr T1 = telescope(ax, 1);
    CHECK(T1->term_at(0).rank() == 2);
    CHECK(T1->term_at(1).rank() == 2);
    CHECK(T1->diff(0).cols[0] == col(A, {"1", "0"}));
    CHECK(T1->diff(0).cols[1] == col(A, {"1", "-x"}));
    CHECK(h_dims(*T1, 0, -2, 2) == std::vector<long>{0, 0, 0, 0, 0});
    CHECK(h_dims(*T1, 1, -2, 0) == std::vector<long>{0, 1, 0});  // A/(x)

    // stage 0 is the identity on one generator: acyclic
    ComplexPtr T0 = telescope(ax, 0);
    CHECK(T0->term_at(0).rank() == 1);
    CHECK(h_dims(*T0, 0, -2, 2) == std::vector<long>{0, 0, 0, 0, 0});
    CHECK(h_dims(*T0, 1, -2, 2) == std::vector<long>{0, 0, 0, 0, 0});
    CHECK_THROWS_AS(telescope(ax, -1), std::invalid_argument);

    // grading: deg delta_i = -i * deg(a) in index 1, shifted up in index 0
    ComplexPtr T2 = telescope(ax, 2);
    CHECK(T2->term_at(1).gen_degs == std::vector<long>{0, -1, -2});
    CHECK(T2->term_at(0).gen_degs == std::vector<long>{0, 0, -1});

    // two elements: rank count of the tensor square
    auto A2 = make_poly_ring(Q, {"x", "y"}, {1, 1}, "");
    for (int j = 1; j <= 2; ++j) {
        ComplexPtr T = telescope(parse_sequence(A2, {"x", "y"}), j);
        int r = (j + 1) * (j + 1);
        CHECK(T->term_at(0).rank() == r);
        CHECK(T->term_at(1).rank() == 2 * r);
        CHECK(T->term_at(2).rank() == r);
    }

    // tower of inclusions: H^1 stabilizes degreewise to the torsion values
    TelescopeTower tt = telescope_tower(ax, 5);
    CHECK(tt.J() == 5);
    for (long d = -3; d <= -1; ++d) {
        TowerReport r = ind_piece(tt.sys, 1, d);
        CHECK(r.resolved());
        CHECK(r.value_dim == 1);
    }
    CHECK(ind_piece(tt.sys, 1, 0).value_dim == 0);
    CHECK(ind_piece(tt.sys, 0, -1).value_dim == 0);

    // the zero element: telescope still well-defined; index-0 cohomology is
    // the whole ring (torsion along (0) is the identity), stably in j
    TelescopeTower tz = telescope_tower(parse_sequence(A, {"0"}), 3);
    CHECK(ind_piece(tz.sys, 0, 0).value_dim == 1);
    CHECK(ind_piece(tz.sys, 0, 2).value_dim == 1);
    // index-1 junk does not stabilize through inclusions; report stays honest
    CHECK_FALSE(ind_piece(tz.sys, 1, 0).resolved());
}

TEST_CASE("comparison maps between telescope and stable stages") {
    Field Q;
    auto A = make_poly_ring(Q, {"x"}, {1}, "");
    ElemSeq ax = parse_sequence(A, {"x"});
    TelescopeTower tt = telescope_tower(ax, 3);
    KoszulTower kt = stable_koszul_tower(ax, 3);

    // w is a certified chain map at every stage, compatible with the two
    // towers' transitions, and a quasi-isomorphism for a regular element
    std::vector<ChainMap> w;
    for (int j = 1; j <= 3; ++j) w.push_back(w_map(tt, kt, j));
    for (int j = 1; j <= 2; ++j) {
        ChainMap viaTel = compose_chain_maps(w[(size_t)j], tt.sys.maps[(size_t)(j - 1)]);
        ChainMap viaKos = compose_chain_maps(kt.sys.maps[(size_t)(j - 1)], w[(size_t)(j - 1)]);
        CHECK(chain_map_equal(viaTel, viaKos));
    }
    CHECK(quasi_iso(w[2], -4, 2));

    // explicit index-1 action at stage 2: delta_i -> x^(2-i)
    CHECK(w[1].at(1).cols[0] == col(A, {"x^2"}));
    CHECK(w[1].at(1).cols[1] == col(A, {"x"}));
    CHECK(w[1].at(1).cols[2] == col(A, {"1"}));

    // two-element case stays a stagewise quasi-isomorphism
    auto A2 = make_poly_ring(Q, {"x", "y"}, {1, 1}, "");
    ElemSeq axy = parse_sequence(A2, {"x", "y"});
    TelescopeTower tt2 = telescope_tower(axy, 2);
    KoszulTower kt2 = stable_koszul_tower(axy, 2);
    CHECK(quasi_iso(w_map(tt2, kt2, 2), -5, 1));

    // u collapses onto the coefficient of the all-delta_0 generator
    ComplexPtr unit = unit_complex(A);
    std::vector<ChainMap> u;
    for (int j = 1; j <= 3; ++j) u.push_back(u_map(tt, j, unit));
    CHECK(u[0].at(0).cols[0] == col(A, {"1"}));
    CHECK(u[0].at(0).cols[1].is_zero());
    for (int j = 1; j <= 2; ++j)
        CHECK(chain_map_equal(
            compose_chain_maps(u[(size_t)j], tt.sys.maps[(size_t)(j - 1)]),
            u[(size_t)(j - 1)]));

    // a zero entry collapses to the one-term stable factor; w then matches
    // cohomology in indices 0 and 1, while the telescope's top index carries
    // transient classes that only die along the tower
    TelescopeTower tz = telescope_tower(parse_sequence(A, {"0", "x"}), 2);
    KoszulTower kz = stable_koszul_tower(parse_sequence(A, {"0", "x"}), 2);
    ChainMap wz = w_map(tz, kz, 2);
    CHECK(wz.dst->term_at(2).rank() == 0);
    std::vector<QIEntry> ev;
    CHECK_FALSE(quasi_iso(wz, -3, 1, &ev));
    bool low_ok = true, junk_seen = false;
    for (const auto& e : ev) {
        if (e.index <= 1)
            low_ok = low_ok && e.bijective;
        else if (!e.bijective)
            junk_seen = true;
    }
    CHECK(low_ok);
    CHECK(junk_seen);
}

TEST_CASE("generator robustness of the stable tower") {
    Field Q;
    auto A = make_poly_ring(Q, {"x"}, {1}, "");

    // (x) vs (x, x^2): same radical, same colimit cohomology
    KoszulTower k1 = stable_koszul_tower(parse_sequence(A, {"x"}), 5);
    KoszulTower k2 = stable_koszul_tower(parse_sequence(A, {"x", "x^2"}), 5);
    for (long d = -3; d <= 0; ++d) {
        TowerReport r1 = ind_piece(k1.sys, 1, d);
        TowerReport r2 = ind_piece(k2.sys, 1, d);
        CHECK(r1.resolved());
        CHECK(r2.resolved());
        CHECK(r1.value_dim == r2.value_dim);
    }
    for (long d = -3; d <= -1; ++d)
        CHECK(ind_piece(k2.sys, 2, d).value_dim == 0);  // surplus index dies

    // (x,y) vs (x+y, y) over two variables: both compute the plane's local
    // cohomology at the origin, dims 1,2,3 in degrees -2,-3,-4
    auto A2 = make_poly_ring(Q, {"x", "y"}, {1, 1}, "");
    KoszulTower ka = stable_koszul_tower(parse_sequence(A2, {"x", "y"}), 5);
    KoszulTower kb = stable_koszul_tower(parse_sequence(A2, {"x+y", "y"}), 5);
    std::vector<int> expect = {1, 2, 3};
    for (long d = -2; d >= -4; --d) {
        TowerReport ra = ind_piece(ka.sys, 2, d);
        TowerReport rb = ind_piece(kb.sys, 2, d);
        CHECK(ra.resolved());
        CHECK(ra.value_dim == expect[(size_t)(-d - 2)]);
        CHECK(rb.resolved());
        CHECK(rb.value_dim == expect[(size_t)(-d - 2)]);
        CHECK(ind_piece(ka.sys, 1, d).value_dim == 0);
        CHECK(ind_piece(kb.sys, 1, d).value_dim == 0);
    }
}

TEST_CASE("telescopes commute with base change") {
    Field Q;
    auto A = make_poly_ring(Q, {"x", "y"}, {1, 1}, "");
    auto B = make_quotient(A, {parse_poly(Q, {"x", "y"}, "y^2")}, "");

    ComplexPtr TA = telescope(parse_sequence(A, {"x", "y"}), 2);
    ComplexPtr TB = telescope(parse_sequence(B, {"x", "y"}), 2);

    // identical generator layout; differentials match after reduction in B
    for (int i = 0; i <= 2; ++i)
        CHECK(TA->term_at(i).gen_degs == TB->term_at(i).gen_degs);
    for (int i = 0; i <= 1; ++i) {
        const ModuleMap& dA = TA->diff(i);
        const ModuleMap& dB = TB->diff(i);
        for (size_t c = 0; c < dA.cols.size(); ++c) {
            auto v = me_to_vec(dA.cols[c], TA->term_at(i + 1).rank(),
                               A->nvars());
            for (auto& p : v) p = ring_nf(*B, p);
            CHECK(me_from_vec(v) == dB.cols[c]);
        }
    }
}
