#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adict/module.hpp"

using namespace adict;

static ModElem col(const RingPtr& R, const std::vector<std::string>& entries) {
    std::vector<Poly> v;
    for (const auto& e : entries) v.push_back(parse_poly(R->F, R->vars, e));
    return me_from_vec(v);
}

TEST_CASE("presentations, pieces, twists") {
    Field Q;
    auto A = make_poly_ring(Q, {"x"}, {1}, "");
    // A/(x^2): one generator in degree 0, relation x^2 e0
    FPModule M = make_module(A, {0}, {col(A, {"x^2"})});
    CHECK(graded_dims(M, 0, 4) == std::vector<long>{1, 1, 0, 0, 0});
    CHECK(!is_zero_module(M));
    CHECK(is_zero_module(make_module(A, {0}, {col(A, {"1"})})));
    CHECK(is_zero_module(zero_module(A)));

    FPModule T = twist(M, -3);  // M(-3): old degree d sits in new degree d+3
    CHECK(graded_dims(T, 0, 5) == std::vector<long>{0, 0, 0, 1, 1, 0});

    auto B = make_poly_ring(Q, {"x", "y"}, {1, 1}, "");
    FPModule F2 = free_module(B, {0, 1});
    CHECK(graded_dims(F2, 0, 2) == std::vector<long>{1, 3, 5});

    DirectSum S = direct_sum(A, {&M, &M});
    CHECK(graded_dims(S.sum, 0, 2) == std::vector<long>{2, 2, 0});

    // inhomogeneous relations are rejected
    CHECK_THROWS(make_module(B, {0}, {col(B, {"x^2 - y"})}));
}

TEST_CASE("maps, kernels, cokernels") {
    Field Q;
    auto B = make_poly_ring(Q, {"x", "y"}, {1, 1}, "");

    SUBCASE("koszul kernel") {
        // f: A(-1)^2 -> A, (a,b) |-> ax + by
        FPModule src = free_module(B, {1, 1});
        FPModule dst = free_module(B, {0});
        ModuleMap f = make_map(src, dst, {col(B, {"x"}), col(B, {"y"})});
        Submodule K = kernel(f);
        REQUIRE(K.sub.rank() == 1);
        CHECK(K.sub.gen_degs == std::vector<long>{2});
        CHECK(K.sub.rels.empty());  // the kernel is free
        // inclusion column is the syzygy (y, -x) up to sign
        ModElem g = K.incl.cols[0];
        ModElem img = map_apply(f, g);
        CHECK(r_member(*B, rel_gb(dst), img));
        CHECK(graded_dims(K.sub, 0, 3) == std::vector<long>{0, 0, 1, 2});

        Quotient C = cokernel(f);
        CHECK(graded_dims(C.quot, 0, 3) == std::vector<long>{1, 0, 0, 0});
    }

    SUBCASE("kernel of an injective map is zero") {
        FPModule src = free_module(B, {2});
        FPModule dst = free_module(B, {0});
        ModuleMap f = make_map(src, dst, {col(B, {"x^2"})});
        CHECK(is_zero_module(kernel(f).sub));
    }

    SUBCASE("certification rejects ill-defined maps") {
        auto A = make_poly_ring(Q, {"x"}, {1}, "");
        FPModule M = make_module(A, {0}, {col(A, {"x^2"})});  // A/(x^2)
        FPModule N = free_module(A, {0});
        // sending the generator to 1 is not well defined: x^2 /|-> 0
        CHECK_THROWS(make_map(M, N, {col(A, {"1"})}));
        // degree mismatch
        CHECK_THROWS(make_map(N, N, {col(A, {"x"})}));
        // multiplication by x IS well defined A/(x^2) -> A/(x^2) after twisting
        CHECK_NOTHROW(mult_map(twist(M, -1), M, parse_poly(Q, {"x"}, "x")));
    }

    SUBCASE("kernel over a quotient ring") {
        auto A = make_poly_ring(Q, {"x"}, {1}, "");
        auto R = make_quotient(A, {parse_poly(Q, {"x"}, "x^2")}, "");
        // multiplication by x on R (as a module over itself)
        FPModule M = free_module(R, {0});
        ModuleMap f = mult_map(free_module(R, {1}), M, parse_poly(Q, {"x"}, "x"));
        Submodule K = kernel(f);  // = (x) inside R(-1), generated in degree 2
        REQUIRE(K.sub.rank() == 1);
        CHECK(K.sub.gen_degs == std::vector<long>{2});
        CHECK(graded_dims(K.sub, 0, 3) == std::vector<long>{0, 0, 1, 0});
    }
}

TEST_CASE("free resolutions") {
    Field Q;

    SUBCASE("residue field of the plane") {
        auto B = make_poly_ring(Q, {"x", "y"}, {1, 1}, "");
        FPModule k = make_module(B, {0}, {col(B, {"x"}), col(B, {"y"})});
        Resolution res = free_resolution(k, 5);
        REQUIRE(res.complete);
        REQUIRE(res.F.size() == 3);
        CHECK(res.F[0].gen_degs == std::vector<long>{0});
        CHECK(res.F[1].gen_degs == std::vector<long>{1, 1});
        CHECK(res.F[2].gen_degs == std::vector<long>{2});
        // exactness spot-check: d1 after d2 vanishes
        CHECK(map_is_zero(map_compose(res.d[0], res.d[1])));
    }

    SUBCASE("periodic resolution over the dual numbers") {
        auto A = make_poly_ring(Q, {"x"}, {1}, "");
        auto R = make_quotient(A, {parse_poly(Q, {"x"}, "x^2")}, "");
        FPModule k = make_module(R, {0}, {col(R, {"x"})});
        Resolution res = free_resolution(k, 5);
        CHECK(!res.complete);
        REQUIRE(res.F.size() == 6);
        for (size_t i = 0; i < res.F.size(); ++i) {
            CHECK(res.F[i].rank() == 1);
            CHECK(res.F[i].gen_degs == std::vector<long>{(long)i});
        }
        for (const auto& d : res.d) {
            REQUIRE(d.cols.size() == 1);
            CHECK(me_component(d.cols[0], 0, 1) == parse_poly(Q, {"x"}, "x"));
        }
    }

    SUBCASE("alternating resolution over the tensor square of the dual numbers") {
        auto A = make_poly_ring(Q, {"x"}, {1}, "");
        auto R = make_quotient(A, {parse_poly(Q, {"x"}, "x^2")}, "");
        TensorRing E = tensor_ring(R, R, "");
        std::vector<std::string> v = E.ring->vars;  // x, x'
        FPModule D = make_module(E.ring, {0}, {col(E.ring, {"x - x'"})});
        Resolution res = free_resolution(D, 4);
        CHECK(!res.complete);
        REQUIRE(res.F.size() == 5);
        for (size_t i = 0; i < res.F.size(); ++i) CHECK(res.F[i].rank() == 1);
        // differentials alternate x - x', x + x'
        for (size_t i = 0; i < res.d.size(); ++i) {
            Poly want = parse_poly(Q, v, i % 2 == 0 ? "x - x'" : "x + x'");
            Poly got = me_component(res.d[i].cols[0], 0, 2);
            // sign-insensitive comparison
            bool match = got == want || got == poly_neg(Q, want);
            CHECK(match);
        }
    }
}

TEST_CASE("piece matrices and lifting") {
    Field Q;
    auto A = make_poly_ring(Q, {"x"}, {1}, "");
    FPModule M = make_module(A, {0}, {col(A, {"x^3"})});  // A/(x^3)

    // multiplication by x as a degree-0 map M(-1) -> M
    ModuleMap f = mult_map(twist(M, -1), M, parse_poly(Q, {"x"}, "x"));
    PieceBasis p2src = module_piece(f.src, 2);  // = M in degree 1: dim 1
    PieceBasis p2dst = module_piece(f.dst, 2);  // = M in degree 2: dim 1
    REQUIRE(p2src.dim == 1);
    REQUIRE(p2dst.dim == 1);
    Mat m2 = piece_matrix(f, p2src, p2dst);
    CHECK(!mat_is_zero(m2));
    PieceBasis p3src = module_piece(f.src, 3);  // = M in degree 2
    PieceBasis p3dst = module_piece(f.dst, 3);  // = M in degree 3 = 0
    REQUIRE(p3src.dim == 1);
    CHECK(p3dst.dim == 0);

    // r_lift writes a member as a combination of the generators
    const RModGB& G = rel_gb(M);
    auto lift = r_lift(*A, G, col(A, {"x^3"}));
    REQUIRE(lift.has_value());
    auto nolift = r_lift(*A, G, col(A, {"x"}));
    CHECK(!nolift.has_value());

    // membership and lifting over the generators (x), (x^2) in A
    std::vector<ModElem> gens{col(A, {"x"}), col(A, {"x^2"})};
    RModGB G2 = r_module_gb(*A, 1, gens, true);
    auto l2 = r_lift(*A, G2, col(A, {"x^5"}));
    REQUIRE(l2.has_value());
    // verify the combination reproduces the element
    Poly acc;
    acc = poly_add(Q, poly_mul(Q, (*l2)[0], parse_poly(Q, {"x"}, "x")),
                   poly_mul(Q, (*l2)[1], parse_poly(Q, {"x"}, "x^2")));
    CHECK(acc == parse_poly(Q, {"x"}, "x^5"));
}
