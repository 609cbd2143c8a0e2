#include <catch_amalgamated.hpp>

#include "hopfint/catalog.hpp"
#include "hopfint/gp_functors.hpp"

using namespace hopfint;

namespace {

const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

struct Case {
    HopfPtr h;
    std::vector<Comodule> comods; ///< k, H, H*, Gamma
};

Case make_case(HopfAlgebraData data) {
    auto h = share(std::move(data));
    const auto reg = regular_comodule(h);
    return {h, {trivial_comodule(h), reg, dual_comodule(reg), gamma_comodule(h).comodule}};
}

std::vector<Case> catalog() {
    return {make_case(group_algebra(cyclic_group_table(2))), make_case(group_algebra(symmetric_group_table(3))),
            make_case(dual_group_algebra(cyclic_group_table(3))), make_case(sweedler4()),
            make_case(taft(3, F7, Scalar::from_int(F7, 2)))};
}

} // namespace

TEST_CASE("functor T") {
    for (const auto& c : catalog())
        for (const auto& n : c.comods) {
            const auto t = functor_T(n);
            CHECK(t.passed());
            CHECK(t.module.dim() == n.dim());
        }
    const auto c = make_case(sweedler4());
    const auto tk = functor_T(c.comods[0]);
    REQUIRE(tk.module.dim() == 1);
    const Vector gamma = distinguished_grouplike(c.h).gamma;
    for (std::size_t i = 0; i < 4; ++i) CHECK(tk.module.action(i)(0, 0) == gamma[i]);
    CHECK(functor_T(c.comods[1]).module.dim() == 4);
}

TEST_CASE("double dual tensor Gamma maps onto Hom(H, N)") {
    for (const auto& c : catalog())
        for (const auto& n : c.comods) {
            const auto r = lem10_iso_check(n);
            CHECK(r.passed());
            CHECK(r.dim_source == n.dim());
            CHECK(r.dim_hom == n.dim());
        }
}

TEST_CASE("functor U") {
    for (const auto& c : catalog())
        for (const auto& m : c.comods) {
            const auto u = functor_U(m, c.comods[3]);
            CHECK(u.passed());
        }
    const auto kc2 = make_case(group_algebra(cyclic_group_table(2)));
    for (const auto& m : kc2.comods) CHECK(functor_U(m).comodule == m);

    const auto s = make_case(sweedler4());
    const auto uk = functor_U(s.comods[0]).comodule;
    CHECK(uk.coaction() == Matrix::from_ints(Q, 4, 1, {0, 1, 0, 0}));
}

TEST_CASE("adjunction dimensions") {
    for (const auto& c : catalog()) {
        if (c.h->dim() > 6) continue;
        for (const auto& m : c.comods)
            for (const auto& n : c.comods) {
                const auto r = adjunction_check(m, n, c.comods[3]);
                CHECK(r.dim_comodule_side == r.dim_module_side);
            }
    }
    const auto t = make_case(taft(3, F7, Scalar::from_int(F7, 2)));
    for (const auto& m : t.comods)
        for (const auto& n : t.comods) CHECK(adjunction_check(m, n, t.comods[3]).passed());
}

TEST_CASE("U after T recovers N") {
    for (const auto& c : catalog())
        for (const auto& n : c.comods) {
            const auto r = ut_identity_check(n, c.comods[3]);
            CHECK(r.iso.status == IsoStatus::isomorphic);
            REQUIRE(r.iso.certificate);
            CHECK(rank(*r.iso.certificate) == n.dim());
        }
}

TEST_CASE("exact sequence with C = H") {
    for (const auto& c : catalog()) {
        const auto r = th5_sequence_check(c.h);
        CHECK(r.dim_hom == 1);
        CHECK(r.dim_kernel == 0);
        CHECK(r.dim_image == 1);
        CHECK(r.action_matches);
    }
}
