#include <random>

#include <catch_amalgamated.hpp>

#include "hopfint/catalog.hpp"
#include "hopfint/convolution.hpp"
#include "hopfint/integrals.hpp"

using namespace hopfint;

namespace {

const Field Q = Field::rationals();

std::vector<HopfPtr> catalog() {
    const Field f5 = Field::prime(5), f7 = Field::prime(7);
    return {share(group_algebra(cyclic_group_table(2))),
            share(group_algebra(cyclic_group_table(3), f5)),
            share(group_algebra(symmetric_group_table(3))),
            share(dual_group_algebra(cyclic_group_table(3))),
            share(dual_group_algebra(symmetric_group_table(3), f5)),
            share(sweedler4()),
            share(taft(3, f7, Scalar::from_int(f7, 2)))};
}

Vector random_functional(const HopfAlgebraData& h, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-4, 4);
    Vector v;
    for (std::size_t i = 0; i < h.dim(); ++i) v.push_back(Scalar::from_int(h.field(), d(rng)));
    return v;
}

} // namespace

TEST_CASE("convolution on group-likes is pointwise") {
    const auto h = group_algebra(cyclic_group_table(2));
    const auto e = h.basis_vector(0), g = h.basis_vector(1);
    CHECK(convolve(h, e, e) == e);
    CHECK(convolve(h, g, g) == g);
    CHECK(is_zero(convolve(h, e, g)));
    CHECK(is_zero(convolve(h, g, e)));
}

TEST_CASE("convolution is associative and unital") {
    std::mt19937_64 rng(7);
    for (const auto& h : catalog()) {
        for (int t = 0; t < 4; ++t) {
            const auto a = random_functional(*h, rng), b = random_functional(*h, rng), c = random_functional(*h, rng);
            CHECK(convolve(*h, convolve(*h, a, b), c) == convolve(*h, a, convolve(*h, b, c)));
            CHECK(convolve(*h, h->counit(), a) == a);
            CHECK(convolve(*h, a, h->counit()) == a);
            CHECK(algebra_multiply(convolution_algebra(*h), a, b) == convolve(*h, a, b));
        }
    }
}

TEST_CASE("sweedler4 convolution reads the coproduct") {
    const auto h = sweedler4();
    const auto prod = convolve(h, h.basis_vector(2), h.basis_vector(0));
    CHECK(prod[2].is_one());
}

TEST_CASE("dual Hopf algebras") {
    const auto c2 = cyclic_group_table(2);
    const auto d = dual_hopf(group_algebra(c2));
    const auto fun = dual_group_algebra(c2);
    CHECK(d.mult() == fun.mult());
    CHECK(d.comult() == fun.comult());
    CHECK(d.antipode() == fun.antipode());
    CHECK(d.unit() == fun.unit());
    CHECK(d.counit() == fun.counit());

    for (const auto& h : catalog()) {
        const auto dd = dual_hopf(dual_hopf(*h));
        CHECK(dd.mult() == h->mult());
        CHECK(dd.comult() == h->comult());
        CHECK(dd.antipode() == h->antipode());
        CHECK(verify_hopf(dual_hopf(*h)).passed());
    }
    const auto s3 = symmetric_group_table(3);
    const auto back = dual_hopf(dual_group_algebra(s3));
    CHECK(back.mult() == group_algebra(s3).mult());
    CHECK(back.comult() == group_algebra(s3).comult());
}

TEST_CASE("rational actions") {
    const auto h = share(sweedler4());
    const auto k = rational_action(trivial_comodule(h));
    for (std::size_t i = 0; i < 4; ++i) CHECK(k.action(i)(0, 0) == h->unit()[i]);

    const auto reg = rational_action(regular_comodule(h));
    CHECK(verify_module(reg).passed());
    // e_i^* acts on e_k by h_1 e_i^*(h_2)
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t kk = 0; kk < 4; ++kk) {
            Vector expected = zero_vector(Q, 4);
            for (const auto& t : h->coproduct_terms(kk))
                if (t.right == i) expected[t.left] += t.coeff;
            CHECK(reg.action(i).column(kk) == expected);
        }
    const auto ca = convolution_algebra(*h);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(reg.act(algebra_multiply(ca, h->basis_vector(i), h->basis_vector(j))) ==
                  reg.action(i) * reg.action(j));
    CHECK(reg.act(h->counit()) == Matrix::identity(Q, 4));
}

TEST_CASE("module and comodule round trip") {
    for (const auto& h : catalog()) {
        for (const auto& c : {trivial_comodule(h), regular_comodule(h), dual_comodule(regular_comodule(h))}) {
            const auto m = rational_action(c);
            CHECK(verify_module(m).passed());
            CHECK(module_to_comodule(m) == c);
        }
    }
}

TEST_CASE("corrupted actions are not rational") {
    const auto h = share(group_algebra(cyclic_group_table(2)));
    HStarModule bad(h, 2, {Matrix::identity(Q, 2), Matrix::identity(Q, 2)});
    CHECK_FALSE(verify_module(bad).passed());
    CHECK_THROWS_AS(module_to_comodule(bad), not_rational);

    const auto s = share(sweedler4());
    auto act = rational_action(regular_comodule(s));
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < 4; ++i) mats.push_back(act.action(i));
    mats[2](0, 0) += Scalar::one(Q);
    CHECK_THROWS_AS(module_to_comodule(HStarModule(s, 4, mats)), not_rational);
}

TEST_CASE("module homomorphisms") {
    for (const auto& h : catalog()) {
        const auto reg = rational_action(regular_comodule(h));
        const auto k = rational_action(trivial_comodule(h));
        const auto ends = module_hom(reg, reg);
        CHECK(ends.size() == h->dim());
        CHECK(module_hom(k, k).size() == 1);
        const auto to_k = module_hom(reg, k);
        CHECK(to_k.size() == integral_space(h, Side::right).dim());
        REQUIRE(to_k.size() == 1);
        CHECK(is_integral(*h, to_k[0].row(0), Side::right));
    }
    const auto h = share(sweedler4());
    const auto other = share(group_algebra(cyclic_group_table(2)));
    CHECK_THROWS_AS(module_hom(rational_action(trivial_comodule(h)), rational_action(trivial_comodule(other))),
                    invalid_input);
}
