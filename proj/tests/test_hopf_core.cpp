#include <catch_amalgamated.hpp>

#include "hopfint/catalog.hpp"

using namespace hopfint;

namespace {

const Field Q = Field::rationals();

struct Parts {
    Matrix mult, comult, antipode;
    Vector unit, counit;
};

Parts parts(const HopfAlgebraData& h) { return {h.mult(), h.comult(), h.antipode(), h.unit(), h.counit()}; }

HopfAlgebraData rebuild(const HopfAlgebraData& h, const Parts& p) {
    return HopfAlgebraData(h.field(), h.labels(), p.mult, p.unit, p.comult, p.counit, p.antipode);
}

/// Adds 1 to every structure constant in turn; counts mutations that slip through.
std::size_t undetected_mutations(const HopfAlgebraData& h, std::size_t& tried) {
    std::size_t missed = 0;
    const Scalar one = h.one();
    auto probe = [&](auto&& mutate) {
        Parts p = parts(h);
        mutate(p);
        ++tried;
        if (verify_hopf(rebuild(h, p)).passed()) ++missed;
    };
    for (std::size_t r = 0; r < h.mult().rows(); ++r)
        for (std::size_t c = 0; c < h.mult().cols(); ++c) probe([&](Parts& p) { p.mult(r, c) += one; });
    for (std::size_t r = 0; r < h.comult().rows(); ++r)
        for (std::size_t c = 0; c < h.comult().cols(); ++c) probe([&](Parts& p) { p.comult(r, c) += one; });
    for (std::size_t r = 0; r < h.dim(); ++r)
        for (std::size_t c = 0; c < h.dim(); ++c) probe([&](Parts& p) { p.antipode(r, c) += one; });
    for (std::size_t i = 0; i < h.dim(); ++i) {
        probe([&](Parts& p) { p.unit[i] += one; });
        probe([&](Parts& p) { p.counit[i] += one; });
    }
    return missed;
}

} // namespace

TEST_CASE("catalog algebras satisfy the axioms") {
    const auto c2 = cyclic_group_table(2), c3 = cyclic_group_table(3), s3 = symmetric_group_table(3);
    for (const Field& f : {Q, Field::prime(5)})
        for (const auto* t : {&c2, &c3, &s3}) {
            CHECK(verify_hopf(group_algebra(*t, f)).passed());
            CHECK(verify_hopf(dual_group_algebra(*t, f)).passed());
        }
    CHECK(verify_hopf(sweedler4()).passed());
    CHECK(verify_hopf(sweedler4(Field::prime(7))).passed());
    CHECK(verify_hopf(taft(3, Field::prime(7), Scalar::from_int(Field::prime(7), 2))).passed());
    CHECK(verify_hopf(taft(2, Q, Scalar::from_int(Q, -1))).passed());
}

TEST_CASE("group algebra antipodes") {
    const auto c2 = group_algebra(cyclic_group_table(2));
    CHECK(c2.dim() == 2);
    CHECK(c2.antipode() == Matrix::identity(Q, 2));

    const Field f7 = Field::prime(7);
    const auto c3 = group_algebra(cyclic_group_table(3), f7);
    CHECK(c3.antipode() == Matrix::from_ints(f7, 3, 3, {1, 0, 0, 0, 0, 1, 0, 1, 0}));

    CHECK(group_algebra(symmetric_group_table(3)).dim() == 6);
    CHECK_THROWS_AS(group_algebra({{0, 1}, {0, 1}}), invalid_input);
    CHECK_THROWS_AS(dual_group_algebra({{0, 1}, {1, 1}}), invalid_input);
}

TEST_CASE("zero antipode breaks only the antipode axiom") {
    const auto c2 = group_algebra(cyclic_group_table(2));
    Parts p = parts(c2);
    p.antipode = Matrix(Q, 2, 2);
    const auto rep = verify_hopf(rebuild(c2, p));
    CHECK_FALSE(rep.antipode);
    CHECK(rep.associativity);
    CHECK(rep.unit_law);
    CHECK(rep.coassociativity);
    CHECK(rep.counit_law);
    CHECK(rep.bialgebra);
    CHECK(rep.failures() == std::vector<std::string>{"antipode axiom"});
}

TEST_CASE("shape errors are distinct from axiom failures") {
    const auto c2 = group_algebra(cyclic_group_table(2));
    CHECK_THROWS_AS(HopfAlgebraData(Q, c2.labels(), Matrix(Q, 2, 3), c2.unit(), c2.comult(), c2.counit(),
                                    c2.antipode()),
                    invalid_input);
    CHECK_THROWS_AS(HopfAlgebraData(Q, c2.labels(), c2.mult(), c2.unit(), c2.comult(), c2.counit(),
                                    Matrix::identity(Field::prime(3), 2)),
                    invalid_input);
}

TEST_CASE("dual group algebra coproduct") {
    const auto d = dual_group_algebra(cyclic_group_table(2));
    const auto delta = d.coproduct(d.basis_vector(0));
    Vector expected = zero_vector(Q, 4);
    expected[0] = expected[3] = Scalar::one(Q);
    CHECK(delta == expected);
}

TEST_CASE("sweedler4 structure") {
    const auto h = sweedler4();
    enum { one_, g, x, gx };
    Vector expected = zero_vector(Q, 16);
    expected[gx * 4 + g] = expected[one_ * 4 + gx] = Scalar::one(Q);
    CHECK(h.coproduct(h.basis_vector(gx)) == expected);
    CHECK_FALSE(power(h.antipode(), 2) == Matrix::identity(Q, 4));
    CHECK(power(h.antipode(), 4) == Matrix::identity(Q, 4));
    Vector minus_x = zero_vector(Q, 4);
    minus_x[x] = -Scalar::one(Q);
    CHECK(h.apply_antipode(h.apply_antipode(h.basis_vector(x))) == minus_x);
    CHECK_THROWS_AS(sweedler4(Field::prime(2)), invalid_input);
}

TEST_CASE("group-like elements") {
    const auto h = sweedler4();
    CHECK(is_grouplike(h, h.unit()));
    CHECK(is_grouplike(h, h.basis_vector(1)));
    CHECK_FALSE(is_grouplike(h, h.basis_vector(2)));
    CHECK_THROWS_AS(GroupLikeElement(h, h.basis_vector(3)), invalid_input);
    CHECK_NOTHROW(GroupLikeElement(h, h.basis_vector(1)));
    const Field f7 = Field::prime(7);
    const auto t = taft(3, f7, Scalar::from_int(f7, 2));
    CHECK(is_grouplike(t, t.unit()));
    CHECK(is_grouplike(t, t.basis_vector(3)));
}

TEST_CASE("taft constructions") {
    const Field f7 = Field::prime(7);
    const auto t = taft(3, f7, Scalar::from_int(f7, 2));
    CHECK(t.dim() == 9);
    CHECK_THROWS_AS(taft(3, f7, Scalar::from_int(f7, 1)), invalid_input);
    CHECK_THROWS_AS(taft(3, f7, Scalar::from_int(f7, 3)), invalid_input);
    CHECK_THROWS_AS(taft(3, Q, Scalar::from_int(Q, -1)), invalid_input);

    const auto t2 = taft(2, Q, Scalar::from_int(Q, -1));
    CHECK(t2.labels() == std::vector<std::string>{"1", "x", "g", "gx"});
    const auto relabeled = permute_basis(t2, {0, 2, 1, 3});
    CHECK(relabeled == sweedler4());
    CHECK(permute_basis(taft(2, f7, Scalar::from_int(f7, -1)), {0, 2, 1, 3}) == sweedler4(f7));
}

TEST_CASE("single-entry mutations of sweedler4 are all detected") {
    std::size_t tried = 0;
    CHECK(undetected_mutations(sweedler4(), tried) == 0);
    CHECK(tried >= 20);
}

TEST_CASE("single-entry mutations of rational catalog algebras are detected") {
    const auto c3 = cyclic_group_table(3);
    for (const auto& h : {group_algebra(cyclic_group_table(2)), group_algebra(c3), dual_group_algebra(c3),
                          taft(2, Q, Scalar::from_int(Q, -1))}) {
        std::size_t tried = 0;
        CHECK(undetected_mutations(h, tried) == 0);
    }
}
