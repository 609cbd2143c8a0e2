#include <random>

#include <catch_amalgamated.hpp>

#include "hopfint/matrix.hpp"

using namespace hopfint;

namespace {

const Field Q = Field::rationals();

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar::from_int(f, d(rng)));
    return m;
}

} // namespace

TEST_CASE("scalars normalize and reject mixed fields") {
    const auto a = Scalar::parse(Q, "6/-4");
    CHECK(a.to_string() == "-3/2");
    CHECK((a * Scalar::from_int(Q, 2)).to_string() == "-3");
    const Field f7 = Field::prime(7);
    CHECK(Scalar::from_int(f7, -1).residue() == 6);
    CHECK(Scalar::parse(f7, "1/2").residue() == 4);
    CHECK(Scalar::from_int(f7, 3).inverse().residue() == 5);
    CHECK(Scalar::from_int(f7, 3).pow(6).is_one());
    CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(f7), invalid_input);
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), hopf_error);
    CHECK_THROWS_AS(Field::prime(8), invalid_input);
    CHECK_THROWS_AS(Scalar::parse(Q, "x1"), invalid_input);
    CHECK_THROWS_AS(Scalar::parse(f7, "1/7"), invalid_input);
}

TEST_CASE("rref on small examples") {
    const auto id = rref(Matrix::identity(Q, 2));
    CHECK(id.reduced == Matrix::identity(Q, 2));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});
    CHECK(id.rank == 2);

    const auto prop = rref(Matrix::from_ints(Q, 2, 2, {1, 2, 2, 4}));
    CHECK(prop.rank == 1);
    CHECK(prop.pivots == std::vector<std::size_t>{0});

    const Field f2 = Field::prime(2);
    CHECK(rank(Matrix::from_ints(f2, 2, 2, {1, 1, 1, 2})) == 2);
    CHECK(rank(Matrix::from_ints(f2, 2, 2, {1, 1, 1, 3})) == 1);
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(Matrix(Q, 2, 2)).size() == 2);
    CHECK(kernel_basis(Matrix::identity(Q, 3)).empty());
    const auto row = Matrix::from_ints(Q, 1, 3, {1, 2, 3});
    const auto k = kernel_basis(row);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(is_zero(row * v));
}

TEST_CASE("solve_linear") {
    const Vector b{Scalar::from_int(Q, 4), Scalar::from_int(Q, -1)};
    CHECK(solve_linear(Matrix::identity(Q, 2), b) == b);

    const auto m = Matrix::from_ints(Q, 1, 2, {1, 1});
    const auto x = solve_linear(m, Vector{Scalar::from_int(Q, 3)});
    REQUIRE(x);
    CHECK((*x)[0] + (*x)[1] == Scalar::from_int(Q, 3));

    CHECK_FALSE(solve_linear(Matrix::from_ints(Q, 2, 1, {1, 1}), Vector{Scalar::zero(Q), Scalar::one(Q)}));
    CHECK_THROWS_AS(solve_linear(m, Vector{Scalar::one(Q), Scalar::one(Q)}), invalid_input);

    const auto a = Matrix::from_ints(Q, 2, 2, {2, 1, 1, 1});
    const auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(Q, 2));
    CHECK_FALSE(inverse(Matrix::from_ints(Q, 2, 2, {1, 2, 2, 4})));
}

TEST_CASE("kron products") {
    CHECK(kron(Matrix::identity(Q, 2), Matrix::identity(Q, 3)) == Matrix::identity(Q, 6));
    const auto a = Matrix::from_ints(Q, 2, 2, {1, 2, 3, 4});
    auto scaled = a;
    scaled *= Scalar::from_int(Q, 5);
    CHECK(kron(a, Matrix::from_ints(Q, 1, 1, {5})) == scaled);
    CHECK_THROWS_AS(kron(a, Matrix::identity(Field::prime(5), 1)), invalid_input);

    const Field f5 = Field::prime(5);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        const auto p = random_matrix(f5, 2, 2, rng), q = random_matrix(f5, 2, 2, rng);
        const auto v = random_matrix(f5, 2, 1, rng).column(0), w = random_matrix(f5, 2, 1, rng).column(0);
        CHECK(kron(p, q) * kron(v, w) == kron(p * v, q * w));
    }
}

TEST_CASE("elimination invariants on random matrices") {
    std::mt19937_64 rng(2024);
    for (const Field& f : {Q, Field::prime(5), Field::prime(7)}) {
        for (int t = 0; t < 25; ++t) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
            const auto m = random_matrix(f, r, c, rng);
            const auto res = rref(m);
            const auto k = kernel_basis(m);
            CHECK(res.rank + k.size() == c);
            for (const auto& v : k) CHECK(is_zero(m * v));
            CHECK(rref(res.reduced).reduced == res.reduced);
            CHECK(rank(m.transpose()) == res.rank);
        }
        const auto a = random_matrix(f, 2, 3, rng), b = random_matrix(f, 3, 2, rng), c = random_matrix(f, 2, 2, rng);
        CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    }
}

TEST_CASE("matrix powers") {
    const auto j = Matrix::from_ints(Q, 2, 2, {0, -1, 1, 0});
    CHECK(power(j, 4) == Matrix::identity(Q, 2));
    CHECK(power(j, 2) == Matrix::from_ints(Q, 2, 2, {-1, 0, 0, -1}));
    CHECK(power(j, 0) == Matrix::identity(Q, 2));
}
