/**
 * @file catalog.hpp
 * @brief Standard finite-dimensional Hopf algebras.
 *
 * Conventions fixed here:
 *  - group algebras use the group elements as basis, in Cayley-table order;
 *  - dual group algebras use the delta functions delta_g in the same order;
 *  - sweedler4 uses the basis (1, g, x, gx);
 *  - taft(n, q) uses g^i x^j at index i*n + j.
 */
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hopfint/hopf_algebra.hpp"

namespace hopfint {

/// table[i][j] = index of g_i g_j.
using CayleyTable = std::vector<std::vector<std::size_t>>;

struct GroupData {
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;
};

/// Checks closure, identity, inverses and associativity.
inline GroupData validate_group(const CayleyTable& t) {
    const std::size_t n = t.size();
    if (n == 0) throw invalid_input("empty Cayley table");
    for (const auto& row : t) {
        if (row.size() != n) throw invalid_input("Cayley table is not square");
        for (auto v : row)
            if (v >= n) throw invalid_input("Cayley table entry out of range");
    }
    std::optional<std::size_t> e;
    for (std::size_t i = 0; i < n && !e; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) ok = t[i][j] == j && t[j][i] == j;
        if (ok) e = i;
    }
    if (!e) throw invalid_input("Cayley table has no identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) throw invalid_input("Cayley table is not associative");
    GroupData g{*e, std::vector<std::size_t>(n)};
    for (std::size_t a = 0; a < n; ++a) {
        std::optional<std::size_t> inv;
        for (std::size_t b = 0; b < n && !inv; ++b)
            if (t[a][b] == *e && t[b][a] == *e) inv = b;
        if (!inv) throw invalid_input("element " + std::to_string(a) + " has no inverse");
        g.inverse[a] = *inv;
    }
    return g;
}

inline CayleyTable cyclic_group_table(std::size_t order) {
    if (order == 0) throw invalid_input("cyclic group of order 0");
    CayleyTable t(order, std::vector<std::size_t>(order));
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) t[i][j] = (i + j) % order;
    return t;
}

/// S_m on permutations in lexicographic order (identity first); composition (p q)(x) = p(q(x)).
inline CayleyTable symmetric_group_table(std::size_t m) {
    if (m == 0 || m > 5) throw invalid_input("symmetric group degree must be in 1..5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = perms.size();
    CayleyTable t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<std::size_t> c(m);
            for (std::size_t x = 0; x < m; ++x) c[x] = perms[a][perms[b][x]];
            t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return t;
}

inline std::vector<std::string> group_labels(std::size_t n, std::size_t identity, const std::string& prefix) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == identity ? prefix + "e" : prefix + "g" + std::to_string(i));
    return labels;
}

/// kG: Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^-1.
inline HopfAlgebraData group_algebra(const CayleyTable& table, const Field& f = Field::rationals()) {
    const GroupData g = validate_group(table);
    const std::size_t n = table.size();
    Matrix mult(f, n, n * n), comult(f, n * n, n), antipode(f, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) mult(table[a][b], a * n + b) = Scalar::one(f);
        comult(a * n + a, a) = Scalar::one(f);
        antipode(g.inverse[a], a) = Scalar::one(f);
    }
    return HopfAlgebraData(f, group_labels(n, g.identity, ""), std::move(mult), unit_vector(f, n, g.identity),
                           std::move(comult), Vector(n, Scalar::one(f)), std::move(antipode));
}

/// k^G: pointwise product, Delta(delta_g) = sum_{hk=g} delta_h (x) delta_k.
inline HopfAlgebraData dual_group_algebra(const CayleyTable& table, const Field& f = Field::rationals()) {
    const GroupData g = validate_group(table);
    const std::size_t n = table.size();
    Matrix mult(f, n, n * n), comult(f, n * n, n), antipode(f, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        mult(a, a * n + a) = Scalar::one(f);
        for (std::size_t b = 0; b < n; ++b) comult(a * n + b, table[a][b]) = Scalar::one(f);
        antipode(g.inverse[a], a) = Scalar::one(f);
    }
    return HopfAlgebraData(f, group_labels(n, g.identity, "d_"), std::move(mult), Vector(n, Scalar::one(f)),
                           std::move(comult), unit_vector(f, n, g.identity), std::move(antipode));
}

namespace detail {

/// Builds Delta and S on a monomial basis from their values on generators:
/// Delta is multiplicative, S is anti-multiplicative. `word[k]` lists the
/// generator indices whose ordered product is e_k.
inline HopfAlgebraData assemble_from_generators(const Field& f, std::vector<std::string> labels, Matrix mult,
                                                const std::vector<std::vector<std::size_t>>& words,
                                                const std::vector<Vector>& gen_elem,
                                                const std::vector<Vector>& gen_coproduct,
                                                const std::vector<Vector>& gen_antipode, Vector counit) {
    const std::size_t n = labels.size();
    Vector unit = unit_vector(f, n, 0);
    // Provisional algebra with trivial coalgebra data, used only for products.
    HopfAlgebraData alg(f, labels, mult, unit, Matrix(f, n * n, n), Vector(n, Scalar::zero(f)), Matrix(f, n, n));
    Matrix comult(f, n * n, n), antipode(f, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vector d = kron(unit, unit);
        Vector s = unit;
        Vector check = unit;
        for (auto gi : words[k]) {
            d = alg.multiply_tensor(d, gen_coproduct[gi]);
            s = alg.multiply(gen_antipode[gi], s);
            check = alg.multiply(check, gen_elem[gi]);
        }
        if (check != alg.basis_vector(k)) throw invalid_input("monomial word does not match basis element");
        comult.set_column(k, d);
        antipode.set_column(k, s);
    }
    return HopfAlgebraData(f, std::move(labels), std::move(mult), std::move(unit), std::move(comult),
                           std::move(counit), std::move(antipode));
}

inline std::string monomial_label(std::size_t i, std::size_t j) {
    std::string s;
    if (i == 1) s += "g";
    if (i > 1) s += "g^" + std::to_string(i);
    if (j == 1) s += "x";
    if (j > 1) s += "x^" + std::to_string(j);
    return s.empty() ? "1" : s;
}

} // namespace detail

/// The least m >= 1 with q^m = 1, or 0 if none up to `bound`.
inline std::size_t multiplicative_order(const Scalar& q, std::size_t bound) {
    if (q.is_zero()) return 0;
    Scalar acc = q;
    for (std::size_t m = 1; m <= bound; ++m) {
        if (acc.is_one()) return m;
        acc *= q;
    }
    return 0;
}

/// Taft algebra T_n(q): g^n = 1, x^n = 0, xg = q gx, Delta(x) = x (x) 1 + g (x) x.
inline HopfAlgebraData taft(std::size_t n, const Field& f, const Scalar& q) {
    if (n < 2) throw invalid_input("taft algebra needs n >= 2");
    if (!(q.field() == f)) throw invalid_input("q lies in a different field");
    if (multiplicative_order(q, n) != n) throw invalid_input("q is not a primitive " + std::to_string(n) + "-th root of unity");
    const std::size_t dim = n * n;
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    Matrix mult(f, dim, dim * dim);
    // (g^i x^j)(g^k x^l) = q^{jk} g^{i+k} x^{j+l}
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (j + l < n)
                        mult(idx((i + k) % n, j + l), idx(i, j) * dim + idx(k, l)) =
                            q.pow(static_cast<std::int64_t>(j * k));
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> words;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            labels.push_back(detail::monomial_label(i, j));
            std::vector<std::size_t> w(i, 0);
            w.insert(w.end(), j, 1);
            words.push_back(std::move(w));
        }
    const Vector one_ = unit_vector(f, dim, idx(0, 0));
    const Vector g = unit_vector(f, dim, idx(1, 0));
    const Vector x = unit_vector(f, dim, idx(0, 1));
    const Vector dg = kron(g, g);
    Vector dx = kron(x, one_);
    const Vector gx_term = kron(g, x);
    for (std::size_t p = 0; p < dx.size(); ++p) dx[p] += gx_term[p];
    const Vector sg = unit_vector(f, dim, idx(n - 1, 0));
    Vector sx = unit_vector(f, dim, idx(n - 1, 1));
    for (auto& s : sx) s = -s;
    Vector counit = zero_vector(f, dim);
    for (std::size_t i = 0; i < n; ++i) counit[idx(i, 0)] = Scalar::one(f);
    return detail::assemble_from_generators(f, std::move(labels), std::move(mult), words, {g, x}, {dg, dx},
                                            {sg, sx}, std::move(counit));
}

/// Sweedler's 4-dimensional algebra on the basis (1, g, x, gx): g^2 = 1, x^2 = 0, xg = -gx.
inline HopfAlgebraData sweedler4(const Field& f = Field::rationals()) {
    if (!f.is_rational() && f.characteristic() == 2) throw invalid_input("sweedler4 requires characteristic != 2");
    enum : std::size_t { one_, g, x, gx };
    const std::size_t n = 4;
    const Scalar p1 = Scalar::one(f), m1 = -p1;
    Matrix mult(f, n, n * n), comult(f, n * n, n), antipode(f, n, n);
    auto prod = [&](std::size_t a, std::size_t b, std::size_t c, const Scalar& s) { mult(c, a * n + b) = s; };
    for (std::size_t a = 0; a < n; ++a) {
        prod(one_, a, a, p1);
        prod(a, one_, a, p1);
    }
    prod(g, g, one_, p1);
    prod(g, x, gx, p1);
    prod(g, gx, x, p1);
    prod(x, g, gx, m1);
    prod(gx, g, x, m1);
    auto cop = [&](std::size_t k, std::size_t a, std::size_t b) { comult(a * n + b, k) = p1; };
    cop(one_, one_, one_);
    cop(g, g, g);
    cop(x, x, one_);
    cop(x, g, x);
    cop(gx, gx, g);
    cop(gx, one_, gx);
    antipode(one_, one_) = p1;
    antipode(g, g) = p1;
    antipode(gx, x) = m1;
    antipode(x, gx) = p1;
    return HopfAlgebraData(f, {"1", "g", "x", "gx"}, std::move(mult), unit_vector(f, n, one_), std::move(comult),
                           Vector{p1, p1, Scalar::zero(f), Scalar::zero(f)}, std::move(antipode));
}

/// Relabels a Hopf algebra along a basis permutation: new index perm[a] holds old e_a.
inline HopfAlgebraData permute_basis(const HopfAlgebraData& h, const std::vector<std::size_t>& perm) {
    const std::size_t n = h.dim();
    if (perm.size() != n) throw invalid_input("permutation length differs from dimension");
    const Field& f = h.field();
    Matrix mult(f, n, n * n), comult(f, n * n, n), antipode(f, n, n);
    Vector unit(n), counit(n);
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
        labels[perm[a]] = h.labels()[a];
        unit[perm[a]] = h.unit()[a];
        counit[perm[a]] = h.counit()[a];
        for (std::size_t b = 0; b < n; ++b) {
            antipode(perm[a], perm[b]) = h.antipode()(a, b);
            for (std::size_t c = 0; c < n; ++c) {
                mult(perm[c], perm[a] * n + perm[b]) = h.mult_coeff(a, b, c);
                comult(perm[a] * n + perm[b], perm[c]) = h.comult_coeff(c, a, b);
            }
        }
    }
    return HopfAlgebraData(f, std::move(labels), std::move(mult), std::move(unit), std::move(comult),
                           std::move(counit), std::move(antipode));
}

} // namespace hopfint
