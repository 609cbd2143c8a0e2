/**
 * @file hopf_algebra.hpp
 * @brief Finite-dimensional Hopf algebras given by structure constants.
 *
 * Storage, for a basis e_0 .. e_{n-1}:
 *   mult      n x n^2 matrix, column i*n+j holds e_i e_j
 *   unit      length-n vector, the element 1_H
 *   comult    n^2 x n matrix, column k holds Delta(e_k) in H (x) H
 *   counit    length-n vector, epsilon(e_k)
 *   antipode  n x n matrix, column k holds S(e_k)
 */
#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "hopfint/matrix.hpp"

namespace hopfint {

/// One nonzero term c * (e_left (x) e_right) of a coproduct.
struct TensorTerm {
    std::size_t left;
    std::size_t right;
    Scalar coeff;
};

/// One nonzero term c * e_index of an expansion in the basis.
struct BasisTerm {
    std::size_t index;
    Scalar coeff;
};

inline std::vector<BasisTerm> nonzero_terms(std::span<const Scalar> v) {
    std::vector<BasisTerm> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({i, v[i]});
    return out;
}

class HopfAlgebraData {
public:
    HopfAlgebraData(Field field, std::vector<std::string> labels, Matrix mult, Vector unit, Matrix comult,
                    Vector counit, Matrix antipode)
        : field_(field), labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)),
          comult_(std::move(comult)), counit_(std::move(counit)), antipode_(std::move(antipode)) {
        const std::size_t n = labels_.size();
        if (n == 0) throw invalid_input("Hopf algebra of dimension 0");
        if (mult_.rows() != n || mult_.cols() != n * n) throw invalid_input("mult has wrong shape");
        if (comult_.rows() != n * n || comult_.cols() != n) throw invalid_input("comult has wrong shape");
        if (antipode_.rows() != n || antipode_.cols() != n) throw invalid_input("antipode has wrong shape");
        if (unit_.size() != n) throw invalid_input("unit has wrong length");
        if (counit_.size() != n) throw invalid_input("counit has wrong length");
        for (const Matrix* m : {&mult_, &comult_, &antipode_})
            if (!(m->field() == field_)) throw invalid_input("structure tensor over a different field");
        for (const Vector* v : {&unit_, &counit_})
            for (const auto& s : *v)
                if (!(s.field() == field_)) throw invalid_input("structure vector over a different field");
        index_terms();
    }

    const Field& field() const { return field_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Matrix& mult() const { return mult_; }
    const Vector& unit() const { return unit_; }
    const Matrix& comult() const { return comult_; }
    const Vector& counit() const { return counit_; }
    const Matrix& antipode() const { return antipode_; }

    Scalar zero() const { return Scalar::zero(field_); }
    Scalar one() const { return Scalar::one(field_); }
    Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }

    /// Coefficient of e_l in e_i e_j.
    const Scalar& mult_coeff(std::size_t i, std::size_t j, std::size_t l) const { return mult_(l, i * dim() + j); }
    /// Coefficient of e_i (x) e_j in Delta(e_k).
    const Scalar& comult_coeff(std::size_t k, std::size_t i, std::size_t j) const {
        return comult_(i * dim() + j, k);
    }

    /// Nonzero terms of e_i e_j.
    const std::vector<BasisTerm>& product_terms(std::size_t i, std::size_t j) const {
        return mult_terms_[i * dim() + j];
    }
    /// Sweedler legs of Delta(e_k).
    const std::vector<TensorTerm>& coproduct_terms(std::size_t k) const { return comult_terms_[k]; }
    const std::vector<BasisTerm>& antipode_terms(std::size_t k) const { return antipode_terms_[k]; }

    Vector multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
        Vector out = zero_vector(field_, dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (b[j].is_zero()) continue;
                const Scalar ab = a[i] * b[j];
                for (const auto& t : product_terms(i, j)) add_product(out[t.index], ab, t.coeff);
            }
        }
        return out;
    }

    /// Product in the algebra H (x) H.
    Vector multiply_tensor(std::span<const Scalar> x, std::span<const Scalar> y) const {
        const std::size_t n = dim();
        Vector out = zero_vector(field_, n * n);
        for (std::size_t p = 0; p < n * n; ++p) {
            if (x[p].is_zero()) continue;
            const std::size_t a = p / n, b = p % n;
            for (std::size_t q = 0; q < n * n; ++q) {
                if (y[q].is_zero()) continue;
                const std::size_t c = q / n, d = q % n;
                const Scalar xy = x[p] * y[q];
                for (const auto& s : product_terms(a, c))
                    for (const auto& t : product_terms(b, d))
                        add_product(out[s.index * n + t.index], xy, s.coeff * t.coeff);
            }
        }
        return out;
    }

    Vector coproduct(std::span<const Scalar> a) const { return comult_ * a; }
    Vector apply_antipode(std::span<const Scalar> a) const { return antipode_ * a; }

    Scalar apply_counit(std::span<const Scalar> a) const {
        Scalar s = zero();
        for (std::size_t i = 0; i < dim(); ++i)
            if (!a[i].is_zero()) add_product(s, a[i], counit_[i]);
        return s;
    }

    /// Left multiplication by a as an n x n matrix.
    Matrix left_multiplication(std::span<const Scalar> a) const {
        Matrix m(field_, dim(), dim());
        for (std::size_t k = 0; k < dim(); ++k) m.set_column(k, multiply(a, basis_vector(k)));
        return m;
    }
    Matrix right_multiplication(std::span<const Scalar> a) const {
        Matrix m(field_, dim(), dim());
        for (std::size_t k = 0; k < dim(); ++k) m.set_column(k, multiply(basis_vector(k), a));
        return m;
    }

    /// Row vector of epsilon, as a 1 x n matrix.
    Matrix counit_matrix() const { return Matrix::from_rows(field_, {counit_}); }
    Matrix unit_matrix() const { return Matrix::from_columns(field_, dim(), {unit_}); }

    friend bool operator==(const HopfAlgebraData& a, const HopfAlgebraData& b) {
        return a.field_ == b.field_ && a.mult_ == b.mult_ && a.unit_ == b.unit_ && a.comult_ == b.comult_ &&
               a.counit_ == b.counit_ && a.antipode_ == b.antipode_;
    }

private:
    void index_terms() {
        const std::size_t n = dim();
        mult_terms_.assign(n * n, {});
        for (std::size_t p = 0; p < n * n; ++p)
            for (std::size_t l = 0; l < n; ++l)
                if (!mult_(l, p).is_zero()) mult_terms_[p].push_back({l, mult_(l, p)});
        comult_terms_.assign(n, {});
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t p = 0; p < n * n; ++p)
                if (!comult_(p, k).is_zero()) comult_terms_[k].push_back({p / n, p % n, comult_(p, k)});
        antipode_terms_.assign(n, {});
        for (std::size_t k = 0; k < n; ++k) antipode_terms_[k] = nonzero_terms(antipode_.column(k));
    }

    Field field_;
    std::vector<std::string> labels_;
    Matrix mult_;
    Vector unit_;
    Matrix comult_;
    Vector counit_;
    Matrix antipode_;

    std::vector<std::vector<BasisTerm>> mult_terms_;
    std::vector<std::vector<TensorTerm>> comult_terms_;
    std::vector<std::vector<BasisTerm>> antipode_terms_;
};

/// Per-axiom outcome of verify_hopf.
struct HopfReport {
    bool associativity = false;
    bool unit_law = false;
    bool coassociativity = false;
    bool counit_law = false;
    bool bialgebra = false;
    bool antipode = false;

    bool passed() const {
        return associativity && unit_law && coassociativity && counit_law && bialgebra && antipode;
    }

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        if (!associativity) out.emplace_back("associativity");
        if (!unit_law) out.emplace_back("unit law");
        if (!coassociativity) out.emplace_back("coassociativity");
        if (!counit_law) out.emplace_back("counit law");
        if (!bialgebra) out.emplace_back("bialgebra compatibility");
        if (!antipode) out.emplace_back("antipode axiom");
        return out;
    }
};

/// Evaluates every Hopf axiom on all basis tuples.
inline HopfReport verify_hopf(const HopfAlgebraData& h) {
    const std::size_t n = h.dim();
    const Field& f = h.field();
    HopfReport rep;

    rep.associativity = true;
    for (std::size_t i = 0; i < n && rep.associativity; ++i)
        for (std::size_t j = 0; j < n && rep.associativity; ++j)
            for (std::size_t k = 0; k < n && rep.associativity; ++k) {
                Vector lhs = zero_vector(f, n), rhs = zero_vector(f, n);
                for (const auto& t : h.product_terms(i, j))
                    for (const auto& s : h.product_terms(t.index, k)) add_product(lhs[s.index], t.coeff, s.coeff);
                for (const auto& t : h.product_terms(j, k))
                    for (const auto& s : h.product_terms(i, t.index)) add_product(rhs[s.index], t.coeff, s.coeff);
                rep.associativity = lhs == rhs;
            }

    rep.unit_law = true;
    for (std::size_t j = 0; j < n && rep.unit_law; ++j) {
        const Vector e = h.basis_vector(j);
        rep.unit_law = h.multiply(h.unit(), e) == e && h.multiply(e, h.unit()) == e;
    }

    rep.coassociativity = true;
    for (std::size_t k = 0; k < n && rep.coassociativity; ++k) {
        Vector lhs = zero_vector(f, n * n * n), rhs = zero_vector(f, n * n * n);
        for (const auto& t : h.coproduct_terms(k)) {
            for (const auto& s : h.coproduct_terms(t.left))
                add_product(lhs[(s.left * n + s.right) * n + t.right], t.coeff, s.coeff);
            for (const auto& s : h.coproduct_terms(t.right))
                add_product(rhs[(t.left * n + s.left) * n + s.right], t.coeff, s.coeff);
        }
        rep.coassociativity = lhs == rhs;
    }

    rep.counit_law = true;
    for (std::size_t k = 0; k < n && rep.counit_law; ++k) {
        Vector lhs = zero_vector(f, n), rhs = zero_vector(f, n);
        for (const auto& t : h.coproduct_terms(k)) {
            add_product(lhs[t.right], t.coeff, h.counit()[t.left]);
            add_product(rhs[t.left], t.coeff, h.counit()[t.right]);
        }
        const Vector e = h.basis_vector(k);
        rep.counit_law = lhs == e && rhs == e;
    }

    rep.bialgebra = h.coproduct(h.unit()) == kron(h.unit(), h.unit()) && h.apply_counit(h.unit()).is_one();
    for (std::size_t i = 0; i < n && rep.bialgebra; ++i) {
        const Vector di = h.comult().column(i);
        for (std::size_t j = 0; j < n && rep.bialgebra; ++j) {
            const Vector eij = h.multiply(h.basis_vector(i), h.basis_vector(j));
            rep.bialgebra = h.coproduct(eij) == h.multiply_tensor(di, h.comult().column(j)) &&
                            h.apply_counit(eij) == h.counit()[i] * h.counit()[j];
        }
    }

    rep.antipode = true;
    for (std::size_t k = 0; k < n && rep.antipode; ++k) {
        Vector lhs = zero_vector(f, n), rhs = zero_vector(f, n);
        for (const auto& t : h.coproduct_terms(k)) {
            for (const auto& s : h.antipode_terms(t.left))
                for (const auto& p : h.product_terms(s.index, t.right))
                    add_product(lhs[p.index], t.coeff * s.coeff, p.coeff);
            for (const auto& s : h.antipode_terms(t.right))
                for (const auto& p : h.product_terms(t.left, s.index))
                    add_product(rhs[p.index], t.coeff * s.coeff, p.coeff);
        }
        Vector expected = h.unit();
        for (auto& x : expected) x *= h.counit()[k];
        rep.antipode = lhs == expected && rhs == expected;
    }
    return rep;
}

/// Throws invalid_input naming the failed axioms.
inline void require_hopf(const HopfAlgebraData& h) {
    const auto rep = verify_hopf(h);
    if (rep.passed()) return;
    std::string msg = "not a Hopf algebra; failed:";
    for (const auto& s : rep.failures()) msg += " " + s + ";";
    throw invalid_input(msg);
}

inline bool is_grouplike(const HopfAlgebraData& h, std::span<const Scalar> candidate) {
    if (candidate.size() != h.dim()) throw invalid_input("candidate length differs from dimension");
    return h.apply_counit(candidate).is_one() && h.coproduct(candidate) == kron(candidate, candidate);
}

/// An element g with Delta(g) = g (x) g and epsilon(g) = 1, checked on construction.
class GroupLikeElement {
public:
    GroupLikeElement(const HopfAlgebraData& h, Vector coords) : coords_(std::move(coords)) {
        if (!is_grouplike(h, coords_)) throw invalid_input("element is not group-like");
    }
    const Vector& coords() const { return coords_; }

private:
    Vector coords_;
};

} // namespace hopfint
