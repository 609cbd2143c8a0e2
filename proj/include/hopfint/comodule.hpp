/**
 * @file comodule.hpp
 * @brief Finite-dimensional right H-comodules and their morphisms.
 *
 * A comodule M of dimension d over H (dimension n) stores its coaction
 * rho : M -> M (x) H as a (d*n) x d matrix; column j is rho(f_j) with the
 * coefficient of f_a (x) e_b at row a*n + b.
 */
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfint/hopf_algebra.hpp"

namespace hopfint {

using HopfPtr = std::shared_ptr<const HopfAlgebraData>;

inline HopfPtr share(HopfAlgebraData h) { return std::make_shared<const HopfAlgebraData>(std::move(h)); }

inline bool same_parent(const HopfPtr& a, const HopfPtr& b) { return a == b || (a && b && *a == *b); }

class Comodule {
public:
    Comodule(HopfPtr parent, std::size_t dim, Matrix coaction)
        : parent_(std::move(parent)), dim_(dim), coaction_(std::move(coaction)) {
        if (!parent_) throw invalid_input("comodule without parent Hopf algebra");
        if (coaction_.rows() != dim_ * parent_->dim() || coaction_.cols() != dim_)
            throw invalid_input("coaction has wrong shape");
        if (!(coaction_.field() == parent_->field())) throw invalid_input("coaction over a different field");
    }

    const HopfPtr& parent() const { return parent_; }
    const HopfAlgebraData& hopf() const { return *parent_; }
    const Field& field() const { return parent_->field(); }
    std::size_t dim() const { return dim_; }
    const Matrix& coaction() const { return coaction_; }

    /// Coefficient of f_a (x) e_b in rho(f_j).
    const Scalar& coeff(std::size_t j, std::size_t a, std::size_t b) const {
        return coaction_(a * parent_->dim() + b, j);
    }

    /// Nonzero terms (a, b, c) of rho(f_j) = sum c f_a (x) e_b.
    std::vector<TensorTerm> terms(std::size_t j) const {
        std::vector<TensorTerm> out;
        const std::size_t n = parent_->dim();
        for (std::size_t r = 0; r < coaction_.rows(); ++r)
            if (!coaction_(r, j).is_zero()) out.push_back({r / n, r % n, coaction_(r, j)});
        return out;
    }

    friend bool operator==(const Comodule& a, const Comodule& b) {
        return same_parent(a.parent_, b.parent_) && a.dim_ == b.dim_ && a.coaction_ == b.coaction_;
    }

private:
    HopfPtr parent_;
    std::size_t dim_;
    Matrix coaction_;
};

struct ComoduleReport {
    bool counit_law = false;
    bool coassociativity = false;
    bool passed() const { return counit_law && coassociativity; }
};

inline ComoduleReport verify_comodule(const Comodule& m) {
    const HopfAlgebraData& h = m.hopf();
    const std::size_t n = h.dim(), d = m.dim();
    const Field& f = m.field();
    ComoduleReport rep;
    rep.counit_law = true;
    rep.coassociativity = true;
    for (std::size_t j = 0; j < d; ++j) {
        const auto tj = m.terms(j);
        Vector id_eps = zero_vector(f, d);
        Vector lhs = zero_vector(f, d * n * n), rhs = zero_vector(f, d * n * n);
        for (const auto& t : tj) {
            add_product(id_eps[t.left], t.coeff, h.counit()[t.right]);
            for (const auto& s : m.terms(t.left)) add_product(lhs[(s.left * n + s.right) * n + t.right], t.coeff, s.coeff);
            for (const auto& s : h.coproduct_terms(t.right))
                add_product(rhs[(t.left * n + s.left) * n + s.right], t.coeff, s.coeff);
        }
        if (id_eps != unit_vector(f, d, j)) rep.counit_law = false;
        if (lhs != rhs) rep.coassociativity = false;
    }
    return rep;
}

inline void require_comodule(const Comodule& m) {
    const auto rep = verify_comodule(m);
    if (!rep.counit_law) throw invalid_input("coaction fails the counit law");
    if (!rep.coassociativity) throw invalid_input("coaction fails coassociativity");
}

/// k with rho(1) = 1 (x) 1_H.
inline Comodule trivial_comodule(const HopfPtr& h) {
    return Comodule(h, 1, Matrix::from_columns(h->field(), h->dim(), {h->unit()}));
}

/// H with rho = Delta.
inline Comodule regular_comodule(const HopfPtr& h) { return Comodule(h, h->dim(), h->comult()); }

/// One-dimensional comodule with rho(1) = 1 (x) g; a comodule iff g is group-like.
inline Comodule grouplike_comodule(const HopfPtr& h, const Vector& g) {
    return Comodule(h, 1, Matrix::from_columns(h->field(), h->dim(), {g}));
}

/// rho_target f - (f (x) id) rho_source, the intertwining defect of a linear map.
inline Matrix intertwining_defect(const Matrix& f, const Comodule& source, const Comodule& target) {
    const std::size_t n = source.hopf().dim();
    if (f.rows() != target.dim() || f.cols() != source.dim()) throw invalid_input("map shape does not match comodules");
    Matrix lhs = target.coaction() * f;
    for (std::size_t j = 0; j < source.dim(); ++j)
        for (const auto& t : source.terms(j))
            for (std::size_t a = 0; a < target.dim(); ++a)
                if (!f(a, t.left).is_zero()) lhs(a * n + t.right, j) -= f(a, t.left) * t.coeff;
    return lhs;
}

inline bool is_comodule_map(const Matrix& f, const Comodule& source, const Comodule& target) {
    if (!same_parent(source.parent(), target.parent())) throw invalid_input("comodules over different Hopf algebras");
    return intertwining_defect(f, source, target).is_zero();
}

/// A linear map between comodules that intertwines the coactions.
class ComoduleMap {
public:
    ComoduleMap(std::shared_ptr<const Comodule> source, std::shared_ptr<const Comodule> target, Matrix matrix)
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
        if (!is_comodule_map(matrix_, *source_, *target_)) throw invalid_input("matrix does not intertwine coactions");
    }
    const Comodule& source() const { return *source_; }
    const Comodule& target() const { return *target_; }
    const Matrix& matrix() const { return matrix_; }

private:
    std::shared_ptr<const Comodule> source_;
    std::shared_ptr<const Comodule> target_;
    Matrix matrix_;
};

/// Stacks the entries of each matrix (row-major) as columns of one matrix.
inline Matrix flatten_basis(const Field& f, std::size_t rows, std::size_t cols, const std::vector<Matrix>& basis) {
    Matrix out(f, rows * cols, basis.size());
    for (std::size_t s = 0; s < basis.size(); ++s)
        for (std::size_t k = 0; k < rows * cols; ++k) out(k, s) = basis[s].entries()[k];
    return out;
}

inline Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, std::span<const Scalar> v) {
    Matrix m(f, rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k) m(k / cols, k % cols) = v[k];
    return m;
}

/// Basis (as matrices) of Hom^H(M, N): one kernel problem in dim M * dim N unknowns.
inline std::vector<Matrix> comodule_hom_basis(const Comodule& m, const Comodule& n) {
    if (!same_parent(m.parent(), n.parent())) throw invalid_input("comodules over different Hopf algebras");
    const std::size_t hn = m.hopf().dim(), dm = m.dim(), dn = n.dim();
    const Field& f = m.field();
    // unknown f(r, c) at r*dm + c; equation (j, a, b) at (j*dn + a)*hn + b
    Matrix sys(f, dm * dn * hn, dn * dm);
    for (std::size_t j = 0; j < dm; ++j) {
        for (std::size_t k = 0; k < dn; ++k)
            for (const auto& t : n.terms(k)) sys((j * dn + t.left) * hn + t.right, k * dm + j) += t.coeff;
        for (const auto& t : m.terms(j))
            for (std::size_t a = 0; a < dn; ++a) sys((j * dn + a) * hn + t.right, a * dm + t.left) -= t.coeff;
    }
    std::vector<Matrix> out;
    for (const auto& v : kernel_basis(sys)) out.push_back(unflatten(f, dn, dm, v));
    return out;
}

inline std::vector<ComoduleMap> comodule_hom(const Comodule& m, const Comodule& n) {
    auto sm = std::make_shared<const Comodule>(m);
    auto sn = std::make_shared<const Comodule>(n);
    std::vector<ComoduleMap> out;
    for (auto& b : comodule_hom_basis(m, n)) out.emplace_back(sm, sn, std::move(b));
    return out;
}

inline std::size_t hom_dim(const Comodule& m, const Comodule& n) { return comodule_hom_basis(m, n).size(); }

/// M (x) N with rho(m (x) n) = m_0 (x) n_0 (x) m_1 n_1.
inline Comodule tensor_comodule(const Comodule& m, const Comodule& n) {
    if (!same_parent(m.parent(), n.parent())) throw invalid_input("comodules over different Hopf algebras");
    const HopfAlgebraData& h = m.hopf();
    const std::size_t hn = h.dim(), dm = m.dim(), dn = n.dim();
    Matrix rho(m.field(), dm * dn * hn, dm * dn);
    for (std::size_t a = 0; a < dm; ++a) {
        const auto ta = m.terms(a);
        for (std::size_t b = 0; b < dn; ++b)
            for (const auto& s : ta)
                for (const auto& t : n.terms(b)) {
                    const Scalar c = s.coeff * t.coeff;
                    for (const auto& p : h.product_terms(s.right, t.right))
                        add_product(rho((s.left * dn + t.left) * hn + p.index, a * dn + b), c, p.coeff);
                }
    }
    return Comodule(m.parent(), dm * dn, std::move(rho));
}

/// (X) (x) H: coaction x (x) h -> x (x) h_1 (x) h_2, trivial on X.
inline Comodule free_comodule(const HopfPtr& h, std::size_t x_dim) {
    const std::size_t n = h->dim(), d = x_dim * n;
    Matrix rho(h->field(), d * n, d);
    for (std::size_t x = 0; x < x_dim; ++x)
        for (std::size_t k = 0; k < n; ++k)
            for (const auto& t : h->coproduct_terms(k)) rho((x * n + t.left) * n + t.right, x * n + k) = t.coeff;
    return Comodule(h, d, std::move(rho));
}

/// N* on the dual basis, rho(phi)(x) = phi(x_0) S(x_1).
inline Comodule dual_comodule(const Comodule& m) {
    const HopfAlgebraData& h = m.hopf();
    const std::size_t n = h.dim(), d = m.dim();
    Matrix rho(m.field(), d * n, d);
    // coefficient of f_b^* (x) e_l in rho(f_a^*) = sum_c rho[(a, c)][b] S(e_c)_l
    for (std::size_t b = 0; b < d; ++b)
        for (const auto& t : m.terms(b))
            for (const auto& s : h.antipode_terms(t.right)) add_product(rho(b * n + s.index, t.left), t.coeff, s.coeff);
    return Comodule(m.parent(), d, std::move(rho));
}

/// Post-composes the H-leg of a coaction with a linear endomorphism of H.
inline Comodule twist_coaction(const Comodule& m, const Matrix& op) {
    const std::size_t n = m.hopf().dim(), d = m.dim();
    Matrix rho(m.field(), d * n, d);
    for (std::size_t j = 0; j < d; ++j)
        for (const auto& t : m.terms(j))
            for (std::size_t l = 0; l < n; ++l)
                if (!op(l, t.right).is_zero()) add_product(rho(t.left * n + l, j), t.coeff, op(l, t.right));
    return Comodule(m.parent(), d, std::move(rho));
}

/// S^k for any integer k; negative powers need an invertible antipode.
inline Matrix antipode_power(const HopfAlgebraData& h, std::int64_t k) {
    if (k >= 0) return power(h.antipode(), static_cast<std::size_t>(k));
    const auto inv = inverse(h.antipode());
    if (!inv) throw non_invertible_antipode("antipode is singular; S^" + std::to_string(k) + " undefined");
    return power(*inv, static_cast<std::size_t>(-k));
}

/// The coaction post-composed with S^{2k}; N** is the case k = 1.
inline Comodule double_dual_twist(const Comodule& m, std::int64_t k) {
    if (k == 0) return m;
    return twist_coaction(m, antipode_power(m.hopf(), 2 * k));
}

} // namespace hopfint
