/**
 * @file convolution.hpp
 * @brief The convolution algebra H*, its Hopf dual, and rational H*-modules.
 *
 * Functionals on H are vectors of their values on the basis, i.e. coordinates
 * in the dual basis e_0^*, ..., e_{n-1}^*. Convolution is
 * (f * g)(h) = sum f(h_1) g(h_2), with unit epsilon.
 *
 * Modules over H* are LEFT modules throughout. A right comodule N becomes one
 * through xi * n = sum n_0 xi(n_1).
 */
#pragma once

#include <string>
#include <vector>

#include "hopfint/comodule.hpp"

namespace hopfint {

/// An associative unital algebra by structure constants (no coalgebra part).
struct AlgebraData {
    Field field;
    std::size_t dim = 0;
    Matrix mult; ///< dim x dim^2, column i*dim+j holds e_i e_j
    Vector unit;
};

/// Structure constants of H* on the dual basis: (e_i^* * e_j^*)(e_k) = Delta_k[i, j].
inline AlgebraData convolution_algebra(const HopfAlgebraData& h) {
    return AlgebraData{h.field(), h.dim(), h.comult().transpose(), h.counit()};
}

/// Product in an algebra given by structure constants.
inline Vector algebra_multiply(const AlgebraData& a, std::span<const Scalar> x, std::span<const Scalar> y) {
    return a.mult * kron(x, y);
}

/// f * g for functionals given by their values on the basis.
inline Vector convolve(const HopfAlgebraData& h, std::span<const Scalar> f, std::span<const Scalar> g) {
    Vector out = zero_vector(h.field(), h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k)
        for (const auto& t : h.coproduct_terms(k))
            if (!f[t.left].is_zero() && !g[t.right].is_zero()) add_product(out[k], t.coeff, f[t.left] * g[t.right]);
    return out;
}

/// Full Hopf structure on H* in the dual basis; dual_hopf(dual_hopf(h)) == h.
inline HopfAlgebraData dual_hopf(const HopfAlgebraData& h) {
    std::vector<std::string> labels;
    for (const auto& l : h.labels()) labels.push_back(l + "*");
    return HopfAlgebraData(h.field(), std::move(labels), h.comult().transpose(), h.counit(), h.mult().transpose(),
                           h.unit(), h.antipode().transpose());
}

/// Finite-dimensional left H*-module, stored by the action of each dual-basis functional.
class HStarModule {
public:
    HStarModule(HopfPtr parent, std::size_t dim, std::vector<Matrix> action)
        : parent_(std::move(parent)), dim_(dim), action_(std::move(action)) {
        if (!parent_) throw invalid_input("module without parent Hopf algebra");
        if (action_.size() != parent_->dim()) throw invalid_input("need one action matrix per dual-basis functional");
        for (const auto& a : action_)
            if (a.rows() != dim_ || a.cols() != dim_ || !(a.field() == parent_->field()))
                throw invalid_input("action matrix has wrong shape or field");
    }

    const HopfPtr& parent() const { return parent_; }
    const HopfAlgebraData& hopf() const { return *parent_; }
    const Field& field() const { return parent_->field(); }
    std::size_t dim() const { return dim_; }
    const std::vector<Matrix>& action() const { return action_; }
    const Matrix& action(std::size_t i) const { return action_.at(i); }

    /// Action of an arbitrary functional, by linearity.
    Matrix act(std::span<const Scalar> xi) const {
        Matrix m(field(), dim_, dim_);
        for (std::size_t i = 0; i < action_.size(); ++i)
            if (!xi[i].is_zero()) m += action_[i] * xi[i];
        return m;
    }

    friend bool operator==(const HStarModule& a, const HStarModule& b) {
        return same_parent(a.parent_, b.parent_) && a.dim_ == b.dim_ && a.action_ == b.action_;
    }

private:
    HopfPtr parent_;
    std::size_t dim_;
    std::vector<Matrix> action_;
};

struct ModuleReport {
    bool module_law = false; ///< act(xi * zeta) = act(xi) act(zeta)
    bool unit_law = false;   ///< act(epsilon) = id
    bool passed() const { return module_law && unit_law; }
};

inline ModuleReport verify_module(const HStarModule& m) {
    const HopfAlgebraData& h = m.hopf();
    const std::size_t n = h.dim();
    ModuleReport rep;
    rep.unit_law = m.act(h.counit()) == Matrix::identity(m.field(), m.dim());
    rep.module_law = true;
    for (std::size_t i = 0; i < n && rep.module_law; ++i)
        for (std::size_t j = 0; j < n && rep.module_law; ++j) {
            const Vector prod = convolve(h, h.basis_vector(i), h.basis_vector(j));
            rep.module_law = m.act(prod) == m.action(i) * m.action(j);
        }
    return rep;
}

/// xi * n = sum n_0 xi(n_1): act[i](a, j) = coefficient of f_a (x) e_i in rho(f_j).
inline HStarModule rational_action(const Comodule& c) {
    const std::size_t n = c.hopf().dim(), d = c.dim();
    std::vector<Matrix> act(n, Matrix(c.field(), d, d));
    for (std::size_t j = 0; j < d; ++j)
        for (const auto& t : c.terms(j)) act[t.right](t.left, j) = t.coeff;
    return HStarModule(c.parent(), d, std::move(act));
}

/// rho(v) = sum_i (e_i^* . v) (x) e_i; throws not_rational if the result is no comodule.
inline Comodule module_to_comodule(const HStarModule& m) {
    const std::size_t n = m.hopf().dim(), d = m.dim();
    Matrix rho(m.field(), d * n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t j = 0; j < d; ++j) rho(a * n + i, j) = m.action(i)(a, j);
    Comodule c(m.parent(), d, std::move(rho));
    const auto rep = verify_comodule(c);
    if (!rep.passed())
        throw not_rational(std::string("candidate coaction fails ") +
                           (rep.counit_law ? "coassociativity" : "the counit law"));
    return c;
}

/// Basis of Hom_{H*}(M, N) = {f : f act_M(xi) = act_N(xi) f}, one kernel problem.
inline std::vector<Matrix> module_hom(const HStarModule& m, const HStarModule& n) {
    if (!same_parent(m.parent(), n.parent())) throw invalid_input("modules over different Hopf algebras");
    const std::size_t hn = m.hopf().dim(), dm = m.dim(), dn = n.dim();
    const Field& f = m.field();
    // unknown f(r, c) at r*dm + c; equation (i, r, c) at (i*dn + r)*dm + c
    Matrix sys(f, hn * dn * dm, dn * dm);
    for (std::size_t i = 0; i < hn; ++i) {
        const Matrix& a = m.action(i);
        const Matrix& b = n.action(i);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) {
                const std::size_t row = (i * dn + r) * dm + c;
                for (std::size_t k = 0; k < dm; ++k)
                    if (!a(k, c).is_zero()) sys(row, r * dm + k) += a(k, c);
                for (std::size_t k = 0; k < dn; ++k)
                    if (!b(r, k).is_zero()) sys(row, k * dm + c) -= b(r, k);
            }
    }
    std::vector<Matrix> out;
    for (const auto& v : kernel_basis(sys)) out.push_back(unflatten(f, dn, dm, v));
    return out;
}

} // namespace hopfint
