/**
 * @file integrals.hpp
 * @brief Integral spaces, the distinguished group-like element, and the
 * isomorphisms through which integrals control the antipode.
 *
 * Right integral: sum chi(a_1) a_2 = chi(a) 1_H for all a.
 * Left integral:  sum a_1 chi(a_2) = chi(a) 1_H for all a.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfint/convolution.hpp"
#include "hopfint/monoidal.hpp"

namespace hopfint {

enum class Side { left, right };

inline std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

struct IntegralSpace {
    Side side = Side::right;
    std::vector<Vector> basis;
    HopfPtr parent;
    std::size_t dim() const { return basis.size(); }
};

/// Defect a -> sum chi(a_1) a_2 - chi(a) 1 (right) or sum a_1 chi(a_2) - chi(a) 1 (left), on e_k.
inline Vector integral_defect(const HopfAlgebraData& h, std::span<const Scalar> chi, Side side, std::size_t k) {
    Vector out = zero_vector(h.field(), h.dim());
    for (const auto& t : h.coproduct_terms(k)) {
        if (side == Side::right)
            add_product(out[t.right], t.coeff, chi[t.left]);
        else
            add_product(out[t.left], t.coeff, chi[t.right]);
    }
    for (std::size_t l = 0; l < h.dim(); ++l)
        if (!h.unit()[l].is_zero()) out[l] -= chi[k] * h.unit()[l];
    return out;
}

inline bool is_integral(const HopfAlgebraData& h, std::span<const Scalar> chi, Side side) {
    for (std::size_t k = 0; k < h.dim(); ++k)
        if (!is_zero(integral_defect(h, chi, side, k))) return false;
    return true;
}

/// Kernel of the n^2 x n system chi -> (defect on each basis element).
inline IntegralSpace integral_space(const HopfPtr& h, Side side) {
    const std::size_t n = h->dim();
    Matrix sys(h->field(), n * n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto& t : h->coproduct_terms(k)) {
            if (side == Side::right)
                sys(k * n + t.right, t.left) += t.coeff;
            else
                sys(k * n + t.left, t.right) += t.coeff;
        }
        for (std::size_t l = 0; l < n; ++l)
            if (!h->unit()[l].is_zero()) sys(k * n + l, k) -= h->unit()[l];
    }
    return IntegralSpace{side, kernel_basis(sys), h};
}

struct UniquenessReport {
    std::size_t dim_right = 0;
    std::size_t dim_left = 0;
    bool at_most_one = false;     ///< both dimensions <= 1
    bool vanish_together = false; ///< dim right = 0 iff dim left = 0
    bool both_one = false;        ///< expected at finite dimension
    bool passed() const { return at_most_one && vanish_together && both_one; }
};

inline UniquenessReport uniqueness_check(const HopfPtr& h) {
    require_hopf(*h);
    UniquenessReport rep;
    rep.dim_right = integral_space(h, Side::right).dim();
    rep.dim_left = integral_space(h, Side::left).dim();
    rep.at_most_one = rep.dim_right <= 1 && rep.dim_left <= 1;
    rep.vanish_together = (rep.dim_right == 0) == (rep.dim_left == 0);
    rep.both_one = rep.dim_right == 1 && rep.dim_left == 1;
    return rep;
}

/// The right-hand side sum a_1 chi(a_2) of the defining equation for gamma, on a = e_k.
inline Vector gamma_equation_rhs(const HopfAlgebraData& h, std::span<const Scalar> chi, std::size_t k) {
    Vector out = zero_vector(h.field(), h.dim());
    for (const auto& t : h.coproduct_terms(k))
        if (!chi[t.right].is_zero()) add_product(out[t.left], t.coeff, chi[t.right]);
    return out;
}

struct DistinguishedGrouplike {
    Vector integral;        ///< the right integral chi used
    std::size_t witness{};  ///< basis index a with chi(a) != 0
    Vector gamma;
    bool grouplike = false;
    bool equation_all_basis = false;   ///< chi(a) gamma = sum a_1 chi(a_2) for every basis a
    bool witness_independent = false;  ///< every admissible witness yields the same gamma
    bool passed() const { return grouplike && equation_all_basis && witness_independent; }
};

inline DistinguishedGrouplike distinguished_grouplike(const HopfPtr& h) {
    const auto space = integral_space(h, Side::right);
    if (space.dim() == 0) throw zero_integral("no nonzero right integral");
    DistinguishedGrouplike out;
    out.integral = space.basis.front();
    const Vector& chi = out.integral;
    std::size_t w = 0;
    while (chi[w].is_zero()) ++w;
    out.witness = w;
    out.gamma = gamma_equation_rhs(*h, chi, w);
    const Scalar inv = chi[w].inverse();
    for (auto& s : out.gamma) s *= inv;
    out.grouplike = is_grouplike(*h, out.gamma);
    out.equation_all_basis = true;
    out.witness_independent = true;
    for (std::size_t k = 0; k < h->dim(); ++k) {
        const Vector rhs = gamma_equation_rhs(*h, chi, k);
        Vector lhs = out.gamma;
        for (auto& s : lhs) s *= chi[k];
        if (lhs != rhs) out.equation_all_basis = false;
        if (!chi[k].is_zero()) {
            Vector g = rhs;
            const Scalar ik = chi[k].inverse();
            for (auto& s : g) s *= ik;
            if (g != out.gamma) out.witness_independent = false;
        }
    }
    return out;
}

struct GammaComodule {
    Comodule comodule;         ///< 1-dimensional, rho(1) = 1 (x) gamma
    Vector gamma;
    bool rational_matches = false; ///< rational action equals the convolution action on the integral
    bool comodule_ok = false;
    bool passed() const { return rational_matches && comodule_ok; }
};

/// The one-dimensional comodule carried by the right integrals.
inline GammaComodule gamma_comodule(const HopfPtr& h) {
    const auto dg = distinguished_grouplike(h);
    GammaComodule out{grouplike_comodule(h, dg.gamma), dg.gamma};
    out.comodule_ok = verify_comodule(out.comodule).passed();
    const HStarModule act = rational_action(out.comodule);
    out.rational_matches = true;
    for (std::size_t i = 0; i < h->dim(); ++i) {
        // (xi * chi)(a) = sum xi(a_1) chi(a_2) must be xi(gamma) chi
        const Vector moved = convolve(*h, h->basis_vector(i), dg.integral);
        Vector expected = dg.integral;
        for (auto& s : expected) s *= dg.gamma[i];
        if (moved != expected || !(act.action(i)(0, 0) == dg.gamma[i])) out.rational_matches = false;
    }
    return out;
}

struct SweedlerReport {
    Vector left_integral;
    Matrix map; ///< column k: the functional a -> phi(a S(e_k))
    std::size_t rank = 0;
    bool bijective = false;
    std::vector<Vector> kernel; ///< nonempty only when the map is singular
};

/// h -> (a -> phi(a S(h))) for a left integral phi, and its rank.
inline SweedlerReport sweedler_iso_check(const HopfPtr& h) {
    const auto space = integral_space(h, Side::left);
    if (space.dim() == 0) throw zero_integral("no nonzero left integral");
    const std::size_t n = h->dim();
    SweedlerReport rep{space.basis.front(), Matrix(h->field(), n, n), 0, false, {}};
    const Vector& phi = rep.left_integral;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& s : h->antipode_terms(k))
            for (std::size_t l = 0; l < n; ++l)
                for (const auto& p : h->product_terms(l, s.index))
                    if (!phi[p.index].is_zero()) add_product(rep.map(l, k), s.coeff * p.coeff, phi[p.index]);
    rep.rank = rank(rep.map);
    rep.bijective = rep.rank == n;
    if (!rep.bijective) rep.kernel = kernel_basis(rep.map);
    return rep;
}

struct PhiStarReport {
    Matrix map; ///< column k: the functional a -> phi(e_k S(a))
    bool nonzero = false;
    bool morphism = false; ///< phi*(h <- xi) = phi*(h) * xi for all dual-basis xi, basis h
    bool passed() const { return nonzero && morphism; }
};

/// phi*(h)(a) = phi(h S(a)), checked as a morphism of right H*-modules.
inline PhiStarReport phi_star_check(const HopfPtr& h) {
    const auto space = integral_space(h, Side::left);
    if (space.dim() == 0) throw zero_integral("no nonzero left integral");
    const std::size_t n = h->dim();
    const Vector& phi = space.basis.front();
    PhiStarReport rep{Matrix(h->field(), n, n)};
    for (std::size_t l = 0; l < n; ++l)
        for (const auto& s : h->antipode_terms(l))
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& p : h->product_terms(k, s.index))
                    if (!phi[p.index].is_zero()) add_product(rep.map(l, k), s.coeff * p.coeff, phi[p.index]);
    rep.nonzero = !rep.map.is_zero();
    rep.morphism = true;
    for (std::size_t i = 0; i < n && rep.morphism; ++i) {
        const Vector xi = h->basis_vector(i);
        for (std::size_t k = 0; k < n && rep.morphism; ++k) {
            // h <- xi = sum xi(h_1) h_2
            Vector moved = zero_vector(h->field(), n);
            for (const auto& t : h->coproduct_terms(k))
                if (t.left == i) moved[t.right] += t.coeff;
            rep.morphism = rep.map * moved == convolve(*h, rep.map.column(k), xi);
        }
    }
    return rep;
}

inline bool antipode_bijective(const HopfAlgebraData& h) { return rank(h.antipode()) == h.dim(); }

struct AntipodeOrder {
    std::optional<std::size_t> order; ///< least m >= 1 with S^m = id
    std::size_t bound = 0;            ///< search bound 4 * dim^2
};

inline AntipodeOrder antipode_order(const HopfAlgebraData& h) {
    AntipodeOrder out;
    out.bound = 4 * h.dim() * h.dim();
    const Matrix id = Matrix::identity(h.field(), h.dim());
    Matrix p = h.antipode();
    for (std::size_t m = 1; m <= out.bound; ++m) {
        if (p == id) {
            out.order = m;
            break;
        }
        p = p * h.antipode();
    }
    return out;
}

} // namespace hopfint
