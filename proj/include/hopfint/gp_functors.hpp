/**
 * @file gp_functors.hpp
 * @brief The functor pair T = Hom^H(H, -) and its left adjoint U at finite dimension.
 *
 * T(N) carries the H*-action (xi * f)(h) = sum xi(h_1) f(h_2). U is given by
 * the closed formula U(M) = (M (x) Gamma*) twisted by S^{-2}, so that
 * U(M)** = M (x) Gamma*; the adjunction is then checked, not assumed.
 */
#pragma once

#include <string>
#include <vector>

#include "hopfint/integrals.hpp"

namespace hopfint {

/// The operator h -> sum xi(h_1) h_2 for xi = e_i^*.
inline Matrix hit_operator(const HopfAlgebraData& h, std::size_t i) {
    Matrix m(h.field(), h.dim(), h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k)
        for (const auto& t : h.coproduct_terms(k))
            if (t.left == i) m(t.right, k) += t.coeff;
    return m;
}

struct TImage {
    Comodule source;
    HStarModule module;
    std::vector<Matrix> hom_basis;
    bool closure = false;    ///< xi * f stays in Hom^H(H, N)
    bool module_law = false;
    bool passed() const { return closure && module_law; }
};

inline TImage functor_T(const Comodule& n) {
    const HopfAlgebraData& h = n.hopf();
    const HomSpace hom(regular_comodule(n.parent()), n);
    const std::size_t m = hom.dim();
    std::vector<Matrix> action;
    bool closure = true;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        const Matrix hit = hit_operator(h, i);
        std::vector<Matrix> moved;
        for (const auto& f : hom.basis()) moved.push_back(f * hit);
        auto c = hom.coordinates(moved);
        if (!c) {
            closure = false;
            action.emplace_back(n.field(), m, m);
        } else {
            action.push_back(std::move(*c));
        }
    }
    TImage out{n, HStarModule(n.parent(), m, std::move(action)), hom.basis()};
    out.closure = closure;
    out.module_law = verify_module(out.module).passed();
    return out;
}

struct HomFromHReport {
    std::size_t dim_source = 0; ///< dim N** (x) Gamma = dim N
    std::size_t dim_hom = 0;    ///< dim Hom^H(H, N)
    Matrix map;                 ///< n (x) chi -> f_n, in the hom basis of T(N)
    bool lands = false;         ///< every f_n is a comodule map
    bool bijective = false;
    bool intertwining = false;
    bool passed() const { return lands && bijective && intertwining; }
};

/// N** (x) Gamma -> Hom^H(H, N), n (x) chi -> (h -> sum n_0 chi(S(n_1) h)).
inline HomFromHReport lem10_iso_check(const Comodule& n) {
    const HopfPtr& hp = n.parent();
    const HopfAlgebraData& h = *hp;
    const auto dg = distinguished_grouplike(hp);
    const Vector& chi = dg.integral;
    const Comodule gamma = grouplike_comodule(hp, dg.gamma);
    const Comodule source = tensor_comodule(double_dual_twist(n, 1), gamma);
    const HStarModule source_module = rational_action(source);
    const TImage t = functor_T(n);
    const std::size_t d = n.dim(), hn = h.dim();

    // chi(S(e_c) e_k) for all c, k
    Matrix pairing(h.field(), hn, hn);
    for (std::size_t c = 0; c < hn; ++c)
        for (const auto& s : h.antipode_terms(c))
            for (std::size_t k = 0; k < hn; ++k)
                for (const auto& p : h.product_terms(s.index, k))
                    if (!chi[p.index].is_zero()) add_product(pairing(c, k), s.coeff * p.coeff, chi[p.index]);

    std::vector<Matrix> images;
    for (std::size_t j = 0; j < d; ++j) {
        Matrix fj(h.field(), d, hn);
        for (const auto& term : n.terms(j))
            for (std::size_t k = 0; k < hn; ++k)
                if (!pairing(term.right, k).is_zero()) add_product(fj(term.left, k), term.coeff, pairing(term.right, k));
        images.push_back(std::move(fj));
    }
    HomFromHReport rep;
    rep.dim_source = d;
    rep.dim_hom = t.hom_basis.size();
    const Matrix flat = flatten_basis(h.field(), d, hn, t.hom_basis);
    auto coords = solve_linear(flat, flatten_basis(h.field(), d, hn, images));
    rep.lands = coords.has_value();
    if (!rep.lands) return rep;
    rep.map = std::move(*coords);
    rep.bijective = rep.dim_hom == d && rank(rep.map) == d;
    rep.intertwining = t.closure;
    for (std::size_t i = 0; i < hn && rep.intertwining; ++i)
        rep.intertwining = rep.map * source_module.action(i) == t.module.action(i) * rep.map;
    return rep;
}

struct UImage {
    Comodule comodule;
    bool dim_matches = false;         ///< dim U(M) = dim M
    bool double_dual_matches = false; ///< U(M)** = M (x) Gamma* exactly
    bool comodule_ok = false;
    bool passed() const { return dim_matches && double_dual_matches && comodule_ok; }
};

/// U(M) = (M (x) Gamma*) twisted by S^{-2}; `gamma` is the comodule Gamma.
inline UImage functor_U(const Comodule& m, const Comodule& gamma) {
    const Comodule twisted = tensor_comodule(m, dual_comodule(gamma));
    UImage out{double_dual_twist(twisted, -1)};
    out.dim_matches = out.comodule.dim() == m.dim();
    out.double_dual_matches = dual_comodule(dual_comodule(out.comodule)) == twisted;
    out.comodule_ok = verify_comodule(out.comodule).passed();
    return out;
}

inline UImage functor_U(const Comodule& m) { return functor_U(m, gamma_comodule(m.parent()).comodule); }

struct AdjunctionReport {
    std::size_t dim_comodule_side = 0; ///< dim Hom^H(U(M), N)
    std::size_t dim_module_side = 0;   ///< dim Hom_{H*}(M, T(N))
    bool passed() const { return dim_comodule_side == dim_module_side; }
};

inline AdjunctionReport adjunction_check(const Comodule& m, const Comodule& n, const Comodule& gamma) {
    if (!same_parent(m.parent(), n.parent())) throw invalid_input("comodules over different Hopf algebras");
    AdjunctionReport rep;
    rep.dim_comodule_side = hom_dim(functor_U(m, gamma).comodule, n);
    rep.dim_module_side = module_hom(rational_action(m), functor_T(n).module).size();
    return rep;
}

inline AdjunctionReport adjunction_check(const Comodule& m, const Comodule& n) {
    return adjunction_check(m, n, gamma_comodule(m.parent()).comodule);
}

struct UTIdentityReport {
    IsoResult iso;
    std::size_t dim = 0;
    bool passed() const { return iso.status == IsoStatus::isomorphic; }
};

/// U(T(N)) ~ N, certified by an explicit invertible comodule map.
inline UTIdentityReport ut_identity_check(const Comodule& n, const Comodule& gamma, std::uint64_t seed = default_seed) {
    const TImage t = functor_T(n);
    const Comodule rational = module_to_comodule(t.module);
    const UImage u = functor_U(rational, gamma);
    return UTIdentityReport{find_isomorphism(u.comodule, n, seed), u.comodule.dim()};
}

inline UTIdentityReport ut_identity_check(const Comodule& n, std::uint64_t seed = default_seed) {
    return ut_identity_check(n, gamma_comodule(n.parent()).comodule, seed);
}

struct SequenceReport {
    std::size_t dim_hom = 0;    ///< dim Hom_{H*}(H, k)
    std::size_t dim_kernel = 0; ///< K, kernel of restriction to C = H
    std::size_t dim_image = 0;  ///< Gamma, its image
    bool action_matches = false; ///< image action equals the action on Gamma from gamma_comodule
    bool passed() const { return dim_hom == 1 && dim_kernel == 0 && dim_image == 1 && action_matches; }
};

/// 0 -> K -> Hom_{H*}(H, k) -> Gamma -> 0 with the subcoalgebra C = H.
inline SequenceReport th5_sequence_check(const HopfPtr& h) {
    require_hopf(*h);
    const auto homs = module_hom(rational_action(regular_comodule(h)), rational_action(trivial_comodule(h)));
    SequenceReport rep;
    rep.dim_hom = homs.size();
    if (homs.empty()) return rep;
    // restriction to C = H is the identity on the hom space
    const Matrix restriction = Matrix::identity(h->field(), homs.size());
    rep.dim_kernel = kernel_basis(restriction).size();
    rep.dim_image = rank(restriction);
    const GammaComodule gamma = gamma_comodule(h);
    const HStarModule gamma_module = rational_action(gamma.comodule);
    rep.action_matches = true;
    const Vector f = homs.front().row(0);
    for (std::size_t i = 0; i < h->dim() && rep.action_matches; ++i) {
        Vector expected = f;
        for (auto& s : expected) s *= gamma_module.action(i)(0, 0);
        rep.action_matches = convolve(*h, h->basis_vector(i), f) == expected;
    }
    return rep;
}

} // namespace hopfint
