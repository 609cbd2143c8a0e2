/**
 * @file monoidal.hpp
 * @brief Rigid monoidal structure of Comod-H and the isomorphisms built from it.
 *
 * Unit-object identifications k (x) M = M = M (x) k are index bookkeeping:
 * with the flat-index convention a one-dimensional factor does not move any
 * index, so no coherence matrices appear.
 */
#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hopfint/comodule.hpp"

namespace hopfint {

inline constexpr std::uint64_t default_seed = 0x5eedULL;

/// A hom space Hom^H(M, N) together with a solver for coordinates in its basis.
class HomSpace {
public:
    HomSpace(const Comodule& source, const Comodule& target)
        : field_(source.field()), rows_(target.dim()), cols_(source.dim()),
          basis_(comodule_hom_basis(source, target)), flat_(flatten_basis(field_, rows_, cols_, basis_)) {}

    std::size_t dim() const { return basis_.size(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Matrix>& basis() const { return basis_; }

    /// Coordinates of each map in `maps`, as columns; nullopt if one is outside the space.
    std::optional<Matrix> coordinates(const std::vector<Matrix>& maps) const {
        Matrix targets(field_, rows_ * cols_, maps.size());
        for (std::size_t s = 0; s < maps.size(); ++s) {
            if (maps[s].rows() != rows_ || maps[s].cols() != cols_) throw invalid_input("map shape mismatch");
            for (std::size_t k = 0; k < rows_ * cols_; ++k) targets(k, s) = maps[s].entries()[k];
        }
        if (maps.empty()) return Matrix(field_, basis_.size(), 0);
        return solve_linear(flat_, targets);
    }

    Matrix combine(std::span<const Scalar> coeffs) const {
        Matrix m(field_, rows_, cols_);
        for (std::size_t s = 0; s < basis_.size(); ++s)
            if (!coeffs[s].is_zero()) m += basis_[s] * coeffs[s];
        return m;
    }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Matrix> basis_;
    Matrix flat_;
};

/// Outcome of transporting one hom space onto another and back.
struct TransferReport {
    std::size_t dim_source = 0;
    std::size_t dim_target = 0;
    bool forward_lands = false;  ///< forward images lie in the target space
    bool backward_lands = false; ///< backward images lie in the source space
    bool backward_forward_identity = false;
    bool forward_backward_identity = false;
    Matrix forward;  ///< dim_target x dim_source, in the hom bases
    Matrix backward; ///< dim_source x dim_target

    bool passed() const {
        return forward_lands && backward_lands && backward_forward_identity && forward_backward_identity;
    }
};

using MapTransform = std::function<Matrix(const Matrix&)>;

/// Realizes `fwd`/`bwd` between two bases and certifies they are mutually inverse.
inline TransferReport certify_transfer(const Field& f, const std::vector<Matrix>& source_basis,
                                       const std::function<std::optional<Matrix>(const std::vector<Matrix>&)>& source_coords,
                                       const std::vector<Matrix>& target_basis,
                                       const std::function<std::optional<Matrix>(const std::vector<Matrix>&)>& target_coords,
                                       const MapTransform& fwd, const MapTransform& bwd) {
    TransferReport rep;
    rep.dim_source = source_basis.size();
    rep.dim_target = target_basis.size();
    std::vector<Matrix> images;
    for (const auto& b : source_basis) images.push_back(fwd(b));
    auto fc = target_coords(images);
    images.clear();
    for (const auto& b : target_basis) images.push_back(bwd(b));
    auto bc = source_coords(images);
    rep.forward_lands = fc.has_value();
    rep.backward_lands = bc.has_value();
    if (!fc || !bc) return rep;
    rep.forward = std::move(*fc);
    rep.backward = std::move(*bc);
    rep.backward_forward_identity = rep.backward * rep.forward == Matrix::identity(f, rep.dim_source);
    rep.forward_backward_identity = rep.forward * rep.backward == Matrix::identity(f, rep.dim_target);
    return rep;
}

inline std::function<std::optional<Matrix>(const std::vector<Matrix>&)> coords_in(const HomSpace& s) {
    return [&s](const std::vector<Matrix>& maps) { return s.coordinates(maps); };
}

/// Standard basis of Hom_k(V, W) (matrix units, row-major) and its trivial coordinates.
inline std::vector<Matrix> matrix_units(const Field& f, std::size_t rows, std::size_t cols) {
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < rows * cols; ++k) {
        Matrix m(f, rows, cols);
        m(k / cols, k % cols) = Scalar::one(f);
        out.push_back(std::move(m));
    }
    return out;
}

struct Eq0Report {
    std::size_t x_dim = 0;
    TransferReport transfer; ///< Hom^H(M, (X) (x) H)  <->  Hom_k(M, X)
    bool passed() const { return transfer.passed(); }
};

/// Hom^H(M, (X) (x) H) ~ Hom_k(M, X) via f -> (id (x) eps) f, inverse h -> (h (x) id) rho.
inline Eq0Report eq0_iso(const Comodule& m, std::size_t x_dim) {
    const HopfAlgebraData& h = m.hopf();
    const Field& f = m.field();
    const Comodule free = free_comodule(m.parent(), x_dim);
    const HomSpace hom(m, free);
    const Matrix id_eps = kron(Matrix::identity(f, x_dim), h.counit_matrix());
    const Matrix id_h = Matrix::identity(f, h.dim());
    const auto units = matrix_units(f, x_dim, m.dim());
    auto unit_coords = [&](const std::vector<Matrix>& maps) -> std::optional<Matrix> {
        Matrix c(f, x_dim * m.dim(), maps.size());
        for (std::size_t s = 0; s < maps.size(); ++s) c.set_column(s, maps[s].entries());
        return c;
    };
    Eq0Report rep;
    rep.x_dim = x_dim;
    rep.transfer = certify_transfer(
        f, hom.basis(), coords_in(hom), units, unit_coords, [&](const Matrix& g) { return id_eps * g; },
        [&](const Matrix& u) { return kron(u, id_h) * m.coaction(); });
    return rep;
}

/// ev : N* (x) N -> k and db : k -> N (x) N*, with their certificates.
struct EvDb {
    Comodule dual;
    Matrix ev; ///< 1 x d^2
    Matrix db; ///< d^2 x 1
    bool ev_is_morphism = false;
    bool db_is_morphism = false;
    bool snake_dual = false;   ///< (ev (x) id_{N*})(id_{N*} (x) db) = id_{N*}
    bool snake_primal = false; ///< (id_N (x) ev)(db (x) id_N) = id_N
    bool passed() const { return ev_is_morphism && db_is_morphism && snake_dual && snake_primal; }
};

inline EvDb ev_db(const Comodule& n) {
    const Field& f = n.field();
    const std::size_t d = n.dim();
    EvDb out{dual_comodule(n), Matrix(f, 1, d * d), Matrix(f, d * d, 1)};
    for (std::size_t i = 0; i < d; ++i) {
        out.ev(0, i * d + i) = Scalar::one(f);
        out.db(i * d + i, 0) = Scalar::one(f);
    }
    const Comodule k = trivial_comodule(n.parent());
    out.ev_is_morphism = is_comodule_map(out.ev, tensor_comodule(out.dual, n), k);
    out.db_is_morphism = is_comodule_map(out.db, k, tensor_comodule(n, out.dual));
    const Matrix id = Matrix::identity(f, d);
    out.snake_dual = kron(out.ev, id) * kron(id, out.db) == id;
    out.snake_primal = kron(id, out.ev) * kron(out.db, id) == id;
    if (!out.snake_dual || !out.snake_primal)
        throw snake_failure("zig-zag identity fails for a comodule of dimension " + std::to_string(d));
    return out;
}

struct InternalHomReport {
    TransferReport tensor_left;  ///< Hom(M (x) N, P) <-> Hom(M, P (x) N*)
    TransferReport tensor_right; ///< Hom(M, N (x) P) <-> Hom(N* (x) M, P)
    bool passed() const { return tensor_left.passed() && tensor_right.passed(); }
};

/// Both adjunction isomorphisms of the rigid structure, built from ev/db and certified.
inline InternalHomReport internal_hom_check(const Comodule& m, const Comodule& n, const Comodule& p) {
    const Field& f = m.field();
    const EvDb e = ev_db(n);
    const std::size_t dm = m.dim(), dn = n.dim(), dp = p.dim();
    const Matrix im = Matrix::identity(f, dm), in = Matrix::identity(f, dn), ip = Matrix::identity(f, dp);
    InternalHomReport rep;
    {
        const HomSpace lhs(tensor_comodule(m, n), p);
        const HomSpace rhs(m, tensor_comodule(p, e.dual));
        const Matrix m_db = kron(im, e.db);
        const Matrix p_ev = kron(ip, e.ev);
        rep.tensor_left = certify_transfer(
            f, lhs.basis(), coords_in(lhs), rhs.basis(), coords_in(rhs),
            [&](const Matrix& g) { return kron(g, in) * m_db; }, [&](const Matrix& g) { return p_ev * kron(g, in); });
    }
    {
        const HomSpace lhs(m, tensor_comodule(n, p));
        const HomSpace rhs(tensor_comodule(e.dual, m), p);
        const Matrix ev_p = kron(e.ev, ip);
        const Matrix db_m = kron(e.db, im);
        rep.tensor_right = certify_transfer(
            f, lhs.basis(), coords_in(lhs), rhs.basis(), coords_in(rhs),
            [&](const Matrix& g) { return ev_p * kron(in, g); }, [&](const Matrix& g) { return kron(in, g) * db_m; });
    }
    return rep;
}

struct DoiIso {
    Comodule source; ///< V (x) H with the diagonal coaction
    Comodule target; ///< (V) (x) H, coaction on the H factor only
    Matrix forward;  ///< v (x) h -> v_0 (x) v_1 h
    Matrix backward; ///< v (x) h -> v_0 (x) S(v_1) h
    bool forward_is_morphism = false;
    bool backward_is_morphism = false;
    bool round_trip = false;
    bool passed() const { return forward_is_morphism && backward_is_morphism && round_trip; }
};

inline DoiIso doi_iso(const Comodule& v) {
    const HopfAlgebraData& h = v.hopf();
    const Field& f = v.field();
    const std::size_t n = h.dim(), d = v.dim();
    DoiIso out{tensor_comodule(v, regular_comodule(v.parent())), free_comodule(v.parent(), d),
               Matrix(f, d * n, d * n), Matrix(f, d * n, d * n)};
    for (std::size_t j = 0; j < d; ++j)
        for (const auto& t : v.terms(j))
            for (std::size_t k = 0; k < n; ++k) {
                for (const auto& p : h.product_terms(t.right, k))
                    add_product(out.forward(t.left * n + p.index, j * n + k), t.coeff, p.coeff);
                for (const auto& s : h.antipode_terms(t.right))
                    for (const auto& p : h.product_terms(s.index, k))
                        add_product(out.backward(t.left * n + p.index, j * n + k), t.coeff * s.coeff, p.coeff);
            }
    out.forward_is_morphism = is_comodule_map(out.forward, out.source, out.target);
    out.backward_is_morphism = is_comodule_map(out.backward, out.target, out.source);
    const Matrix id = Matrix::identity(f, d * n);
    out.round_trip = out.forward * out.backward == id && out.backward * out.forward == id;
    return out;
}

/// dim Hom^H(H, M) >= 1.
inline bool generator_witness(const Comodule& m) {
    if (m.dim() == 0) throw invalid_input("generator witness needs a nonzero comodule");
    return hom_dim(regular_comodule(m.parent()), m) >= 1;
}

enum class IsoStatus { isomorphic, not_isomorphic, inconclusive };

inline std::string to_string(IsoStatus s) {
    switch (s) {
    case IsoStatus::isomorphic: return "isomorphic";
    case IsoStatus::not_isomorphic: return "not_isomorphic";
    default: return "inconclusive";
    }
}

struct IsoResult {
    IsoStatus status = IsoStatus::inconclusive;
    std::optional<Matrix> certificate; ///< an invertible comodule map, when found
    std::size_t hom_dim = 0;
};

/// Searches Hom^H(M, N) for an invertible map: basis elements, then pairwise
/// sums, then 32 seeded pseudo-random combinations.
inline IsoResult find_isomorphism(const Comodule& m, const Comodule& n, std::uint64_t seed = default_seed) {
    IsoResult res;
    if (m.dim() != n.dim()) {
        res.status = IsoStatus::not_isomorphic;
        return res;
    }
    const HomSpace hom(m, n);
    res.hom_dim = hom.dim();
    if (m.dim() == 0) {
        res.status = IsoStatus::isomorphic;
        res.certificate = Matrix(m.field(), 0, 0);
        return res;
    }
    if (hom.dim() == 0) {
        res.status = IsoStatus::not_isomorphic;
        return res;
    }
    auto accept = [&](const Matrix& c) {
        if (rank(c) != c.rows()) return false;
        res.status = IsoStatus::isomorphic;
        res.certificate = c;
        return true;
    };
    const auto& basis = hom.basis();
    for (const auto& b : basis)
        if (accept(b)) return res;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (accept(basis[i] + basis[j])) return res;
    const Field& f = m.field();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-7, 7);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Vector c;
        for (std::size_t s = 0; s < basis.size(); ++s) c.push_back(Scalar::from_int(f, dist(rng)));
        if (accept(hom.combine(c))) return res;
    }
    res.status = IsoStatus::inconclusive;
    return res;
}

} // namespace hopfint
