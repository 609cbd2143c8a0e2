/**
 * @file suite.hpp
 * @brief The verification battery behind the `suite` and `check` commands.
 *
 * Every check yields one record {name, status, witness}. Records are emitted
 * in a fixed order; the battery is deterministic for a given seed.
 */
#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hopfint/gp_functors.hpp"
#include "hopfint/serialization.hpp"

namespace hopfint {

enum class CheckStatus { pass, fail, inconclusive };

inline std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "inconclusive";
    }
}

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    ojson witness = ojson::object();
};

struct ReportDocument {
    std::string input;
    std::uint64_t seed = default_seed;
    ojson algebra = ojson::object();
    std::vector<CheckRecord> records;

    bool passed() const {
        for (const auto& r : records)
            if (r.status != CheckStatus::pass) return false;
        return true;
    }
    int exit_code() const { return passed() ? 0 : 1; }

    ojson to_json() const {
        ojson doc;
        doc["tool"] = "hopfint";
        doc["input"] = input;
        doc["seed"] = seed;
        doc["algebra"] = algebra;
        ojson checks = ojson::array();
        for (const auto& r : records) {
            ojson c;
            c["name"] = r.name;
            c["status"] = to_string(r.status);
            c["witness"] = r.witness;
            checks.push_back(std::move(c));
        }
        doc["checks"] = std::move(checks);
        doc["overall"] = passed() ? "pass" : "fail";
        return doc;
    }
};

/// Check groups selectable with `check --iso`; "all" runs everything.
inline const std::vector<std::string>& check_groups() {
    static const std::vector<std::string> groups{"doi", "eq0", "sweedler", "lem10", "adjunction", "snake", "eq7"};
    return groups;
}

struct SuiteOptions {
    std::string input;
    std::uint64_t seed = default_seed;
    std::set<std::string> groups; ///< empty = full suite
};

namespace detail {

inline CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

inline ojson matrix_json(const Matrix& m) {
    ojson a = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
    return a;
}

inline ojson transfer_json(const TransferReport& t) {
    return ojson{{"dim_source", t.dim_source},
                 {"dim_target", t.dim_target},
                 {"forward_lands", t.forward_lands},
                 {"backward_lands", t.backward_lands},
                 {"backward_forward_identity", t.backward_forward_identity},
                 {"forward_backward_identity", t.forward_backward_identity}};
}

struct NamedComodule {
    std::string name;
    Comodule comodule;
};

class Runner {
public:
    Runner(ReportDocument& doc) : doc_(doc) {}

    /// Runs `body`; library errors turn into a failed record carrying the message.
    void run(const std::string& name, const std::function<CheckRecord()>& body) {
        CheckRecord rec;
        try {
            rec = body();
        } catch (const hopf_error& e) {
            rec.status = CheckStatus::fail;
            rec.witness = ojson{{"error", e.what()}};
        }
        rec.name = name;
        doc_.records.push_back(std::move(rec));
    }

private:
    ReportDocument& doc_;
};

} // namespace detail

/// Runs the battery on a Hopf algebra that already passed verify_hopf.
inline ReportDocument run_suite(const HopfPtr& h, const SuiteOptions& opt = {}) {
    using detail::status_of;
    ReportDocument doc;
    doc.input = opt.input;
    doc.seed = opt.seed;
    doc.algebra = ojson{{"field", h->field().name()}, {"dim", h->dim()}, {"basis", h->labels()}};
    detail::Runner run(doc);
    const bool full = opt.groups.empty();
    auto want = [&](const std::string& g) { return full || opt.groups.count(g) > 0; };
    const std::size_t n = h->dim();

    run.run("verify_hopf", [&] {
        const auto rep = verify_hopf(*h);
        return CheckRecord{"", status_of(rep.passed()),
                           ojson{{"associativity", rep.associativity},
                                 {"unit_law", rep.unit_law},
                                 {"coassociativity", rep.coassociativity},
                                 {"counit_law", rep.counit_law},
                                 {"bialgebra", rep.bialgebra},
                                 {"antipode", rep.antipode}}};
    });

    // Catalog comodules; Gamma needs the integral, so it is built defensively.
    std::vector<detail::NamedComodule> comods{{"k", trivial_comodule(h)}, {"H", regular_comodule(h)}};
    comods.push_back({"H*", dual_comodule(comods[1].comodule)});
    std::optional<Comodule> gamma;
    try {
        gamma = gamma_comodule(h).comodule;
        comods.push_back({"Gamma", *gamma});
    } catch (const hopf_error&) {
    }

    if (full) {
        run.run("uniqueness", [&] {
            const auto rep = uniqueness_check(h);
            const auto r = integral_space(h, Side::right), l = integral_space(h, Side::left);
            ojson rb = ojson::array(), lb = ojson::array();
            for (const auto& v : r.basis) rb.push_back(vector_to_json(v));
            for (const auto& v : l.basis) lb.push_back(vector_to_json(v));
            return CheckRecord{"", status_of(rep.passed()),
                               ojson{{"dim_right", rep.dim_right},
                                     {"dim_left", rep.dim_left},
                                     {"at_most_one", rep.at_most_one},
                                     {"both_one", rep.both_one},
                                     {"right_basis", rb},
                                     {"left_basis", lb}}};
        });
        run.run("integrals_vanish_together", [&] {
            const auto rep = uniqueness_check(h);
            return CheckRecord{"", status_of(rep.vanish_together),
                               ojson{{"dim_right", rep.dim_right}, {"dim_left", rep.dim_left}}};
        });
        run.run("distinguished_grouplike", [&] {
            const auto g = distinguished_grouplike(h);
            return CheckRecord{"", status_of(g.passed()),
                               ojson{{"gamma", vector_to_json(g.gamma)},
                                     {"right_integral", vector_to_json(g.integral)},
                                     {"witness", h->labels()[g.witness]},
                                     {"grouplike", g.grouplike},
                                     {"equation_all_basis", g.equation_all_basis},
                                     {"witness_independent", g.witness_independent},
                                     {"integral_at_unit", g.integral[0].to_string()}}};
        });
        run.run("gamma_comodule", [&] {
            const auto g = gamma_comodule(h);
            const auto iso = find_isomorphism(tensor_comodule(g.comodule, dual_comodule(g.comodule)),
                                              trivial_comodule(h), opt.seed);
            ojson w{{"comodule", g.comodule_ok},
                    {"rational_action_matches", g.rational_matches},
                    {"gamma_tensor_dual_vs_k", to_string(iso.status)}};
            if (iso.certificate) w["certificate"] = detail::matrix_json(*iso.certificate);
            CheckStatus st = status_of(g.passed());
            if (st == CheckStatus::pass && iso.status != IsoStatus::isomorphic)
                st = iso.status == IsoStatus::inconclusive ? CheckStatus::inconclusive : CheckStatus::fail;
            return CheckRecord{"", st, w};
        });
    }
    if (want("sweedler")) {
        run.run("sweedler_iso", [&] {
            const auto rep = sweedler_iso_check(h);
            ojson w{{"rank", rep.rank}, {"dim", n}, {"left_integral", vector_to_json(rep.left_integral)}};
            if (!rep.bijective) {
                ojson k = ojson::array();
                for (const auto& v : rep.kernel) k.push_back(vector_to_json(v));
                w["singular_kernel"] = k;
            }
            return CheckRecord{"", status_of(rep.bijective), w};
        });
    }
    if (full) {
        run.run("phi_star", [&] {
            const auto rep = phi_star_check(h);
            return CheckRecord{"", status_of(rep.passed()),
                               ojson{{"nonzero", rep.nonzero}, {"right_module_morphism", rep.morphism}}};
        });
        run.run("antipode", [&] {
            const bool bij = antipode_bijective(*h);
            const auto ord = antipode_order(*h);
            ojson w{{"bijective", bij}, {"bound", ord.bound}};
            if (ord.order)
                w["order"] = *ord.order;
            else
                w["order"] = "NotFinite";
            return CheckRecord{"", status_of(bij), w};
        });
        for (const auto& c : comods)
            run.run("generator_witness[" + c.name + "]", [&] {
                const std::size_t d = hom_dim(regular_comodule(h), c.comodule);
                return CheckRecord{"", status_of(generator_witness(c.comodule) && d == c.comodule.dim()),
                                   ojson{{"dim_hom_H_M", d}, {"dim_M", c.comodule.dim()}}};
            });
    }
    if (want("doi")) {
        for (std::size_t i = 0; i < 2; ++i) {
            const auto& c = comods[i];
            run.run("doi_iso[" + c.name + "]", [&] {
                const auto d = doi_iso(c.comodule);
                return CheckRecord{"", status_of(d.passed()),
                                   ojson{{"size", d.forward.rows()},
                                         {"forward_is_morphism", d.forward_is_morphism},
                                         {"backward_is_morphism", d.backward_is_morphism},
                                         {"round_trip", d.round_trip}}};
            });
        }
    }
    if (want("eq0")) {
        for (const auto& c : comods)
            for (std::size_t x : {1, 2})
                run.run("eq0_iso[" + c.name + ",X=" + std::to_string(x) + "]", [&] {
                    const auto r = eq0_iso(c.comodule, x);
                    return CheckRecord{"", status_of(r.passed()), detail::transfer_json(r.transfer)};
                });
    }
    if (want("snake")) {
        for (const auto& c : comods)
            run.run("snake[" + c.name + "]", [&] {
                const auto e = ev_db(c.comodule);
                return CheckRecord{"", status_of(e.passed()),
                                   ojson{{"ev_is_morphism", e.ev_is_morphism},
                                         {"db_is_morphism", e.db_is_morphism},
                                         {"snake_dual", e.snake_dual},
                                         {"snake_primal", e.snake_primal}}};
            });
    }
    if (want("eq7")) {
        std::vector<const detail::NamedComodule*> small;
        for (const auto& c : comods)
            if (c.comodule.dim() == 1 || (c.name == "H" && n <= 4)) small.push_back(&c);
        for (auto* m : small)
            for (auto* nn : small)
                for (auto* p : small)
                    run.run("internal_hom[" + m->name + "," + nn->name + "," + p->name + "]", [&] {
                        const auto r = internal_hom_check(m->comodule, nn->comodule, p->comodule);
                        return CheckRecord{"", status_of(r.passed()),
                                           ojson{{"hom_MxN_P_vs_M_PxN*", detail::transfer_json(r.tensor_left)},
                                                 {"hom_M_NxP_vs_N*xM_P", detail::transfer_json(r.tensor_right)}}};
                    });
    }
    if (want("lem10")) {
        for (const auto& c : comods)
            run.run("lem10_iso[" + c.name + "]", [&] {
                const auto r = lem10_iso_check(c.comodule);
                return CheckRecord{"", status_of(r.passed()),
                                   ojson{{"dim_source", r.dim_source},
                                         {"dim_hom", r.dim_hom},
                                         {"lands", r.lands},
                                         {"bijective", r.bijective},
                                         {"intertwining", r.intertwining}}};
            });
    }
    if (full && gamma) {
        for (const auto& c : comods) {
            run.run("functor_T[" + c.name + "]", [&] {
                const auto t = functor_T(c.comodule);
                const bool dims = t.module.dim() == c.comodule.dim();
                return CheckRecord{"", status_of(t.passed() && dims),
                                   ojson{{"dim", t.module.dim()},
                                         {"dim_source", c.comodule.dim()},
                                         {"closure", t.closure},
                                         {"module_law", t.module_law}}};
            });
            run.run("functor_U[" + c.name + "]", [&] {
                const auto u = functor_U(c.comodule, *gamma);
                return CheckRecord{"", status_of(u.passed()),
                                   ojson{{"dim", u.comodule.dim()},
                                         {"dim_source", c.comodule.dim()},
                                         {"double_dual_matches", u.double_dual_matches}}};
            });
        }
    }
    if (want("adjunction") && gamma) {
        for (const auto& m : comods)
            for (const auto& nn : comods)
                run.run("adjunction[" + m.name + "," + nn.name + "]", [&] {
                    const auto r = adjunction_check(m.comodule, nn.comodule, *gamma);
                    return CheckRecord{"", status_of(r.passed()),
                                       ojson{{"dim_hom_UM_N", r.dim_comodule_side},
                                             {"dim_hom_M_TN", r.dim_module_side}}};
                });
        for (const auto& c : comods)
            run.run("ut_identity[" + c.name + "]", [&] {
                const auto r = ut_identity_check(c.comodule, *gamma, opt.seed);
                ojson w{{"result", to_string(r.iso.status)}, {"hom_dim", r.iso.hom_dim}};
                CheckStatus st = CheckStatus::pass;
                if (r.iso.status == IsoStatus::not_isomorphic) st = CheckStatus::fail;
                if (r.iso.status == IsoStatus::inconclusive) st = CheckStatus::inconclusive;
                return CheckRecord{"", st, w};
            });
    }
    if (full) {
        run.run("th5_sequence", [&] {
            const auto r = th5_sequence_check(h);
            return CheckRecord{"", status_of(r.passed()),
                               ojson{{"dim_hom_H_k", r.dim_hom},
                                     {"dim_kernel", r.dim_kernel},
                                     {"dim_image", r.dim_image},
                                     {"action_matches", r.action_matches}}};
        });
    }
    return doc;
}

} // namespace hopfint
