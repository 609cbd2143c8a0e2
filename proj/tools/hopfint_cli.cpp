// hopfint command-line tool: catalog generation, single checks and the full battery.
//
// Exit codes: 0 all checks pass, 1 a check failed or was inconclusive, 2 invalid input.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hopfint/hopfint.hpp"

using namespace hopfint;

namespace {

struct FieldOpts {
    std::string field;
    std::uint64_t p = 0;

    Field resolve(const Field& fallback) const {
        if (field.empty()) return p ? Field::prime(p) : fallback;
        if (field == "Q") {
            if (p) throw invalid_input("--p given with --field Q");
            return Field::rationals();
        }
        if (field == "Fp") {
            if (!p) throw invalid_input("--field Fp needs --p");
            return Field::prime(p);
        }
        throw invalid_input("unknown field '" + field + "' (use Q or Fp)");
    }
};

void emit(const ojson& report) { std::cout << report.dump(2) << "\n"; }

/// Parses and verifies; axiom failures are input errors.
HopfPtr load_verified(const std::string& path) {
    auto h = share(load_hopf(path));
    const auto rep = verify_hopf(*h);
    if (!rep.passed()) {
        std::string msg = "not a Hopf algebra; failed:";
        for (const auto& f : rep.failures()) msg += " [" + f + "]";
        throw invalid_input(msg);
    }
    return h;
}

ojson basis_json(const std::vector<Vector>& basis) {
    ojson a = ojson::array();
    for (const auto& v : basis) a.push_back(vector_to_json(v));
    return a;
}

std::string describe(const HopfAlgebraData& h, std::span<const Scalar> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (!v[i].is_one()) out += v[i].to_string() + "*";
        out += h.labels()[i];
    }
    return out.empty() ? "0" : out;
}

CayleyTable load_table(const std::string& path) {
    try {
        return ojson::parse(read_file(path)).get<CayleyTable>();
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input("bad Cayley table file: " + std::string(e.what()));
    }
}

CayleyTable named_group(const std::string& name) {
    if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'C')) {
        const auto k = std::stoul(name.substr(1));
        return name[0] == 'S' ? symmetric_group_table(k) : cyclic_group_table(k);
    }
    throw invalid_input("unknown group '" + name + "' (use Cn or Sm)");
}

int summarize(const ReportDocument& doc) {
    std::size_t pass = 0;
    for (const auto& r : doc.records) {
        if (r.status == CheckStatus::pass)
            ++pass;
        else
            std::cerr << "  " << to_string(r.status) << ": " << r.name << "\n";
    }
    std::cerr << pass << "/" << doc.records.size() << " checks passed\n";
    return doc.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact integrals, comodules and functor checks for finite-dimensional Hopf algebras"};
    app.require_subcommand(1);

    std::string file, out, side = "right", iso, name, group, table;
    std::size_t order = 0, tn = 0;
    std::string tq;
    std::uint64_t seed = default_seed;
    FieldOpts fo;

    auto* verify = app.add_subcommand("verify", "check the Hopf algebra axioms");
    verify->add_option("file", file, "structure-constant file")->required();

    auto* integrals = app.add_subcommand("integrals", "basis of left or right integrals in H*");
    integrals->add_option("file", file)->required();
    integrals->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

    auto* gamma = app.add_subcommand("gamma", "distinguished group-like element");
    gamma->add_option("file", file)->required();

    auto* antipode = app.add_subcommand("antipode", "bijectivity and order of the antipode");
    antipode->add_option("file", file)->required();

    auto* catalog = app.add_subcommand("catalog", "write a catalog Hopf algebra");
    catalog->add_option("name", name)->required()->check(CLI::IsMember({"group", "dualgroup", "sweedler4", "taft"}));
    catalog->add_option("--field", fo.field);
    catalog->add_option("--p", fo.p);
    catalog->add_option("--order", order, "cyclic group order");
    catalog->add_option("--group", group, "named group: Cn or Sm");
    catalog->add_option("--table", table, "JSON Cayley table file");
    catalog->add_option("--n", tn, "Taft parameter n");
    catalog->add_option("--q", tq, "primitive n-th root of unity");
    catalog->add_option("-o", out, "output file (stdout if omitted)");

    auto* check = app.add_subcommand("check", "run one group of checks");
    check->add_option("file", file)->required();
    check->add_option("--iso", iso)->required()->check(CLI::IsMember(check_groups()));
    check->add_option("--seed", seed);

    auto* suite = app.add_subcommand("suite", "run the full battery");
    suite->add_option("file", file)->required();
    suite->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            const auto h = load_verified(file);
            emit(ojson{{"tool", "hopfint"}, {"input", file}, {"verify_hopf", "pass"}, {"dim", h->dim()},
                       {"field", h->field().name()}});
            std::cerr << "Hopf axioms hold (dim " << h->dim() << " over " << h->field().name() << ")\n";
            return 0;
        }
        if (*integrals) {
            const auto h = load_verified(file);
            const auto sp = integral_space(h, side == "left" ? Side::left : Side::right);
            emit(ojson{{"tool", "hopfint"}, {"input", file}, {"side", side}, {"dim", sp.dim()},
                       {"basis", basis_json(sp.basis)}});
            for (const auto& v : sp.basis) {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (!v[i].is_zero())
                        s += (s.empty() ? "" : " + ") + (v[i].is_one() ? "" : v[i].to_string() + "*") +
                             h->labels()[i] + "*";
                std::cerr << side << " integral: " << s << "\n";
            }
            return sp.dim() == 1 ? 0 : 1;
        }
        if (*gamma) {
            const auto h = load_verified(file);
            const auto g = distinguished_grouplike(h);
            emit(ojson{{"tool", "hopfint"},
                       {"input", file},
                       {"gamma", vector_to_json(g.gamma)},
                       {"right_integral", vector_to_json(g.integral)},
                       {"grouplike", g.grouplike},
                       {"equation_all_basis", g.equation_all_basis},
                       {"witness_independent", g.witness_independent}});
            std::cerr << "gamma = " << describe(*h, g.gamma) << "\n";
            return g.passed() ? 0 : 1;
        }
        if (*antipode) {
            const auto h = load_verified(file);
            const bool bij = antipode_bijective(*h);
            const auto ord = antipode_order(*h);
            ojson r{{"tool", "hopfint"}, {"input", file}, {"bijective", bij}, {"bound", ord.bound}};
            if (ord.order)
                r["order"] = *ord.order;
            else
                r["order"] = "NotFinite";
            emit(r);
            std::cerr << "antipode " << (bij ? "bijective" : "not bijective");
            if (ord.order) std::cerr << ", order " << *ord.order;
            std::cerr << "\n";
            return bij ? 0 : 1;
        }
        if (*catalog) {
            std::optional<HopfAlgebraData> h;
            if (name == "group" || name == "dualgroup") {
                const int given = (order > 0) + !group.empty() + !table.empty();
                if (given != 1) throw invalid_input("give exactly one of --order, --group, --table");
                const CayleyTable t =
                    order ? cyclic_group_table(order) : !group.empty() ? named_group(group) : load_table(table);
                const Field f = fo.resolve(Field::rationals());
                h = name == "group" ? group_algebra(t, f) : dual_group_algebra(t, f);
            } else if (name == "sweedler4") {
                h = sweedler4(fo.resolve(Field::rationals()));
            } else {
                if (tn < 2 || tq.empty()) throw invalid_input("taft needs --n >= 2 and --q");
                const Field f = fo.resolve(Field::rationals());
                h = taft(tn, f, Scalar::parse(f, tq));
            }
            const std::string text = serialize(*h);
            if (out.empty()) {
                std::cout << text;
            } else {
                std::ofstream os(out);
                if (!os) throw invalid_input("cannot write '" + out + "'");
                os << text;
            }
            std::cerr << "wrote " << name << " (dim " << h->dim() << " over " << h->field().name() << ")"
                      << (out.empty() ? "" : " to " + out) << "\n";
            return 0;
        }
        if (*check || *suite) {
            const auto h = load_verified(file);
            SuiteOptions opt{file, seed, {}};
            if (*check) opt.groups.insert(iso);
            const auto doc = run_suite(h, opt);
            emit(doc.to_json());
            return summarize(doc);
        }
    } catch (const invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const hopf_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
