#include "hamfact/report.hpp"

#include <fstream>

#include <json.hpp>

#include "hamfact/errors.hpp"
#include "hamfact/frobenius.hpp"

namespace hamfact {

namespace {

using nlohmann::json;

PolyField zero_force(const std::vector<std::string>& vars) {
    PolyField f;
    for (std::size_t i = 0; i < vars.size(); ++i) f.components.emplace_back(vars);
    return f;
}

// lift a polynomial in the positions into full phase space (momenta first)
MultiPoly lift_position_poly(const MultiPoly& v, std::vector<std::string> phase_vars) {
    const std::size_t n = v.nvars();
    MultiPoly out(std::move(phase_vars));
    for (const auto& [e, c] : v.terms()) {
        MultiPoly::Exps full(2 * n, 0);
        for (std::size_t k = 0; k < n; ++k) full[n + k] = e[k];
        out.add_term(full, c);
    }
    return out;
}

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json poly_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["exps"] = e;
        t["coeff"] = c.to_string();
        terms.push_back(std::move(t));
    }
    return json{{"vars", p.vars()}, {"terms", std::move(terms)}, {"pretty", p.to_string()}};
}

json unipoly_json(const UniPoly& p) {
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(static_cast<std::size_t>(k)).to_string());
    return json{{"coeffs", std::move(coeffs)}, {"pretty", p.to_string()}};
}

const char* verdict_string(const Report& rep) {
    if (!rep.hamiltonian) return "undetermined";
    return *rep.hamiltonian ? "hamiltonian" : "not_hamiltonian";
}

void print_matrix(std::ostream& os, const std::string& label, const RatMatrix& m) {
    os << label << ":\n" << to_string(m) << "\n";
    bool integral = true;
    for (std::size_t i = 0; i < m.rows() && integral; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_integer()) {
                integral = false;
                break;
            }
    if (!integral) os << "~\n" << to_string_float(m) << "\n";
}

}  // namespace

Problem problem_from_parsed(const ParsedSystem& sys) {
    Problem pr;
    pr.vars = sys.vars;
    pr.eom = sys.eom;
    pr.force = sys.force;
    pr.m = std_form(sys.eom);
    pr.from_eom = true;
    return pr;
}

Problem problem_from_eom(const EquationsOfMotion& eom, std::optional<PolyField> force) {
    Problem pr;
    pr.vars = position_vars(eom.b1.rows());
    pr.eom = eom;
    if (force)
        pr.force = std::move(force);
    else
        pr.force = zero_force(pr.vars);
    pr.m = std_form(eom);
    pr.from_eom = true;
    return pr;
}

Problem problem_from_matrix(const RatMatrix& m) {
    if (!m.is_square() || m.rows() % 2 != 0)
        throw DimensionError("evolution matrix must be square of even dimension");
    Problem pr;
    pr.vars = position_vars(m.rows() / 2);
    pr.m = m;
    pr.from_eom = false;
    return pr;
}

Report run_pipeline(const Problem& pr, const PipelineOptions& opt) {
    Report rep;
    rep.n = pr.m.rows() / 2;
    rep.vars = pr.vars;
    rep.m = pr.m;
    rep.characteristic = char_poly(pr.m);
    rep.even = rep.characteristic.is_even();
    rep.eom = pr.eom;
    rep.force = pr.force;

    const BlockSystem sys(pr.m);
    rep.admissible = is_admissible(sys);

    // second-order reduction, available whenever the lower-left block is regular
    if (is_invertible(sys.m21())) {
        if (!rep.eom) rep.eom = extract_eom(sys);
        auto [mstd, lambda] = standardize(sys);
        rep.m_std = std::move(mstd);
        rep.std_transform = std::move(lambda);
    }
    if (rep.eom) {
        ParsedSystem ps{rep.vars, *rep.eom, rep.force ? *rep.force : zero_force(rep.vars)};
        rep.eom_text = render_eom(ps);
    }

    if (!is_invertible(pr.m)) {
        rep.status = Status::NotAdmissible;
        rep.status_detail = "evolution matrix is singular";
        rep.stab = stability(pr.m);
        return rep;
    }

    rep.invariant_factors = frobenius(pr.m).invariant_factors;
    rep.hamiltonian = rep.invariant_factors == frobenius(-pr.m).invariant_factors;

    if (*rep.hamiltonian) {
        if (rep.eom) rep.s1 = solve_s1(*rep.eom, opt.seed);
        if (rep.s1) {
            rep.canonical = build_canonical(*rep.eom, *rep.s1, rep.vars);
            rep.lagrangian = build_lagrangian(*rep.eom, *rep.s1, rep.vars);
        }
        // the reported structure factors the matrix under analysis; for
        // second-order input the momentum-position pairing is preferred
        if (pr.from_eom && rep.s1) {
            rep.pair = semi_canonical_pair(*rep.eom, *rep.s1);
            rep.structure = to_structure(*rep.pair, pr.m, phase_space_vars(rep.vars));
        } else {
            rep.pair = factor(pr.m, FactorOptions{opt.seed, 64});
            rep.structure = to_structure(*rep.pair, pr.m, phase_space_vars(rep.vars));
        }
    } else {
        rep.status = Status::NotHamiltonian;
        rep.status_detail = "the evolution matrix is not conjugate to its negative";
    }

    if (rep.force) {
        rep.force_conservative = check_conservative(*rep.force);
        if (rep.force_conservative && !rep.force->is_zero()) rep.potential = integrate_potential(*rep.force);
    }

    // conserved observable for the verification run
    if (rep.structure) {
        const bool no_force = !rep.force || rep.force->is_zero();
        if (no_force) {
            rep.conserved_h = rep.structure->h;
        } else if (pr.from_eom && rep.s1) {
            PolyField scaled = apply_matrix(*rep.s1, *rep.force);
            if (check_conservative(scaled))
                rep.conserved_h = rep.structure->h +
                                  lift_position_poly(integrate_potential(scaled), phase_space_vars(rep.vars));
        }
    }

    rep.stab = stability(pr.m);
    if (rep.status == Status::Ok && !rep.admissible) {
        rep.status = Status::NotAdmissible;
        rep.status_detail = "lower-left block is singular; no second-order reduction";
    }

    if (opt.sim.enabled) {
        std::vector<double> xi0 = opt.sim.xi0;
        if (xi0.empty()) {
            xi0.assign(2 * rep.n, 0.0);
            for (std::size_t i = rep.n; i < 2 * rep.n; ++i) xi0[i] = 0.1;
        }
        try {
            const PolyField* fp = (rep.force && !rep.force->is_zero()) ? &*rep.force : nullptr;
            Trajectory traj = simulate(pr.m, fp, xi0, opt.sim.h, opt.sim.t_end);
            SimSummary summary;
            summary.h = opt.sim.h;
            summary.t_end = opt.sim.t_end;
            summary.steps = traj.states.size() - 1;
            if (rep.conserved_h) summary.drift = observable_drift(traj, *rep.conserved_h);
            if (!opt.sim.csv_path.empty()) {
                std::ofstream csv(opt.sim.csv_path);
                if (!csv) throw Error("cannot open CSV output '" + opt.sim.csv_path + "'");
                write_csv(csv, traj, rep.conserved_h ? &*rep.conserved_h : nullptr);
                summary.csv_path = opt.sim.csv_path;
            }
            rep.sim = std::move(summary);
        } catch (const NumericError& e) {
            rep.status = Status::NumericFailure;
            rep.status_detail = e.what();
        }
    }
    return rep;
}

void print_report(std::ostream& os, const Report& rep, unsigned sections) {
    if (sections & SectionVerdict) {
        os << "system: n = " << rep.n << ", variables";
        for (const auto& v : rep.vars) os << " " << v;
        os << "\n";
        if (rep.eom_text) os << "equations of motion:\n" << *rep.eom_text << "\n";
        print_matrix(os, "evolution matrix M", rep.m);
        os << "characteristic polynomial: " << rep.characteristic.to_string() << "\n";
        os << "even characteristic polynomial: " << (rep.even ? "yes" : "no") << "\n";
        if (!rep.invariant_factors.empty()) {
            os << "invariant factors:";
            for (const auto& p : rep.invariant_factors) os << "  " << p.to_string();
            os << "\n";
        }
        os << "admissible: " << (rep.admissible ? "yes" : "no") << "\n";
        if (rep.hamiltonian)
            os << "verdict: " << (*rep.hamiltonian ? "HAMILTONIAN" : "NOT Hamiltonian") << "\n";
        else
            os << "verdict: undetermined (" << rep.status_detail << ")\n";
    }
    if ((sections & SectionFactorization) && rep.pair) {
        os << "\nfactorization M = A*S (solution space dimension " << rep.pair->space_dim << ")\n";
        print_matrix(os, "A (alternating)", rep.pair->a);
        print_matrix(os, "S (symmetric)", rep.pair->s);
        if (rep.structure) {
            print_matrix(os, "omega (symplectic matrix, A^-1)", rep.structure->omega);
            print_matrix(os, "Poisson brackets {xi_i, xi_j}", rep.structure->bracket_table);
            os << "H = " << rep.structure->h.to_string() << "\n";
        }
    }
    if ((sections & SectionReduction) && rep.eom) {
        os << "\nsecond-order reduction x'' - B1 x' - B2 x = f(x)\n";
        print_matrix(os, "B1", rep.eom->b1);
        print_matrix(os, "B2", rep.eom->b2);
        if (rep.m_std) print_matrix(os, "standard form M_std", *rep.m_std);
        if (rep.std_transform) print_matrix(os, "conjugation L (L^-1 M L = M_std)", *rep.std_transform);
    }
    if (sections & SectionCanonical) {
        if (rep.canonical) {
            os << "\ncanonical structure (omega = sum dp_i ^ dx_i)\n";
            print_matrix(os, "S1", rep.canonical->s1);
            print_matrix(os, "S2 = -S1 B2", rep.canonical->s2);
            print_matrix(os, "X = (1/2) S1 B1", rep.canonical->x_mat);
            os << "H_can = " << rep.canonical->h_can.to_string() << "\n";
            print_matrix(os, "Hessian of H_can", rep.canonical->h_can_matrix);
            print_matrix(os, "M_can", rep.canonical->m_can);
            print_matrix(os, "p-link T (in (T X; 0 I))", rep.canonical->p_link.t);
            print_matrix(os, "p-link X", rep.canonical->p_link.x);
        } else if (rep.hamiltonian && *rep.hamiltonian) {
            os << "\ncanonical structure: surgery hypotheses not met; only the non-canonical pair exists\n";
        }
    }
    if ((sections & SectionLagrangian) && rep.lagrangian) {
        os << "\nLagrangian\n";
        os << "L = " << rep.lagrangian->l.to_string() << "\n";
        print_matrix(os, "kinetic S1", rep.lagrangian->kinetic);
        print_matrix(os, "cross S1*B1", rep.lagrangian->cross);
        print_matrix(os, "potential S1*B2", rep.lagrangian->potential);
    }
    if ((sections & SectionPotential) && rep.force) {
        os << "\nforce field\n";
        for (std::size_t i = 0; i < rep.force->n(); ++i)
            os << "f_" << rep.vars[i] << " = " << rep.force->components[i].to_string() << "\n";
        os << "conservative: " << (rep.force_conservative ? "yes" : "no") << "\n";
        if (rep.potential) os << "V = " << rep.potential->to_string() << "\n";
    }
    if ((sections & SectionStability) && rep.stab) {
        os << "\nstability (" << (rep.stab->even ? "roots in t^2" : "raw roots t") << ")\n";
        for (const auto& mode : rep.stab->modes) {
            os << "  " << mode.value.real();
            if (mode.value.imag() != 0.0) os << (mode.value.imag() > 0 ? " + " : " - ")
                                             << std::abs(mode.value.imag()) << "i";
            os << "  -> " << to_string(mode.cls) << "\n";
        }
        os << "all modes oscillatory: " << (rep.stab->all_oscillatory ? "yes" : "no") << "\n";
    }
    if ((sections & SectionSimulation) && rep.sim) {
        os << "\nsimulation: h = " << rep.sim->h << ", t_end = " << rep.sim->t_end << ", steps = "
           << rep.sim->steps << "\n";
        if (rep.sim->drift) {
            os << "relative drift of H: " << *rep.sim->drift << "\n";
            if (rep.stab && !rep.stab->all_oscillatory)
                os << "note: non-oscillatory modes grow exponentially; the conserved value is a"
                      " cancellation of large terms and its numerical drift loses meaning at long"
                      " horizons\n";
        } else {
            os << "no conserved observable available for drift\n";
        }
        if (!rep.sim->csv_path.empty()) os << "trajectory written to " << rep.sim->csv_path << "\n";
    }
    if (rep.status != Status::Ok) os << "\nstatus: " << rep.status_detail << "\n";
}

std::string report_to_json(const Report& rep) {
    json j;
    j["n"] = rep.n;
    j["vars"] = rep.vars;
    j["status"] = static_cast<int>(rep.status);
    j["status_detail"] = rep.status_detail;
    j["verdict"] = verdict_string(rep);
    j["admissible"] = rep.admissible;
    j["char_poly"] = unipoly_json(rep.characteristic);
    j["char_poly"]["even"] = rep.even;
    j["M"] = matrix_json(rep.m);
    if (!rep.invariant_factors.empty()) {
        json f = json::array();
        for (const auto& p : rep.invariant_factors) f.push_back(unipoly_json(p));
        j["invariant_factors"] = std::move(f);
    }
    if (rep.eom) {
        j["eom"]["B1"] = matrix_json(rep.eom->b1);
        j["eom"]["B2"] = matrix_json(rep.eom->b2);
        if (rep.eom_text) j["eom"]["text"] = *rep.eom_text;
        if (rep.force) {
            json f = json::array();
            for (const auto& c : rep.force->components) f.push_back(c.to_string());
            j["eom"]["force"] = std::move(f);
        }
    }
    if (rep.m_std) j["M_std"] = matrix_json(*rep.m_std);
    if (rep.std_transform) j["std_transform"] = matrix_json(*rep.std_transform);
    if (rep.pair) {
        j["factorization"]["A"] = matrix_json(rep.pair->a);
        j["factorization"]["S"] = matrix_json(rep.pair->s);
        j["factorization"]["space_dim"] = rep.pair->space_dim;
    }
    if (rep.structure) {
        j["structure"]["omega"] = matrix_json(rep.structure->omega);
        j["structure"]["hessian"] = matrix_json(rep.structure->hessian);
        j["structure"]["brackets"] = matrix_json(rep.structure->bracket_table);
        j["structure"]["H"] = poly_json(rep.structure->h);
    }
    if (rep.s1) j["canonical"]["S1"] = matrix_json(*rep.s1);
    if (rep.canonical) {
        j["canonical"]["S2"] = matrix_json(rep.canonical->s2);
        j["canonical"]["X"] = matrix_json(rep.canonical->x_mat);
        j["canonical"]["H_can_matrix"] = matrix_json(rep.canonical->h_can_matrix);
        j["canonical"]["M_can"] = matrix_json(rep.canonical->m_can);
        j["canonical"]["H_can"] = poly_json(rep.canonical->h_can);
        j["canonical"]["p_link"]["T"] = matrix_json(rep.canonical->p_link.t);
        j["canonical"]["p_link"]["X"] = matrix_json(rep.canonical->p_link.x);
    }
    if (rep.lagrangian) {
        j["lagrangian"]["kinetic"] = matrix_json(rep.lagrangian->kinetic);
        j["lagrangian"]["cross"] = matrix_json(rep.lagrangian->cross);
        j["lagrangian"]["potential"] = matrix_json(rep.lagrangian->potential);
        j["lagrangian"]["L"] = poly_json(rep.lagrangian->l);
    }
    if (rep.force) {
        j["potential"]["conservative"] = rep.force_conservative;
        if (rep.potential) j["potential"]["V"] = poly_json(*rep.potential);
    }
    if (rep.conserved_h) j["conserved_H"] = poly_json(*rep.conserved_h);
    if (rep.stab) {
        j["stability"]["even"] = rep.stab->even;
        j["stability"]["all_oscillatory"] = rep.stab->all_oscillatory;
        if (rep.stab->discriminant) j["stability"]["discriminant"] = rep.stab->discriminant->to_string();
        json modes = json::array();
        for (const auto& mode : rep.stab->modes) {
            json m;
            m["value"] = {mode.value.real(), mode.value.imag()};
            m["class"] = to_string(mode.cls);
            modes.push_back(std::move(m));
        }
        j["stability"]["modes"] = std::move(modes);
    }
    if (rep.sim) {
        j["simulation"]["h"] = rep.sim->h;
        j["simulation"]["t_end"] = rep.sim->t_end;
        j["simulation"]["steps"] = rep.sim->steps;
        if (rep.sim->drift) j["simulation"]["drift"] = *rep.sim->drift;
        if (!rep.sim->csv_path.empty()) j["simulation"]["csv"] = rep.sim->csv_path;
    }
    return j.dump(2);
}

}  // namespace hamfact
