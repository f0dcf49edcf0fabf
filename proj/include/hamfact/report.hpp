#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hamfact/canonicalizer.hpp"
#include "hamfact/dynamics.hpp"
#include "hamfact/factorization.hpp"
#include "hamfact/parser.hpp"
#include "hamfact/potential.hpp"
#include "hamfact/reduction.hpp"

namespace hamfact {

// Exit-code contract of the pipeline.
enum class Status : int {
    Ok = 0,
    NotHamiltonian = 2,
    NotAdmissible = 3,
    ParseFailure = 4,
    NumericFailure = 5,
};

struct SimulationRequest {
    bool enabled = false;
    double h = 1e-3;
    double t_end = 100.0;
    std::vector<double> xi0;  // empty: momenta 0, positions 1/10
    std::string csv_path;
};

struct PipelineOptions {
    std::uint64_t seed = 0;
    SimulationRequest sim;
};

// Analysis input: either a parsed second-order system (from text or B1/B2
// matrices) or a raw evolution matrix.
struct Problem {
    std::vector<std::string> vars;  // position names, size n
    RatMatrix m;                    // matrix under analysis
    bool from_eom = false;          // m is the standard form of eom
    std::optional<EquationsOfMotion> eom;
    std::optional<PolyField> force;
};

Problem problem_from_parsed(const ParsedSystem& sys);
Problem problem_from_eom(const EquationsOfMotion& eom, std::optional<PolyField> force = std::nullopt);
Problem problem_from_matrix(const RatMatrix& m);

struct SimSummary {
    double h = 0.0;
    double t_end = 0.0;
    std::size_t steps = 0;
    std::optional<double> drift;  // only when a conserved observable is known
    std::string csv_path;
};

struct Report {
    std::size_t n = 0;
    std::vector<std::string> vars;
    RatMatrix m;
    UniPoly characteristic;
    bool even = false;
    bool admissible = false;
    std::optional<bool> hamiltonian;  // empty when the criterion does not apply
    std::vector<UniPoly> invariant_factors;

    std::optional<EquationsOfMotion> eom;
    std::optional<std::string> eom_text;
    std::optional<PolyField> force;
    std::optional<RatMatrix> m_std;
    std::optional<RatMatrix> std_transform;

    std::optional<ASPair> pair;
    std::optional<HamiltonianStructure> structure;

    std::optional<RatMatrix> s1;
    std::optional<CanonicalResult> canonical;
    std::optional<QuadraticLagrangian> lagrangian;

    bool force_conservative = false;
    std::optional<MultiPoly> potential;    // V with -grad V = f
    std::optional<MultiPoly> conserved_h;  // observable used for drift checks

    std::optional<StabilityReport> stab;
    std::optional<SimSummary> sim;

    Status status = Status::Ok;
    std::string status_detail;
};

Report run_pipeline(const Problem& problem, const PipelineOptions& opt = {});

// Section mask for the human-readable printer.
enum ReportSections : unsigned {
    SectionVerdict = 1u << 0,
    SectionFactorization = 1u << 1,
    SectionReduction = 1u << 2,
    SectionCanonical = 1u << 3,
    SectionLagrangian = 1u << 4,
    SectionPotential = 1u << 5,
    SectionStability = 1u << 6,
    SectionSimulation = 1u << 7,
    SectionAll = ~0u,
};

void print_report(std::ostream& os, const Report& rep, unsigned sections = SectionAll);

std::string report_to_json(const Report& rep);

}  // namespace hamfact
