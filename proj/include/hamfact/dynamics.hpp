#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hamfact/matrix.hpp"
#include "hamfact/multipoly.hpp"
#include "hamfact/potential.hpp"
#include "hamfact/unipoly.hpp"

namespace hamfact {

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    double step = 0.0;
    std::string method = "rk4";
};

// Classical RK4 on xi' = M xi (+ the force lifted into the momentum rows when
// given). Floating point enters here and only here: M and f are converted
// once on entry. Throws NumericError with the failure time on overflow.
Trajectory simulate(const RatMatrix& m, const PolyField* f, std::span<const double> xi0, double h,
                    double t_end);

// max over samples of |H(xi(t)) - H(xi(0))| / max(1, |H(xi(0))|)
double observable_drift(const Trajectory& traj, const MultiPoly& h);

enum class ModeClass { Oscillatory, Growing, Decaying, Mixed };

struct StabilityMode {
    std::complex<double> value;  // t^2 for even spectra, otherwise the raw root t
    ModeClass cls = ModeClass::Mixed;
};

struct StabilityReport {
    UniPoly characteristic;              // exact
    bool even = false;                   // solved as a polynomial in t^2?
    std::vector<StabilityMode> modes;    // n entries when even, 2n otherwise
    std::optional<Rational> discriminant;  // exact, when the t^2 polynomial is quadratic
    bool all_oscillatory = false;
};

StabilityReport stability(const RatMatrix& m);

const char* to_string(ModeClass c);

// columns: t, xi_1..xi_dim and, when h is given, the observable value
void write_csv(std::ostream& os, const Trajectory& traj, const MultiPoly* h);

}  // namespace hamfact
