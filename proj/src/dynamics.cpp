#include "hamfact/dynamics.hpp"

#include <cmath>
#include <cstdio>

#include "hamfact/errors.hpp"

namespace hamfact {

namespace {

std::vector<std::complex<double>> durand_kerner(const std::vector<double>& monic_coeffs) {
    const std::size_t d = monic_coeffs.size() - 1;
    std::vector<std::complex<double>> z(d);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
        acc *= seed;
        z[k] = acc;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> r(0.0, 0.0);
        for (std::size_t k = monic_coeffs.size(); k-- > 0;) r = r * x + monic_coeffs[k];
        return r;
    };
    for (int iter = 0; iter < 1000; ++iter) {
        double shift = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            std::complex<double> denom(1.0, 0.0);
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) denom *= z[k] - z[j];
            const std::complex<double> delta = eval(z[k]) / denom;
            z[k] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14) break;
    }
    return z;
}

ModeClass classify_t_squared(std::complex<double> u, double tol) {
    if (std::abs(u.imag()) > tol * std::max(1.0, std::abs(u))) return ModeClass::Mixed;
    if (u.real() < -tol) return ModeClass::Oscillatory;
    if (u.real() > tol) return ModeClass::Growing;
    return ModeClass::Mixed;
}

ModeClass classify_root(std::complex<double> t, double tol) {
    if (t.real() > tol) return ModeClass::Growing;
    if (t.real() < -tol) return ModeClass::Decaying;
    return ModeClass::Oscillatory;
}

}  // namespace

Trajectory simulate(const RatMatrix& m, const PolyField* f, std::span<const double> xi0, double h,
                    double t_end) {
    if (!m.is_square()) throw DimensionError("simulate needs a square evolution matrix");
    const std::size_t dim = m.rows();
    if (xi0.size() != dim) throw DimensionError("initial state dimension mismatch");
    if (h <= 0.0 || t_end <= 0.0) throw Error("simulate needs positive step and horizon");
    const std::size_t n = dim / 2;
    if (f && (dim % 2 != 0 || f->n() != n)) throw DimensionError("force field dimension mismatch");

    const auto md = m.to_double();
    auto deriv = [&](const std::vector<double>& s, std::vector<double>& out) {
        for (std::size_t i = 0; i < dim; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < dim; ++j) acc += md[i][j] * s[j];
            out[i] = acc;
        }
        if (f) {
            const std::span<const double> pos(s.data() + n, n);
            for (std::size_t i = 0; i < n; ++i) out[i] += f->components[i].eval(pos);
        }
    };

    const long long steps = std::max(1LL, std::llround(t_end / h));
    Trajectory traj;
    traj.step = h;
    traj.times.reserve(static_cast<std::size_t>(steps) + 1);
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);
    std::vector<double> s(xi0.begin(), xi0.end());
    traj.times.push_back(0.0);
    traj.states.push_back(s);

    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    for (long long step = 1; step <= steps; ++step) {
        deriv(s, k1);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = s[i] + 0.5 * h * k1[i];
        deriv(tmp, k2);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = s[i] + 0.5 * h * k2[i];
        deriv(tmp, k3);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = s[i] + h * k3[i];
        deriv(tmp, k4);
        for (std::size_t i = 0; i < dim; ++i) s[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        const double t = static_cast<double>(step) * h;
        for (double v : s)
            if (!std::isfinite(v)) throw NumericError("state became non-finite during integration", t);
        traj.times.push_back(t);
        traj.states.push_back(s);
    }
    return traj;
}

double observable_drift(const Trajectory& traj, const MultiPoly& h) {
    if (traj.states.empty()) return 0.0;
    const double h0 = h.eval(std::span<const double>(traj.states.front()));
    const double denom = std::max(1.0, std::abs(h0));
    double drift = 0.0;
    for (const auto& s : traj.states)
        drift = std::max(drift, std::abs(h.eval(std::span<const double>(s)) - h0) / denom);
    return drift;
}

StabilityReport stability(const RatMatrix& m) {
    StabilityReport rep;
    rep.characteristic = char_poly(m);
    rep.even = m.rows() % 2 == 0 && rep.characteristic.is_even();
    const double tol = 1e-9;

    const UniPoly poly = rep.even ? rep.characteristic.descend_even() : rep.characteristic;
    if (rep.even && poly.degree() == 2) {
        // closed form with the discriminant kept exact
        const Rational c2 = poly.coeff(2), c1 = poly.coeff(1), c0 = poly.coeff(0);
        rep.discriminant = c1 * c1 - Rational(4) * c2 * c0;
        const double a = c2.to_double(), b = c1.to_double();
        if (!rep.discriminant->is_negative()) {
            const double sq = std::sqrt(rep.discriminant->to_double());
            for (double sign : {+1.0, -1.0}) {
                StabilityMode mode;
                mode.value = {(-b + sign * sq) / (2.0 * a), 0.0};
                // sign decisions stay exact: u < 0 for both roots iff the
                // product is positive and the sum negative
                mode.cls = classify_t_squared(mode.value, tol);
                rep.modes.push_back(mode);
            }
            const Rational prod = c0 / c2, sum = -(c1 / c2);
            if (prod > Rational(0) && sum < Rational(0))
                for (auto& mode : rep.modes) mode.cls = ModeClass::Oscillatory;
        } else {
            const double sq = std::sqrt(-rep.discriminant->to_double());
            rep.modes.push_back({{-b / (2.0 * a), sq / (2.0 * a)}, ModeClass::Mixed});
            rep.modes.push_back({{-b / (2.0 * a), -sq / (2.0 * a)}, ModeClass::Mixed});
        }
    } else {
        // distinct roots per square-free part, annotated with multiplicity
        const auto parts = poly.squarefree_parts();
        for (std::size_t mult = 0; mult < parts.size(); ++mult) {
            if (parts[mult].degree() < 1) continue;
            std::vector<double> coeffs;
            const UniPoly p = parts[mult].monic();
            for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(static_cast<std::size_t>(k)).to_double());
            for (const auto& root : durand_kerner(coeffs)) {
                StabilityMode mode;
                mode.value = root;
                mode.cls = rep.even ? classify_t_squared(root, tol) : classify_root(root, tol);
                for (std::size_t c = 0; c <= mult; ++c) rep.modes.push_back(mode);
            }
        }
    }
    rep.all_oscillatory = !rep.modes.empty();
    for (const auto& mode : rep.modes)
        if (mode.cls != ModeClass::Oscillatory) rep.all_oscillatory = false;
    return rep;
}

const char* to_string(ModeClass c) {
    switch (c) {
        case ModeClass::Oscillatory: return "oscillatory";
        case ModeClass::Growing: return "growing";
        case ModeClass::Decaying: return "decaying";
        case ModeClass::Mixed: return "mixed";
    }
    return "?";
}

void write_csv(std::ostream& os, const Trajectory& traj, const MultiPoly* h) {
    const std::size_t dim = traj.states.empty() ? 0 : traj.states.front().size();
    os << "t";
    for (std::size_t i = 1; i <= dim; ++i) os << ",xi" << i;
    if (h) os << ",H";
    os << "\n";
    char buf[32];
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g", traj.times[k]);
        os << buf;
        for (double v : traj.states[k]) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            os << "," << buf;
        }
        if (h) {
            std::snprintf(buf, sizeof(buf), "%.17g", h->eval(std::span<const double>(traj.states[k])));
            os << "," << buf;
        }
        os << "\n";
    }
}

}  // namespace hamfact
