#include "bvlab/core.hpp"

#include <algorithm>
#include <cmath>

namespace bvlab {

namespace {

double smoothstep(double th) {
    th = std::clamp(th, 0.0, 1.0);
    return th * th * (3.0 - 2.0 * th);
}

double bump6(double th) {
    // (1 - th^2)^3 on |th| < 1, zero outside
    if (std::abs(th) >= 1.0) return 0.0;
    double s = 1.0 - th * th;
    return s * s * s;
}

}  // namespace

PhaseGrid PhaseGrid::make(double x_min, double x_max, int nx,
                          double v_min, double v_max, int nv) {
    if (nx < 4) throw std::invalid_argument("nx must be >= 4");
    if (nv < 4) throw std::invalid_argument("nv must be >= 4");
    if (!(x_max > x_min)) throw std::invalid_argument("x_max must exceed x_min");
    if (!(v_max > v_min)) throw std::invalid_argument("v_max must exceed v_min");
    if (!(v_min < 0.0 && 0.0 < v_max))
        throw std::invalid_argument("velocity window must bracket zero (v_min < 0 < v_max)");
    PhaseGrid g;
    g.x_min = x_min; g.x_max = x_max; g.nx = nx;
    g.v_min = v_min; g.v_max = v_max; g.nv = nv;
    g.dx = (x_max - x_min) / nx;
    g.dv = (v_max - v_min) / nv;
    return g;
}

double ConnectorProfile::evaluate(double x) const {
    if (x >= L0) return u_plus;
    if (x <= -L0) return u_minus;
    double th = (x + L0) / (2.0 * L0);
    return u_minus + (u_plus - u_minus) * smoothstep(th);
}

ConnectorProfile build_connector(double u_minus, double u_plus, double L0,
                                 const PhaseGrid& grid) {
    if (!(L0 > 0.0)) throw std::domain_error("connector half-width L0 must be positive");
    if (!(L0 < grid.x_max && -L0 > grid.x_min))
        throw std::domain_error("connector transition zone [-L0, L0] not contained in the grid");
    ConnectorProfile p;
    p.L0 = L0;
    p.u_minus = u_minus;
    p.u_plus = u_plus;
    p.values.resize(grid.nx);
    for (int i = 0; i < grid.nx; ++i) p.values[i] = p.evaluate(grid.x_center(i));
    return p;
}

void SimConfig::validate() const {
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in [0, 1)");
    if (!(cfl > 0.0 && cfl < 1.0))
        throw std::invalid_argument("cfl must lie in (0, 1)");
    if (!(t_final >= 0.0))
        throw std::invalid_argument("t_final must be nonnegative");
    if (grid.nx < 4 || grid.nv < 4)
        throw std::invalid_argument("nx and nv must be >= 4");
    if (!(L0 > 0.0 && L0 < grid.x_max && -L0 > grid.x_min))
        throw std::invalid_argument("l0 must be positive with [-l0, l0] inside the grid");
    if (output.frame_stride < 0)
        throw std::invalid_argument("frame_stride must be >= 0");
    if (!(drag_sign == 1.0 || drag_sign == -1.0))
        throw std::invalid_argument("drag_sign must be +1 or -1");
}

std::pair<FluidField, KineticField> make_initial_data(const SimConfig& config) {
    const PhaseGrid& g = config.grid;
    const InitialData& d = config.initial;

    FluidField u;
    u.u_minus = config.u_minus;
    u.u_plus = config.u_plus;
    u.u.resize(g.nx);
    ConnectorProfile ubar = build_connector(config.u_minus, config.u_plus, config.L0, g);

    switch (d.u_family) {
        case UFamily::Riemann: {
            if (!(d.u_delta > 0.0)) throw std::domain_error("u_delta must be positive");
            for (int i = 0; i < g.nx; ++i) {
                double x = g.x_center(i);
                double th = std::tanh((x - d.u_center) / d.u_delta);
                u.u[i] = 0.5 * (config.u_minus + config.u_plus)
                       + 0.5 * (config.u_plus - config.u_minus) * th;
            }
            break;
        }
        case UFamily::Bump: {
            if (!(d.u_width > 0.0)) throw std::domain_error("u_width must be positive");
            if (d.u_center - d.u_width <= g.x_min || d.u_center + d.u_width >= g.x_max)
                throw std::domain_error("u bump support exceeds the grid");
            for (int i = 0; i < g.nx; ++i) {
                double x = g.x_center(i);
                u.u[i] = ubar.values[i] + d.u_amplitude * bump6((x - d.u_center) / d.u_width);
            }
            break;
        }
        case UFamily::Constant: {
            if (d.u_value != config.u_minus || d.u_value != config.u_plus)
                throw std::domain_error("constant u family requires u_minus == u_plus == u_value");
            for (int i = 0; i < g.nx; ++i) u.u[i] = d.u_value;
            break;
        }
    }

    KineticField f(g.nx, g.nv);
    switch (d.f_family) {
        case FFamily::Zero:
            break;
        case FFamily::Gaussian: {
            if (!(d.f_sigma_x > 0.0 && d.f_sigma_v > 0.0))
                throw std::domain_error("gaussian widths must be positive");
            // keep the (numerically) compact support inside the grid
            if (d.f_center_x - 5.0 * d.f_sigma_x < g.x_min ||
                d.f_center_x + 5.0 * d.f_sigma_x > g.x_max ||
                d.f_center_v - 5.0 * d.f_sigma_v < g.v_min ||
                d.f_center_v + 5.0 * d.f_sigma_v > g.v_max)
                throw std::domain_error("gaussian f support (5 sigma) exceeds the grid");
            const double two_pi = 6.283185307179586;
            double amp = d.f_mass / (two_pi * d.f_sigma_x * d.f_sigma_v);
            for (int i = 0; i < g.nx; ++i) {
                double ax = (g.x_center(i) - d.f_center_x) / d.f_sigma_x;
                for (int j = 0; j < g.nv; ++j) {
                    double av = (g.v_center(j) - d.f_center_v) / d.f_sigma_v;
                    f.at(i, j) = amp * std::exp(-0.5 * (ax * ax + av * av));
                }
            }
            break;
        }
        case FFamily::Box: {
            if (d.f_center_x - d.f_half_width_x < g.x_min ||
                d.f_center_x + d.f_half_width_x > g.x_max ||
                d.f_center_v - d.f_half_width_v < g.v_min ||
                d.f_center_v + d.f_half_width_v > g.v_max)
                throw std::domain_error("box f support exceeds the grid");
            if (d.f_height < 0.0) throw std::domain_error("f_height must be nonnegative");
            for (int i = 0; i < g.nx; ++i) {
                if (std::abs(g.x_center(i) - d.f_center_x) > d.f_half_width_x) continue;
                for (int j = 0; j < g.nv; ++j) {
                    if (std::abs(g.v_center(j) - d.f_center_v) <= d.f_half_width_v)
                        f.at(i, j) = d.f_height;
                }
            }
            break;
        }
    }
    return {std::move(u), std::move(f)};
}

double interp_u(const FluidField& u, const PhaseGrid& grid, double x) {
    const int nx = grid.nx;
    double s = (x - grid.x_min) / grid.dx - 0.5;
    double fi = std::floor(s);
    int i0 = static_cast<int>(fi);
    if (i0 < -1) return u.u_minus;
    if (i0 >= nx) return u.u_plus;
    double w = s - fi;
    double a = (i0 < 0) ? u.u_minus : u.u[i0];
    double b = (i0 + 1 >= nx) ? u.u_plus : u.u[i0 + 1];
    return (1.0 - w) * a + w * b;
}

}  // namespace bvlab
