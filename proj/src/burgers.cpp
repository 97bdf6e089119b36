#include "bvlab/burgers.hpp"

#include <algorithm>
#include <cmath>

namespace bvlab {

double stable_dt(const FluidField& u, double epsilon, const PhaseGrid& grid, double cfl) {
    if (!(cfl > 0.0 && cfl < 1.0)) throw std::invalid_argument("cfl must lie in (0, 1)");
    double amax = std::max(std::abs(u.u_minus), std::abs(u.u_plus));
    for (double v : u.u) amax = std::max(amax, std::abs(v));
    double dt = -1.0;
    if (amax > 0.0) dt = grid.dx / amax;
    if (epsilon > 0.0) {
        double dif = grid.dx * grid.dx / (2.0 * epsilon);
        dt = (dt < 0.0) ? dif : std::min(dt, dif);
    }
    if (dt < 0.0) dt = grid.dx;  // nothing moves, nothing diffuses
    return cfl * dt;
}

FluidField burgers_step(const FluidField& u, const DragSource& source,
                        double epsilon, double dt, const PhaseGrid& grid) {
    const int nx = grid.nx;
    const double dx = grid.dx;
    if (static_cast<int>(u.u.size()) != nx)
        throw std::invalid_argument("fluid field size does not match the grid");
    if (static_cast<int>(source.s.size()) != nx)
        throw std::invalid_argument("drag source length does not match the grid");

    auto val = [&](int i) -> double {
        if (i < 0) return u.u_minus;
        if (i >= nx) return u.u_plus;
        return u.u[i];
    };

    // interface fluxes F[i] between cells i-1 and i, i = 0..nx
    std::vector<double> flux(nx + 1);
    const double relief = (epsilon > 0.0) ? 2.0 * epsilon / dx : 0.0;
    for (int i = 0; i <= nx; ++i) {
        double ul = val(i - 1), ur = val(i);
        double a = std::max(std::abs(ul), std::abs(ur));
        double a_art = std::max(0.0, a - relief);
        flux[i] = 0.25 * (ul * ul + ur * ur) - 0.5 * a_art * (ur - ul);
    }

    FluidField out;
    out.u_minus = u.u_minus;
    out.u_plus = u.u_plus;
    out.u.resize(nx);
    const double nudt = epsilon * dt / (dx * dx);
    bool ok = true;
    for (int i = 0; i < nx; ++i) {
        double lap = val(i + 1) - 2.0 * val(i) + val(i - 1);
        double un = u.u[i] - dt / dx * (flux[i + 1] - flux[i]) + nudt * lap + dt * source.s[i];
        if (!std::isfinite(un)) ok = false;
        out.u[i] = un;
    }
    if (!ok) throw NumericalBlowup("burgers_step produced non-finite values");
    return out;
}

}  // namespace bvlab
