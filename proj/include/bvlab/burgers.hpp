#pragma once

#include "bvlab/core.hpp"

namespace bvlab {

// Kinetic drag force density on the fluid: s_i = int f(x_i, v) (v - u_i) dv.
struct DragSource {
    std::vector<double> s;
};

struct NumericalBlowup : std::runtime_error {
    explicit NumericalBlowup(const std::string& what, long step = -1, double t = 0.0)
        : std::runtime_error(what), step(step), time(t) {}
    long step;
    double time;
};

// Largest stable step: cfl * min(dx / max|u|, dx^2 / (2 eps)), absent terms
// dropped; falls back to cfl * dx when both are absent.
double stable_dt(const FluidField& u, double epsilon, const PhaseGrid& grid, double cfl);

// One conservative step of u_t + (u^2/2)_x = eps u_xx + s with ghost states
// u_minus / u_plus. The interface dissipation is max(eps, a dx/2): the local
// Lax-Friedrichs coefficient is reduced by the resolved physical viscosity,
// so it vanishes on eps-resolving grids and reverts to plain LLF at eps = 0.
FluidField burgers_step(const FluidField& u, const DragSource& source,
                        double epsilon, double dt, const PhaseGrid& grid);

}  // namespace bvlab
