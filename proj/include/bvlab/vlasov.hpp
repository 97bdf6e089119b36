#pragma once

#include "bvlab/core.hpp"

namespace bvlab {

// Foot of the backward characteristic through (x, v) over one step.
struct CharacteristicEndpoint {
    double X = 0.0;
    double V = 0.0;
    bool exited = false;  // X left [x_min - dx, x_max + dx]
};

// Backward integration of dX/ds = V, dV/ds = u(X) - V over [t - dt, t] with
// u frozen. Midpoint exponential rule: the linear drag is integrated exactly
// (the map is exact for constant u), u is sampled once at the predicted
// spatial midpoint, local error O(dt^3).
CharacteristicEndpoint trace_back(double x, double v, const FluidField& u,
                                  const PhaseGrid& grid, double dt);

// Semi-Lagrangian step f'(x, v) = e^{dt} f(X, V), f zero-extended outside the
// grid. Gather interpolation is 4x4 tensor cubic clamped to the bounds of the
// enclosing 2x2 stencil, so values stay within local range and f' >= 0.
KineticField vlasov_step(const KineticField& f, const FluidField& u,
                         const PhaseGrid& grid, double dt);

// Central finite-difference determinant of the backward map's Jacobian
// d(X,V)/d(x,v); the continuum value is e^{dt}.
double jacobian_probe(double x, double v, const FluidField& u,
                      const PhaseGrid& grid, double dt);

}  // namespace bvlab
