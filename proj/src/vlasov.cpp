#include "bvlab/vlasov.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace bvlab {

CharacteristicEndpoint trace_back(double x, double v, const FluidField& u,
                                  const PhaseGrid& grid, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("trace_back requires dt > 0");
    const double e1 = std::expm1(dt);
    const double eh = std::expm1(0.5 * dt);

    // spatial midpoint predictor (exact for constant u, frozen at u(x))
    double xm = x - eh * v + (eh - 0.5 * dt) * interp_u(u, grid, x);
    double um = interp_u(u, grid, xm);

    CharacteristicEndpoint e;
    e.V = v + e1 * (v - um);
    e.X = x - e1 * v + (e1 - dt) * um;
    e.exited = (e.X < grid.x_min - grid.dx) || (e.X > grid.x_max + grid.dx);
    return e;
}

namespace {

inline void cubic_weights(double w, double* c) {
    const double wm = w - 1.0, wp = w + 1.0, w2 = w - 2.0;
    c[0] = -w * wm * w2 / 6.0;
    c[1] = wp * wm * w2 / 2.0;
    c[2] = -wp * w * w2 / 2.0;
    c[3] = wp * w * wm / 6.0;
}

}  // namespace

KineticField vlasov_step(const KineticField& f, const FluidField& u,
                         const PhaseGrid& grid, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("vlasov_step requires dt > 0");
    if (f.nx != grid.nx || f.nv != grid.nv)
        throw std::invalid_argument("kinetic field size does not match the grid");

    const int nx = grid.nx, nv = grid.nv;
    const double e1 = std::expm1(dt);
    const double eh = std::expm1(0.5 * dt);
    const double c2h = eh - 0.5 * dt;
    const double c2 = e1 - dt;
    const double growth = 1.0 + e1;  // e^{dt}
    const double inv_dx = 1.0 / grid.dx, inv_dv = 1.0 / grid.dv;

    KineticField out(nx, nv);
    const double* fd = f.f.data();
    double cwx[4], cwv[4];

    for (int i = 0; i < nx; ++i) {
        const double x = grid.x_center(i);
        const double ui = u.u[i];
        for (int j = 0; j < nv; ++j) {
            const double v = grid.v_center(j);
            const double xm = x - eh * v + c2h * ui;
            const double um = interp_u(u, grid, xm);
            const double V = v + e1 * (v - um);
            const double X = x - e1 * v + c2 * um;

            const double sx = (X - grid.x_min) * inv_dx - 0.5;
            const double sv = (V - grid.v_min) * inv_dv - 0.5;
            const double fix = std::floor(sx), fjv = std::floor(sv);
            const int i0 = static_cast<int>(fix);
            const int j0 = static_cast<int>(fjv);
            if (i0 < -2 || i0 > nx || j0 < -2 || j0 > nv) continue;  // foot in vacuum

            cubic_weights(sx - fix, cwx);
            cubic_weights(sv - fjv, cwv);

            double acc = 0.0;
            double lo = 0.0, hi = 0.0;
            bool bounds_set = false;
            for (int a = 0; a < 4; ++a) {
                const int ia = i0 - 1 + a;
                if (ia < 0 || ia >= nx) {
                    if (a == 1 || a == 2) bounds_set = true;  // zero enters the 2x2 stencil
                    continue;
                }
                const double* row = fd + static_cast<size_t>(ia) * nv;
                double rowacc = 0.0;
                for (int b = 0; b < 4; ++b) {
                    const int jb = j0 - 1 + b;
                    if (jb < 0 || jb >= nv) {
                        if ((a == 1 || a == 2) && (b == 1 || b == 2)) bounds_set = true;
                        continue;
                    }
                    const double val = row[jb];
                    rowacc += cwv[b] * val;
                    if ((a == 1 || a == 2) && (b == 1 || b == 2)) {
                        if (!bounds_set && lo == 0.0 && hi == 0.0 && acc == 0.0 && a == 1 && b == 1) {
                            lo = hi = val;
                        } else {
                            lo = std::min(lo, val);
                            hi = std::max(hi, val);
                        }
                        bounds_set = true;
                    }
                }
                acc += cwx[a] * rowacc;
            }
            if (bounds_set) {
                lo = std::min(lo, 0.0);  // out-of-range neighbors are vacuum
            }
            double clamped = std::clamp(acc, std::min(lo, hi), std::max(lo, hi));
            if (clamped < 0.0) clamped = 0.0;
            assert(clamped >= 0.0);
            out.at(i, j) = growth * clamped;
        }
    }
    return out;
}

double jacobian_probe(double x, double v, const FluidField& u,
                      const PhaseGrid& grid, double dt) {
    const double h = 1e-5 * std::max({1.0, std::abs(x), std::abs(v)});
    auto ep = trace_back(x + h, v, u, grid, dt);
    auto em = trace_back(x - h, v, u, grid, dt);
    auto fp = trace_back(x, v + h, u, grid, dt);
    auto fm = trace_back(x, v - h, u, grid, dt);
    const double Xx = (ep.X - em.X) / (2.0 * h);
    const double Vx = (ep.V - em.V) / (2.0 * h);
    const double Xv = (fp.X - fm.X) / (2.0 * h);
    const double Vv = (fp.V - fm.V) / (2.0 * h);
    return Xx * Vv - Xv * Vx;
}

}  // namespace bvlab
