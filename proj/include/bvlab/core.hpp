#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bvlab {

// Uniform tensor grid in (x, v), cell-centered. The velocity window must
// bracket zero so the far-field state f -> 0 is representable on both sides.
struct PhaseGrid {
    double x_min = -10.0, x_max = 10.0;
    int nx = 0;
    double v_min = -8.0, v_max = 8.0;
    int nv = 0;
    double dx = 0.0, dv = 0.0;

    static PhaseGrid make(double x_min, double x_max, int nx,
                          double v_min, double v_max, int nv);

    double x_center(int i) const { return x_min + (i + 0.5) * dx; }
    double v_center(int j) const { return v_min + (j + 0.5) * dv; }
};

// Bulk gas velocity at cell centers plus the constant far-field states.
struct FluidField {
    std::vector<double> u;
    double u_minus = 0.0, u_plus = 0.0;
};

// Particle distribution on the (x, v) grid, implicitly zero outside.
struct KineticField {
    int nx = 0, nv = 0;
    std::vector<double> f;

    KineticField() = default;
    KineticField(int nx_, int nv_) : nx(nx_), nv(nv_), f(static_cast<size_t>(nx_) * nv_, 0.0) {}

    double& at(int i, int j) { return f[static_cast<size_t>(i) * nv + j]; }
    double at(int i, int j) const { return f[static_cast<size_t>(i) * nv + j]; }
};

// Smooth monotone transition between the far-field states, constant outside
// [-L0, L0]. The derivative is supported exactly in [-L0, L0].
struct ConnectorProfile {
    double L0 = 1.0;
    double u_minus = 0.0, u_plus = 0.0;
    std::vector<double> values;  // sampled at the x-grid cell centers

    // Closed-form evaluation at arbitrary x (cubic smoothstep in the gap).
    double evaluate(double x) const;
};

ConnectorProfile build_connector(double u_minus, double u_plus, double L0,
                                 const PhaseGrid& grid);

enum class UFamily { Riemann, Bump, Constant };
enum class FFamily { Zero, Gaussian, Box };

struct InitialData {
    UFamily u_family = UFamily::Riemann;
    double u_delta = 0.2;     // tanh smoothing width (Riemann)
    double u_center = 0.0;    // step / bump center
    double u_amplitude = 0.0; // bump amplitude on top of the connector
    double u_width = 1.0;     // bump half-width
    double u_value = 0.0;     // constant family

    FFamily f_family = FFamily::Zero;
    double f_mass = 1.0;
    double f_center_x = 0.0, f_center_v = 0.0;
    double f_sigma_x = 1.0, f_sigma_v = 1.0;   // gaussian
    double f_height = 1.0;
    double f_half_width_x = 1.0, f_half_width_v = 1.0;  // box
};

struct OutputControls {
    std::vector<double> snapshot_times;
    int frame_stride = 1;        // 0 = auto (cap total frames)
    int max_frames = 2048;       // used when frame_stride == 0
    int max_kinetic_frames = 0;  // 0 = no kinetic frames beyond snapshots
    std::string output_dir = "bvlab_out";
};

struct SimConfig {
    double epsilon = 0.05;
    double t_final = 1.0;
    double cfl = 0.4;
    PhaseGrid grid;
    double u_minus = 0.0, u_plus = 0.0;
    double L0 = 1.0;
    InitialData initial;
    OutputControls output;
    double drag_sign = 1.0;  // verification mutation hook, see README

    void validate() const;  // throws std::invalid_argument naming the key
};

// Per-step scalar diagnostics.
struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;
    double drag_dissipation = 0.0;
    double viscous_dissipation = 0.0;
    double mass = 0.0;
    double momentum = 0.0;
    double boundary_mass_indicator = 0.0;
};

std::pair<FluidField, KineticField> make_initial_data(const SimConfig& config);

// Linear interpolation of u at x with ghost extension to u_minus / u_plus.
double interp_u(const FluidField& u, const PhaseGrid& grid, double x);

}  // namespace bvlab
