#pragma once

#include <cstdint>

#include "voltlab/voltammogram.hpp"

namespace voltlab {

// Parameters of the synthetic cell model. Normal runs are a capacitive
// baseline plus a sech^2-shaped Faradaic peak whose center is offset by
// +dE/2 on the forward branch and -dE/2 on the return branch, which closes
// the loop into the familiar hysteretic shape.
struct CellModelParams {
    double c_dl = 1e-6;       // double-layer capacitance, farads
    double i_peak = 5e-6;     // Faradaic peak height, amperes
    double e_half = 0.0;      // half-wave potential, volts
    double delta_e = 0.12;    // forward/reverse peak separation, volts
    double peak_width = 0.06; // sech^2 width, volts
};

constexpr double kDefaultNoiseScale = 1e-7;  // amperes

// Deterministic synthetic measurement set for one run. Additive noise is
// zero-mean and bounded by +/- noise_scale, so a noise-free quantity is
// always within noise_scale of its measured value.
//
// Normal: closed hysteretic curve as described above.
// Disconnected: 3-8 random current plateaus with abrupt jumps (adjacent
//   plateau levels at least 2*i_peak apart) and occasional rail-clip spikes.
// LowVolume: normal shape with the peak attenuated by a per-seed factor
//   alpha in [0.05, 0.3] plus an ohmic slope term.
Voltammogram simulate(const SweepProgram& program, CellCondition condition,
                      std::uint64_t seed, double noise_scale = kDefaultNoiseScale,
                      const CellModelParams& params = {});

// Noise-free normal-branch current at (v, branch); exposed for tests that
// compare the generator against its closed form.
double normal_branch_current(double v, int branch, double scan_rate,
                             const CellModelParams& params = {});

}  // namespace voltlab
