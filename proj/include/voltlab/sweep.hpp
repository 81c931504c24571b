#pragma once

#include <cstdint>
#include <vector>

namespace voltlab {

// Cyclic-voltammetry sweep parameters. The potential is swept linearly from
// v_min up to v_max and back, `cycles` times, sampled every dt seconds.
struct SweepProgram {
    double v_min = -0.5;       // volts
    double v_max = 0.5;        // volts
    double scan_rate = 0.1;    // volts / second, > 0
    std::uint32_t cycles = 1;  // > 0
    double dt = 0.01;          // seconds, > 0

    // Throws std::invalid_argument naming the violated field.
    void validate() const;

    // Duration of one full triangle cycle: 2*(v_max - v_min)/scan_rate.
    double period() const { return 2.0 * (v_max - v_min) / scan_rate; }

    // ceil(period()/dt), robust against FP noise on exact ratios.
    std::uint64_t samples_per_cycle() const;

    // Periodic samples plus the closing sample at t = cycles*period().
    std::uint64_t total_samples() const {
        return static_cast<std::uint64_t>(cycles) * samples_per_cycle() + 1;
    }
};

struct SweepPoint {
    double t;    // seconds
    double v;    // volts
    int branch;  // +1 on the rising (forward) branch, -1 on the return branch
};

// Triangular excitation waveform: per cycle, samples_per_cycle() points at
// t = c*period() + j*dt, then one terminal sample at t = cycles*period()
// closing the loop at v_min.
std::vector<SweepPoint> sweep_waveform(const SweepProgram& program);

}  // namespace voltlab
