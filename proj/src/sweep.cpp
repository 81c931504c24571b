#include "voltlab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace voltlab {

void SweepProgram::validate() const {
    if (!std::isfinite(v_min) || !std::isfinite(v_max))
        throw std::invalid_argument("sweep program: v_min/v_max must be finite");
    if (!(v_min < v_max))
        throw std::invalid_argument("sweep program: v_min must be < v_max");
    if (!(scan_rate > 0.0) || !std::isfinite(scan_rate))
        throw std::invalid_argument("sweep program: scan_rate must be positive");
    if (cycles == 0)
        throw std::invalid_argument("sweep program: cycles must be positive");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("sweep program: dt must be positive");
}

std::uint64_t SweepProgram::samples_per_cycle() const {
    const double ratio = period() / dt;
    return static_cast<std::uint64_t>(std::ceil(ratio - 1e-9));
}

std::vector<SweepPoint> sweep_waveform(const SweepProgram& program) {
    program.validate();
    const double T = program.period();
    const double half = T / 2.0;
    const std::uint64_t per_cycle = program.samples_per_cycle();

    std::vector<SweepPoint> out;
    out.reserve(program.total_samples());
    for (std::uint32_t c = 0; c < program.cycles; ++c) {
        const double t0 = static_cast<double>(c) * T;
        for (std::uint64_t j = 0; j < per_cycle; ++j) {
            const double tau = static_cast<double>(j) * program.dt;  // in [0, T)
            SweepPoint p;
            p.t = t0 + tau;
            if (tau <= half) {
                p.v = program.v_min + program.scan_rate * tau;
                p.branch = +1;
            } else {
                p.v = program.v_max - program.scan_rate * (tau - half);
                p.branch = -1;
            }
            p.v = std::clamp(p.v, program.v_min, program.v_max);
            out.push_back(p);
        }
    }
    // Closing sample: the waveform returns to v_min at t = cycles*T.
    out.push_back({static_cast<double>(program.cycles) * T, program.v_min, +1});
    return out;
}

}  // namespace voltlab
