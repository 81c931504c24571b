#include "voltlab/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "voltlab/rng.hpp"

namespace voltlab {

namespace {

double sech2(double x) {
    const double c = std::cosh(x);
    return 1.0 / (c * c);
}

// Bounded zero-mean noise: uniform in [-scale, +scale]. The bound keeps the
// first/last sample of a normal run within 2*scale of each other for every
// seed, not just in expectation.
double noise(Rng& rng, double scale) {
    return scale * (2.0 * rng.next_unit() - 1.0);
}

struct Plateau {
    std::uint64_t end_index;  // first sample index past this plateau
    double level;
};

}  // namespace

double normal_branch_current(double v, int branch, double scan_rate,
                             const CellModelParams& p) {
    const double s = branch >= 0 ? 1.0 : -1.0;
    const double center = p.e_half + s * p.delta_e / 2.0;
    const double x = (v - center) / p.peak_width;
    return p.c_dl * s * scan_rate + p.i_peak * sech2(x);
}

Voltammogram simulate(const SweepProgram& program, CellCondition condition,
                      std::uint64_t seed, double noise_scale,
                      const CellModelParams& params) {
    program.validate();
    if (!(noise_scale >= 0.0) || !std::isfinite(noise_scale))
        throw std::invalid_argument("simulate: noise_scale must be >= 0");

    const std::vector<SweepPoint> wave = sweep_waveform(program);
    Voltammogram gram;
    gram.program = program;
    gram.condition = condition;
    gram.seed = seed;
    gram.noise_scale = noise_scale;
    gram.samples.reserve(wave.size());

    Rng rng(split_seed(seed, static_cast<std::uint64_t>(condition)));

    switch (condition) {
        case CellCondition::Normal: {
            for (const SweepPoint& p : wave) {
                const double i = normal_branch_current(p.v, p.branch,
                                                       program.scan_rate, params) +
                                 noise(rng, noise_scale);
                gram.samples.push_back({p.t, p.v, i});
            }
            break;
        }
        case CellCondition::Disconnected: {
            // Random plateau layout. Adjacent levels are redrawn until they
            // differ by at least 2*i_peak, so the profile always jumps far
            // above anything a normal run produces.
            const std::uint64_t n = wave.size();
            const std::uint64_t plateau_count = 3 + rng.below(6);  // 3..8
            const double lo = 8.0 * params.i_peak;
            const double hi = 12.0 * params.i_peak;
            const double rail = 20.0 * params.i_peak;
            std::vector<Plateau> plateaus;
            double prev_level = 0.0;
            for (std::uint64_t k = 0; k < plateau_count; ++k) {
                double level = rng.uniform(lo, hi);
                if (k > 0) {
                    int guard = 0;
                    while (std::fabs(level - prev_level) < 2.0 * params.i_peak &&
                           guard++ < 64)
                        level = rng.uniform(lo, hi);
                    if (std::fabs(level - prev_level) < 2.0 * params.i_peak)
                        level = prev_level >= (lo + hi) / 2.0
                                    ? prev_level - 2.0 * params.i_peak
                                    : prev_level + 2.0 * params.i_peak;
                }
                std::uint64_t end = k + 1 == plateau_count
                                        ? n
                                        : (n * (k + 1)) / plateau_count +
                                              rng.below(n / plateau_count / 2 + 1);
                if (end > n)
                    end = n;
                plateaus.push_back({end, level});
                prev_level = level;
            }
            std::size_t pi = 0;
            for (std::uint64_t k = 0; k < n; ++k) {
                while (pi + 1 < plateaus.size() && k >= plateaus[pi].end_index)
                    ++pi;
                double i = plateaus[pi].level;
                if (rng.next_unit() < 0.02)
                    i = rail;  // occasional clip to the positive rail
                gram.samples.push_back({wave[k].t, wave[k].v,
                                        i + noise(rng, noise_scale)});
            }
            break;
        }
        case CellCondition::LowVolume: {
            const double alpha = rng.uniform(0.05, 0.3);
            const double v_mid = (program.v_min + program.v_max) / 2.0;
            const double slope = rng.uniform(0.5, 1.5) * params.i_peak /
                                 (program.v_max - program.v_min);
            CellModelParams attenuated = params;
            attenuated.i_peak = alpha * params.i_peak;
            for (const SweepPoint& p : wave) {
                const double i = normal_branch_current(p.v, p.branch,
                                                       program.scan_rate, attenuated) +
                                 slope * (p.v - v_mid) + noise(rng, noise_scale);
                gram.samples.push_back({p.t, p.v, i});
            }
            break;
        }
    }
    return gram;
}

}  // namespace voltlab
