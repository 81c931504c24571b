#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "voltlab/sweep.hpp"

namespace voltlab {

enum class CellCondition { Normal, Disconnected, LowVolume };

std::string to_string(CellCondition c);
// Accepts "normal", "disconnected", "low-volume" (and "low_volume").
CellCondition condition_from_string(const std::string& s);

struct Sample {
    double t;  // seconds
    double v;  // volts
    double i;  // amperes
};

// One CV measurement set: ordered (t, V, I) samples plus sweep metadata.
// condition is present only for synthetic/labeled data; ingested files
// carry no label.
struct Voltammogram {
    std::vector<Sample> samples;
    SweepProgram program;
    std::optional<CellCondition> condition;
    std::uint64_t seed = 0;
    double noise_scale = 0.0;
};

// CSV format shared across the toolchain: leading `# key=value` metadata
// lines, a `t,V,I` header, then one sample per line. Floats are written
// with shortest round-trip formatting so identical data gives identical
// bytes.
std::string voltammogram_to_csv(const Voltammogram& gram);
void write_voltammogram_csv(const Voltammogram& gram, const std::string& path);

// Parses the format above. Metadata is optional: when program fields are
// missing they are inferred from the data (v range from samples, dt from
// median spacing) so externally produced files can still be checked.
Voltammogram read_voltammogram_csv(const std::string& path);
Voltammogram parse_voltammogram_csv(const std::string& text, const std::string& origin);

}  // namespace voltlab
