#include "voltlab/voltammogram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "voltlab/errors.hpp"
#include "voltlab/textio.hpp"

namespace voltlab {

std::string to_string(CellCondition c) {
    switch (c) {
        case CellCondition::Normal: return "normal";
        case CellCondition::Disconnected: return "disconnected";
        case CellCondition::LowVolume: return "low-volume";
    }
    return "normal";
}

CellCondition condition_from_string(const std::string& s) {
    if (s == "normal")
        return CellCondition::Normal;
    if (s == "disconnected")
        return CellCondition::Disconnected;
    if (s == "low-volume" || s == "low_volume" || s == "lowvolume")
        return CellCondition::LowVolume;
    throw UsageError("unknown cell condition '" + s +
                     "' (expected normal, disconnected or low-volume)");
}

std::string voltammogram_to_csv(const Voltammogram& gram) {
    std::string out;
    out.reserve(gram.samples.size() * 32 + 256);
    auto meta = [&out](const std::string& key, const std::string& value) {
        out += "# ";
        out += key;
        out += '=';
        out += value;
        out += '\n';
    };
    meta("v_min", format_double(gram.program.v_min));
    meta("v_max", format_double(gram.program.v_max));
    meta("scan_rate", format_double(gram.program.scan_rate));
    meta("cycles", std::to_string(gram.program.cycles));
    meta("dt", format_double(gram.program.dt));
    meta("seed", std::to_string(gram.seed));
    meta("noise_scale", format_double(gram.noise_scale));
    if (gram.condition)
        meta("condition", to_string(*gram.condition));
    out += "t,V,I\n";
    for (const Sample& s : gram.samples) {
        out += format_double(s.t);
        out += ',';
        out += format_double(s.v);
        out += ',';
        out += format_double(s.i);
        out += '\n';
    }
    return out;
}

void write_voltammogram_csv(const Voltammogram& gram, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot open '" + path + "' for writing");
    const std::string text = voltammogram_to_csv(gram);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f)
        throw std::runtime_error("short write to '" + path + "'");
}

namespace {

void infer_missing_program(Voltammogram& gram,
                           const std::map<std::string, std::string>& meta) {
    if (meta.count("v_min") && meta.count("v_max") && meta.count("scan_rate") &&
        meta.count("cycles") && meta.count("dt"))
        return;
    if (gram.samples.empty())
        return;
    double v_lo = gram.samples.front().v, v_hi = v_lo;
    for (const Sample& s : gram.samples) {
        v_lo = std::min(v_lo, s.v);
        v_hi = std::max(v_hi, s.v);
    }
    std::vector<double> dts;
    dts.reserve(gram.samples.size());
    for (std::size_t k = 1; k < gram.samples.size(); ++k)
        dts.push_back(gram.samples[k].t - gram.samples[k - 1].t);
    double dt = 1.0;
    if (!dts.empty()) {
        std::nth_element(dts.begin(), dts.begin() + dts.size() / 2, dts.end());
        dt = dts[dts.size() / 2];
    }
    gram.program.v_min = v_lo;
    gram.program.v_max = v_hi > v_lo ? v_hi : v_lo + 1.0;
    gram.program.dt = dt > 0 ? dt : 1.0;
    // Median |dV|/dt approximates the scan rate for triangular sweeps.
    std::vector<double> rates;
    for (std::size_t k = 1; k < gram.samples.size(); ++k) {
        double dv = std::fabs(gram.samples[k].v - gram.samples[k - 1].v);
        double dtk = gram.samples[k].t - gram.samples[k - 1].t;
        if (dtk > 0)
            rates.push_back(dv / dtk);
    }
    double rate = 1.0;
    if (!rates.empty()) {
        std::nth_element(rates.begin(), rates.begin() + rates.size() / 2, rates.end());
        rate = rates[rates.size() / 2];
    }
    gram.program.scan_rate = rate > 0 ? rate : 1.0;
    gram.program.cycles = 1;
}

}  // namespace

Voltammogram parse_voltammogram_csv(const std::string& text, const std::string& origin) {
    Voltammogram gram;
    std::map<std::string, std::string> meta;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::string_view sv = trim(line);
        if (sv.empty())
            continue;
        if (sv.front() == '#') {
            sv.remove_prefix(1);
            sv = trim(sv);
            auto eq = sv.find('=');
            if (eq != std::string_view::npos)
                meta[std::string(trim(sv.substr(0, eq)))] =
                    std::string(trim(sv.substr(eq + 1)));
            continue;
        }
        if (!header_seen) {
            if (sv != "t,V,I")
                throw UsageError(origin + ":" + std::to_string(lineno) +
                                 ": expected header 't,V,I'");
            header_seen = true;
            continue;
        }
        Sample s;
        auto c1 = sv.find(',');
        auto c2 = c1 == std::string_view::npos ? c1 : sv.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
            !parse_double(trim(sv.substr(0, c1)), s.t) ||
            !parse_double(trim(sv.substr(c1 + 1, c2 - c1 - 1)), s.v) ||
            !parse_double(trim(sv.substr(c2 + 1)), s.i))
            throw UsageError(origin + ":" + std::to_string(lineno) +
                             ": malformed sample line");
        gram.samples.push_back(s);
    }
    if (!header_seen)
        throw UsageError(origin + ": missing 't,V,I' header");

    auto get = [&meta](const char* key) -> const std::string* {
        auto it = meta.find(key);
        return it == meta.end() ? nullptr : &it->second;
    };
    bool meta_ok = true;
    if (auto* s = get("v_min")) meta_ok &= parse_double(*s, gram.program.v_min);
    if (auto* s = get("v_max")) meta_ok &= parse_double(*s, gram.program.v_max);
    if (auto* s = get("scan_rate")) meta_ok &= parse_double(*s, gram.program.scan_rate);
    if (auto* s = get("dt")) meta_ok &= parse_double(*s, gram.program.dt);
    if (auto* s = get("cycles")) {
        std::uint64_t c = 0;
        meta_ok &= parse_u64(*s, c);
        gram.program.cycles = static_cast<std::uint32_t>(c);
    }
    if (auto* s = get("seed")) meta_ok &= parse_u64(*s, gram.seed);
    if (auto* s = get("noise_scale")) meta_ok &= parse_double(*s, gram.noise_scale);
    if (auto* s = get("condition")) gram.condition = condition_from_string(*s);
    if (!meta_ok)
        throw UsageError(origin + ": malformed metadata value");
    infer_missing_program(gram, meta);
    return gram;
}

Voltammogram read_voltammogram_csv(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_voltammogram_csv(buf.str(), path);
}

}  // namespace voltlab
