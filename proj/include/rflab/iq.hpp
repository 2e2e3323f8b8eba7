#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace rflab {

// Closed frequency interval occupied by a signal, Hz relative to band center.
struct Band {
    double lo_hz = 0.0;
    double hi_hz = 0.0;
    double width() const { return hi_hz - lo_hz; }
};

// Complex-baseband burst. label_mask has one bit per emitter class;
// single-emitter bursts carry exactly one set bit. bands lists the
// occupied intervals (one per contributing emitter, possibly merged).
struct IqBurst {
    std::vector<std::complex<float>> samples;
    double sample_rate_hz = 0.0;
    uint32_t label_mask = 0;
    std::vector<Band> bands;
    uint64_t seed = 0;

    size_t size() const { return samples.size(); }
    double duration_s() const { return samples.size() / sample_rate_hz; }

    // Mean |x|^2 over all samples (1-ohm watts).
    double mean_power() const;
    // Mean |x|^2 over samples with |x| > 0 (the on-portion of a burst).
    double mean_on_power() const;

    // Convex hull of the occupied bands.
    Band hull() const;
};

// File format: 8 text lines (magic, sample_rate_hz, label_mask, length,
// band_low_hz, band_high_hz, seed, payload descriptor), then interleaved
// little-endian float32 I/Q.
void save_iq(const IqBurst& burst, const std::string& path);
IqBurst load_iq(const std::string& path);

}  // namespace rflab
