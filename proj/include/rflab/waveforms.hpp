#pragma once

// Parametric emitter synthesis: complex-baseband FHSS and DSSS bursts.
//
// Both families are constant-envelope with a continuous phase trajectory:
// FHSS is binary CPFSK hopping through a seeded permutation of its hop set,
// DSSS is binary phase keying of a chip-spread symbol stream with
// raised-cosine phase transitions (half a chip long). Continuous phase is
// what keeps >99% of the energy inside the declared occupied band; a hard
// rectangular-chip keying could not meet that with a band this tight.

#include <string>
#include <vector>

#include "rflab/iq.hpp"

namespace rflab {

enum class WaveKind { FHSS, DSSS };

struct WaveformRecipe {
    int class_id = 0;
    std::string name;
    WaveKind kind = WaveKind::FHSS;

    double symbol_power_w = 0.0;    // mean on-power, linear watts into 1 ohm
    double symbol_duration_s = 0.0;
    double phase_rad = 0.0;

    // DSSS
    double carrier_offset_hz = 0.0;
    std::vector<int> chip_sequence;  // entries in {-1,+1}
    int chips_per_symbol = 1;

    // FHSS; hop frequencies are hop_center_hz + each deviation
    double hop_center_hz = 0.0;
    std::vector<double> hop_deviations_hz;
    double hop_dwell_s = 0.0;

    // On/off duty schedule; burst_off_s == 0 means always on
    double burst_on_s = 0.0;
    double burst_off_s = 0.0;

    Band occupied_band_hz;

    double burst_period_s() const { return burst_on_s + burst_off_s; }
    double chip_rate_hz() const {
        return chips_per_symbol / symbol_duration_s;
    }
    // Binary FSK deviation used inside each hop.
    double fsk_deviation_hz() const { return 1.0 / (4.0 * symbol_duration_s); }

    // Throws std::invalid_argument / BandViolationError.
    void validate(double sample_rate_hz) const;
};

// Synthesizes samples for t in [start_time_s, start_time_s + n/rate).
// The waveform is a pure function of absolute time, so shifted windows of
// the same recipe/seed line up sample-for-sample.
IqBurst synthesize_window(const WaveformRecipe& recipe, double start_time_s, size_t n_samples,
                          double sample_rate_hz, uint64_t seed);

IqBurst synthesize(const WaveformRecipe& recipe, double duration_s, double sample_rate_hz,
                   uint64_t seed);

// Ten mutually distinguishable emitters designed for a 32 MHz receiver band.
std::vector<WaveformRecipe> default_registry();
double default_sample_rate_hz();

// Registry config I/O (JSON; powers in dBm, frequencies in Hz, times in s).
std::vector<WaveformRecipe> load_registry(const std::string& path);
void save_registry(const std::vector<WaveformRecipe>& recipes, const std::string& path);

}  // namespace rflab
