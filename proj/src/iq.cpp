#include "rflab/iq.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rflab/util.hpp"

static_assert(std::endian::native == std::endian::little,
              "I/Q file writer assumes a little-endian host");

namespace rflab {

double IqBurst::mean_power() const {
    if (samples.empty()) return 0.0;
    double acc = 0.0;
    for (const auto& s : samples) acc += double(s.real()) * s.real() + double(s.imag()) * s.imag();
    return acc / samples.size();
}

double IqBurst::mean_on_power() const {
    double acc = 0.0;
    size_t n = 0;
    for (const auto& s : samples) {
        const double p = double(s.real()) * s.real() + double(s.imag()) * s.imag();
        if (p > 0.0) {
            acc += p;
            ++n;
        }
    }
    return n ? acc / n : 0.0;
}

Band IqBurst::hull() const {
    if (bands.empty()) return {};
    Band h = bands.front();
    for (const auto& b : bands) {
        h.lo_hz = std::min(h.lo_hz, b.lo_hz);
        h.hi_hz = std::max(h.hi_hz, b.hi_hz);
    }
    return h;
}

void save_iq(const IqBurst& burst, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DiskError("cannot open for write: " + path);
    const Band h = burst.hull();
    char header[512];
    const int n = std::snprintf(header, sizeof(header),
                                "rfiq-1\n"
                                "sample_rate_hz %.17g\n"
                                "label_mask %u\n"
                                "length %zu\n"
                                "band_low_hz %.17g\n"
                                "band_high_hz %.17g\n"
                                "seed %llu\n"
                                "data float32 iq interleaved le\n",
                                burst.sample_rate_hz, burst.label_mask, burst.samples.size(),
                                h.lo_hz, h.hi_hz, static_cast<unsigned long long>(burst.seed));
    f.write(header, n);
    f.write(reinterpret_cast<const char*>(burst.samples.data()),
            static_cast<std::streamsize>(burst.samples.size() * sizeof(std::complex<float>)));
    if (!f) throw DiskError("short write: " + path);
}

IqBurst load_iq(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DiskError("cannot open: " + path);
    std::string line;
    auto next = [&]() -> std::string {
        if (!std::getline(f, line)) throw std::runtime_error("truncated header: " + path);
        return line;
    };
    if (next() != "rfiq-1") throw std::runtime_error("bad magic in " + path);

    IqBurst b;
    size_t length = 0;
    Band band;
    for (int i = 0; i < 6; ++i) {
        std::istringstream ls(next());
        std::string key;
        ls >> key;
        if (key == "sample_rate_hz") ls >> b.sample_rate_hz;
        else if (key == "label_mask") ls >> b.label_mask;
        else if (key == "length") ls >> length;
        else if (key == "band_low_hz") ls >> band.lo_hz;
        else if (key == "band_high_hz") ls >> band.hi_hz;
        else if (key == "seed") ls >> b.seed;
        else throw std::runtime_error("unknown header key '" + key + "' in " + path);
    }
    next();  // payload descriptor
    b.bands = {band};
    b.samples.resize(length);
    f.read(reinterpret_cast<char*>(b.samples.data()),
           static_cast<std::streamsize>(length * sizeof(std::complex<float>)));
    if (static_cast<size_t>(f.gcount()) != length * sizeof(std::complex<float>))
        throw std::runtime_error("truncated payload: " + path);
    return b;
}

}  // namespace rflab
