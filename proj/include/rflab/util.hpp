#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rflab {

// All power arithmetic is referenced to 1 ohm; 0 dBm == 1 mW.
inline double dbm_to_watt(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w / 1e-3); }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

struct BandViolationError : std::runtime_error {
    explicit BandViolationError(const std::string& m) : std::runtime_error(m) {}
};

struct ChecksumError : std::runtime_error {
    explicit ChecksumError(const std::string& m) : std::runtime_error(m) {}
};

struct DiskError : std::runtime_error {
    explicit DiskError(const std::string& m) : std::runtime_error(m) {}
};

// FNV-1a 64-bit, used for corpus provenance checks.
inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace rflab
