/*
 * Copyright 2026 The arxon authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ARXON_COMMON_HPP
#define ARXON_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arxon {

/// Bad or missing configuration (CLI exit code 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data such as a broken trace line (CLI exit code 2).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Destination not reachable downstream of the source on the waveguide.
class RoutingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Code word not present in the active codebook.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Approximation request outside what the data format permits.
class PolicyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// dB / dBm arithmetic. All link arithmetic stays in the dB domain; linear
// milliwatts appear only in energy accounting and detection thresholds.
// ---------------------------------------------------------------------------

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

/// Linear scale factor for a dB value (3 dB -> ~2x).
inline double db_to_factor(double db) { return std::pow(10.0, db / 10.0); }

inline double factor_to_db(double factor) { return 10.0 * std::log10(factor); }

/// Slack for received-power comparisons. The network budget is solved with
/// equality at the farthest destination, so the worst-case received power
/// equals the sensitivity in real arithmetic but can land a few ulp below it
/// in doubles.
inline constexpr double kBoundaryEpsDb = 1e-9;

// ---------------------------------------------------------------------------
// Hashing (report/trace identity stamps).
// ---------------------------------------------------------------------------

class Fnv1a64 {
public:
    void update(const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            state_ ^= p[i];
            state_ *= 0x100000001b3ULL;
        }
    }
    void update(std::string_view s) { update(s.data(), s.size()); }
    std::uint64_t digest() const { return state_; }

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

inline std::uint64_t fnv1a64(std::string_view s) {
    Fnv1a64 h;
    h.update(s);
    return h.digest();
}

inline std::string hash_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace arxon

#endif // ARXON_COMMON_HPP
