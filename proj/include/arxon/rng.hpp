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

#ifndef ARXON_RNG_HPP
#define ARXON_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace arxon {

/// Seeded RNG with portable draw helpers. mt19937_64 output is specified by
/// the standard, so identical seeds reproduce bit-identical streams on every
/// platform; the std:: distributions are not, which is why the uniform and
/// gaussian draws are spelled out here.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t uniform_u64(std::uint64_t n) { return engine_() % n; }

    /// Standard normal via Box-Muller (no cached spare, so the stream
    /// consumed per call is fixed).
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace arxon

#endif // ARXON_RNG_HPP
