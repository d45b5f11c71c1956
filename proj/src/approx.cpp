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

#include "arxon/approx.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "arxon/common.hpp"
#include "arxon/config.hpp"

namespace arxon {

namespace {

inline std::uint64_t low_bits_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

} // namespace

FloatFields split_float(float value) {
    std::uint32_t bits = std::bit_cast<std::uint32_t>(value);
    FloatFields f;
    f.precision = FloatPrecision::Single;
    f.sign = bits >> 31;
    f.exponent = (bits >> 23) & 0xffu;
    f.mantissa = bits & 0x7fffffu;
    return f;
}

FloatFields split_float(double value) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(value);
    FloatFields f;
    f.precision = FloatPrecision::Double;
    f.sign = static_cast<unsigned>(bits >> 63);
    f.exponent = static_cast<unsigned>((bits >> 52) & 0x7ffu);
    f.mantissa = bits & 0xfffffffffffffULL;
    return f;
}

std::uint32_t join_bits_single(const FloatFields& f) {
    if (f.precision != FloatPrecision::Single)
        throw std::invalid_argument("fields hold a double-precision value");
    return (static_cast<std::uint32_t>(f.sign) << 31) |
           (static_cast<std::uint32_t>(f.exponent & 0xffu) << 23) |
           static_cast<std::uint32_t>(f.mantissa & 0x7fffffu);
}

std::uint64_t join_bits_double(const FloatFields& f) {
    if (f.precision != FloatPrecision::Double)
        throw std::invalid_argument("fields hold a single-precision value");
    return (static_cast<std::uint64_t>(f.sign) << 63) |
           (static_cast<std::uint64_t>(f.exponent & 0x7ffu) << 52) |
           (f.mantissa & 0xfffffffffffffULL);
}

float join_float_single(const FloatFields& f) {
    return std::bit_cast<float>(join_bits_single(f));
}

double join_float_double(const FloatFields& f) {
    return std::bit_cast<double>(join_bits_double(f));
}

float approximate_float(float value, int lsb_bits, const ChannelOutcome& outcome) {
    FloatFields f = split_float(value);
    if (lsb_bits < 0 || lsb_bits > f.mantissa_width())
        throw PolicyError("float LSB count " + std::to_string(lsb_bits) +
                          " exceeds the single-precision mantissa width");
    f.mantissa &= ~(outcome.lost_mask & low_bits_mask(lsb_bits));
    return join_float_single(f);
}

double approximate_float(double value, int lsb_bits, const ChannelOutcome& outcome) {
    FloatFields f = split_float(value);
    if (lsb_bits < 0 || lsb_bits > f.mantissa_width())
        throw PolicyError("float LSB count " + std::to_string(lsb_bits) +
                          " exceeds the double-precision mantissa width");
    f.mantissa &= ~(outcome.lost_mask & low_bits_mask(lsb_bits));
    return join_float_double(f);
}

int effective_float_lsb_bits(int requested, FloatPrecision precision) {
    int cap = precision == FloatPrecision::Single ? 23 : 32;
    return std::min(requested, cap);
}

IntApprox approximate_int(std::uint64_t value, int width, int msb_bits, int lsb_bits,
                          const ChannelOutcome& outcome) {
    if (width != 32 && width != 64) throw std::invalid_argument("integer width must be 32 or 64");
    if (msb_bits < 0 || lsb_bits < 0 || msb_bits + lsb_bits > width)
        throw std::invalid_argument("msb_bits + lsb_bits exceeds the integer width");

    IntApprox out;
    std::uint64_t lane = value & low_bits_mask(width);
    if (msb_bits > 0) {
        std::uint64_t kept = low_bits_mask(width - msb_bits);
        out.msb_violation = (lane & ~kept) != 0;
        lane &= kept;
    }
    lane &= ~(outcome.lost_mask & low_bits_mask(lsb_bits));
    out.value = lane;
    return out;
}

void ApproxPolicy::validate() const {
    auto in_range = [](int v) { return v >= 0 && v <= 32; };
    if (!in_range(float_lsb_bits) || !in_range(int_msb_bits) || !in_range(int_lsb_bits))
        throw ConfigError("policy bit counts must be within 0..32 (header count range)");
    if (int_msb_bits + int_lsb_bits > 32)
        throw ConfigError("int_msb_bits + int_lsb_bits must fit a 32-bit lane");
    if (power_reduction < 0.0 || power_reduction > 1.0)
        throw ConfigError("power_reduction must be within 0..1");
}

ApproxPolicy ApproxPolicy::preset(const std::string& name) {
    struct Row {
        const char* app;
        int float_bits;
        int int_bits;
        int reduction_pct;
    };
    // Per-application settings selected offline under the 10% output-error
    // threshold; integer counts are MSB truncation widths.
    static const Row rows[] = {
        {"blackscholes", 32, 24, 90}, {"canneal", 32, 24, 100},  {"fft", 32, 20, 50},
        {"jpeg", 22, 4, 80},          {"sobel", 32, 20, 100},    {"streamcluster", 28, 20, 80},
        {"fluidanimate", 0, 8, 100},  {"x264", 0, 12, 100},      {"mnist_train", 24, 0, 100},
        {"mnist_test", 24, 0, 100},   {"cifar10_train", 24, 0, 100},
        {"cifar10_test", 24, 0, 100},
    };
    if (name == "none") {
        ApproxPolicy p;
        p.app_name = "none";
        return p;
    }
    for (const Row& r : rows) {
        if (name == r.app) {
            ApproxPolicy p;
            p.app_name = r.app;
            p.float_lsb_bits = r.float_bits;
            p.int_msb_bits = r.int_bits;
            p.int_lsb_bits = 0;
            p.power_reduction = r.reduction_pct / 100.0;
            p.approximable_vars = {"*"};
            return p;
        }
    }
    throw ConfigError("unknown policy preset '" + name + "'");
}

std::vector<std::string> ApproxPolicy::preset_names() {
    return {"none",         "blackscholes", "canneal",     "fft",
            "jpeg",         "sobel",        "streamcluster", "fluidanimate",
            "x264",         "mnist_train",  "mnist_test",  "cifar10_train",
            "cifar10_test"};
}

ApproxPolicy ApproxPolicy::from_file(const std::string& path) {
    KeyValueFile kv = KeyValueFile::load(path);
    ApproxPolicy p;
    if (kv.has("base")) p = preset(kv.require_string("base"));
    p.app_name = kv.get_string("app_name", p.app_name);
    p.float_lsb_bits = kv.get_int("float_lsb_bits", p.float_lsb_bits);
    p.int_msb_bits = kv.get_int("int_msb_bits", p.int_msb_bits);
    p.int_lsb_bits = kv.get_int("int_lsb_bits", p.int_lsb_bits);
    p.power_reduction = kv.get_double("power_reduction", p.power_reduction);
    if (kv.has("approximable_vars")) {
        p.approximable_vars.clear();
        std::istringstream in(kv.require_string("approximable_vars"));
        std::string item;
        while (std::getline(in, item, ',')) {
            auto b = item.find_first_not_of(" \t");
            auto e = item.find_last_not_of(" \t");
            if (b != std::string::npos) p.approximable_vars.insert(item.substr(b, e - b + 1));
        }
    }
    p.validate();
    return p;
}

TransmissionPlan plan_transmission(const ApproxPolicy& policy, PacketKind kind, bool approximable,
                                   const std::string& var_id, int src, int dst,
                                   const TruncationTable& trunc_table, PlanDiagnostics* diag) {
    TransmissionPlan plan;
    if (kind == PacketKind::Other || !approximable) return plan;

    int lsb_bits = 0;
    if (kind == PacketKind::Float) {
        lsb_bits = policy.float_lsb_bits;
    } else {
        if (!policy.var_approximable(var_id)) {
            if (diag) ++diag->demoted_packets;
            return plan;
        }
        plan.int_msb_bits = policy.int_msb_bits;
        lsb_bits = policy.int_lsb_bits;
    }
    if (lsb_bits == 0) return plan; // MSB truncation alone keeps the LSB path exact

    plan.approx_lsb_bits = lsb_bits;
    if (policy.power_reduction >= 1.0 || trunc_table.should_truncate(src, dst)) {
        plan.decision = TxDecision::Truncate;
        plan.laser_fraction = 0.0;
    } else {
        plan.decision = TxDecision::ReducedPower;
        plan.laser_fraction = 1.0 - policy.power_reduction;
    }
    return plan;
}

} // namespace arxon
