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

#include "arxon/codec.hpp"

#include <bit>
#include <stdexcept>

#include "arxon/common.hpp"

namespace arxon {

namespace {

// Data word -> code word, indexed by nibble value.
constexpr std::array<std::uint8_t, 16> kPctm5b = {
    0b00000, 0b00001, 0b00010, 0b10101, 0b00100, 0b00101, 0b00110, 0b10110,
    0b01000, 0b01001, 0b01010, 0b10100, 0b01100, 0b10010, 0b10001, 0b10000,
};

constexpr std::array<std::uint8_t, 16> kPctm6b = {
    0b000000, 0b000001, 0b000010, 0b100000, 0b000100, 0b000101, 0b010101, 0b100001,
    0b001000, 0b001001, 0b001010, 0b010100, 0b100010, 0b010010, 0b010001, 0b010000,
};

const Codebook kBook5b{CodecScheme::Pctm5b, 5, kPctm5b};
const Codebook kBook6b{CodecScheme::Pctm6b, 6, kPctm6b};

} // namespace

std::string scheme_name(CodecScheme scheme) {
    return scheme == CodecScheme::Pctm5b ? "pctm5b" : "pctm6b";
}

CodecScheme scheme_from_name(const std::string& name) {
    if (name == "pctm5b") return CodecScheme::Pctm5b;
    if (name == "pctm6b") return CodecScheme::Pctm6b;
    throw ConfigError("unknown codec scheme '" + name + "' (expected pctm5b or pctm6b)");
}

int code_width(CodecScheme scheme) { return scheme == CodecScheme::Pctm5b ? 5 : 6; }

const Codebook& Codebook::get(CodecScheme scheme) {
    return scheme == CodecScheme::Pctm5b ? kBook5b : kBook6b;
}

int Codebook::total_code_weight() const {
    int total = 0;
    for (std::uint8_t c : code) total += std::popcount(static_cast<unsigned>(c));
    return total;
}

std::uint8_t encode_nibble(CodecScheme scheme, std::uint8_t nibble) {
    if (nibble > 0xf) throw std::invalid_argument("nibble out of range");
    return Codebook::get(scheme).code[nibble];
}

std::uint8_t decode_word(CodecScheme scheme, std::uint8_t code) {
    const Codebook& book = Codebook::get(scheme);
    for (std::uint8_t n = 0; n < 16; ++n)
        if (book.code[n] == code) return n;
    throw DecodeError("code word 0b" + std::to_string(code) + " (" +
                      std::to_string(static_cast<unsigned>(code)) +
                      ") is not in the " + scheme_name(scheme) + " codebook");
}

namespace {

void append_bits(std::vector<bool>& out, std::uint32_t value, int width) {
    for (int i = 0; i < width; ++i) out.push_back(((value >> i) & 1u) != 0);
}

std::array<NibbleTreatment, 16> classify_nibbles(std::span<const GatedRange> gated) {
    std::array<NibbleTreatment, 16> treat;
    treat.fill(NibbleTreatment::Encoded);
    for (const GatedRange& r : gated) {
        if (r.lo < 0 || r.hi > 64 || r.lo > r.hi)
            throw std::invalid_argument("gated range outside [0, 64)");
        if (r.lo == r.hi) continue;
        // Whole-nibble promotion: any touched nibble is gated in full.
        int first = r.lo / 4;
        int last = (r.hi - 1) / 4;
        for (int n = first; n <= last; ++n) {
            auto& t = treat[static_cast<std::size_t>(n)];
            // Truncation wins over raw pass-through if ranges overlap.
            if (r.truncated || t != NibbleTreatment::Truncated)
                t = r.truncated ? NibbleTreatment::Truncated : NibbleTreatment::RawApprox;
        }
    }
    return treat;
}

} // namespace

FramedWord encode_flit(CodecScheme scheme, std::uint64_t flit, std::span<const GatedRange> gated) {
    FramedWord out;
    out.scheme = scheme;
    out.nibbles = classify_nibbles(gated);
    const int cw = code_width(scheme);
    for (int n = 0; n < 16; ++n) {
        auto nibble = static_cast<std::uint8_t>((flit >> (4 * n)) & 0xf);
        switch (out.nibbles[static_cast<std::size_t>(n)]) {
        case NibbleTreatment::Encoded:
            append_bits(out.bits, encode_nibble(scheme, nibble), cw);
            break;
        case NibbleTreatment::RawApprox:
            append_bits(out.bits, nibble, 4);
            break;
        case NibbleTreatment::Truncated:
            break;
        }
    }
    return out;
}

std::uint64_t decode_flit(const FramedWord& framed) {
    const int cw = code_width(framed.scheme);
    std::uint64_t flit = 0;
    std::size_t pos = 0;
    auto take = [&](int width) {
        std::uint32_t v = 0;
        if (pos + static_cast<std::size_t>(width) > framed.bits.size())
            throw DecodeError("framed word shorter than its framing metadata implies");
        for (int i = 0; i < width; ++i)
            if (framed.bits[pos++]) v |= 1u << i;
        return v;
    };
    for (int n = 0; n < 16; ++n) {
        std::uint64_t nibble = 0;
        switch (framed.nibbles[static_cast<std::size_t>(n)]) {
        case NibbleTreatment::Encoded:
            nibble = decode_word(framed.scheme, static_cast<std::uint8_t>(take(cw)));
            break;
        case NibbleTreatment::RawApprox:
            nibble = take(4);
            break;
        case NibbleTreatment::Truncated:
            nibble = 0;
            break;
        }
        flit |= nibble << (4 * n);
    }
    if (pos != framed.bits.size())
        throw DecodeError("framed word longer than its framing metadata implies");
    return flit;
}

CodecCost codec_cost(CodecScheme scheme, std::uint64_t /*flit*/, std::span<const GatedRange> gated) {
    auto treat = classify_nibbles(gated);
    CodecCost cost;
    for (auto t : treat)
        if (t == NibbleTreatment::Encoded) ++cost.encoded_nibbles;
    cost.extra_bits = cost.encoded_nibbles * (code_width(scheme) - 4);
    cost.mr_overhead_fraction = static_cast<double>(cost.extra_bits) / 64.0;
    cost.latency_cycles = cost.encoded_nibbles > 0 ? 2 : 0;
    return cost;
}

} // namespace arxon
