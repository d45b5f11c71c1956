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

#ifndef ARXON_CODEC_HPP
#define ARXON_CODEC_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace arxon {

/// Crosstalk-mitigation codebooks: nibble-granular encodings whose code
/// words carry fewer 1s than the raw data, reducing optical power in
/// adjacent channels. PCTM5B maps 4 bits onto 5, PCTM6B onto 6.
enum class CodecScheme { Pctm5b, Pctm6b };

std::string scheme_name(CodecScheme scheme);
CodecScheme scheme_from_name(const std::string& name);
int code_width(CodecScheme scheme);

/// 16-entry data-word -> code-word table.
struct Codebook {
    CodecScheme scheme;
    int width;
    std::array<std::uint8_t, 16> code; ///< indexed by nibble

    static const Codebook& get(CodecScheme scheme);
    int total_code_weight() const;
};

std::uint8_t encode_nibble(CodecScheme scheme, std::uint8_t nibble);

/// Inverse lookup; a code word absent from the table is a DecodeError (it
/// signals corruption on non-approximated data, which the error-free channel
/// assumption rules out in simulation).
std::uint8_t decode_word(CodecScheme scheme, std::uint8_t code);

enum class NibbleTreatment : std::uint8_t {
    Encoded,   ///< ran through the codebook, occupies code_width bits
    RawApprox, ///< gated: approximated bits pass through unencoded, 4 bits
    Truncated, ///< gated: bits are not transmitted at all, 0 bits
};

/// Flit bit range excluded from encoding. truncated=false means the bits are
/// still transmitted (approximated), truncated=true means they are absent.
struct GatedRange {
    int lo = 0;
    int hi = 0; ///< exclusive
    bool truncated = false;
};

/// Encoded 64-bit flit with per-nibble framing metadata, enough to invert
/// the encoding exactly (truncated nibbles reconstruct as zero).
struct FramedWord {
    CodecScheme scheme = CodecScheme::Pctm5b;
    std::array<NibbleTreatment, 16> nibbles{};
    std::vector<bool> bits; ///< concatenated stream, nibble 0 first, LSB first

    int bit_count() const { return static_cast<int>(bits.size()); }
};

/// Encode a flit, gating the given ranges away from the encoder. A nibble
/// partially covered by a gated range is promoted to gated in full, so
/// approximable bits never reach the codebook.
FramedWord encode_flit(CodecScheme scheme, std::uint64_t flit, std::span<const GatedRange> gated);

std::uint64_t decode_flit(const FramedWord& framed);

struct CodecCost {
    int encoded_nibbles = 0;
    int extra_bits = 0;               ///< encoded_nibbles x (code_width - 4)
    double mr_overhead_fraction = 0.0; ///< extra_bits / 64
    int latency_cycles = 0;            ///< 2 when anything is encoded, else 0
};

CodecCost codec_cost(CodecScheme scheme, std::uint64_t flit, std::span<const GatedRange> gated);

} // namespace arxon

#endif // ARXON_CODEC_HPP
