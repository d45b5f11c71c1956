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

#ifndef ARXON_TRACE_HPP
#define ARXON_TRACE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace arxon {

enum class DataKind { F32, F64, I32, I64, Other };

std::string kind_name(DataKind kind);
DataKind kind_from_name(const std::string& name);
int kind_width(DataKind kind); ///< payload bits per value
bool kind_is_float(DataKind kind);
bool kind_is_int(DataKind kind);

/// One network transaction. Values are stored as raw lane bit patterns:
/// float kinds hold the IEEE bit pattern of the (widened) value, integer and
/// Other kinds hold the unsigned payload.
struct TraceRecord {
    std::uint64_t cycle = 0;
    int src = 0;
    int dst = 0;
    DataKind kind = DataKind::Other;
    std::vector<std::uint64_t> values;
    bool approximable = false;
    std::string var_id; ///< empty when absent

    double value_as_double(std::size_t i) const;
    float value_as_float(std::size_t i) const;
    std::uint64_t payload_bits() const { return values.size() * static_cast<std::uint64_t>(kind_width(kind)); }
};

/// JSON-lines trace IO. Field names: cycle, src, dst, kind, values,
/// approximable, var_id (omitted when absent). Parse failures carry the
/// 1-based line number.
std::vector<TraceRecord> parse_trace(const std::string& text, const std::string& origin);
std::vector<TraceRecord> load_trace(const std::string& path);
std::string trace_to_jsonl(const std::vector<TraceRecord>& records);

enum class TraceProfile { FloatHeavy, IntHeavy, Mixed };

TraceProfile profile_from_name(const std::string& name);
std::string profile_name(TraceProfile profile);

/// Synthetic trace generator. Kind mix per profile (FloatHeavy: 40% F32,
/// 35% F64, 10% I32, 5% I64, 10% Other; IntHeavy: 10/5/45/30/10;
/// Mixed: 25/20/20/10/25), src/dst uniform over ordered downstream GWI
/// pairs, deterministic per seed. Approximable integers stay within an
/// 8-bit value range so MSB-truncation headroom holds by construction.
std::vector<TraceRecord> gen_trace(TraceProfile profile, std::uint64_t packets, std::uint64_t seed,
                                   int gwi_count);

} // namespace arxon

#endif // ARXON_TRACE_HPP
