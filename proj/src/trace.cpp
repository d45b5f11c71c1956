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

#include "arxon/trace.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arxon/common.hpp"
#include "arxon/rng.hpp"

namespace arxon {

std::string kind_name(DataKind kind) {
    switch (kind) {
    case DataKind::F32: return "F32";
    case DataKind::F64: return "F64";
    case DataKind::I32: return "I32";
    case DataKind::I64: return "I64";
    case DataKind::Other: return "Other";
    }
    return "Other";
}

DataKind kind_from_name(const std::string& name) {
    if (name == "F32") return DataKind::F32;
    if (name == "F64") return DataKind::F64;
    if (name == "I32") return DataKind::I32;
    if (name == "I64") return DataKind::I64;
    if (name == "Other") return DataKind::Other;
    throw DataError("unknown data kind '" + name + "'");
}

int kind_width(DataKind kind) {
    switch (kind) {
    case DataKind::F32:
    case DataKind::I32: return 32;
    default: return 64;
    }
}

bool kind_is_float(DataKind kind) { return kind == DataKind::F32 || kind == DataKind::F64; }
bool kind_is_int(DataKind kind) { return kind == DataKind::I32 || kind == DataKind::I64; }

double TraceRecord::value_as_double(std::size_t i) const {
    return std::bit_cast<double>(values[i]);
}

float TraceRecord::value_as_float(std::size_t i) const {
    return std::bit_cast<float>(static_cast<std::uint32_t>(values[i]));
}

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

TraceRecord record_from_json(const json& j, const std::string& where) {
    TraceRecord rec;
    try {
        rec.cycle = j.at("cycle").get<std::uint64_t>();
        rec.src = j.at("src").get<int>();
        rec.dst = j.at("dst").get<int>();
        rec.kind = kind_from_name(j.at("kind").get<std::string>());
        rec.approximable = j.at("approximable").get<bool>();
        if (j.contains("var_id") && !j.at("var_id").is_null())
            rec.var_id = j.at("var_id").get<std::string>();
        const json& vals = j.at("values");
        if (!vals.is_array() || vals.empty())
            throw DataError(where + ": 'values' must be a non-empty array");
        for (const json& v : vals) {
            switch (rec.kind) {
            case DataKind::F32: {
                float f = static_cast<float>(v.get<double>());
                rec.values.push_back(std::bit_cast<std::uint32_t>(f));
                break;
            }
            case DataKind::F64:
                rec.values.push_back(std::bit_cast<std::uint64_t>(v.get<double>()));
                break;
            case DataKind::I32: {
                std::uint64_t u = v.get<std::uint64_t>();
                if (u > 0xffffffffULL)
                    throw DataError(where + ": I32 value does not fit 32 bits");
                rec.values.push_back(u);
                break;
            }
            case DataKind::I64:
            case DataKind::Other:
                rec.values.push_back(v.get<std::uint64_t>());
                break;
            }
        }
    } catch (const json::exception& e) {
        throw DataError(where + ": " + e.what());
    }
    return rec;
}

} // namespace

std::vector<TraceRecord> parse_trace(const std::string& text, const std::string& origin) {
    std::vector<TraceRecord> records;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::string where = origin + ":" + std::to_string(lineno);
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) throw DataError(where + ": invalid JSON");
        records.push_back(record_from_json(j, where));
        if (records.size() > 1 && records[records.size() - 2].cycle > records.back().cycle)
            throw DataError(where + ": cycle numbers must be non-decreasing");
    }
    return records;
}

std::vector<TraceRecord> load_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open trace file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_trace(ss.str(), path);
}

std::string trace_to_jsonl(const std::vector<TraceRecord>& records) {
    std::string out;
    for (const TraceRecord& rec : records) {
        ordered_json j;
        j["cycle"] = rec.cycle;
        j["src"] = rec.src;
        j["dst"] = rec.dst;
        j["kind"] = kind_name(rec.kind);
        ordered_json vals = ordered_json::array();
        for (std::size_t i = 0; i < rec.values.size(); ++i) {
            switch (rec.kind) {
            case DataKind::F32: vals.push_back(static_cast<double>(rec.value_as_float(i))); break;
            case DataKind::F64: vals.push_back(rec.value_as_double(i)); break;
            default: vals.push_back(rec.values[i]); break;
            }
        }
        j["values"] = vals;
        j["approximable"] = rec.approximable;
        if (!rec.var_id.empty()) j["var_id"] = rec.var_id;
        out += j.dump();
        out += '\n';
    }
    return out;
}

TraceProfile profile_from_name(const std::string& name) {
    if (name == "float-heavy" || name == "floatheavy") return TraceProfile::FloatHeavy;
    if (name == "int-heavy" || name == "intheavy") return TraceProfile::IntHeavy;
    if (name == "mixed") return TraceProfile::Mixed;
    throw ConfigError("unknown trace profile '" + name +
                      "' (expected float-heavy, int-heavy, or mixed)");
}

std::string profile_name(TraceProfile profile) {
    switch (profile) {
    case TraceProfile::FloatHeavy: return "float-heavy";
    case TraceProfile::IntHeavy: return "int-heavy";
    case TraceProfile::Mixed: return "mixed";
    }
    return "mixed";
}

std::vector<TraceRecord> gen_trace(TraceProfile profile, std::uint64_t packets, std::uint64_t seed,
                                   int gwi_count) {
    if (packets < 1) throw ConfigError("packet count must be >= 1");
    if (gwi_count < 2) throw ConfigError("need at least two GWIs to generate traffic");

    // Cumulative percentage cut points for F32/F64/I32/I64/Other.
    struct Mix {
        int f32, f64, i32, i64;
    };
    Mix mix{};
    switch (profile) {
    case TraceProfile::FloatHeavy: mix = {40, 75, 85, 90}; break;
    case TraceProfile::IntHeavy: mix = {10, 15, 60, 90}; break;
    case TraceProfile::Mixed: mix = {25, 45, 65, 75}; break;
    }

    SeededRng rng(seed);
    std::vector<TraceRecord> records;
    records.reserve(packets);
    std::uint64_t cycle = 0;
    for (std::uint64_t p = 0; p < packets; ++p) {
        TraceRecord rec;
        cycle += rng.uniform_u64(4);
        rec.cycle = cycle;
        rec.src = static_cast<int>(rng.uniform_u64(static_cast<std::uint64_t>(gwi_count - 1)));
        rec.dst = rec.src + 1 +
                  static_cast<int>(rng.uniform_u64(static_cast<std::uint64_t>(gwi_count - 1 - rec.src)));

        auto roll = static_cast<int>(rng.uniform_u64(100));
        if (roll < mix.f32) rec.kind = DataKind::F32;
        else if (roll < mix.f64) rec.kind = DataKind::F64;
        else if (roll < mix.i32) rec.kind = DataKind::I32;
        else if (roll < mix.i64) rec.kind = DataKind::I64;
        else rec.kind = DataKind::Other;

        std::size_t count = 1 + rng.uniform_u64(4);
        if (kind_is_float(rec.kind)) {
            rec.approximable = rng.uniform_u64(100) < 85;
            for (std::size_t i = 0; i < count; ++i) {
                double v = 0.5 + rng.uniform() * 99.5;
                if (rec.kind == DataKind::F32)
                    rec.values.push_back(std::bit_cast<std::uint32_t>(static_cast<float>(v)));
                else
                    rec.values.push_back(std::bit_cast<std::uint64_t>(v));
            }
        } else if (kind_is_int(rec.kind)) {
            rec.approximable = rng.uniform_u64(100) < 60;
            rec.var_id = "v" + std::to_string(rng.uniform_u64(8));
            for (std::size_t i = 0; i < count; ++i) {
                std::uint64_t v = rec.approximable
                                      ? rng.uniform_u64(200)
                                      : (rec.kind == DataKind::I32 ? rng.uniform_u64(0x100000000ULL)
                                                                   : rng.next_u64());
                rec.values.push_back(v);
            }
        } else {
            rec.approximable = false;
            for (std::size_t i = 0; i < count; ++i) rec.values.push_back(rng.next_u64());
        }
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace arxon
