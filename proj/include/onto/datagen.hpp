#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "onto/value.hpp"

namespace onto {

namespace detail {

// splitmix64 (Steele/Lea/Vigna). Chosen over std::mt19937 etc. because the
// algorithm is short enough to restate fully, which pins byte-identical
// datasets on every platform:
//   x += 0x9E3779B97F4A7C15
//   z = x
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : x_(seed) {}

    std::uint64_t next() {
        x_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = x_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1): top 53 bits over 2^53.
    double unit_real() {
        return static_cast<double>(next() >> 11) / 9007199254740992.0;
    }

    // Uniform real in [lo, hi) rounded half-up to `dp` decimal places.
    double uniform_real(double lo, double hi, int dp) {
        static constexpr double pow10[] = {1.0, 10.0, 100.0, 1000.0, 10000.0};
        double v = lo + unit_real() * (hi - lo);
        double p = pow10[dp];
        return std::floor(v * p + 0.5) / p;
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::size_t weighted_index(const std::vector<int>& weights) {
        int total = 0;
        for (int w : weights) total += w;
        auto r = static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(total));
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (r < weights[i]) return i;
            r -= weights[i];
        }
        return weights.size() - 1;
    }

private:
    std::uint64_t x_;
};

// Heavy-tailed positive counter: digit count uniform in 1..9, then uniform
// within that width — log-uniform-ish magnitudes up to 10^9, like real I/O
// and network counters.
inline std::int64_t heavy_counter(SplitMix64& rng) {
    static constexpr std::int64_t pow10[] = {1,      10,      100,      1000,
                                             10000,  100000,  1000000,  10000000,
                                             100000000, 1000000000};
    std::int64_t d = rng.uniform_int(1, 9);
    return rng.uniform_int(d == 1 ? 0 : pow10[d - 1], pow10[d] - 1);
}

inline std::string zero_pad(std::int64_t n, int width) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*lld", width,
                  static_cast<long long>(n));
    return buf;
}

// ISO-8601 UTC from a Unix timestamp; civil-from-days per Howard Hinnant's
// date algorithms.
inline std::string iso_utc(std::int64_t t) {
    std::int64_t days = t / 86400;
    std::int64_t rem = t % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    std::int64_t z = days + 719468;
    std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    std::int64_t doe = z - era * 146097;
    std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    std::int64_t y = yoe + era * 400;
    std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    std::int64_t mp = (5 * doy + 2) / 153;
    std::int64_t d = doy - (153 * mp + 2) / 5 + 1;
    std::int64_t m = mp < 10 ? mp + 3 : mp - 9;
    if (m <= 2) ++y;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%04lld-%02lld-%02lldT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(y), static_cast<long long>(m),
                  static_cast<long long>(d), static_cast<long long>(rem / 3600),
                  static_cast<long long>((rem % 3600) / 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

} // namespace detail

enum class DatasetKind { Iot, Metrics, Logs };

inline DatasetKind dataset_kind_of(std::string_view name) {
    if (name == "iot") return DatasetKind::Iot;
    if (name == "metrics") return DatasetKind::Metrics;
    if (name == "logs") return DatasetKind::Logs;
    throw std::invalid_argument("unknown dataset kind: " + std::string(name) +
                                " (expected iot|metrics|logs)");
}

inline const char* to_string(DatasetKind kind) {
    switch (kind) {
        case DatasetKind::Iot: return "iot";
        case DatasetKind::Metrics: return "metrics";
        case DatasetKind::Logs: return "logs";
    }
    return "?";
}

inline const char* entity_name_of(DatasetKind kind) {
    switch (kind) {
        case DatasetKind::Iot: return "Telemetry";
        case DatasetKind::Metrics: return "Metrics";
        case DatasetKind::Logs: return "Logs";
    }
    return "?";
}

struct DatasetSpec {
    DatasetKind kind = DatasetKind::Iot;
    std::size_t n_records = 1;
    std::uint64_t seed = 1000;
};

namespace detail {

// Records start at 2024-01-01T00:00:00Z and step 60 s per record index.
inline constexpr std::int64_t kEpoch = 1704067200;

inline const std::vector<std::string>& log_services() {
    static const std::vector<std::string> services = {
        "auth",      "gateway",  "billing",  "search",
        "inventory", "checkout", "notifier", "scheduler"};
    return services;
}

inline const std::vector<std::string>& log_templates() {
    static const std::vector<std::string> templates = {
        "Processed %d records",
        "Request completed in %d ms",
        "Cache miss for key %d",
        "Retrying connection attempt %d",
        "Queue depth reached %d",
        "User %d logged in",
        "Session %d expired",
        "Payment %d authorized",
        "Worker %d started",
        "Worker %d stopped",
        "Batch %d committed",
        "Connection pool exhausted after %d waits",
        "Rate limit exceeded for client %d",
        "Slow query took %d ms",
        "Heartbeat received from node %d",
        "Config reloaded with %d entries",
        "Webhook delivery %d failed",
        "Index rebuild completed in %d s",
        "Disk usage at %d percent",
        "Token refresh for account %d"};
    return templates;
}

} // namespace detail

// Deterministic synthetic records; same spec → same records (and, after
// serialization, same bytes) on every platform.
inline std::vector<Record> generate(const DatasetSpec& spec) {
    detail::SplitMix64 rng(spec.seed);
    std::vector<Record> out;
    out.reserve(spec.n_records);

    for (std::size_t i = 0; i < spec.n_records; ++i) {
        Record rec;
        auto idx = static_cast<std::int64_t>(i);
        switch (spec.kind) {
            case DatasetKind::Iot: {
                rec.set("device_id",
                        "sensor-" + detail::zero_pad(idx % 50 + 1, 3));
                rec.set("timestamp", detail::iso_utc(detail::kEpoch + 60 * idx));
                rec.set("temperature", rng.uniform_real(15.0, 35.0, 1));
                rec.set("humidity", rng.uniform_real(30.0, 70.0, 1));
                rec.set("pressure", rng.uniform_real(980.0, 1040.0, 1));
                rec.set("battery_level", rng.uniform_int(0, 100));
                Record loc;
                loc.set("lat", rng.uniform_real(37.70, 37.80, 2));
                loc.set("lon", rng.uniform_real(-122.50, -122.40, 2));
                rec.set("location", Value(std::move(loc)));
                break;
            }
            case DatasetKind::Metrics: {
                rec.set("host", "host-" + detail::zero_pad(idx % 20 + 1, 2));
                rec.set("timestamp", detail::iso_utc(detail::kEpoch + 60 * idx));
                rec.set("cpu_percent", rng.uniform_real(0.0, 100.0, 1));
                rec.set("memory_percent", rng.uniform_real(0.0, 100.0, 1));
                rec.set("disk_io_read", detail::heavy_counter(rng));
                rec.set("disk_io_write", detail::heavy_counter(rng));
                rec.set("network_in", detail::heavy_counter(rng));
                rec.set("network_out", detail::heavy_counter(rng));
                break;
            }
            case DatasetKind::Logs: {
                static const std::vector<std::string> levels = {"DEBUG", "INFO",
                                                                "WARN", "ERROR"};
                rec.set("timestamp", detail::iso_utc(detail::kEpoch + 60 * idx));
                rec.set("level", levels[rng.weighted_index({2, 6, 1, 1})]);
                rec.set("service", detail::log_services()[rng.next() % 8]);
                std::string msg = detail::log_templates()[rng.next() % 20];
                std::string num = std::to_string(rng.uniform_int(1, 9999));
                msg.replace(msg.find("%d"), 2, num);
                rec.set("message", std::move(msg));
                std::string rid;
                for (int k = 0; k < 8; ++k)
                    rid += "0123456789abcdef"[rng.next() % 16];
                rec.set("request_id", std::move(rid));
                rec.set("duration_ms", rng.uniform_int(1, 5000));
                static const std::vector<std::int64_t> codes = {200, 201, 400,
                                                                404, 500};
                rec.set("status_code",
                        Value(codes[rng.weighted_index({6, 1, 1, 1, 1})]));
                break;
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

// The field tree with no data: every leaf keeps its name, count drops to 0.
// This is the "schema costs approximately 25 tokens" document.
inline EntityBlock schema_only(const EntityBlock& block) {
    struct Strip {
        static std::vector<FieldNode> fields(const std::vector<FieldNode>& in) {
            std::vector<FieldNode> out;
            out.reserve(in.size());
            for (const FieldNode& f : in) {
                if (f.kind == FieldNode::Kind::Group)
                    out.push_back(FieldNode::group(f.name, fields(f.children)));
                else
                    out.push_back(FieldNode::leaf(f.name, {}));
            }
            return out;
        }
    };
    EntityBlock schema;
    schema.name = block.name;
    schema.count = 0;
    schema.fields = Strip::fields(block.fields);
    return schema;
}

} // namespace onto
