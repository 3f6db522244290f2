#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace adslite {

/// Injectable time source (epoch seconds). Tests pass a fixed clock so
/// timestamps, digest cycles and audit lines are reproducible.
using Clock = std::function<std::int64_t()>;

std::int64_t system_now();

/// "2006-09-01T12:00:00Z"
std::string format_iso8601(std::int64_t epoch_seconds);

/// Accepts plain epoch seconds ("1157112000") or ISO 8601 UTC
/// ("2006-09-01T12:00:00Z"). Throws MalformedDate otherwise.
std::int64_t parse_time(const std::string& s);

}  // namespace adslite
