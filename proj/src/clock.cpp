#include "adslite/clock.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>

#include "adslite/errors.hpp"

namespace adslite {

std::int64_t system_now() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::string format_iso8601(std::int64_t epoch_seconds) {
  using namespace std::chrono;
  const sys_seconds tp{seconds{epoch_seconds}};
  const auto day = floor<days>(tp);
  const year_month_day ymd{day};
  const hh_mm_ss hms{tp - day};
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02ld:%02ld:%02ldZ",
                int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day()),
                long(hms.hours().count()), long(hms.minutes().count()),
                long(hms.seconds().count()));
  return buf;
}

std::int64_t parse_time(const std::string& s) {
  if (s.empty()) throw AdsError(Err::malformed_date, "empty timestamp");
  bool digits = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && !(i == 0 && s[i] == '-')) {
      digits = false;
      break;
    }
  }
  if (digits) {
    try {
      return std::stoll(s);
    } catch (const std::exception&) {
      throw AdsError(Err::malformed_date, s);
    }
  }
  int y, mo, d, h, mi, sec;
  if (std::sscanf(s.c_str(), "%d-%d-%dT%d:%d:%dZ", &y, &mo, &d, &h, &mi, &sec) != 6)
    throw AdsError(Err::malformed_date, s);
  using namespace std::chrono;
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 ||
      mi > 59 || sec < 0 || sec > 60)
    throw AdsError(Err::malformed_date, s);
  const year_month_day ymd{year{y}, month{unsigned(mo)}, day{unsigned(d)}};
  if (!ymd.ok()) throw AdsError(Err::malformed_date, s);
  const sys_seconds tp = sys_days{ymd} + hours{h} + minutes{mi} + seconds{sec};
  return tp.time_since_epoch().count();
}

}  // namespace adslite
