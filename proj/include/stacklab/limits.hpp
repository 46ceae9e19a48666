#pragma once

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

namespace stacklab {

class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  int enumerate_n = 14;
  int count_n = 16;
  int series_order = 512;
  int digits = 1000;
};

/// Reads overrides of the form "enum=14,count=16,order=512,digits=100".
inline Limits parse_limits(const std::string& spec, Limits base = {}) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad limit entry '" + item + "'");
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad limit value in '" + item + "'");
    }
    if (value <= 0) throw std::invalid_argument("limits must be positive: '" + item + "'");
    if (key == "enum") base.enumerate_n = value;
    else if (key == "count") base.count_n = value;
    else if (key == "order") base.series_order = value;
    else if (key == "digits") base.digits = value;
    else throw std::invalid_argument("unknown limit '" + key + "'");
  }
  return base;
}

inline Limits limits_from_env() {
  const char* env = std::getenv("STACKLAB_LIMITS");
  return env ? parse_limits(env) : Limits{};
}

}  // namespace stacklab
