#include "ink/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace ink {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::ConfigError, "key '" + key + "' expects a number, got '" +
                                       value + "'");
  }
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size() || v < 0) throw std::invalid_argument(value);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error(Errc::ConfigError, "key '" + key + "' expects a non-negative integer, got '" +
                                       value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw Error(Errc::ConfigError,
              "key '" + key + "' expects true/false, got '" + value + "'");
}

}  // namespace

void RunConfig::validate() const {
  preprocess.validate();
  if (!(epsilon > 0.0))
    throw Error(Errc::ConfigError, "epsilon must be positive");
  if (!(rho > 0.0) || rho > 1.0)
    throw Error(Errc::ConfigError, "rho must lie in (0, 1]");
  if (!(tau_conn >= 0.0))
    throw Error(Errc::ConfigError, "tau_conn must be non-negative");
  if (!(band_fraction > 0.0) || band_fraction > 0.5)
    throw Error(Errc::ConfigError, "band_fraction must lie in (0, 0.5]");
  if (vdl_weights.w_cen < 0.0 || vdl_weights.w_top < 0.0 || vdl_weights.w_bot < 0.0)
    throw Error(Errc::ConfigError, "VDL weights must be non-negative");
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  const std::map<std::string, std::function<void(const std::string&, const std::string&)>>
      setters = {
          {"deskew_min_angle",
           [&](const std::string& k, const std::string& v) {
             cfg.preprocess.deskew_min_angle = parse_double(k, v);
           }},
          {"deskew_max_angle",
           [&](const std::string& k, const std::string& v) {
             cfg.preprocess.deskew_max_angle = parse_double(k, v);
           }},
          {"deskew_enabled",
           [&](const std::string& k, const std::string& v) {
             cfg.preprocess.deskew_enabled = parse_bool(k, v);
           }},
          {"resample_max_points",
           [&](const std::string& k, const std::string& v) {
             cfg.preprocess.resample_max_points = parse_count(k, v);
           }},
          {"rdp_epsilon",
           [&](const std::string& k, const std::string& v) {
             cfg.preprocess.rdp_epsilon = parse_double(k, v);
           }},
          {"target_height",
           [&](const std::string& k, const std::string& v) {
             cfg.preprocess.target_height = parse_double(k, v);
           }},
          {"segmentation_tolerance",
           [&](const std::string& k, const std::string& v) {
             cfg.preprocess.segmentation_tolerance = parse_count(k, v);
           }},
          {"epsilon",
           [&](const std::string& k, const std::string& v) {
             cfg.epsilon = parse_double(k, v);
           }},
          {"rho",
           [&](const std::string& k, const std::string& v) {
             cfg.rho = parse_double(k, v);
           }},
          {"tau_conn",
           [&](const std::string& k, const std::string& v) {
             cfg.tau_conn = parse_double(k, v);
           }},
          {"band_fraction",
           [&](const std::string& k, const std::string& v) {
             cfg.band_fraction = parse_double(k, v);
           }},
          {"vdl_w_cen",
           [&](const std::string& k, const std::string& v) {
             cfg.vdl_weights.w_cen = parse_double(k, v);
           }},
          {"vdl_w_top",
           [&](const std::string& k, const std::string& v) {
             cfg.vdl_weights.w_top = parse_double(k, v);
           }},
          {"vdl_w_bot",
           [&](const std::string& k, const std::string& v) {
             cfg.vdl_weights.w_bot = parse_double(k, v);
           }},
          {"convert_eoc",
           [&](const std::string& k, const std::string& v) {
             cfg.convert_eoc = parse_bool(k, v);
           }},
          {"exclude_path",
           [&](const std::string&, const std::string& v) { cfg.exclude_path = v; }},
      };

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::ConfigError, "expected key=value", line_no);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end())
      throw Error(Errc::ConfigError, "unknown key '" + key + "'", line_no);
    it->second(key, value);
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::IoError, "cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace ink
