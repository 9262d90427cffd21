#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "painlab/cli.hpp"

namespace painlab::cli {

namespace fs = std::filesystem;

cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse number '" + s + "' in '" + text + "'");
    }
    if (used != s.size() || !std::isfinite(v))
      throw InvalidArgument("cannot parse number '" + s + "' in '" + text + "'");
    return v;
  };
  if (comma == std::string::npos) return {to_double(text), 0.0};
  return {to_double(text.substr(0, comma)), to_double(text.substr(comma + 1))};
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw InputError("cannot open " + tmp.string() + " for writing");
    os << content;
    if (!os) throw InputError("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw InputError("cannot move " + tmp.string() + " into place: " + ec.message());
}

}  // namespace painlab::cli
