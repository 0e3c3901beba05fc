#include "tsdd/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "tsdd/errors.hpp"

namespace tsdd {

SeriesFormat parse_series_format(const std::string& name) {
  if (name == "csv") return SeriesFormat::csv;
  if (name == "f64le") return SeriesFormat::f64le;
  throw ParameterError("unknown series format '" + name + "' (expected csv or f64le)");
}

namespace {

TimeSeries read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open '" + path + "' for reading");
  }
  TimeSeries series;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // strip trailing CR and surrounding whitespace
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t start = 0;
    while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
    if (start > 0) line.erase(0, start);
    if (line.empty()) continue;

    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(line.c_str(), &end);
    if (end == line.c_str() || *end != '\0' || errno == ERANGE) {
      if (line_no == 1 && series.values.empty()) continue;  // header line
      throw ValidationError("cannot parse '" + line + "' at " + path + ":" +
                            std::to_string(line_no));
    }
    if (!std::isfinite(value)) {
      throw ValidationError("non-finite value at " + path + ":" +
                            std::to_string(line_no));
    }
    series.values.push_back(value);
  }
  if (series.values.empty()) {
    throw ValidationError("no values found in '" + path + "'");
  }
  return series;
}

TimeSeries read_f64le(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open '" + path + "' for reading");
  }
  in.seekg(0, std::ios::end);
  const std::streamoff size = in.tellg();
  in.seekg(0, std::ios::beg);
  if (size <= 0) {
    throw ValidationError("no values found in '" + path + "'");
  }
  if (size % 8 != 0) {
    throw ValidationError("file size " + std::to_string(size) + " of '" + path +
                          "' is not a multiple of 8 (truncated at byte offset " +
                          std::to_string((size / 8) * 8) + ")");
  }
  TimeSeries series;
  series.values.resize(static_cast<std::size_t>(size) / 8);
  in.read(reinterpret_cast<char*>(series.values.data()), size);
  if (!in) {
    throw ValidationError("short read from '" + path + "'");
  }
  for (std::size_t i = 0; i < series.values.size(); ++i) {
    if (!std::isfinite(series.values[i])) {
      throw ValidationError("non-finite value at index " + std::to_string(i + 1) +
                            " of '" + path + "'");
    }
  }
  return series;
}

}  // namespace

TimeSeries read_series(const std::string& path, SeriesFormat format) {
  TimeSeries series =
      format == SeriesFormat::csv ? read_csv(path) : read_f64le(path);
  validate_series(series);
  return series;
}

void write_series(const TimeSeries& series, const std::string& path,
                  SeriesFormat format) {
  if (format == SeriesFormat::csv) {
    std::ofstream out(path);
    if (!out) {
      throw ValidationError("cannot open '" + path + "' for writing");
    }
    char buf[64];
    for (const double v : series.values) {
      std::snprintf(buf, sizeof(buf), "%.17g\n", v);
      out << buf;
    }
    if (!out) {
      throw ValidationError("write to '" + path + "' failed");
    }
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot open '" + path + "' for writing");
  }
  out.write(reinterpret_cast<const char*>(series.values.data()),
            static_cast<std::streamsize>(series.values.size() * sizeof(double)));
  if (!out) {
    throw ValidationError("write to '" + path + "' failed");
  }
}

}  // namespace tsdd
