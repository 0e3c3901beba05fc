#ifndef TSDD_IO_HPP
#define TSDD_IO_HPP

#include <string>

#include "tsdd/series.hpp"

namespace tsdd {

enum class SeriesFormat { csv, f64le };

// "csv" or "f64le"; throws ParameterError otherwise.
SeriesFormat parse_series_format(const std::string& name);

// csv: one value per line, an optional non-numeric header line is skipped.
// f64le: raw little-endian 64-bit reals. Parse failures report the line or
// byte offset; non-finite values report the index. The returned series is
// validated and non-empty.
TimeSeries read_series(const std::string& path, SeriesFormat format);

// csv values are written with enough digits to round-trip exactly.
void write_series(const TimeSeries& series, const std::string& path,
                  SeriesFormat format);

}  // namespace tsdd

#endif  // TSDD_IO_HPP
