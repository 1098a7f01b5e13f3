// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "autotherm/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace autotherm::csv {

std::string format(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format(const std::optional<double>& x) { return x ? format(*x) : std::string("nan"); }

Row& Row::add(double x) {
  cells_.push_back(format(x));
  return *this;
}

Row& Row::add(const std::optional<double>& x) {
  cells_.push_back(format(x));
  return *this;
}

Row& Row::add(std::string_view text) {
  cells_.emplace_back(text);
  return *this;
}

Row& Row::add(bool flag) {
  cells_.emplace_back(flag ? "1" : "0");
  return *this;
}

void Row::write(std::ostream& os) const {
  for (std::size_t i = 0; i < cells_.size(); ++i) os << (i ? "," : "") << cells_[i];
  os << '\n';
}

void write_header(std::ostream& os, const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
}

}  // namespace autotherm::csv
