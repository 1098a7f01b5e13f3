// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace autotherm::csv {

/// 17 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format(double x);
/// Undefined values print as "nan".
std::string format(const std::optional<double>& x);

/// Accumulates one row and writes it comma-separated.
class Row {
 public:
  Row& add(double x);
  Row& add(const std::optional<double>& x);
  Row& add(std::string_view text);
  Row& add(bool flag);
  void write(std::ostream& os) const;

 private:
  std::vector<std::string> cells_;
};

void write_header(std::ostream& os, const std::vector<std::string>& columns);

}  // namespace autotherm::csv
