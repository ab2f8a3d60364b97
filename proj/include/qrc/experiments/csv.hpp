// Copyright 2026 The qrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qrc::experiments {

// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

// RFC 4180 output: CRLF records, fields quoted only when they contain a
// comma, quote or line break.
class CsvWriter {
 public:
  struct Empty {};
  using Field = std::variant<Empty, double, std::int64_t, std::string>;

  CsvWriter(const std::filesystem::path& path, std::vector<std::string> header);
  ~CsvWriter();

  void row(std::initializer_list<Field> fields);
  void row(const std::vector<Field>& fields);
  void close();

  std::size_t rows_written() const { return rows_; }

 private:
  void write_record(const std::vector<std::string>& cells);

  std::filesystem::path path_;
  std::size_t columns_;
  std::ofstream out_;
  std::size_t rows_ = 0;
};

std::string csv_escape(std::string_view cell);

}  // namespace qrc::experiments
