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

#include "qrc/experiments/csv.hpp"

#include <charconv>
#include <cmath>

#include "qrc/errors.hpp"

namespace qrc::experiments {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string csv_escape(std::string_view cell) {
  if (cell.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::vector<std::string> header)
    : path_(path), columns_(header.size()), out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw IoError("cannot open " + path.string() + " for writing");
  write_record(header);
}

CsvWriter::~CsvWriter() {
  if (out_.is_open()) out_.close();
}

void CsvWriter::row(std::initializer_list<Field> fields) { row(std::vector<Field>(fields)); }

void CsvWriter::row(const std::vector<Field>& fields) {
  if (fields.size() != columns_)
    throw InvalidArgument(path_.filename().string() + ": row has " + std::to_string(fields.size()) +
                          " fields, header has " + std::to_string(columns_));
  std::vector<std::string> cells;
  cells.reserve(fields.size());
  for (const Field& f : fields) {
    if (const auto* d = std::get_if<double>(&f))
      cells.push_back(format_double(*d));
    else if (const auto* i = std::get_if<std::int64_t>(&f))
      cells.push_back(std::to_string(*i));
    else if (const auto* s = std::get_if<std::string>(&f))
      cells.push_back(*s);
    else
      cells.emplace_back();
  }
  write_record(cells);
  ++rows_;
}

void CsvWriter::write_record(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_escape(cells[i]);
  }
  out_ << "\r\n";
  if (!out_) throw IoError("write failed: " + path_.string());
}

void CsvWriter::close() {
  out_.close();
  if (out_.fail()) throw IoError("close failed: " + path_.string());
}

}  // namespace qrc::experiments
