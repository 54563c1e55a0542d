// Copyright 2026 The Dikroma Authors
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

#include "dikroma/tables.h"

#include <stdexcept>

#include "dikroma/families.h"

namespace dikroma {

std::vector<DacRow> DacTable(int r_max, int s_max) {
  if (r_max < 3) throw std::invalid_argument("dac table needs r_max >= 3");
  if (s_max < 0) throw std::invalid_argument("dac table needs s_max >= 0");
  std::vector<DacRow> rows;
  for (int r = 3; r <= r_max; ++r) {
    DacRow row{r, {}};
    for (int s = 0; s <= s_max; ++s) row.dac.push_back(HpsDac(r, s));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BoundEntry> BoundTable(int r_max) {
  if (r_max < 2) throw std::invalid_argument("bound table needs r_max >= 2");
  std::vector<BoundEntry> entries;
  for (int r = 2; r <= r_max; ++r) entries.push_back({r, DiachromaticBound(r)});
  return entries;
}

std::string FormatDacTable(const std::vector<DacRow>& rows, TableFormat format) {
  std::string out;
  switch (format) {
    case TableFormat::kJson: {
      nlohmann::json j = nlohmann::json::array();
      for (const DacRow& row : rows) j.push_back({{"dc", row.r}, {"dac", row.dac}});
      return j.dump() + "\n";
    }
    case TableFormat::kCsv:
      out = "dc";
      if (!rows.empty()) {
        for (size_t s = 0; s < rows.front().dac.size(); ++s) out += ",s" + std::to_string(s);
      }
      out += "\n";
      for (const DacRow& row : rows) {
        out += std::to_string(row.r);
        for (int64_t v : row.dac) out += "," + std::to_string(v);
        out += "\n";
      }
      return out;
    case TableFormat::kText:
      out = "dc(T) | dac(T)\n";
      for (const DacRow& row : rows) {
        out += std::to_string(row.r) + " |";
        for (size_t s = 0; s < row.dac.size(); ++s) out += (s == 0 ? " " : ",") + std::to_string(row.dac[s]);
        out += "\n";
      }
      return out;
  }
  return out;
}

std::string FormatBoundTable(const std::vector<BoundEntry>& entries, TableFormat format) {
  std::string header;
  std::string values;
  switch (format) {
    case TableFormat::kJson: {
      nlohmann::json j = nlohmann::json::array();
      for (const BoundEntry& e : entries) j.push_back({{"r", e.r}, {"b", e.bound}});
      return j.dump() + "\n";
    }
    case TableFormat::kCsv:
      header = "r";
      values = "b";
      for (const BoundEntry& e : entries) {
        header += "," + std::to_string(e.r);
        values += "," + std::to_string(e.bound);
      }
      return header + "\n" + values + "\n";
    case TableFormat::kText:
      header = "r    |";
      values = "b(r) |";
      for (const BoundEntry& e : entries) {
        header += " " + std::to_string(e.r);
        values += " " + std::to_string(e.bound);
      }
      return header + "\n" + values + "\n";
  }
  return header;
}

}  // namespace dikroma
