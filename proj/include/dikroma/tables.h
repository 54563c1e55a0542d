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

#ifndef DIKROMA_TABLES_H_
#define DIKROMA_TABLES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace dikroma {

// Diachromatic numbers of Hps(r, s) for one r, indexed by s.
struct DacRow {
  int r = 0;
  std::vector<int64_t> dac;
};

struct BoundEntry {
  int r = 0;
  int64_t bound = 0;
};

// Rows r = 3..r_max, columns s = 0..s_max.
std::vector<DacRow> DacTable(int r_max, int s_max);

// b(r) for r = 2..r_max.
std::vector<BoundEntry> BoundTable(int r_max);

enum class TableFormat { kText, kCsv, kJson };

std::string FormatDacTable(const std::vector<DacRow>& rows, TableFormat format);
std::string FormatBoundTable(const std::vector<BoundEntry>& entries, TableFormat format);

}  // namespace dikroma

#endif  // DIKROMA_TABLES_H_
