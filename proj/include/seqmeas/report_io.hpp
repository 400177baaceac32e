// Copyright 2026 The seqmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// CSV / JSON emission of sweep, crossing, quasi-probability and
// reconstruction datasets. Reals are written as the shortest decimal that
// round-trips; unresolvable cells are empty (CSV) or null (JSON).

#include <string>
#include <vector>

#include "seqmeas/harness.hpp"

namespace seqmeas::io {

enum class Format { Csv, Json };

/// Column order of the sweep schema.
const std::vector<std::string>& sweep_columns();

std::string format_real(double value);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_sweep_json(const std::string& text);

std::string crossings_csv(const std::vector<Crossing>& crossings);
std::string crossings_json(const std::vector<Crossing>& crossings);

std::string lgi_csv(const std::vector<LgiRow>& rows);
std::string lgi_json(const std::vector<LgiRow>& rows);

std::string reconstruction_csv(const std::vector<ReconstructionRow>& rows);
std::string reconstruction_json(const std::vector<ReconstructionRow>& rows);

std::string render(const std::vector<SweepRow>& rows, Format format);

/// Writes text to path ("-" is stdout). Throws std::runtime_error on failure.
void write_output(const std::string& path, const std::string& text);

}  // namespace seqmeas::io
