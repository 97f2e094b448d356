// Copyright 2026 The dioph Authors
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

#include <string>
#include <vector>

#include "experiments/experiments.hpp"
#include "json.hpp"
#include "twisted/twisted.hpp"

namespace dioph {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv };
Format parse_format(const std::string& s);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// A result in both shapes: a JSON document and a flat table for CSV.
struct Output {
  Json document;
  Table table;
};

Json integer_json(const Integer& x);
Json vector_json(const IntVector& v);
Json interval_json(const RealInterval& iv);
// Exact parts plus a 64-bit enclosure.
Json magnitude_json(const Magnitude& m);
Magnitude magnitude_from_json(const Json& j);
Json snumbers_json(const std::vector<SNumber>& v);
std::vector<SNumber> snumbers_from_json(const Json& j);
IntVector vector_from_json(const Json& j);

Json liminf_json(const LiminfRecord& r);
LiminfRecord liminf_from_json(const Json& j);
Json certificate_json(const TwistedCertificate& c);
Json dirichlet_json(const DirichletSolution& s);
Json verdict_json(const SingularityVerdict& v);
Json ci_json(const CIResult& r);

Output liminf_output(const std::vector<LiminfRecord>& records);
Output certificate_output(const std::vector<TwistedCertificate>& certs);
Output dirichlet_output(const DirichletSolution& s);
Output verdict_output(const SingularityVerdict& v);
Output ci_output(const CIResult& r);

std::string render_csv(const Table& t);
std::string render(const Output& out, Format format);
// Writes to `path`, or to stdout when path is empty or "-". IoError on
// failure.
void emit(const Output& out, Format format, const std::string& path);

}  // namespace dioph
