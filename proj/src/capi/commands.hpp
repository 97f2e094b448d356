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

#include "io/serialize.hpp"

namespace dioph {

struct CommandResult {
  Output output;
  bool complete = true;
};

// Request handlers behind the C API. Every request is a JSON object.
CommandResult run_command(const std::string& command, const Json& request,
                          const Limits& limits);

// Pieces of the request format, exposed for tests.
SNumber parse_entry(const Json& j, const PlaceSet& places);
Rational json_rational(const Json& j);
Integer json_integer(const Json& j);
// Explicit tau/eta when present, else eta = 1 and tau spread evenly.
Weights request_weights(const Json& req, int m, int n, const PlaceSet& places);

}  // namespace dioph
