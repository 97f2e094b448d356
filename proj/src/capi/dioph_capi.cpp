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


#include "dioph/dioph.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "capi/commands.hpp"

struct dioph_context {
  dioph::Limits limits;
  std::string error;
};

struct dioph_result {
  dioph::Output output;
  bool complete = true;
};

namespace {

template <typename F>
dioph_status guarded(dioph_context* ctx, F&& body) {
  auto fail = [&](dioph_status s, const char* what) {
    if (ctx) ctx->error = what;
    return s;
  };
  try {
    if (ctx) ctx->error.clear();
    return body();
  } catch (const dioph::ValidationError& e) {
    return fail(DIOPH_ERR_VALIDATION, e.what());
  } catch (const dioph::PrecisionError& e) {
    return fail(DIOPH_ERR_PRECISION, e.what());
  } catch (const dioph::ResourceError& e) {
    return fail(DIOPH_ERR_RESOURCE, e.what());
  } catch (const dioph::IoError& e) {
    return fail(DIOPH_ERR_IO, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(DIOPH_ERR_VALIDATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DIOPH_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(DIOPH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DIOPH_ERR_INTERNAL, "unknown error");
  }
}

dioph::Format to_format(dioph_format f) {
  if (f == DIOPH_FORMAT_JSON) return dioph::Format::kJson;
  if (f == DIOPH_FORMAT_CSV) return dioph::Format::kCsv;
  throw dioph::ValidationError("unknown output format");
}

}  // namespace

extern "C" {

const char* dioph_version(void) { return "0.1.0"; }

const char* dioph_status_name(dioph_status status) {
  switch (status) {
    case DIOPH_OK: return "ok";
    case DIOPH_ERR_INTERNAL: return "internal error";
    case DIOPH_ERR_VALIDATION: return "validation error";
    case DIOPH_ERR_PRECISION: return "precision cap reached";
    case DIOPH_ERR_RESOURCE: return "resource cap reached";
    case DIOPH_ERR_IO: return "i/o error";
  }
  return "unknown status";
}

dioph_status dioph_context_new(dioph_context** out) {
  if (!out) return DIOPH_ERR_VALIDATION;
  *out = new (std::nothrow) dioph_context();
  return *out ? DIOPH_OK : DIOPH_ERR_RESOURCE;
}

void dioph_context_free(dioph_context* ctx) { delete ctx; }

dioph_status dioph_context_set_limits(dioph_context* ctx, unsigned precision_cap_bits,
                                      size_t point_cap, unsigned dimension_limit) {
  if (!ctx) return DIOPH_ERR_VALIDATION;
  return guarded(ctx, [&] {
    if (precision_cap_bits) {
      if (precision_cap_bits < ctx->limits.initial_bits)
        throw dioph::ValidationError("precision cap below the initial precision");
      ctx->limits.precision_cap_bits = precision_cap_bits;
    }
    if (point_cap) ctx->limits.point_cap = point_cap;
    if (dimension_limit) ctx->limits.dimension_limit = dimension_limit;
    return DIOPH_OK;
  });
}

const char* dioph_context_error(const dioph_context* ctx) {
  return ctx ? ctx->error.c_str() : "null context";
}

dioph_status dioph_run(dioph_context* ctx, const char* command, const char* request_json,
                       dioph_result** out) {
  if (!ctx || !command || !request_json || !out) return DIOPH_ERR_VALIDATION;
  *out = nullptr;
  return guarded(ctx, [&] {
    dioph::Json req = dioph::Json::parse(request_json);
    dioph::CommandResult r = dioph::run_command(command, req, ctx->limits);
    auto* res = new dioph_result{std::move(r.output), r.complete};
    *out = res;
    if (!res->complete) {
      ctx->error = "enumeration cap reached; result is partial";
      return DIOPH_ERR_RESOURCE;
    }
    return DIOPH_OK;
  });
}

int dioph_result_complete(const dioph_result* result) {
  return result && result->complete ? 1 : 0;
}

dioph_status dioph_result_render(const dioph_result* result, dioph_format format,
                                 char** text) {
  if (!result || !text) return DIOPH_ERR_VALIDATION;
  *text = nullptr;
  return guarded(nullptr, [&] {
    std::string s = dioph::render(result->output, to_format(format));
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) return DIOPH_ERR_RESOURCE;
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *text = buf;
    return DIOPH_OK;
  });
}

dioph_status dioph_result_write(dioph_context* ctx, const dioph_result* result,
                                dioph_format format, const char* path) {
  if (!result) return DIOPH_ERR_VALIDATION;
  return guarded(ctx, [&] {
    dioph::emit(result->output, to_format(format), path ? path : "");
    return DIOPH_OK;
  });
}

void dioph_result_free(dioph_result* result) { delete result; }

void dioph_free(void* p) { std::free(p); }

}  // extern "C"
