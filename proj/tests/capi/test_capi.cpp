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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "dioph/dioph.h"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Ctx {
  Ctx() { REQUIRE(dioph_context_new(&ctx) == DIOPH_OK); }
  ~Ctx() { dioph_context_free(ctx); }
  dioph_context* ctx = nullptr;
};

std::string render(const dioph_result* r, dioph_format f) {
  char* text = nullptr;
  REQUIRE(dioph_result_render(r, f, &text) == DIOPH_OK);
  std::string s(text);
  dioph_free(text);
  return s;
}

nlohmann::json run_json(dioph_context* ctx, const char* cmd, const char* req,
                        dioph_status expect = DIOPH_OK) {
  dioph_result* r = nullptr;
  dioph_status st = dioph_run(ctx, cmd, req, &r);
  CHECK(st == expect);
  if (!r) return nullptr;
  auto j = nlohmann::json::parse(render(r, DIOPH_FORMAT_JSON));
  dioph_result_free(r);
  return j;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(dioph_version()).size() > 0);
  CHECK(std::string(dioph_status_name(DIOPH_ERR_PRECISION)) == "precision cap reached");
  CHECK(dioph_context_new(nullptr) == DIOPH_ERR_VALIDATION);
}

TEST_CASE("norm request") {
  Ctx c;
  auto j = run_json(c.ctx, "norm", R"({"places":"2,inf","x":["2:1/8, inf:3"],"v":[4],
                                        "tau":[["1/2","1/2"]],"eta":["1"]})");
  // |1/8|_2^2 = 64 beats |3|^2 = 9
  CHECK(j["tau_norm"]["coef"] == "64/1");
  CHECK(j["eta_norm"]["coef"] == "4/1");
}

TEST_CASE("dirichlet request returns a verified solution") {
  Ctx c;
  auto j = run_json(c.ctx, "dirichlet", R"({"alpha":"phi","H":"100"})");
  CHECK(j["verified"] == true);
  CHECK(j["a"][0] == "55");
}

TEST_CASE("profile request") {
  Ctx c;
  auto j = run_json(c.ctx, "profile", R"({"alpha":"1/3","grid_first":2,"grid_last":5})");
  CHECK(j["classification"] == "SingularEvidence");
  CHECK(j["profile"].size() == 4);
}

TEST_CASE("twist request gives one certificate per height") {
  Ctx c;
  auto j = run_json(c.ctx, "twist", R"({"alpha":"phi","gamma":"1/3","eps":"1/4","count":4})");
  REQUIRE(j.is_array());
  CHECK(j.size() == 4);
  for (const auto& cert : j) CHECK(cert["verified"] == true);
  CHECK(j[0]["H"] != j[1]["H"]);
}

TEST_CASE("liminf request is deterministic in the seed") {
  Ctx c;
  const char* req = R"({"alpha":"phi","grid":[10,100],"samples":3,"seed":"77"})";
  dioph_result *a = nullptr, *b = nullptr;
  REQUIRE(dioph_run(c.ctx, "liminf", req, &a) == DIOPH_OK);
  REQUIRE(dioph_run(c.ctx, "liminf", req, &b) == DIOPH_OK);
  CHECK(render(a, DIOPH_FORMAT_CSV) == render(b, DIOPH_FORMAT_CSV));
  CHECK(render(a, DIOPH_FORMAT_JSON) == render(b, DIOPH_FORMAT_JSON));
  CHECK(dioph_result_complete(a) == 1);
  dioph_result_free(a);
  dioph_result_free(b);
}

TEST_CASE("point cap yields a partial result") {
  Ctx c;
  REQUIRE(dioph_context_set_limits(c.ctx, 0, 100, 0) == DIOPH_OK);
  dioph_result* r = nullptr;
  CHECK(dioph_run(c.ctx, "liminf", R"({"alpha":"phi","grid":[10,1000],"gamma":"0"})", &r) ==
        DIOPH_ERR_RESOURCE);
  REQUIRE(r != nullptr);
  CHECK(dioph_result_complete(r) == 0);
  auto j = nlohmann::json::parse(render(r, DIOPH_FORMAT_JSON));
  CHECK(j[0]["stat"].size() == 1);
  CHECK(j[0]["truncated"] == true);
  dioph_result_free(r);
}

TEST_CASE("ci-sim request") {
  Ctx c;
  auto j = run_json(c.ctx, "ci-sim",
                    R"({"c":"1/10","C":"9/10","samples":3000,"level_last":20,"seed":4})");
  CHECK(j["subset_violations"] == 0);
  CHECK(j["windows"][0]["estimate_c"].get<double>() >= 0.9);
}

TEST_CASE("errors map to status codes") {
  Ctx c;
  dioph_result* r = nullptr;
  CHECK(dioph_run(c.ctx, "dirichlet", "{not json", &r) == DIOPH_ERR_VALIDATION);
  CHECK(r == nullptr);
  CHECK(std::strlen(dioph_context_error(c.ctx)) > 0);
  CHECK(dioph_run(c.ctx, "dirichlet", R"({"alpha":"phi","H":"0"})", &r) == DIOPH_ERR_VALIDATION);
  CHECK(dioph_run(c.ctx, "frobnicate", "{}", &r) == DIOPH_ERR_VALIDATION);
  CHECK(dioph_run(c.ctx, "dirichlet", R"({"alpha":"phi"})", &r) == DIOPH_ERR_VALIDATION);
  CHECK(dioph_run(c.ctx, "dirichlet", R"({"alpha":"phi","H":2.5})", &r) == DIOPH_ERR_VALIDATION);
  CHECK(dioph_run(c.ctx, "dirichlet", R"({"alpha":"phi","H":"5","tau":"2"})", &r) ==
        DIOPH_ERR_VALIDATION);
  CHECK(dioph_run(nullptr, "norm", "{}", &r) == DIOPH_ERR_VALIDATION);
  CHECK(dioph_context_set_limits(c.ctx, 8, 0, 0) == DIOPH_ERR_VALIDATION);
  // A tiny cap cannot separate a surd expression from zero.
  REQUIRE(dioph_context_set_limits(c.ctx, 64, 0, 0) == DIOPH_OK);
  CHECK(dioph_run(c.ctx, "norm",
                  R"({"x":["inf:sqrt(2) - 30122754096401/21300003689580"],"v":[1]})", &r) ==
        DIOPH_ERR_PRECISION);
  CHECK(dioph_run(c.ctx, "dirichlet", R"({"alpha":"phi","H":"10"})", &r) == DIOPH_OK);
  CHECK(std::string(dioph_context_error(c.ctx)).empty());
  CHECK(dioph_result_write(c.ctx, r, DIOPH_FORMAT_JSON, "/nonexistent-dir/out.json") ==
        DIOPH_ERR_IO);
  dioph_result_free(r);
}
