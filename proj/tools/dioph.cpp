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


// Command-line front end over the C API.

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dioph/dioph.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Command {
  std::string name;
  std::string help;
  // option name -> request key
  std::vector<std::pair<std::string, std::string>> options;
  std::map<std::string, std::string> values;
  CLI::App* app = nullptr;
};

const std::vector<std::pair<std::string, std::string>> kProblem = {
    {"alpha", "alpha"}, {"places", "places"}, {"tau", "tau"}, {"eta", "eta"},
    {"weights", "weights"}};

// Keys whose flag value may name a file holding the value.
bool file_key(const std::string& key) {
  return key == "alpha" || key == "gamma" || key == "weights";
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::pair<std::string, std::string>> with_problem(
    std::vector<std::pair<std::string, std::string>> extra) {
  auto all = kProblem;
  all.insert(all.end(), extra.begin(), extra.end());
  return all;
}

// JSON arrays and objects pass through; everything else stays a string so
// rationals keep their exact form.
Json flag_value(const std::string& v) {
  if (!v.empty() && (v.front() == '[' || v.front() == '{')) return Json::parse(v);
  return v;
}

Json file_or_inline(const std::string& v) {
  std::error_code ec;
  if (v.empty() || v.front() == '[' || v.front() == '{' || !std::filesystem::is_regular_file(v, ec))
    return flag_value(v);
  std::string text = read_file(v);
  Json j = Json::parse(text, nullptr, false);
  if (!j.is_discarded()) return j;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

int exit_code(dioph_status s) {
  switch (s) {
    case DIOPH_OK: return 0;
    case DIOPH_ERR_VALIDATION: return 2;
    case DIOPH_ERR_PRECISION: return 3;
    case DIOPH_ERR_RESOURCE: return 4;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact S-arithmetic Diophantine approximation experiments", "dioph"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, seed, precision, output, format = "json";
  unsigned precision_cap = 0;
  std::size_t point_cap = 0;
  app.add_option("--config", config_path, "JSON request file; flags override its keys");
  app.add_option("--seed", seed, "master seed for sampling");
  app.add_option("--precision", precision, "sampling precision: bits at inf, digits at a prime");
  app.add_option("--output", output, "output path (default stdout)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--precision-cap", precision_cap, "bits before a comparison gives up");
  app.add_option("--point-cap", point_cap, "enumeration point cap");

  std::vector<Command> commands = {
      {"norm", "tau-norm of x and eta-norm of v",
       {{"places", "places"}, {"tau", "tau"}, {"eta", "eta"}, {"x", "x"}, {"v", "v"}, {"m", "m"}}},
      {"dirichlet", "homogeneous solution at height H", with_problem({{"H", "H"}})},
      {"profile", "eps* profile and singularity verdict",
       with_problem({{"heights", "heights"}, {"hmax", "hmax"}, {"grid-first", "grid_first"},
                     {"grid-last", "grid_last"}, {"threshold", "threshold"}})},
      {"twist", "twisted certificates at distinct witness heights",
       with_problem({{"gamma", "gamma"}, {"eps", "eps"}, {"heights", "heights"},
                     {"start", "start"}, {"factor", "factor"}, {"stop", "stop"},
                     {"count", "count"}})},
      {"liminf", "liminf statistic over a height grid",
       with_problem({{"gamma", "gamma"}, {"grid", "grid"}, {"samples", "samples"}})},
      {"ci-sim", "Monte-Carlo probe of limsup sets at two scales",
       {{"kind", "kind"}, {"n", "n"}, {"c", "c"}, {"C", "C"}, {"samples", "samples"},
        {"level-first", "level_first"}, {"level-last", "level_last"},
        {"windows", "windows"}, {"rotation", "rotation"}}},
  };
  for (auto& cmd : commands) {
    cmd.app = app.add_subcommand(cmd.name, cmd.help);
    for (const auto& [opt, key] : cmd.options)
      cmd.app->add_option(opt.size() == 1 ? "-" + opt + ",--" + opt : "--" + opt, cmd.values[key]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Command* chosen = nullptr;
  for (auto& cmd : commands)
    if (cmd.app->parsed()) chosen = &cmd;

  Json request = Json::object();
  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) {
        std::cerr << "dioph: cannot read config '" << config_path << "'\n";
        return 2;
      }
      Json cfg = Json::parse(f);
      if (!cfg.is_object()) throw std::runtime_error("config must be a JSON object");
      for (auto& [k, v] : cfg.items())
        if (k != chosen->name) request[k] = v;
      if (cfg.contains(chosen->name) && cfg[chosen->name].is_object())
        for (auto& [k, v] : cfg[chosen->name].items()) request[k] = v;
    }
    for (const auto& [opt, key] : chosen->options) {
      if (chosen->app->count("--" + opt) == 0) continue;
      const std::string& v = chosen->values[key];
      request[key] = file_key(key) ? file_or_inline(v) : flag_value(v);
    }
    // A weights object supplies places, tau and eta unless given directly.
    if (request.contains("weights")) {
      Json w = request["weights"];
      request.erase("weights");
      if (!w.is_object()) throw std::runtime_error("weights must be a JSON object");
      for (const char* k : {"places", "tau", "eta"})
        if (w.contains(k) && !(chosen->app->count(std::string("--") + k) > 0)) request[k] = w[k];
    }
    if (!seed.empty()) request["seed"] = seed;
    if (!precision.empty()) request["precision"] = precision;
    if (!output.empty()) request["output"] = output;
    if (app.count("--format") > 0) request["format"] = format;
  } catch (const std::exception& e) {
    std::cerr << "dioph: " << e.what() << "\n";
    return 2;
  }
  if (request.contains("format")) format = request["format"].get<std::string>();
  if (request.contains("output")) output = request["output"].get<std::string>();
  if (format != "csv" && format != "json") {
    std::cerr << "dioph: unknown format '" << format << "'\n";
    return 2;
  }

  dioph_context* ctx = nullptr;
  if (dioph_context_new(&ctx) != DIOPH_OK) return 1;
  std::unique_ptr<dioph_context, void (*)(dioph_context*)> guard(ctx, dioph_context_free);
  dioph_status st = dioph_context_set_limits(ctx, precision_cap, point_cap, 0);
  if (st != DIOPH_OK) {
    std::cerr << "dioph: " << dioph_context_error(ctx) << "\n";
    return exit_code(st);
  }
  dioph_result* result = nullptr;
  st = dioph_run(ctx, chosen->name.c_str(), request.dump().c_str(), &result);
  std::string message = dioph_context_error(ctx);
  if (result) {
    dioph_format fmt = format == "csv" ? DIOPH_FORMAT_CSV : DIOPH_FORMAT_JSON;
    dioph_status wst = dioph_result_write(ctx, result, fmt, output.c_str());
    dioph_result_free(result);
    if (wst != DIOPH_OK) {
      std::cerr << "dioph: " << dioph_context_error(ctx) << "\n";
      return exit_code(wst);
    }
  }
  if (st != DIOPH_OK) std::cerr << "dioph: " << dioph_status_name(st) << ": " << message << "\n";
  return exit_code(st);
}
