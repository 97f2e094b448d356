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


#include "capi/commands.hpp"

namespace dioph {

namespace {

const Json* find(const Json& req, const char* key) {
  auto it = req.find(key);
  return it == req.end() || it->is_null() ? nullptr : &*it;
}

const Json& need(const Json& req, const char* key) {
  const Json* j = find(req, key);
  if (!j) throw ValidationError(std::string("request is missing '") + key + "'");
  return *j;
}

std::string text_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw ValidationError("expected a string or an integer, got " + j.dump());
}

PlaceSet request_places(const Json& req) {
  const Json* p = find(req, "places");
  return p ? parse_places(text_of(*p)) : PlaceSet::real();
}

SMatrix request_alpha(const Json& req, const PlaceSet& places) {
  const Json& a = need(req, "alpha");
  SMatrix alpha;
  if (!a.is_array()) return {{parse_entry(a, places)}};
  for (const auto& row : a) {
    std::vector<SNumber> r;
    if (!row.is_array()) {
      r.push_back(parse_entry(row, places));
    } else {
      for (const auto& e : row) r.push_back(parse_entry(e, places));
    }
    alpha.push_back(std::move(r));
  }
  if (alpha.empty() || alpha[0].empty()) throw ValidationError("alpha is empty");
  return alpha;
}

std::vector<SNumber> parse_gamma(const Json& g, const PlaceSet& places) {
  std::vector<SNumber> out;
  if (!g.is_array()) return {parse_entry(g, places)};
  for (const auto& e : g) out.push_back(parse_entry(e, places));
  return out;
}

std::vector<Integer> integer_list(const Json& j) {
  std::vector<Integer> out;
  if (!j.is_array()) return {json_integer(j)};
  for (const auto& e : j) out.push_back(json_integer(e));
  return out;
}

std::uint64_t request_seed(const Json& req) {
  const Json* s = find(req, "seed");
  if (!s) return 0;
  if (s->is_number_unsigned() || s->is_number_integer()) return s->get<std::uint64_t>();
  return std::stoull(text_of(*s));
}

unsigned request_precision(const Json& req) {
  const Json* p = find(req, "precision");
  if (!p) return 64;
  long v = json_integer(*p).get_si();
  if (v < 1 || v > 4096) throw ValidationError("precision must lie in [1, 4096]");
  return static_cast<unsigned>(v);
}

struct Problem {
  PlaceSet places;
  SMatrix alpha;
  Weights w;
};

Problem request_problem(const Json& req) {
  Problem p;
  p.places = request_places(req);
  p.alpha = request_alpha(req, p.places);
  int m = static_cast<int>(p.alpha.size());
  int n = static_cast<int>(p.alpha[0].size());
  p.w = request_weights(req, m, n, p.places);
  check_alpha_shape(p.alpha, p.w);
  return p;
}

CommandResult cmd_norm(const Json& req, const Limits& limits) {
  PlaceSet places = request_places(req);
  std::vector<SNumber> x = parse_gamma(need(req, "x"), places);
  const Json* v = find(req, "v");
  int n = static_cast<int>(x.size());
  long m = 1;
  if (const Json* mj = find(req, "m")) {
    m = json_integer(*mj).get_si();
  } else if (v) {
    m = static_cast<long>(v->size()) - (places.has_infinity() ? 0 : n);
  }
  if (m < 1) throw ValidationError("cannot infer m from the request");
  Weights w = request_weights(req, static_cast<int>(m), n, places);
  CommandResult r;
  Json doc;
  doc["omega"] = w.omega();
  Magnitude tn = tau_norm(x, w, limits);
  doc["tau_norm"] = magnitude_json(tn);
  r.output.table.columns = {"quantity", "value", "interval"};
  RealInterval ti = tn.enclose(64);
  r.output.table.rows.push_back({"tau_norm", tn.to_string(),
                                 to_string(ti.lo()) + " " + to_string(ti.hi())});
  if (v) {
    Magnitude en = eta_norm(integer_list(*v), w.eta);
    doc["eta_norm"] = magnitude_json(en);
    RealInterval ei = en.enclose(64);
    r.output.table.rows.push_back({"eta_norm", en.to_string(),
                                   to_string(ei.lo()) + " " + to_string(ei.hi())});
  }
  r.output.document = doc;
  return r;
}

CommandResult cmd_dirichlet(const Json& req, const Limits& limits) {
  Problem p = request_problem(req);
  DirichletSolution s = solve_homogeneous(p.alpha, json_integer(need(req, "H")), p.w, limits);
  return {dirichlet_output(s), true};
}

CommandResult cmd_profile(const Json& req, const Limits& limits) {
  Problem p = request_problem(req);
  std::vector<Integer> grid;
  if (const Json* h = find(req, "heights")) {
    grid = integer_list(*h);
  } else {
    long first = find(req, "grid_first") ? json_integer(need(req, "grid_first")).get_si() : 1;
    long last = find(req, "grid_last") ? json_integer(need(req, "grid_last")).get_si() : 17;
    if (const Json* h = find(req, "hmax")) {
      Integer hmax = json_integer(*h);
      if (hmax < 2) throw ValidationError("hmax must be at least 2");
      last = static_cast<long>(mpz_sizeinbase(hmax.get_mpz_t(), 2)) - 1;
    }
    if (first < 0 || last < first) throw ValidationError("bad dyadic grid range");
    grid = dyadic_grid(static_cast<unsigned>(first), static_cast<unsigned>(last));
  }
  Rational threshold =
      find(req, "threshold") ? json_rational(need(req, "threshold")) : make_rational(1, 10);
  return {verdict_output(singularity_scan(p.alpha, grid, threshold, p.w, limits)), true};
}

CommandResult cmd_twist(const Json& req, const Limits& limits) {
  Problem p = request_problem(req);
  std::vector<SNumber> gamma =
      find(req, "gamma") ? parse_gamma(need(req, "gamma"), p.places)
                         : sample_gamma(request_seed(req), p.places, p.w.n, request_precision(req));
  std::vector<Integer> candidates;
  if (const Json* h = find(req, "heights")) {
    candidates = integer_list(*h);
  } else {
    Integer start = find(req, "start") ? json_integer(need(req, "start")) : Integer(2);
    Rational factor = find(req, "factor") ? json_rational(need(req, "factor")) : Rational(2);
    Integer stop = find(req, "stop") ? json_integer(need(req, "stop")) : Integer(1) << 64;
    candidates = geometric_heights(start, factor, stop);
  }
  Rational eps = find(req, "eps") ? json_rational(need(req, "eps"))
                                  : default_epsilon(p.alpha, candidates, p.w, 12, limits);
  std::size_t count = find(req, "count") ? json_integer(need(req, "count")).get_ui() : 10;
  TwistedSolver solver(p.alpha, eps, p.w, limits);
  auto certs = solver.distinct_sequence(gamma, candidates, count);
  CommandResult r{certificate_output(certs), true};
  for (auto& c : r.output.document) c["gamma"] = snumbers_json(gamma);
  return r;
}

CommandResult cmd_liminf(const Json& req, const Limits& limits) {
  Problem p = request_problem(req);
  std::vector<Integer> grid = integer_list(need(req, "grid"));
  std::vector<LiminfRecord> records;
  bool complete = true;
  auto add = [&](std::vector<SNumber> g, std::uint64_t seed) {
    LiminfRecord rec = liminf_statistic(p.alpha, g, grid, p.w, limits);
    rec.seed = seed;
    complete = complete && !rec.truncated;
    records.push_back(std::move(rec));
  };
  if (const Json* g = find(req, "gamma")) {
    add(parse_gamma(*g, p.places), request_seed(req));
  } else {
    std::size_t samples = find(req, "samples") ? json_integer(need(req, "samples")).get_ui() : 1;
    SplitRng master(request_seed(req));
    for (std::size_t s = 0; s < samples; ++s) {
      SplitRng rng = master.split(s);
      add(sample_gamma(rng, p.places, p.w.n, request_precision(req)), rng.seed());
    }
  }
  return {liminf_output(records), complete};
}

std::vector<Rational> scale_list(const Json& j, int n) {
  std::vector<Rational> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(json_rational(e));
  } else {
    out.assign(static_cast<std::size_t>(n), json_rational(j));
  }
  return out;
}

CommandResult cmd_ci(const Json& req, const Limits&) {
  CIExperiment spec;
  if (const Json* k = find(req, "kind")) spec.kind = parse_ci_kind(text_of(*k));
  if (const Json* n = find(req, "n")) spec.n = static_cast<int>(json_integer(*n).get_si());
  spec.c = scale_list(need(req, "c"), spec.n);
  spec.C = scale_list(need(req, "C"), spec.n);
  if (const Json* s = find(req, "samples")) spec.samples = json_integer(*s).get_ui();
  if (const Json* f = find(req, "level_first")) spec.level_first = static_cast<int>(json_integer(*f).get_si());
  if (const Json* l = find(req, "level_last")) spec.level_last = static_cast<int>(json_integer(*l).get_si());
  if (const Json* w = find(req, "windows"))
    for (const auto& e : *w) spec.window_starts.push_back(static_cast<int>(json_integer(e).get_si()));
  if (const Json* a = find(req, "rotation")) spec.rotation = parse_real(text_of(*a));
  spec.seed = request_seed(req);
  spec.precision = request_precision(req);
  return {ci_output(ci_simulation(spec)), true};
}

}  // namespace

Rational json_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ValidationError("expected an exact rational (string or integer), got " + j.dump());
}

Integer json_integer(const Json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1) throw ValidationError("expected an integer, got " + j.dump());
    return r.get_num();
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

SNumber parse_entry(const Json& j, const PlaceSet& places) {
  std::string t = text_of(j);
  if (t.find(':') != std::string::npos) return parse_snumber(t);
  RealNumber v = parse_real(t);
  if (!v.is_rational() && places.size() > 1)
    throw ValidationError("irrational '" + t + "' needs explicit places, e.g. 'inf:" + t + "'");
  return SNumber::constant(places.places(), v);
}

Weights request_weights(const Json& req, int m, int n, const PlaceSet& places) {
  Weights w;
  w.m = m;
  w.n = n;
  w.places = places;
  int omega = w.omega();
  if (const Json* t = find(req, "tau")) {
    if (!t->is_array()) {
      w.tau.assign(static_cast<std::size_t>(n),
                   std::vector<Rational>(places.size(), json_rational(*t)));
    } else {
      for (const auto& row : *t) {
        std::vector<Rational> r;
        if (row.is_array()) {
          for (const auto& e : row) r.push_back(json_rational(e));
        } else {
          r.assign(places.size(), json_rational(row));
        }
        w.tau.push_back(std::move(r));
      }
    }
  } else {
    Rational each = make_rational(omega, static_cast<long>(n) * static_cast<long>(places.size()));
    w.tau.assign(static_cast<std::size_t>(n), std::vector<Rational>(places.size(), each));
  }
  if (const Json* e = find(req, "eta")) {
    if (e->is_array()) {
      for (const auto& x : *e) w.eta.push_back(json_rational(x));
    } else {
      w.eta.assign(static_cast<std::size_t>(omega), json_rational(*e));
    }
  } else {
    w.eta.assign(static_cast<std::size_t>(omega), Rational(1));
  }
  require_valid(w);
  return w;
}

CommandResult run_command(const std::string& command, const Json& request,
                          const Limits& limits) {
  if (!request.is_object()) throw ValidationError("request must be a JSON object");
  if (command == "norm") return cmd_norm(request, limits);
  if (command == "dirichlet") return cmd_dirichlet(request, limits);
  if (command == "profile") return cmd_profile(request, limits);
  if (command == "twist") return cmd_twist(request, limits);
  if (command == "liminf") return cmd_liminf(request, limits);
  if (command == "ci-sim") return cmd_ci(request, limits);
  throw ValidationError("unknown command '" + command + "'");
}

}  // namespace dioph
