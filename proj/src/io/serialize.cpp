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


#include "io/serialize.hpp"

#include <fstream>
#include <iostream>

namespace dioph {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

std::string vec_text(const IntVector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.get_str());
  return join(parts, " ");
}

std::string snumbers_text(const std::vector<SNumber>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.to_string());
  return join(parts, "; ");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string interval_text(const Magnitude& m) {
  RealInterval iv = m.enclose(64);
  return to_string(iv.lo()) + " " + to_string(iv.hi());
}

Json checks_json(const std::vector<BoundCheck>& checks) {
  Json j = Json::object();
  for (const auto& c : checks) j[c.name] = c.ok;
  return j;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw ValidationError("unknown format '" + s + "' (expected csv or json)");
}

Json integer_json(const Integer& x) { return x.get_str(); }

Json vector_json(const IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

IntVector vector_from_json(const Json& j) {
  IntVector v;
  for (const auto& x : j) v.emplace_back(x.get<std::string>());
  return v;
}

Json interval_json(const RealInterval& iv) {
  return Json::array({to_string(iv.lo()), to_string(iv.hi())});
}

Json magnitude_json(const Magnitude& m) {
  Json j;
  j["value"] = m.to_string();
  j["coef"] = to_string(m.coefficient());
  Json f = Json::array();
  for (const auto& [base, e] : m.factors())
    f.push_back(Json::array({base.to_string(), to_string(e)}));
  j["factors"] = f;
  j["interval"] = interval_json(m.enclose(64));
  return j;
}

Magnitude magnitude_from_json(const Json& j) {
  Magnitude m(parse_rational(j.at("coef").get<std::string>()));
  for (const auto& f : j.at("factors"))
    m = m * Magnitude::power(parse_real(f.at(0).get<std::string>()),
                             parse_rational(f.at(1).get<std::string>()));
  return m;
}

Json snumbers_json(const std::vector<SNumber>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

std::vector<SNumber> snumbers_from_json(const Json& j) {
  std::vector<SNumber> v;
  for (const auto& x : j) v.push_back(parse_snumber(x.get<std::string>()));
  return v;
}

Json liminf_json(const LiminfRecord& r) {
  Json j;
  j["seed"] = r.seed;
  j["gamma"] = snumbers_json(r.gamma);
  Json grid = Json::array();
  for (const auto& A : r.A_grid) grid.push_back(A.get_str());
  j["A_grid"] = grid;
  Json stat = Json::array();
  for (std::size_t k = 0; k < r.stat.size(); ++k) {
    Json s;
    s["A"] = r.A_grid[k].get_str();
    s["stat"] = magnitude_json(r.stat[k]);
    s["a"] = vector_json(r.arg_a[k]);
    s["b"] = vector_json(r.arg_b[k]);
    stat.push_back(s);
  }
  j["stat"] = stat;
  j["truncated"] = r.truncated;
  return j;
}

LiminfRecord liminf_from_json(const Json& j) {
  LiminfRecord r;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.gamma = snumbers_from_json(j.at("gamma"));
  for (const auto& A : j.at("A_grid")) r.A_grid.emplace_back(A.get<std::string>());
  for (const auto& s : j.at("stat")) {
    r.stat.push_back(magnitude_from_json(s.at("stat")));
    r.arg_a.push_back(vector_from_json(s.at("a")));
    r.arg_b.push_back(vector_from_json(s.at("b")));
  }
  r.truncated = j.at("truncated").get<bool>();
  return r;
}

Json certificate_json(const TwistedCertificate& c) {
  Json j;
  j["H"] = c.H.get_str();
  j["eps"] = to_string(c.eps);
  j["mode"] = to_string(c.trace.mode);
  j["a"] = vector_json(c.a);
  j["b"] = vector_json(c.b);
  j["residual_finite"] = magnitude_json(c.residual_finite);
  j["residual_real"] = magnitude_json(c.residual_real);
  Json consts = Json::object();
  for (const auto& k : c.constants) consts[k.name] = magnitude_json(k.value);
  j["constants"] = consts;
  j["checks"] = checks_json(c.checks);
  j["verified"] = c.verified();
  Json t;
  Json basis = Json::array();
  for (const auto& v : c.trace.basis) basis.push_back(vector_json(v));
  t["basis"] = basis;
  Json lambda = Json::array();
  for (const auto& l : c.trace.lambda) lambda.push_back(magnitude_json(l));
  t["lambda"] = lambda;
  t["coordinates"] = snumbers_json(c.trace.x);
  Json r = Json::array();
  for (const auto& x : c.trace.r) r.push_back(to_string(x));
  t["coefficients"] = r;
  t["windows"] = c.trace.windows;
  t["pad"] = to_string(c.trace.pad);
  j["trace"] = t;
  return j;
}

Json dirichlet_json(const DirichletSolution& s) {
  Json j;
  j["H"] = s.H.get_str();
  j["a"] = vector_json(s.a);
  j["b"] = vector_json(s.b);
  Json res = Json::array();
  for (const auto& row : s.residuals) {
    Json r = Json::array();
    for (const auto& m : row) r.push_back(magnitude_json(m));
    res.push_back(r);
  }
  j["residuals"] = res;
  j["checks"] = checks_json(s.checks);
  j["a_zero"] = s.a_zero;
  j["verified"] = s.verified();
  return j;
}

Json verdict_json(const SingularityVerdict& v) {
  Json j;
  j["classification"] = to_string(v.classification);
  j["threshold"] = to_string(v.threshold);
  Json prof = Json::array();
  for (const auto& p : v.profile) {
    Json e;
    e["H"] = p.H.get_str();
    e["eps_star"] = magnitude_json(p.eps_star);
    e["attained"] = p.exact;
    e["a"] = vector_json(p.a);
    e["b"] = vector_json(p.b);
    prof.push_back(e);
  }
  j["profile"] = prof;
  Json wh = Json::array();
  for (const auto& H : v.witness_heights) wh.push_back(H.get_str());
  j["witness_heights"] = wh;
  return j;
}

Json ci_json(const CIResult& r) {
  Json j;
  j["kind"] = to_string(r.spec.kind);
  j["n"] = r.spec.n;
  Json c = Json::array(), C = Json::array();
  for (const auto& x : r.spec.c) c.push_back(to_string(x));
  for (const auto& x : r.spec.C) C.push_back(to_string(x));
  j["c"] = c;
  j["C"] = C;
  j["samples"] = r.spec.samples;
  j["levels"] = Json::array({r.spec.level_first, r.spec.level_last});
  j["seed"] = r.spec.seed;
  j["precision"] = r.spec.precision;
  j["discretization_error"] = r.discretization_error;
  j["subset_violations"] = r.subset_violations;
  Json wins = Json::array();
  for (const auto& w : r.windows) {
    Json e;
    e["window"] = Json::array({w.first, w.last});
    e["hits_c"] = w.hits_c;
    e["hits_C"] = w.hits_C;
    e["estimate_c"] = w.estimate_c;
    e["estimate_C"] = w.estimate_C;
    e["difference"] = w.difference;
    e["half_width_c"] = w.half_width_c;
    e["half_width_C"] = w.half_width_C;
    e["half_width_difference"] = w.half_width_difference;
    wins.push_back(e);
  }
  j["windows"] = wins;
  return j;
}

Output liminf_output(const std::vector<LiminfRecord>& records) {
  Output out;
  out.document = Json::array();
  out.table.columns = {"sample", "seed", "gamma", "A", "stat", "stat_interval", "a", "b"};
  for (std::size_t s = 0; s < records.size(); ++s) {
    const auto& r = records[s];
    out.document.push_back(liminf_json(r));
    for (std::size_t k = 0; k < r.stat.size(); ++k)
      out.table.rows.push_back({std::to_string(s), std::to_string(r.seed),
                                snumbers_text(r.gamma), r.A_grid[k].get_str(),
                                r.stat[k].to_string(), interval_text(r.stat[k]),
                                vec_text(r.arg_a[k]), vec_text(r.arg_b[k])});
  }
  return out;
}

Output certificate_output(const std::vector<TwistedCertificate>& certs) {
  Output out;
  out.document = Json::array();
  out.table.columns = {"H", "eps", "mode", "a", "b", "residual_finite", "residual_real",
                       "verified"};
  for (const auto& c : certs) {
    out.document.push_back(certificate_json(c));
    out.table.rows.push_back({c.H.get_str(), to_string(c.eps), to_string(c.trace.mode),
                              vec_text(c.a), vec_text(c.b), c.residual_finite.to_string(),
                              c.residual_real.to_string(), c.verified() ? "true" : "false"});
  }
  return out;
}

Output dirichlet_output(const DirichletSolution& s) {
  Output out;
  out.document = dirichlet_json(s);
  out.table.columns = {"H", "a", "b", "verified"};
  out.table.rows.push_back({s.H.get_str(), vec_text(s.a), vec_text(s.b),
                            s.verified() ? "true" : "false"});
  return out;
}

Output verdict_output(const SingularityVerdict& v) {
  Output out;
  out.document = verdict_json(v);
  out.table.columns = {"H",         "eps_star_num",      "eps_star_den", "attained",
                       "eps_star",  "eps_star_interval", "a",            "b",
                       "classification"};
  for (const auto& p : v.profile) {
    // Irrational values print a 64-bit upper approximation with attained = false.
    Rational q = p.eps_star.upper_rational(64);
    out.table.rows.push_back({p.H.get_str(), q.get_num().get_str(), q.get_den().get_str(),
                              p.exact ? "true" : "false", p.eps_star.to_string(),
                              interval_text(p.eps_star), vec_text(p.a), vec_text(p.b),
                              to_string(v.classification)});
  }
  return out;
}

Output ci_output(const CIResult& r) {
  Output out;
  out.document = ci_json(r);
  out.table.columns = {"window_first", "window_last", "estimate_c", "estimate_C", "difference",
                       "half_width_difference", "subset_violations"};
  for (const auto& w : r.windows) {
    Json row = Json::array({w.estimate_c, w.estimate_C, w.difference, w.half_width_difference});
    out.table.rows.push_back({std::to_string(w.first), std::to_string(w.last),
                              row[0].dump(), row[1].dump(), row[2].dump(), row[3].dump(),
                              std::to_string(r.subset_violations)});
  }
  return out;
}

std::string render_csv(const Table& t) {
  std::string s;
  std::vector<std::string> head;
  for (const auto& c : t.columns) head.push_back(csv_field(c));
  s += join(head, ",") + "\n";
  for (const auto& row : t.rows) {
    std::vector<std::string> f;
    for (const auto& c : row) f.push_back(csv_field(c));
    s += join(f, ",") + "\n";
  }
  return s;
}

std::string render(const Output& out, Format format) {
  if (format == Format::kCsv) return render_csv(out.table);
  return out.document.dump(2) + "\n";
}

void emit(const Output& out, Format format, const std::string& path) {
  std::string text = render(out, format);
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace dioph
