#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dq/bv.hpp"
#include "dq/errors.hpp"
#include "dq/expr.hpp"
#include "dq/json_io.hpp"
#include "dq/koszul.hpp"
#include "dq/moduli.hpp"
#include "dq/poisson.hpp"
#include "dq/wick.hpp"

namespace dq::cli {

enum ExitCode : int { ok = 0, input_error = 2, resource_error = 3, internal_error = 4 };

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"star",   "moyal",   "associator", "check-poisson", "schouten",
                                          "koszul", "bv-check", "qme",       "moduli"};
  return c;
}

/// One invocation. Tensor arguments accept a fixture name or inline JSON.
struct JobSpec {
  std::string command;
  std::string alpha;
  std::string f, g, h;
  std::string at;  // comma-separated basepoint; empty means the origin
  int order = kDefaultTruncation;
  std::string format = "text";
  std::string psi1, psi2;
  std::string w1, w2;
  std::string space;
  std::string action;
  std::string observable;
  int n = 0;
  int codim = -1;
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + what + ": " + e.what());
  }
}

/// Reads a JobSpec document; unknown keys are rejected.
inline JobSpec job_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("job document must be a JSON object");
  JobSpec job;
  auto str = [&](const char* key, std::string& out) {
    if (!j.contains(key)) return;
    const Json& v = j.at(key);
    if (v.is_string())
      out = v.get<std::string>();
    else if (v.is_object())
      out = v.dump();
    else if (v.is_array()) {
      std::string s;
      for (const auto& x : v) {
        if (!s.empty()) s += ",";
        if (x.is_string())
          s += x.get<std::string>();
        else if (x.is_number_integer())
          s += std::to_string(x.get<long>());
        else
          throw InputError(std::string("job: entries of '") + key + "' must be strings or integers");
      }
      out = s;
    } else {
      throw InputError(std::string("job: field '") + key + "' has the wrong type");
    }
  };
  auto integer = [&](const char* key, int& out) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number_integer()) throw InputError(std::string("job: '") + key + "' must be an integer");
    out = j.at(key).get<int>();
  };
  static const std::vector<std::string> known{"command", "alpha", "f",     "g",      "h",
                                              "at",      "order", "format", "psi1",  "psi2",
                                              "w1",      "w2",    "space", "action", "observable",
                                              "n",       "codim"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw InputError("job: unknown field '" + key + "'");
  str("command", job.command);
  str("alpha", job.alpha);
  str("f", job.f);
  str("g", job.g);
  str("h", job.h);
  str("at", job.at);
  integer("order", job.order);
  str("format", job.format);
  str("psi1", job.psi1);
  str("psi2", job.psi2);
  str("w1", job.w1);
  str("w2", job.w2);
  str("space", job.space);
  str("action", job.action);
  str("observable", job.observable);
  integer("n", job.n);
  integer("codim", job.codim);
  return job;
}

namespace detail {

inline void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing required option --") + flag);
}

inline Multivector multivector_arg(const std::string& value, const char* flag) {
  require(value, flag);
  if (value.front() == '{') return alternating_from_json<Multivector>(parse_json(value, flag));
  for (const auto& name : fixtures::names())
    if (value == name) return fixtures::by_name(name);
  throw InputError(std::string("--") + flag + ": unknown structure '" + value + "'");
}

inline DifferentialForm form_arg(const std::string& value, const char* flag) {
  require(value, flag);
  if (value.front() != '{') throw InputError(std::string("--") + flag + " expects a JSON form");
  return alternating_from_json<DifferentialForm>(parse_json(value, flag));
}

inline Polynomial polynomial_arg(const std::string& value, const char* flag, int dim) {
  require(value, flag);
  try {
    return parse_polynomial(value, dim);
  } catch (const InputError& e) {
    throw InputError(std::string("--") + flag + ": " + e.what());
  }
}

inline std::vector<Scalar> basepoint_arg(const std::string& value, int dim) {
  if (value.empty()) return std::vector<Scalar>(dim);
  std::vector<Scalar> pt;
  std::stringstream ss(value);
  std::string part;
  while (std::getline(ss, part, ',')) pt.push_back(parse_scalar(part));
  if (static_cast<int>(pt.size()) != dim)
    throw InputError("--at: expected " + std::to_string(dim) + " coordinates, got " +
                     std::to_string(pt.size()));
  return pt;
}

inline std::string join(const std::vector<Scalar>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + to_string(v[k]);
  return s;
}

inline void text_tensor(std::ostream& out, const std::string& label, const Json& t) {
  out << label << ":";
  if (t["components"].empty()) {
    out << " 0\n";
    return;
  }
  out << "\n";
  for (const auto& [key, value] : t["components"].items())
    out << "  [" << key << "] " << value.get<std::string>() << "\n";
}

inline void text_series(std::ostream& out, const Json& series) {
  out << "series:\n";
  for (const auto& [k, v] : series.items()) out << "  hbar^" << k << ": " << v.get<std::string>() << "\n";
}

inline Json residual_report(const std::vector<AxiomResidual>& rs) {
  Json out = Json::object();
  for (const auto& r : rs) out[r.name] = r.holds() ? "0" : to_expr(r.residual);
  return out;
}

}  // namespace detail

/// Validates the job, computes, and writes the report. Returns the exit status.
inline int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    using namespace detail;
    if (job.format != "text" && job.format != "json")
      throw InputError("--format must be 'text' or 'json'");
    const bool json = job.format == "json";
    Json report{{"command", job.command}};
    std::ostringstream text;
    text << "command: " << job.command << "\n";

    const std::string& c = job.command;
    if (c == "star" || c == "moyal" || c == "associator") {
      Multivector alpha = multivector_arg(job.alpha, "alpha");
      require_degree(alpha, 2, "--alpha");
      const int d = alpha.dim();
      Polynomial f = polynomial_arg(job.f, "f", d), g = polynomial_arg(job.g, "g", d);
      std::optional<Polynomial> h;
      if (c == "associator") h = polynomial_arg(job.h, "h", d);
      std::vector<Scalar> x0 = basepoint_arg(job.at, d);
      check_order(job.order, d, WickConfig{});
      if (c == "moyal" && !alpha.has_constant_components())
        throw InputError("moyal requires constant components");
      Json s;
      if (c == "star")
        s = to_json(star(f, g, alpha, x0, job.order));
      else if (c == "moyal")
        s = to_json(moyal(f, g, alpha, x0, job.order));
      else
        s = to_json(StarSeries{x0, associator(f, g, *h, alpha, x0, job.order)});
      report["order"] = job.order;
      report["basepoint"] = s["basepoint"];
      report["series"] = s["series"];
      text << "basepoint: " << join(x0) << "\norder: " << job.order << "\n";
      text_series(text, s["series"]);
    } else if (c == "check-poisson") {
      Multivector alpha = multivector_arg(job.alpha, "alpha");
      require_degree(alpha, 2, "--alpha");
      Json sq = to_json(schouten(alpha, alpha));
      bool poisson = sq["components"].empty();
      report["poisson"] = poisson;
      report["schouten_square"] = sq;
      text << "poisson: " << (poisson ? "true" : "false") << "\n";
      text_tensor(text, "schouten_square", sq);
    } else if (c == "schouten") {
      Multivector a = multivector_arg(job.psi1, "psi1"), b = multivector_arg(job.psi2, "psi2");
      require_dim(a.dim(), b.dim());
      Json r = to_json(schouten(a, b));
      report["bracket"] = r;
      text_tensor(text, "bracket", r);
    } else if (c == "koszul") {
      Multivector alpha = multivector_arg(job.alpha, "alpha");
      require_degree(alpha, 2, "--alpha");
      DifferentialForm w1 = form_arg(job.w1, "w1"), w2 = form_arg(job.w2, "w2");
      require_degree(w1, 1, "--w1");
      require_degree(w2, 1, "--w2");
      require_dim(w1.dim(), alpha.dim());
      require_dim(w2.dim(), alpha.dim());
      DifferentialForm geo = koszul_bracket(w1, w2, alpha);
      DifferentialForm dia = koszul_bracket_diagrammatic(w1, w2, alpha);
      report["bracket"] = to_json(geo);
      report["routes_agree"] = geo == dia;
      text_tensor(text, "bracket", report["bracket"]);
      text << "routes_agree: " << (geo == dia ? "true" : "false") << "\n";
    } else if (c == "bv-check" || c == "qme") {
      require(job.space, "space");
      BVSpace space = bv_space_from_json(parse_json(job.space, "--space"));
      auto parse = [&](const std::string& e, const char* flag) {
        require(e, flag);
        return parse_super(e, space.layout(), job.order);
      };
      if (c == "bv-check") {
        SuperPoly f = parse(job.f, "f"), g = parse(job.g, "g"), h = parse(job.h, "h");
        auto rs = check_bv_axioms(space, f, g, h);
        bool all = true;
        for (const auto& r : rs) all = all && r.holds();
        report["axioms"] = residual_report(rs);
        report["all_hold"] = all;
        for (const auto& r : rs)
          text << r.name << ": " << (r.holds() ? "holds" : "fails, residual " + to_expr(r.residual)) << "\n";
        text << "all_hold: " << (all ? "true" : "false") << "\n";
      } else {
        SuperPoly s = parse(job.action, "action");
        std::optional<SuperPoly> o;
        if (!job.observable.empty()) o = parse(job.observable, "observable");
        SuperPoly cl = classical_residual(space, s);
        SuperPoly q = qme_residual(space, s);
        report["classical_residual"] = to_expr(cl);
        report["qme_residual"] = to_expr(q);
        report["qme_holds"] = q.is_zero();
        text << "classical_residual: " << to_expr(cl) << "\nqme_residual: " << to_expr(q)
             << "\nqme_holds: " << (q.is_zero() ? "true" : "false") << "\n";
        if (o) {
          SuperPoly w = omega(space, s, *o);
          SuperPoly ww = omega(space, s, w);
          report["omega"] = to_expr(w);
          report["omega_squared"] = to_expr(ww);
          text << "omega: " << to_expr(w) << "\nomega_squared: " << to_expr(ww) << "\n";
        }
      }
    } else if (c == "moduli") {
      if (job.n < 2) throw InputError("--n must be at least 2");
      int codim = job.codim < 0 ? 1 : job.codim;
      auto strata = enumerate_strata(job.n, codim);
      report["n"] = job.n;
      report["codim"] = codim;
      report["dim"] = dim(job.n);
      report["count"] = strata.size();
      Json list = Json::array();
      for (const auto& s : strata) list.push_back(to_string(s));
      report["strata"] = list;
      text << "n: " << job.n << "\ncodim: " << codim << "\ndim: " << dim(job.n)
           << "\ncount: " << strata.size() << "\nstrata:\n";
      for (const auto& s : strata) text << "  " << to_string(s) << "\n";
      if (codim == 1 && job.n >= 3) {
        Json comps = Json::array();
        text << "compositions:";
        bool first = true;
        for (const auto& f : facet_compositions(job.n)) {
          comps.push_back(Json{{"composition", composition_label(f)}, {"stratum", to_string(f.stratum)}});
          text << (first ? " " : ", ") << composition_label(f);
          first = false;
        }
        text << "\n";
        report["compositions"] = comps;
      }
    } else {
      throw InputError("unknown command '" + c + "'");
    }
    out << (json ? report.dump(2) + "\n" : text.str());
    return ok;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return resource_error;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
}

}  // namespace dq::cli
