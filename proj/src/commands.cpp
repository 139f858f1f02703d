#include "lefschetz/commands.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "lefschetz/chain_complex.hpp"
#include "lefschetz/covers.hpp"
#include "lefschetz/curve_pencil.hpp"
#include "lefschetz/hessian.hpp"
#include "lefschetz/io.hpp"

namespace lefschetz::cli {

using json = nlohmann::ordered_json;
using io::format_real;

int exit_code(const std::optional<ErrorCode>& error) {
  if (!error) return 0;
  switch (*error) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::ZeroDenominator:
    case ErrorCode::VariableMismatch:
    case ErrorCode::NotHomogeneous:
      return 1;
    case ErrorCode::InvariantBreach:
      return 3;
    default:
      return 2;
  }
}

namespace {

json complex_json(std::complex<double> z) { return {{"re", format_real(z.real())}, {"im", format_real(z.imag())}}; }

json reals(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(format_real(x));
  return out;
}

std::string integer_string(const Integer& v) { return v.get_str(); }

void guarded(Report& r, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    r.error = e.code();
    r.error_message = e.what();
  } catch (const std::exception& e) {
    r.error = ErrorCode::InvariantBreach;
    r.error_message = e.what();
  }
}

Report start(std::string command, std::string digest) {
  Report r;
  r.command = std::move(command);
  r.inputs_digest = std::move(digest);
  return r;
}

RootOptions root_options(const RunConfig& c) { return {c.tolerance, c.max_iterations}; }

json linear_change_json(const LinearChange& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(integer_string(v));
    rows.push_back(r);
  }
  return {{"matrix", rows}, {"substitution", describe_linear_change(m)}};
}

}  // namespace

Report curve_analyze(const std::string& document, const RunConfig& config) {
  Report r = start("curve analyze", io::digest(document));
  guarded(r, [&] {
    const HomogeneousCurve curve = io::load_curve(document);
    const TopologyReport t = analyze(curve, {root_options(config), config.seed});
    json& p = r.payload;
    p["curve"] = curve.to_string();
    p["degree"] = t.degree;
    p["smooth"] = t.smoothness.smooth;
    if (!t.smoothness.smooth) {
      json s{{"patch", t.smoothness.patch}, {"certificate_kind", t.smoothness.certificate_kind}};
      if (t.smoothness.certificate) s["certificate"] = t.smoothness.certificate->to_string();
      p["singularity"] = s;
      r.error = ErrorCode::NotSmooth;
      r.error_message = "gradient vanishes at a point of the curve (" + t.smoothness.patch + ")";
      return;
    }
    p["axis_admissible"] = *t.axis_admissible;
    if (t.suggested_change) {
      p["suggested_change"] = linear_change_json(*t.suggested_change);
      r.error = ErrorCode::AxisOnCurve;
      r.error_message = "axis (0:0:1) lies on the curve; try " + describe_linear_change(*t.suggested_change);
      return;
    }
    const CriticalPointSet& c = *t.critical;
    json crit;
    crit["resultant"] = c.resultant.to_string();
    crit["count_with_multiplicity"] = c.count_with_multiplicity;
    crit["multiplicity_at_infinity"] = c.multiplicity_at_infinity;
    crit["squarefree"] = c.squarefree;
    json xs = json::array();
    for (const auto& x : c.distinct_x_values) xs.push_back(complex_json(x));
    crit["distinct_x_values"] = xs;
    crit["residuals"] = reals(c.residuals);
    crit["converged"] = c.converged;
    crit["iterations"] = c.iterations;
    p["critical"] = crit;
    p["lefschetz"] = t.lefschetz->lefschetz;
    if (!t.lefschetz->lefschetz) p["lefschetz_reason"] = t.lefschetz->reason;
    p["cell_counts"] = {{"index0", t.cell_counts->index0},
                        {"index1", t.cell_counts->index1},
                        {"index2", t.cell_counts->index2}};
    p["genus"] = *t.genus;
    p["euler"] = *t.euler;
    r.warnings = t.warnings;
  });
  return r;
}

Report homology(const std::string& document, const RunConfig&) {
  Report r = start("homology", io::digest(document));
  guarded(r, [&] {
    const ChainComplex c = io::load_complex(document);
    r.payload["ranks"] = c.ranks();
    const auto v = validate(c);
    if (!v.valid) r.payload["failing_degree"] = *v.failing_degree;
    json groups = json::array();
    for (const auto& g : lefschetz::homology(c)) {
      json torsion = json::array();
      for (const auto& t : g.torsion) torsion.push_back(integer_string(t));
      groups.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", torsion}, {"group", describe(g)}});
    }
    r.payload["groups"] = groups;
    r.payload["euler"] = euler_characteristic(c);
  });
  return r;
}

Report rh(const std::string& document, const RunConfig&) {
  Report r = start("rh", io::digest(document));
  guarded(r, [&] {
    const RamificationProfile profile = io::load_profile(document);
    json& p = r.payload;
    p["degree"] = profile.degree;
    p["base_genus"] = profile.base_genus;
    p["fibers"] = profile.fibers;
    const auto v = validate_profile(profile);
    p["valid"] = v.valid;
    p["diagnostics"] = v.diagnostics;
    p["spurious_fibers"] = v.spurious_fibers;
    for (std::size_t i : v.spurious_fibers)
      r.warnings.push_back("fiber " + std::to_string(i) + " is unramified (all indices 1)");
    if (!v.valid) throw Error(ErrorCode::InvalidProfile, v.diagnostics.front());
    p["splitting_count"] = total_splitting_count(profile);
    p["euler"] = rh_euler(profile);
    p["genus"] = rh_genus(profile);
  });
  return r;
}

Report perturb(int n, double epsilon, std::complex<double> t, const RunConfig& config) {
  std::ostringstream canonical;
  canonical << "perturb n=" << n << " epsilon=" << format_real(epsilon) << " t=" << format_real(t.real()) << ","
            << format_real(t.imag()) << " tol=" << format_real(config.tolerance)
            << " max_iter=" << config.max_iterations;
  Report r = start("perturb", io::digest(canonical.str()));
  r.payload["n"] = n;
  r.payload["epsilon"] = format_real(epsilon);
  r.payload["t"] = complex_json(t);
  guarded(r, [&] {
    const PerturbationResult res = split_degenerate(n, epsilon, t, root_options(config));
    json& p = r.payload;
    json pts = json::array();
    for (const auto& z : res.critical_points) pts.push_back(complex_json(z));
    p["critical_points"] = pts;
    p["residuals"] = reals(res.residuals);
    p["min_separation"] = format_real(res.min_separation);
    p["all_nondegenerate"] = res.all_nondegenerate;
    p["all_inside_epsilon_disc"] = res.all_inside_epsilon_disc;
    p["annulus_clear"] = res.annulus_clear;
    p["root_magnitude"] = format_real(res.annulus.root_magnitude);
    p["annulus_min_sampled_derivative"] = format_real(res.annulus.min_sampled_derivative);
    p["converged"] = res.converged;
    p["iterations"] = res.iterations;
    if (!res.converged) r.warnings.push_back("root refinement stopped before reaching the residual tolerance");
  });
  return r;
}

Report hessian(double a, double b, int n, const RunConfig&) {
  std::ostringstream canonical;
  canonical << "hessian a=" << format_real(a) << " b=" << format_real(b) << " n=" << n;
  Report r = start("hessian", io::digest(canonical.str()));
  r.payload["a"] = format_real(a);
  r.payload["b"] = format_real(b);
  r.payload["n"] = n;
  guarded(r, [&] {
    const RealSymmetricMatrix h = pencil_hessian(a, b, n);
    const PencilIndex idx = pencil_index(a, b, n);
    json rows = json::array();
    for (std::size_t i = 0; i < h.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < h.size(); ++j) row.push_back(format_real(h(i, j)));
      rows.push_back(row);
    }
    json& p = r.payload;
    p["index"] = idx.hessian.negatives;
    p["hessian"] = {{"matrix", rows},
                    {"eigenvalues", reals(idx.hessian.eigenvalues)},
                    {"negatives", idx.hessian.negatives},
                    {"positives", idx.hessian.positives},
                    {"zeros", idx.hessian.zeros},
                    {"det", format_real(idx.hessian.det)}};
    p["symbol"] = {{"det", format_real(idx.symbol_det)},
                   {"closed_form_det", format_real(std::pow(-(a * a + b * b), n))}};
    p["finite_difference_deviation"] = format_real(finite_difference_check(a, b, n, 1e-4));
  });
  return r;
}

Report input_failure(const std::string& command, const std::string& message) {
  Report r = start(command, io::digest(""));
  r.error = ErrorCode::ParseError;
  r.error_message = message;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

json envelope(const Report& r) {
  json out;
  out["command"] = r.command;
  out["inputs_digest"] = r.inputs_digest;
  out["status"] = r.error ? "error" : "ok";
  out["payload"] = r.payload;
  out["warnings"] = r.warnings;
  if (r.error)
    out["error"] = {{"code", std::string(to_string(*r.error))}, {"message", r.error_message}};
  else
    out["error"] = nullptr;
  return out;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im")) {
    std::string im = v["im"].get<std::string>();
    const bool negative = !im.empty() && im.front() == '-';
    if (negative) im.erase(0, 1);
    return v["re"].get<std::string>() + (negative ? " - " : " + ") + im + "i";
  }
  return v.dump();
}

bool is_leaf(const json& v) {
  return !v.is_structured() || (v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im"));
}

void flatten(const json& v, const std::string& path, std::ostringstream& out) {
  if (is_leaf(v)) {
    out << path << ": " << scalar_text(v) << '\n';
    return;
  }
  if (v.is_array()) {
    bool flat = true;
    for (const auto& e : v) flat = flat && !e.is_structured();
    if (flat) {
      out << path << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
      out << "]\n";
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  for (const auto& [key, value] : v.items()) flatten(value, path.empty() ? key : path + "." + key, out);
}

}  // namespace

std::string render(const Report& r, Format format) {
  if (format == Format::machine) return envelope(r).dump(2) + "\n";
  std::ostringstream out;
  out << "command: " << r.command << '\n';
  out << "inputs: " << r.inputs_digest << '\n';
  out << "status: " << (r.error ? "error" : "ok") << '\n';
  flatten(r.payload, "", out);
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  if (r.error) out << "error: " << to_string(*r.error) << ": " << r.error_message << '\n';
  return out.str();
}

}  // namespace lefschetz::cli
