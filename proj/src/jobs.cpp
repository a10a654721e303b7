#include "hitchin/jobs.hpp"

#include "hitchin/cech.hpp"
#include "hitchin/cubic.hpp"
#include "hitchin/jets.hpp"

#include <cstdio>

namespace hitchin::jobs {

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json cplx_json(const Cplx& z) { return json{{"re", fmt17(z.real())}, {"im", fmt17(z.imag())}}; }

json cmatrix_json(const periods::CMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(cplx_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

json poly_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_to_string(c));
  return a;
}

json laurent_json(const LaurentPoly& p) {
  json out;
  if (p.is_zero()) {
    out["minExp"] = 0;
    out["coeffs"] = json::array();
    return out;
  }
  out["minExp"] = p.min_exp();
  json c = json::array();
  for (int k = p.min_exp(); k <= p.max_exp(); ++k) c.push_back(rational_to_string(p.coeff(k)));
  out["coeffs"] = std::move(c);
  return out;
}

json options_json(const Options& opt) {
  return json{{"mode", opt.mode},
              {"tol", fmt17(opt.tol)},
              {"nodes", opt.nodes},
              {"fdStep", fmt17(opt.fdStep)},
              {"seedFree", opt.seedFree}};
}

periods::PeriodConfig period_config(const Options& opt) {
  periods::PeriodConfig cfg;
  cfg.nodes = opt.nodes;
  cfg.tol = opt.tol;
  return cfg;
}

const json& need(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing required field");
  return *it;
}

Rational rational_field(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw SchemaError(path, "expected a rational string \"p/q\"");
  try {
    return rational_from_string(j.get<std::string>());
  } catch (const std::invalid_argument& ex) {
    throw SchemaError(path, ex.what());
  }
}

Poly poly_field(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected a coefficient array");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i)
    c.push_back(rational_field(j[i], path + "[" + std::to_string(i) + "]"));
  return Poly(std::move(c));
}

DivisorP1 divisor_field(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a nonempty array of [point, mult]");
  std::vector<std::pair<Rational, int>> pts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) throw SchemaError(p, "expected [\"coordinate\", multiplicity]");
    Rational q = rational_field(j[i][0], p + "[0]");
    if (!j[i][1].is_number_integer() || j[i][1].get<long long>() <= 0)
      throw SchemaError(p + "[1]", "expected a positive integer multiplicity");
    pts.emplace_back(q, j[i][1].get<int>());
  }
  try {
    return DivisorP1(std::move(pts));
  } catch (const std::domain_error& ex) {
    throw SchemaError(path, ex.what());
  }
}

TracelessMatrix theta_field(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a square matrix of polynomials");
  const int n = static_cast<int>(j.size());
  std::vector<Poly> e;
  for (int i = 0; i < n; ++i) {
    const std::string pr = path + "[" + std::to_string(i) + "]";
    if (!j[static_cast<std::size_t>(i)].is_array() || static_cast<int>(j[static_cast<std::size_t>(i)].size()) != n)
      throw SchemaError(pr, "expected a row of length " + std::to_string(n));
    for (int k = 0; k < n; ++k)
      e.push_back(poly_field(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                             pr + "[" + std::to_string(k) + "]"));
  }
  return TracelessMatrix(n, std::move(e));
}

LaurentPoly laurent_field(const json& j, const std::string& path) {
  const json& mi = need(j, "minExp", path);
  const json& co = need(j, "coeffs", path);
  if (!mi.is_number_integer()) throw SchemaError(path + ".minExp", "expected an integer");
  if (!co.is_array()) throw SchemaError(path + ".coeffs", "expected an array");
  LaurentPoly out;
  int k = mi.get<int>();
  for (std::size_t i = 0; i < co.size(); ++i, ++k)
    out += LaurentPoly::monomial(k, rational_field(co[i], path + ".coeffs[" + std::to_string(i) + "]"));
  return out;
}

cech::LaurentMat lmat_field(const json& j, int n, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw SchemaError(path, "expected an n x n matrix");
  cech::LaurentMat m(n);
  for (int i = 0; i < n; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a row of length " + std::to_string(n));
    for (int k = 0; k < n; ++k)
      m.at(i, k) = laurent_field(row[static_cast<std::size_t>(k)],
                                 path + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

std::pair<char, int> type_fields(const json& job) {
  const json& t = need(job, "type", "$");
  const json& r = need(job, "rank", "$");
  if (!t.is_string() || t.get<std::string>().size() != 1) throw SchemaError("$.type", "expected a family letter");
  if (!r.is_number_integer() || r.get<int>() < 1) throw SchemaError("$.rank", "expected a positive integer");
  return {t.get<std::string>()[0], r.get<int>()};
}

}  // namespace

json cmd_info(const std::string& family, int rank, const Options& opt) {
  if (family.size() != 1) throw SchemaError("$.family", "expected a single family letter");
  SimpleTypeInfo info = lie_info(family[0], rank);
  json out;
  out["command"] = "info";
  out["config"] = options_json(opt);
  out["family"] = std::string(1, info.family);
  out["rank"] = info.rank;
  out["dim"] = info.dim;
  out["degrees"] = info.degrees;
  out["numRoots"] = info.numRoots;
  out["weylOrder"] = info.weylOrder;
  return out;
}

json cmd_dims(const std::string& family, int rank, int d, const Options& opt) {
  if (family.size() != 1) throw SchemaError("$.family", "expected a single family letter");
  DimensionReport rep = dimension_report(family[0], rank, d);
  json out;
  out["command"] = "dims";
  out["config"] = options_json(opt);
  out["family"] = family;
  out["rank"] = rank;
  out["d"] = d;
  out["dimB"] = rep.dimB;
  out["dimB0"] = rep.dimB0;
  out["dimHiggs"] = rep.dimHiggs;
  out["fibreDim"] = rep.fibreDim;
  return out;
}

json cmd_hitchin(const json& job, const Options& opt) {
  auto [family, rank] = type_fields(job);
  if (family != 'A') throw std::domain_error("the chart model computes the map for type A only");
  DivisorP1 D = divisor_field(need(job, "divisor", "$"), "$.divisor");
  TracelessMatrix theta = theta_field(need(job, "theta", "$"), "$.theta");
  if (theta.size() != rank + 1) throw SchemaError("$.theta", "matrix size must equal rank + 1");
  HiggsFieldP1 phi(std::move(theta), D);
  std::vector<Poly> b = hitchin_map(phi);
  json out;
  out["command"] = "hitchin";
  out["config"] = options_json(opt);
  out["job"] = job;
  json coeffs = json::array();
  for (const auto& p : b) coeffs.push_back(poly_json(p));
  out["coefficients"] = std::move(coeffs);
  if (phi.n() == 2) out["spectralB"] = poly_json(spectral_coefficient_a1(phi));
  return out;
}

json cmd_generic(const json& job, const Options& opt) {
  DivisorP1 D = divisor_field(need(job, "divisor", "$"), "$.divisor");
  Poly b = poly_field(need(job, "b", "$"), "$.b");
  BranchReport rep = genericity_check(b, D);
  json out;
  out["command"] = "generic";
  out["config"] = options_json(opt);
  out["job"] = job;
  out["ok"] = rep.ok;
  if (rep.ok) {
    out["branchCount"] = rep.branchCount;
    out["branchPoly"] = poly_json(rep.branchPoly);
  } else {
    out["reason"] = rep.reason;
  }
  return out;
}

json cmd_jets(const std::string& systemText, int order, const Options& opt) {
  AffineVariety v = parse_system(systemText);
  JetScheme js = jet_equations(v, order);
  json out;
  out["command"] = "jets";
  out["config"] = options_json(opt);
  out["order"] = order;
  out["baseVariables"] = v.vars;
  out["zeroGenerators"] = v.zeroGenerators;
  out["variables"] = js.vars;
  json eqs = json::array();
  for (std::size_t i = 0; i < js.equations.size(); ++i) {
    eqs.push_back(json{{"generator", js.eqIndex[i].first},
                       {"tOrder", js.eqIndex[i].second},
                       {"equation", js.equations[i].to_string(js.vars)}});
  }
  out["equations"] = std::move(eqs);
  return out;
}

json cmd_cech(const json& job, bool withGram, const Options& opt) {
  auto [family, rank] = type_fields(job);
  if (family != 'A') throw std::domain_error("hypercohomology is computed for type A only");
  TracelessMatrix theta = theta_field(need(job, "theta", "$"), "$.theta");
  if (theta.size() != rank + 1) throw SchemaError("$.theta", "matrix size must equal rank + 1");

  json out;
  out["command"] = "cech";
  out["config"] = options_json(opt);
  out["job"] = job;

  if (job.contains("divisor")) {
    DivisorP1 D = divisor_field(job["divisor"], "$.divisor");
    cech::Instance I(theta, D);
    cech::HyperCohomologyReport rep = cech::hyper_dims(I.theta, I.m);
    out["h0"] = rep.h0;
    out["h1"] = rep.h1;
    out["h2"] = rep.h2;
    out["eulerNeg"] = rep.eulerNeg;
    out["identityOk"] = rep.identityOk;
    if (job.contains("cocycles")) {
      const json& cc = job["cocycles"];
      const json& al = need(cc, "alpha", "$.cocycles");
      const json& be = need(cc, "beta", "$.cocycles");
      cech::TangentCocycle a{lmat_field(need(al, "s01", "$.cocycles.alpha"), I.n(), "$.cocycles.alpha.s01"),
                             lmat_field(need(al, "t0", "$.cocycles.alpha"), I.n(), "$.cocycles.alpha.t0"),
                             lmat_field(need(al, "t1", "$.cocycles.alpha"), I.n(), "$.cocycles.alpha.t1")};
      cech::CotangentCocycle b{lmat_field(need(be, "sigma01", "$.cocycles.beta"), I.n(), "$.cocycles.beta.sigma01"),
                               lmat_field(need(be, "tau0", "$.cocycles.beta"), I.n(), "$.cocycles.beta.tau0"),
                               lmat_field(need(be, "tau1", "$.cocycles.beta"), I.n(), "$.cocycles.beta.tau1")};
      out["pairing"] = rational_to_string(cech::duality_pair(I, a, b));
    }
    if (withGram) {
      QMatrix G = cech::gram_matrix(I);
      json rows = json::array();
      for (int i = 0; i < G.rows; ++i) {
        json r = json::array();
        for (int j = 0; j < G.cols; ++j) r.push_back(rational_to_string(G.at(i, j)));
        rows.push_back(std::move(r));
      }
      out["gram"] = std::move(rows);
      out["gramDet"] = rational_to_string(q_det(G));
      QMatrix P = cech::poisson_matrix(I);
      out["poissonRank"] = q_rank(P);
    }
  } else {
    const json& mfield = need(job, "m", "$");
    if (!mfield.is_number_integer() || mfield.get<int>() < 0)
      throw SchemaError("$.m", "expected a nonnegative integer");
    cech::HyperCohomologyReport rep = cech::hyper_dims(theta, mfield.get<int>());
    out["h0"] = rep.h0;
    out["h1"] = rep.h1;
    out["h2"] = rep.h2;
    out["eulerNeg"] = rep.eulerNeg;
    out["identityOk"] = rep.identityOk;
    if (withGram || job.contains("cocycles"))
      throw SchemaError("$.divisor", "pairing data requires a divisor");
  }
  return out;
}

json cmd_cubic(const json& job, const Options& opt) {
  DivisorP1 D = divisor_field(need(job, "divisor", "$"), "$.divisor");
  Poly b = poly_field(need(job, "b", "$"), "$.b");
  cubic::CameralDataA1 data(b, D);
  json out;
  out["command"] = "cubic";
  out["config"] = options_json(opt);
  out["job"] = job;
  out["genus"] = data.genus;
  out["basis"] = "directions 2 z^i delta_D (i < genus); forms z^j dz/y (j < genus)";
  cubic::CubicTensor T = cubic::cubic_tensor(data);
  json tensor = json::array();
  for (int i = 0; i < data.genus; ++i) {
    json plane = json::array();
    for (int j = 0; j < data.genus; ++j) {
      json row = json::array();
      for (int k = 0; k < data.genus; ++k) row.push_back(rational_to_string(T.at(i, j, k)));
      plane.push_back(std::move(row));
    }
    tensor.push_back(std::move(plane));
  }
  out["tensor"] = std::move(tensor);
  if (job.contains("bdot")) {
    Poly bdot = poly_field(job["bdot"], "$.bdot");
    Poly eta = job.contains("eta") ? poly_field(job["eta"], "$.eta") : Poly(Rational(1));
    Poly zeta = job.contains("zeta") ? poly_field(job["zeta"], "$.zeta") : Poly(Rational(1));
    if (opt.mode == "float") {
      out["value"] = cplx_json(cubic::cubic_eval_numeric(data, bdot, eta, zeta));
    } else {
      out["value"] = rational_to_string(cubic::cubic_eval(data, bdot, eta, zeta));
    }
  }
  return out;
}

json cmd_periods(const json& job, const Options& opt) {
  Poly b = poly_field(need(job, "b", "$"), "$.b");
  periods::PeriodConfig cfg = period_config(opt);
  periods::RiemannMatrix rm = periods::period_matrix(b, cfg);
  json out;
  out["command"] = "periods";
  out["config"] = options_json(opt);
  out["job"] = job;
  out["genus"] = rm.genus;
  out["aPeriods"] = cmatrix_json(rm.aPeriods);
  out["bPeriods"] = cmatrix_json(rm.bPeriods);
  out["tau"] = cmatrix_json(rm.tau);
  out["tauReduced"] = cmatrix_json(rm.tauReduced);
  out["symmetryResidual"] = fmt17(rm.symmetryResidual);
  out["imPositiveDefinite"] = rm.imPositiveDefinite;
  out["nodes"] = rm.nodes;
  if (job.contains("bdot")) {
    Poly bdot = poly_field(job["bdot"], "$.bdot");
    periods::FdResult fd = periods::dtau_fd(b, bdot, opt.fdStep, cfg);
    out["dtau"] = json{{"h", fmt17(fd.h)},
                       {"fdH", cmatrix_json(fd.fdH)},
                       {"fdHalf", cmatrix_json(fd.fdHalf)},
                       {"richardson", cmatrix_json(fd.richardson)}};
  }
  return out;
}

json cmd_verify(const std::string& suite, const Options& opt) {
  if (suite != "default") throw SchemaError("$.suite", "unknown suite '" + suite + "'");
  verify::SuiteOptions so;
  so.periods = period_config(opt);
  so.fdStep = opt.fdStep;
  std::vector<verify::CriterionResult> res = verify::run_suite(so);
  json out;
  out["command"] = "verify";
  out["config"] = options_json(opt);
  out["suite"] = suite;
  bool all = true;
  json list = json::array();
  for (const auto& c : res) {
    all = all && c.pass;
    list.push_back(json{{"id", c.id},
                        {"name", c.name},
                        {"pass", c.pass},
                        {"detail", c.detail},
                        {"seconds", fmt17(c.seconds)}});
  }
  out["criteria"] = std::move(list);
  out["pass"] = all;
  return out;
}

}  // namespace hitchin::jobs
