#include "hitchin/jets.hpp"
#include "hitchin/jobs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using hitchin::jobs::json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw hitchin::jobs::SchemaError("$", "cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_job(const std::string& path) {
  try {
    return json::parse(read_input(path));
  } catch (const json::parse_error& ex) {
    throw hitchin::jobs::SchemaError("$", std::string("invalid JSON: ") + ex.what());
  }
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hitchin-system toolbox: invariants, covers, hypercohomology, the cubic, periods"};
  app.require_subcommand(1);

  hitchin::jobs::Options opt;
  app.add_option("--mode", opt.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", opt.tol, "numerical tolerance");
  app.add_option("--nodes", opt.nodes, "starting quadrature size");
  app.add_option("--fd-step", opt.fdStep, "finite-difference step");
  app.add_flag("--seed-free", opt.seedFree, "reserved; all numerics are deterministic");

  std::string family, jobPath = "-", sysPath = "-", suite = "default";
  int rank = 1, d = 3, order = 0;

  auto* cInfo = app.add_subcommand("info", "simple Lie-type data");
  cInfo->add_option("family", family)->required();
  cInfo->add_option("rank", rank)->required();

  auto* cDims = app.add_subcommand("dims", "dimension bookkeeping for the base and leaves");
  cDims->add_option("family", family)->required();
  cDims->add_option("rank", rank)->required();
  cDims->add_option("d", d)->required();

  auto* cHit = app.add_subcommand("hitchin", "invariant coefficients of a Higgs field");
  cHit->add_option("job", jobPath, "job file (JSON, '-' for stdin)");

  auto* cGen = app.add_subcommand("generic", "genericity of a spectral coefficient");
  cGen->add_option("job", jobPath, "job file (JSON, '-' for stdin)");

  auto* cJet = app.add_subcommand("jets", "jet-scheme equations of an affine variety");
  cJet->add_option("--order", order, "jet order n >= 0")->required();
  cJet->add_option("file", sysPath, "system file ('-' for stdin)");

  bool gram = false;
  auto* cCech = app.add_subcommand("cech", "hypercohomology of the deformation complex");
  cCech->add_option("job", jobPath, "job file (JSON, '-' for stdin)");
  cCech->add_flag("--gram", gram, "also emit the duality Gram matrix and Poisson rank");

  auto* cCub = app.add_subcommand("cubic", "cubic tensor of a leaf");
  cCub->add_option("job", jobPath, "job file (JSON, '-' for stdin)");

  auto* cPer = app.add_subcommand("periods", "Riemann matrix of the spectral curve");
  cPer->add_option("job", jobPath, "job file (JSON, '-' for stdin)");

  auto* cVer = app.add_subcommand("verify", "run the acceptance suite");
  cVer->add_option("--suite", suite, "suite name (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cInfo->parsed()) emit(hitchin::jobs::cmd_info(family, rank, opt));
    if (cDims->parsed()) emit(hitchin::jobs::cmd_dims(family, rank, d, opt));
    if (cHit->parsed()) emit(hitchin::jobs::cmd_hitchin(parse_job(jobPath), opt));
    if (cGen->parsed()) emit(hitchin::jobs::cmd_generic(parse_job(jobPath), opt));
    if (cJet->parsed()) emit(hitchin::jobs::cmd_jets(read_input(sysPath), order, opt));
    if (cCech->parsed()) emit(hitchin::jobs::cmd_cech(parse_job(jobPath), gram, opt));
    if (cCub->parsed()) emit(hitchin::jobs::cmd_cubic(parse_job(jobPath), opt));
    if (cPer->parsed()) emit(hitchin::jobs::cmd_periods(parse_job(jobPath), opt));
    if (cVer->parsed()) {
      json rep = hitchin::jobs::cmd_verify(suite, opt);
      emit(rep);
      return rep["pass"].get<bool>() ? 0 : 1;
    }
    return 0;
  } catch (const hitchin::jobs::SchemaError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const hitchin::ParseError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const std::logic_error& ex) {
    std::cerr << "internal: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "rejected: " << ex.what() << "\n";
    return 1;
  }
}
