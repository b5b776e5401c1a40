#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dk/io.hpp"
#include "dk/operadic.hpp"

namespace {

struct Shared {
  long long cap = dk::kDefaultMonomialCap;
  std::string cache_dir;
  std::string format = "text";
};

void add_shared(CLI::App* cmd, Shared& sh) {
  cmd->add_option("--cap", sh.cap, "largest admissible basis-word count per table")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cache-dir", sh.cache_dir, "directory for table caches");
  cmd->add_option("--format", sh.format, "output format")
      ->check(CLI::IsMember({"text", "report"}));
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    dk::write_file(out_path, content);
}

dk::Candidate truncated_candidate(const dk::Candidate& c, int D) {
  dk::Candidate out = c;
  out.phi = c.phi.truncated(D);
  if (c.kind == dk::Candidate::Kind::Cyclotomic) out.psi = c.psi.truncated(D);
  if (c.kind == dk::Candidate::Kind::Elliptic) {
    out.aplus = c.aplus.truncated(D);
    out.aminus = c.aminus.truncated(D);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact truncated computation in free Lie algebras, strand-family "
               "quotients, and their associator groups"};
  app.require_subcommand(1);
  int exit_code = 0;

  // dims
  auto* dims = app.add_subcommand("dims", "graded dimensions of a family's enveloping quotient");
  Shared dims_sh;
  std::string dims_family;
  int dims_maxdeg = 0;
  dims->add_option("--family", dims_family, "family key, e.g. t(3)")->required();
  dims->add_option("--maxdeg", dims_maxdeg, "largest degree to print")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_shared(dims, dims_sh);
  dims->callback([&]() {
    dk::Family fam = dk::Family::parse(dims_family);
    dk::QuotientPtr table =
        dk::shared_table(fam.presentation(), dims_maxdeg, dims_sh.cap, dims_sh.cache_dir);
    for (int d = 0; d <= dims_maxdeg; ++d)
      std::cout << d << " " << table->dim(d) << "\n";
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run the defining equations of a candidate file");
  Shared verify_sh;
  std::string verify_file;
  int verify_maxdeg = -1;
  std::string verify_octagon = "literal";
  verify->add_option("file", verify_file, "candidate file")->required();
  verify->add_option("--maxdeg", verify_maxdeg, "truncate the candidate before checking")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--octagon", verify_octagon, "slot reading of the eight-term relation")
      ->check(CLI::IsMember({"literal", "shifted"}));
  add_shared(verify, verify_sh);
  verify->callback([&]() {
    dk::Candidate c = dk::parse_candidate(dk::read_file(verify_file));
    if (verify_maxdeg >= 0) c = truncated_candidate(c, verify_maxdeg);
    dk::CheckOptions opt;
    opt.monomial_cap = verify_sh.cap;
    opt.cache_dir = verify_sh.cache_dir;
    opt.octagon = verify_octagon == "literal" ? dk::OctagonReading::Literal
                                              : dk::OctagonReading::Shifted;
    dk::CheckReport report;
    switch (c.kind) {
      case dk::Candidate::Kind::Drinfeld:
        report = dk::check_drinfeld(c, opt);
        break;
      case dk::Candidate::Kind::Cyclotomic:
        report = dk::check_cyclotomic(c, opt);
        break;
      case dk::Candidate::Kind::Elliptic:
        report = dk::check_elliptic(c, opt);
        break;
    }
    std::cout << report.str();
    bool pass = report.pass();
    if (verify_sh.format == "text")
      std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    exit_code = pass ? 0 : 1;
  });

  // solve
  auto* solve = app.add_subcommand("solve", "build an associator degree by degree");
  Shared solve_sh;
  std::string solve_lambda = "1";
  int solve_maxdeg = 0;
  std::string solve_out;
  solve->add_option("--lambda", solve_lambda, "coupling constant, rational");
  solve->add_option("--maxdeg", solve_maxdeg, "truncation order")
      ->required()
      ->check(CLI::PositiveNumber);
  solve->add_option("-o,--out", solve_out, "output candidate file");
  add_shared(solve, solve_sh);
  solve->callback([&]() {
    dk::CheckOptions opt;
    opt.monomial_cap = solve_sh.cap;
    opt.cache_dir = solve_sh.cache_dir;
    dk::SolveReport rep = dk::solve_drinfeld(dk::rat_parse(solve_lambda), solve_maxdeg, opt);
    for (const std::string& n : rep.notes) std::cout << n << "\n";
    emit(solve_out, dk::candidate_str(rep.candidate));
  });

  // compose
  auto* compose = app.add_subcommand("compose", "group law on two stored elements");
  std::string compose_kind, compose_a, compose_b, compose_out;
  std::string compose_slots = "power";
  compose->add_option("kind", compose_kind, "gt | gtgamma | gtell")
      ->required()
      ->check(CLI::IsMember({"gt", "gtgamma", "gtell"}));
  compose->add_option("a", compose_a, "left element file")->required();
  compose->add_option("b", compose_b, "right element file")->required();
  compose->add_option("-o,--out", compose_out, "output element file");
  compose->add_option("--slots", compose_slots, "slot population for the gtgamma law")
      ->check(CLI::IsMember({"power", "literal-root"}));
  compose->callback([&]() {
    dk::GtAny a = dk::parse_gt(dk::read_file(compose_a));
    dk::GtAny b = dk::parse_gt(dk::read_file(compose_b));
    if (a.kind != b.kind) throw std::runtime_error("element kinds differ");
    dk::GtAny out;
    if (compose_kind == "gt") {
      if (a.kind != dk::GtAny::Kind::Gt) throw std::runtime_error("files are not gt elements");
      out = dk::gt_any(dk::gt_compose(a.gt, b.gt));
    } else if (compose_kind == "gtgamma") {
      if (a.kind != dk::GtAny::Kind::GtGamma)
        throw std::runtime_error("files are not gtgamma elements");
      dk::GtGammaSlots slots = compose_slots == "power" ? dk::GtGammaSlots::Power
                                                        : dk::GtGammaSlots::LiteralRoot;
      out = dk::gt_any(dk::gtgamma_compose(a.gamma, b.gamma, slots));
    } else {
      if (a.kind != dk::GtAny::Kind::GtEll)
        throw std::runtime_error("files are not gtell elements");
      out = dk::gt_any(dk::gtell_compose(a.ell, b.ell));
    }
    emit(compose_out, dk::gt_str(out));
  });

  // act
  auto* act = app.add_subcommand("act", "apply a stored element to a candidate file");
  std::string act_element, act_candidate, act_out;
  act->add_option("element", act_element, "element file")->required();
  act->add_option("candidate", act_candidate, "candidate file")->required();
  act->add_option("-o,--out", act_out, "output candidate file");
  act->callback([&]() {
    dk::GtAny e = dk::parse_gt(dk::read_file(act_element));
    dk::Candidate c = dk::parse_candidate(dk::read_file(act_candidate));
    dk::Candidate out;
    switch (e.kind) {
      case dk::GtAny::Kind::Gt:
        out = dk::gt_act(e.gt, c);
        break;
      case dk::GtAny::Kind::GtGamma:
        out = dk::gtgamma_act(e.gamma, c);
        break;
      case dk::GtAny::Kind::GtEll:
        out = dk::gtell_act(e.ell, c);
        break;
    }
    emit(act_out, dk::candidate_str(out));
  });

  // op
  auto* op = app.add_subcommand("op", "strand-family operations on series files");
  op->require_subcommand(1);

  auto* op_compose = op->add_subcommand("compose", "partial composition of two series");
  Shared opc_sh;
  int opc_slot = 0;
  std::string opc_host, opc_guest, opc_out;
  op_compose->add_option("--slot", opc_slot, "host slot (0 selects the monoid product)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  op_compose->add_option("host", opc_host, "host series file")->required();
  op_compose->add_option("guest", opc_guest, "guest series file")->required();
  op_compose->add_option("-o,--out", opc_out, "output series file");
  add_shared(op_compose, opc_sh);
  op_compose->callback([&]() {
    dk::Series host = dk::parse_series(dk::read_file(opc_host));
    dk::Series guest = dk::parse_series(dk::read_file(opc_guest));
    dk::ReduceOptions ropt{opc_sh.cap, opc_sh.cache_dir};
    dk::Family fam = dk::family_of(host);
    dk::Series out;
    switch (fam.kind) {
      case dk::Family::Kind::T:
        out = dk::operad_compose(opc_slot, host, guest, ropt);
        break;
      case dk::Family::Kind::TGamma:
        out = opc_slot == 0 ? dk::monoid_compose_gamma(host, guest, ropt)
                            : dk::module_compose_gamma(opc_slot, host, guest, ropt);
        break;
      case dk::Family::Kind::Tell:
      case dk::Family::Kind::Tellbar:
        out = dk::module_compose_ell(opc_slot, host, guest, ropt);
        break;
      case dk::Family::Kind::Free:
        throw std::runtime_error("free series have no strand composition");
    }
    emit(opc_out, dk::series_str(out));
  });

  auto* op_insert = op->add_subcommand("insert", "pull a series back along an index map");
  Shared opi_sh;
  std::string opi_pmap, opi_family, opi_file, opi_out;
  op_insert->add_option("--pmap", opi_pmap, "index map, e.g. pmap(3<-2: 1||2)")->required();
  op_insert->add_option("--family", opi_family, "target family key")->required();
  op_insert->add_option("file", opi_file, "input series file")->required();
  op_insert->add_option("-o,--out", opi_out, "output series file");
  add_shared(op_insert, opi_sh);
  op_insert->callback([&]() {
    dk::Series s = dk::parse_series(dk::read_file(opi_file));
    dk::PMap f = dk::PMap::parse(opi_pmap);
    dk::Family target = dk::Family::parse(opi_family);
    dk::Series img = dk::insert_along(f, s, target);
    dk::QuotientPtr table =
        dk::shared_table(target.presentation(), s.maxdeg(), opi_sh.cap, opi_sh.cache_dir);
    emit(opi_out, dk::series_str(table->reduce(img)));
  });

  auto* op_act = op->add_subcommand("act", "strand relabeling or label twist");
  std::string opa_perm, opa_gamma, opa_file, opa_out;
  op_act->add_option("--perm", opa_perm, "strand permutation, e.g. perm(2,1,3)");
  op_act->add_option("--gamma", opa_gamma, "label twist tuple, e.g. gamma(1,0)");
  op_act->add_option("file", opa_file, "input series file")->required();
  op_act->add_option("-o,--out", opa_out, "output series file");
  op_act->callback([&]() {
    if (opa_perm.empty() == opa_gamma.empty())
      throw std::runtime_error("exactly one of --perm / --gamma is required");
    dk::Series s = dk::parse_series(dk::read_file(opa_file));
    dk::Family fam = dk::family_of(s);
    dk::Series out = opa_perm.empty() ? fam.gamma_act(dk::parse_gamma(opa_gamma), s)
                                      : fam.sym_act(dk::parse_perm(opa_perm), s);
    emit(opa_out, dk::series_str(out));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
