#include "decat/cli.hpp"

#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "decat/blocks.hpp"
#include "decat/characters.hpp"
#include "decat/crystal.hpp"
#include "decat/fock.hpp"
#include "decat/hecke.hpp"
#include "decat/io.hpp"
#include "decat/verify.hpp"

namespace decat::cli {

namespace {

struct Options {
  int modulus = 0;
  int degree = 0;
  int residue = 0;
  int n = 1;
  int rank = 2;
  std::string partition;
  std::string format;
  std::string op;
  std::string expr;
  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  bool cross_degree = false;
  bool timing = false;
};

void emit(std::ostream& out, const io::ordered_json& j) { out << j.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Level-1 Fock space, Misra-Miwa crystal, blocks, characters and the degenerate affine Hecke algebra"};
  app.name("decat");
  app.require_subcommand(1);
  Options o;

  auto* crystal = app.add_subcommand("crystal", "crystal graph on partitions of size <= d");
  crystal->add_option("--modulus", o.modulus, "0 or >= 2")->required();
  crystal->add_option("--max-size,--degree", o.degree, "largest partition size")->required()->check(CLI::NonNegativeNumber);
  crystal->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}))->default_val("json");

  auto* fock = app.add_subcommand("fock", "Fock space operators");
  fock->require_subcommand(1);
  auto* op_matrix_cmd = fock->add_subcommand("op-matrix", "matrix of e_i, f_i or h_i on degree d");
  op_matrix_cmd->add_option("--op", o.op)->required()->check(CLI::IsMember({"e", "f", "h"}));
  op_matrix_cmd->add_option("--residue", o.residue)->required();
  op_matrix_cmd->add_option("--modulus", o.modulus)->required();
  op_matrix_cmd->add_option("--degree", o.degree)->required()->check(CLI::NonNegativeNumber);
  op_matrix_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}))->default_val("json");

  auto* blocks_cmd = app.add_subcommand("blocks", "blocks of Lambda_d and their p-weight classes");
  blocks_cmd->add_option("--modulus", o.modulus)->required();
  blocks_cmd->add_option("--degree,--max-size", o.degree)->required()->check(CLI::NonNegativeNumber);
  blocks_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json"}))->default_val("json");
  blocks_cmd->add_flag("--cross-degree", o.cross_degree, "group blocks of every degree <= d by p-weight");

  auto* core_cmd = app.add_subcommand("core", "p-core and p-weight of a partition");
  core_cmd->add_option("--modulus", o.modulus)->required();
  core_cmd->add_option("--partition", o.partition)->required();

  auto* casimir_cmd = app.add_subcommand("casimir", "Casimir scalar and X/Y eigenvalue table");
  casimir_cmd->add_option("--partition", o.partition)->required();
  casimir_cmd->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  casimir_cmd->add_option("--modulus", o.modulus, "residues reported mod e")->default_val(0);

  auto* branch_cmd = app.add_subcommand("branch", "Schur expansion of the restriction to n variables");
  branch_cmd->add_option("--partition", o.partition)->required();
  branch_cmd->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);

  auto* pieri_cmd = app.add_subcommand("pieri", "Schur expansion of s_(1) s_lambda");
  pieri_cmd->add_option("--partition", o.partition)->required();
  pieri_cmd->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);

  auto* hecke_cmd = app.add_subcommand("hecke", "degenerate affine Hecke algebra");
  hecke_cmd->require_subcommand(1);
  auto* normal_form = hecke_cmd->add_subcommand("normal-form", "normal form y^a w of an expression");
  normal_form->add_option("--rank", o.rank)->required()->check(CLI::PositiveNumber);
  normal_form->add_option("--expr", o.expr)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  verify_cmd->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"kacmoody", "serre", "crystal", "blocks", "casimir", "characters", "hecke", "all"}))
      ->default_val("all");
  verify_cmd->add_option("--modulus", o.modulus)->required();
  verify_cmd->add_option("--max-size,--degree", o.degree)->required()->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", o.seed)->default_val(kDefaultSeed);
  verify_cmd->add_flag("--timing", o.timing, "include elapsed milliseconds per suite");

  if (!args.empty() && !args.front().empty() && args.front().front() != '-' && !app.get_subcommand_no_throw(args.front())) {
    err << "error: unknown subcommand '" << args.front() << "'\n";
    return kExitUsage;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*crystal) {
      const CrystalGraph g = crystal_graph(Modulus(o.modulus), o.degree);
      if (o.format == "dot")
        out << io::to_dot(g);
      else
        emit(out, io::to_json(g));
    } else if (*op_matrix_cmd) {
      const Modulus e(o.modulus);
      const OpKind kind = o.op == "e" ? OpKind::E : o.op == "f" ? OpKind::F : OpKind::H;
      const SparseIntMatrix m = op_matrix(kind, Residue(o.residue, e), o.degree);
      if (o.format == "csv")
        out << io::to_csv(m);
      else
        emit(out, io::to_json(m));
    } else if (*blocks_cmd) {
      const Modulus e(o.modulus);
      const auto bl = blocks(o.degree, e);
      const auto classes = o.cross_degree ? derived_equivalence_classes_up_to(o.degree, e)
                                          : derived_equivalence_classes(o.degree, e);
      emit(out, io::blocks_to_json(e, o.degree, bl, classes));
    } else if (*core_cmd) {
      const Modulus e(o.modulus);
      emit(out, io::core_to_json(parse_partition(o.partition), e));
    } else if (*casimir_cmd) {
      const Modulus e(o.modulus);
      emit(out, io::casimir_to_json(parse_partition(o.partition), o.n, e));
    } else if (*branch_cmd) {
      emit(out, io::to_json(branch_r1(parse_partition(o.partition), o.n)));
    } else if (*pieri_cmd) {
      emit(out, io::to_json(pieri_mult(parse_partition(o.partition), o.n)));
    } else if (*normal_form) {
      emit(out, io::to_json(parse_hecke_expression(o.expr, o.rank)));
    } else if (*verify_cmd) {
      const VerifyReport report = verify(o.suite, Modulus(o.modulus), o.degree, o.seed);
      emit(out, io::to_json(report, o.timing));
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace decat::cli
