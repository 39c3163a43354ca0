#include "infotile/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "infotile/shannon.hpp"
#include "infotile/verify.hpp"
#include "infotile/witness.hpp"

namespace infotile {

namespace {

struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Kind { CS, SAS, CI };

Kind detect(const json& j) {
  if (j.contains("relations")) return Kind::CI;
  if (j.contains("free")) return Kind::CS;
  if (j.contains("rows")) return Kind::SAS;
  throw std::invalid_argument("unrecognized system document");
}

struct Io {
  std::ostream& out;
  std::ostream& err;
  void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") out << text;
    else write_text_file(path, text);
  }
  void emit(const std::string& path, const json& doc) { emit(path, json_doc_string(doc)); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wang tiles to information inequalities: compile, witness, verify, refute"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string in, in2, outp, text_out, form = "cond-affine", role;
  int max_period = 6;
  double tol = kEndToEndTolerance;
  long r = 0;
  std::vector<std::string> vars;
  bool render = false, realize = false;

  auto* c_compile = app.add_subcommand("compile", "tile set -> constraint system");
  c_compile->add_option("tileset", in)->required();
  c_compile->add_option("-o,--output", outp);

  auto* c_flatten = app.add_subcommand("flatten", "constraint system -> sparse affine system");
  c_flatten->add_option("system", in)->required();
  c_flatten->add_option("-o,--output", outp);

  auto* c_slack = app.add_subcommand("slackify", "inequalities -> equalities with slack variables");
  c_slack->add_option("sparse", in)->required();
  c_slack->add_option("-o,--output", outp);

  auto* c_search = app.add_subcommand("tile-search", "find a periodic tiling");
  c_search->add_option("tileset", in)->required();
  c_search->add_option("--max-period", max_period)->check(CLI::Range(1, 64));
  c_search->add_option("-o,--output", outp);
  c_search->add_flag("--render", render, "ASCII rendering on stderr");

  auto* c_witness = app.add_subcommand("witness", "tile set + tiling -> joint distribution");
  c_witness->add_option("tileset", in)->required();
  c_witness->add_option("tiling", in2)->required();
  c_witness->add_option("-o,--output", outp);

  auto* c_verify = app.add_subcommand("verify", "check a joint against a system");
  c_verify->add_option("joint", in)->required();
  c_verify->add_option("system", in2)->required();
  c_verify->add_option("--tol", tol)->check(CLI::NonNegativeNumber);
  c_verify->add_flag("--realize-slacks", realize, "add missing slack variables from row values");
  c_verify->add_option("-o,--output", outp);

  auto* c_refute = app.add_subcommand("refute", "Shannon outer bound feasibility");
  c_refute->add_option("sparse", in)->required();
  c_refute->add_option("--vars", vars)->delimiter(',');
  c_refute->add_option("-o,--output", outp);

  auto* c_ci = app.add_subcommand("ci-only", "constraint system -> CI system");
  c_ci->add_option("system", in)->required();
  c_ci->add_option("-o,--output", outp);

  auto* c_card = app.add_subcommand("card-implication", "CI system -> cardinality implication");
  c_card->add_option("ci", in)->required();
  c_card->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  c_card->add_option("-o,--output", outp);

  auto* c_disj = app.add_subcommand("disjointify", "CI system -> disjoint CI system");
  c_disj->add_option("ci", in)->required();
  c_disj->add_option("-o,--output", outp);

  auto* c_bin = app.add_subcommand("binary-implication", "cardinality implication -> binary implication");
  c_bin->add_option("ci", in)->required();
  c_bin->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  c_bin->add_option("-o,--output", outp);

  auto* c_emit = app.add_subcommand("emit", "statement forms with audit trail");
  c_emit->add_option("system", in)->required();
  c_emit->add_option("--form", form)->check(CLI::IsMember({"cond-affine", "affine-subspace", "boolean"}));
  c_emit->add_option("--role", role, "designated variable (sparse input)");
  c_emit->add_option("--text", text_out, "write the text rendering here");
  c_emit->add_option("-o,--output", outp);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Io io{out, err};
  try {
    if (*c_compile) {
      io.emit(outp, system_json(compile_ttori(tileset_from_json(read_json_file(in)))));
    } else if (*c_flatten) {
      io.emit(outp, sparse_json(flatten(system_from_json(read_json_file(in)))));
    } else if (*c_slack) {
      io.emit(outp, sparse_json(slackify(sparse_from_json(read_json_file(in)))));
    } else if (*c_search) {
      TileSet ts = tileset_from_json(read_json_file(in));
      auto til = find_periodic_tiling(ts, max_period, {jobs});
      if (!til) throw DomainFailure("no periodic tiling up to period " + std::to_string(max_period));
      if (render) err << render_tiling(ts, *til);
      io.emit(outp, tiling_json(*til));
    } else if (*c_witness) {
      TileSet ts = tileset_from_json(read_json_file(in));
      PeriodicTiling til = tiling_from_json(read_json_file(in2));
      FactoredJoint j = build_witness(ts, til);
      std::ostringstream ss;
      write_joint(ss, j);
      io.emit(outp, ss.str());
    } else if (*c_verify) {
      FactoredJoint j = read_joint_file(in);
      json doc = read_json_file(in2);
      VerificationReport rep;
      switch (detect(doc)) {
        case Kind::CS: rep = verify(j, system_from_json(doc), tol, jobs); break;
        case Kind::SAS: {
          SparseAffineSystem sas = sparse_from_json(doc);
          if (realize) realize_slacks(j, sas, tol, jobs);
          rep = verify_rows(j, sas.rows, tol, jobs);
          break;
        }
        case Kind::CI: rep = verify_rows(j, ci_rows(ci_system_from_json(doc)), tol, jobs); break;
      }
      io.emit(outp, report_json(rep));
      err << rep.rows.size() - rep.failures << "/" << rep.rows.size() << " rows pass, max residual "
          << rep.max_violation << ", max atoms per row " << rep.max_row_atoms << "\n";
      if (!rep.ok()) throw DomainFailure("verification failed on " + std::to_string(rep.failures) + " rows");
    } else if (*c_refute) {
      std::optional<std::vector<VarId>> restrict;
      if (!vars.empty()) restrict = std::vector<VarId>(vars.begin(), vars.end());
      SparseAffineSystem sas = sparse_from_json(read_json_file(in));
      LPOutcome o = refute(sas, restrict);
      if (o.status == LPOutcome::REFUTED)
        if (auto bad = replay(sas, o)) throw std::logic_error("certificate does not replay: " + *bad);
      io.emit(outp, outcome_json(o));
      err << status_str(o.status) << "\n";
    } else if (*c_ci) {
      io.emit(outp, ci_system_json(to_ci_only(system_from_json(read_json_file(in)))));
    } else if (*c_card) {
      io.emit(outp, ci_system_json(to_cardinality_implication(ci_system_from_json(read_json_file(in)), r)));
    } else if (*c_disj) {
      io.emit(outp, ci_system_json(disjointify(ci_system_from_json(read_json_file(in)))));
    } else if (*c_bin) {
      io.emit(outp, ci_system_json(binary_implication_instance(ci_system_from_json(read_json_file(in)), r)));
    } else if (*c_emit) {
      json doc = read_json_file(in);
      StatementForm f = parse_form(form);
      Statement st;
      std::vector<SourceRow> rows;
      std::optional<VarId> rv;
      if (!role.empty()) rv = VarId(role);
      switch (detect(doc)) {
        case Kind::CI: {
          CISystem ci = ci_system_from_json(doc);
          doc = json();
          rows = source_rows(ci);
          st = emit_form(ci, f);
          break;
        }
        case Kind::CS: {
          SparseAffineSystem sas = flatten(system_from_json(doc));
          rows = source_rows(sas);
          st = emit_form(sas, f, rv);
          break;
        }
        case Kind::SAS: {
          SparseAffineSystem sas = sparse_from_json(doc);
          rows = source_rows(sas);
          st = emit_form(sas, f, rv);
          break;
        }
      }
      if (auto bad = check_audit(st, rows)) throw std::logic_error("audit trail broken: " + *bad);
      if (outp.empty() || outp == "-") {
        write_statement(out, st);
      } else {
        std::ofstream f(outp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + outp + "'");
        write_statement(f, st);
      }
      if (!text_out.empty()) write_text_file(text_out, statement_text(st));
    }
  } catch (const DomainFailure& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const WitnessRefusal& e) {
    err << "witness refused: " << e.what() << "\n";
    return 1;
  } catch (const std::length_error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace infotile
