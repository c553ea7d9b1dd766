#include "skein/cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "skein/diagram/diagram.hpp"
#include "skein/diagram/geodesic.hpp"
#include "skein/error.hpp"
#include "skein/exactalg/phi.hpp"
#include "skein/starprod/star.hpp"
#include "skein/statesum/bracket.hpp"
#include "skein/statesum/expansion.hpp"
#include "skein/statesum/poly_table.hpp"
#include "skein/verify/suites.hpp"

namespace skein {

namespace {

constexpr int kOk = 0;
constexpr int kDiffer = 1;
constexpr int kMalformed = 2;

MarkedDiagram read_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return diagram_from_json(buf.str());
}

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::NonParallelComponents:
    case ErrorCode::MalformedDiagram:
    case ErrorCode::BadGenerator:
    case ErrorCode::NonPrimitiveClass:
    case ErrorCode::SurfaceMismatch:
    case ErrorCode::UnsupportedSuperposition:
    case ErrorCode::NotUnimodular:
    case ErrorCode::NotRealDiagram:
    case ErrorCode::ParseError:
      return true;
    default:
      return false;
  }
}

CurveClass parse_class(const std::string& surface, const std::vector<std::int64_t>& v, const std::string& flag) {
  if (surface == "torus") {
    if (v.size() != 2) throw Error(ErrorCode::ParseError, flag + " on the torus takes p,q");
    return CurveClass::torus(v[0], v[1]);
  }
  if (v.size() != 1 || v[0] < 0) throw Error(ErrorCode::ParseError, flag + " on the annulus takes a copy count");
  return CurveClass::annulus(v[0]);
}

int run_verify(const std::string& suite, std::ostream& out) {
  std::vector<Criterion> selected;
  if (suite.empty() || suite == "all") {
    selected = acceptance_criteria();
  } else {
    selected = suite_criteria(suite);
    if (selected.empty()) throw Error(ErrorCode::ParseError, "unknown suite " + suite);
  }
  int failed = 0;
  for (const auto& c : selected) {
    CheckReport r;
    try {
      r = c.run();
    } catch (const Error& e) {
      r.fail(e.what());
    }
    out << "criterion " << c.id << " [" << c.suite << "] " << (r.passed() ? "PASS" : "FAIL") << " cases=" << r.cases
        << " : " << c.title << "\n";
    for (const auto& f : r.failures) out << "  fail: " << f << "\n";
    failed += !r.passed();
  }
  out << "summary: " << selected.size() - static_cast<std::size_t>(failed) << "/" << selected.size() << " passed\n";
  return failed ? kDiffer : kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kauffman bracket skein computations and deformation checks"};
  app.require_subcommand(1);
  std::string table_path;
  app.add_option("--table", table_path, "polynomial table file (default $SKEIN_POLY_TABLE or ./skein_poly_table.json)");

  std::string file;
  auto* bracket_cmd = app.add_subcommand("bracket", "print the Kauffman bracket of a diagram file");
  bracket_cmd->add_option("file", file)->required();

  int order = 0;
  auto* expand_cmd = app.add_subcommand("expand", "order-k coefficient by state sum and by resolution formula");
  expand_cmd->add_option("file", file)->required();
  expand_cmd->add_option("--order", order)->required()->check(CLI::NonNegativeNumber);

  std::string surface = "torus";
  std::vector<std::int64_t> alpha, beta;
  auto* star_cmd = app.add_subcommand("star", "print lambda_0..lambda_K of alpha * beta");
  star_cmd->add_option("--surface", surface)->check(CLI::IsMember({"torus", "annulus"}));
  star_cmd->add_option("--alpha", alpha)->required()->delimiter(',');
  star_cmd->add_option("--beta", beta)->required()->delimiter(',');
  star_cmd->add_option("--order", order)->required()->check(CLI::NonNegativeNumber);

  int poly_k = 0;
  auto* poly_cmd = app.add_subcommand("poly", "print P_0..P_k, extending the table file");
  poly_cmd->add_option("--k", poly_k)->required()->check(CLI::NonNegativeNumber);

  unsigned phi_j = 0, phi_i = 0;
  auto* phi_cmd = app.add_subcommand("phi", "print phi_j(i)");
  phi_cmd->add_option("--j", phi_j)->required();
  phi_cmd->add_option("--i", phi_i)->required();

  std::string output;
  auto* gen_cmd = app.add_subcommand("gen", "emit a diagram file");
  gen_cmd->require_subcommand(1);
  gen_cmd->add_option("-o,--output", output, "write here instead of stdout");
  int strands = 1;
  std::vector<int> word;
  auto* gen_braid = gen_cmd->add_subcommand("braid", "closure of a braid word in the annulus");
  gen_braid->add_option("--strands", strands)->required();
  gen_braid->add_option("--word", word)->delimiter(',');
  int copies = 1, under_copies = 1;
  std::vector<std::int64_t> cls, under;
  auto* gen_torus = gen_cmd->add_subcommand("torus", "geodesic multicurve, optionally stacked over a second one");
  gen_torus->add_option("--class", cls)->required()->delimiter(',')->expected(2);
  gen_torus->add_option("--copies", copies)->check(CLI::NonNegativeNumber);
  gen_torus->add_option("--under", under)->delimiter(',')->expected(2);
  gen_torus->add_option("--under-copies", under_copies)->check(CLI::NonNegativeNumber);
  int kinks = 0;
  auto* gen_kink = gen_cmd->add_subcommand("kink", "chain of i kinks in the disk");
  gen_kink->add_option("--i", kinks)->required()->check(CLI::NonNegativeNumber);
  // Lets -o follow the generator name.
  for (auto* sub : {gen_braid, gen_torus, gen_kink}) sub->fallthrough();

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run acceptance suites");
  verify_cmd->add_option("suite", suite, "one of: all, " + [] {
    std::string s;
    for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    DeformationPolyTable table(table_path.empty() ? DeformationPolyTable::default_path()
                                                  : std::filesystem::path(table_path));
    if (*bracket_cmd) {
      out << bracket(read_diagram(file)).to_string() << "\n";
      return kOk;
    }
    if (*expand_cmd) {
      const MarkedDiagram d = read_diagram(file);
      const RationalVector oracle = bracket_order(d, order);
      const RationalVector formula = expansion(d, order, table);
      out << "bracket: " << oracle.to_string() << "\n";
      out << "formula: " << formula.to_string() << "\n";
      out << (oracle == formula ? "EQUAL" : "DIFFER") << "\n";
      return oracle == formula ? kOk : kDiffer;
    }
    if (*star_cmd) {
      const CurveClass a = parse_class(surface, alpha, "--alpha");
      const CurveClass b = parse_class(surface, beta, "--beta");
      const auto lambdas = lambda_series(a, b, order);
      for (int k = 0; k <= order; ++k) out << "lambda_" << k << ": " << lambdas[k].to_string() << "\n";
      return kOk;
    }
    if (*poly_cmd) {
      const auto ps = table.up_to(poly_k);
      for (int k = 0; k <= poly_k; ++k) out << "P_" << k << " = " << ps[k].to_string() << "\n";
      return kOk;
    }
    if (*phi_cmd) {
      out << to_string(phi_coeff(phi_j, phi_i)) << "\n";
      return kOk;
    }
    if (*gen_cmd) {
      MarkedDiagram d;
      if (*gen_braid) {
        d = from_braid(strands, word);
      } else if (*gen_torus) {
        d = torus_multicurve(copies, cls[0], cls[1]);
        if (!under.empty()) d = superpose(d, torus_multicurve(under_copies, under[0], under[1]), ProductMode::Strong);
      } else {
        d = kink_chain(kinks);
      }
      const std::string text = diagram_to_json(d) + "\n";
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream f(output);
        if (!(f << text)) throw Error(ErrorCode::ParseError, "cannot write " + output);
      }
      return kOk;
    }
    if (*verify_cmd) return run_verify(suite, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kMalformed : kDiffer;
  }
  return kMalformed;
}

}  // namespace skein
