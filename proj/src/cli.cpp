#include "pseudofuzzy/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "pseudofuzzy/arith.hpp"
#include "pseudofuzzy/error.hpp"
#include "pseudofuzzy/io.hpp"
#include "pseudofuzzy/ptfn.hpp"

namespace pseudofuzzy::cli {

namespace {

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return kParseError;
    case ErrorCode::KindMismatch: return kKindMismatch;
    case ErrorCode::DivisorStraddlesZero: return kDivisorError;
    default: return kDomainError;
  }
}

struct Options {
  double eps = kDefaultEps;

  std::string file;
  std::string file2;
  std::string x;
  std::string mu;
  std::string lambda;
  std::string level;
  std::string which = "mu";
  std::string op;
  std::string factor;
  std::string r;
  std::string s;
  std::string table;
  std::string kind;
  int n = 0;
  std::string xmin;
  std::string xmax;
  int levels = kDefaultLevels;
  int oracle_grid = kDefaultOracleGrid;
  int verify_grid = 101;
  bool oracle = false;
};

void cmd_eval(const Options& o, std::istream& in, std::ostream& out) {
  const auto p = io::parse_ptfn(read_source(o.file, in));
  const double x = io::parse_number(o.x);
  const auto pair = pair_at(p, x);
  out << io::format_number(x) << ',' << io::format_number(pair.mu()) << ',' << io::format_number(pair.lambda())
      << '\n';
}

void cmd_curve(const Options& o, std::istream& in, std::ostream& out) {
  const auto p = io::parse_ptfn(read_source(o.file, in));
  const auto samples = discretize(p, o.n, io::parse_number(o.xmin), io::parse_number(o.xmax));
  std::ostringstream buf;
  io::write_curve(buf, samples);
  out << buf.str();
}

void cmd_classify(const Options& o, std::ostream& out) {
  const auto pair = validate_pair(io::parse_number(o.mu), io::parse_number(o.lambda));
  out << case_letter(classify_case(pair, Tolerance(o.eps))) << '\n';
}

void cmd_cut(const Options& o, std::istream& in, std::ostream& out) {
  const auto p = io::parse_ptfn(read_source(o.file, in));
  const double level = io::parse_number(o.level);
  const Interval cut = o.which == "mu" ? alpha_cut_mu(p, level) : beta_cut_lambda(p, level);
  out << io::format_number(cut.lo()) << ',' << io::format_number(cut.hi()) << '\n';
}

void cmd_point(const Options& o, std::istream& in, std::ostream& out) {
  const auto p = io::parse_ptfn(read_source(o.file, in));
  out << io::format_number(parametric_point(p, io::parse_number(o.r), io::parse_number(o.s))) << '\n';
}

void write_shape_comment(std::ostream& out, const PseudoTfn& p) {
  const auto& s = p.shape();
  out << "# shape=" << io::format_number(s.a()) << ',' << io::format_number(s.b()) << ','
      << io::format_number(s.c()) << '\n';
}

void cmd_arith(const Options& o, std::istream& in, std::ostream& out) {
  const auto p = io::parse_ptfn(read_source(o.file, in));
  std::ostringstream buf;

  if (o.op == "scale") {
    if (o.factor.empty()) throw Error(ErrorCode::Parse, "scale requires --factor");
    if (!o.file2.empty()) throw Error(ErrorCode::Parse, "scale takes a single operand");
    const double k = io::parse_number(o.factor);
    if (o.oracle) {
      io::write_cut_table(buf, extension_oracle_scale(p, k, o.oracle_grid, o.levels));
    } else {
      const auto result = scale(p, k);
      const auto table = cut_table(result, o.levels);
      io::write_cut_table(buf, table);
      std::string text = buf.str();
      buf.str("");
      write_shape_comment(buf, result);
      buf << text;
    }
    out << buf.str();
    return;
  }

  if (o.file2.empty()) throw Error(ErrorCode::Parse, o.op + " requires two operands");
  if (!o.factor.empty()) throw Error(ErrorCode::Parse, "--factor only applies to scale");
  const auto q = io::parse_ptfn(read_source(o.file2, in));
  static const std::map<std::string, BinaryOpCode> kOps{
      {"add", BinaryOpCode::Add}, {"sub", BinaryOpCode::Sub}, {"mul", BinaryOpCode::Mul}, {"div", BinaryOpCode::Div}};
  const BinaryOpCode op = kOps.at(o.op);

  if (o.oracle) {
    io::write_cut_table(buf, extension_oracle(p, q, op, o.oracle_grid, o.levels));
  } else if (op == BinaryOpCode::Add || op == BinaryOpCode::Sub) {
    const auto result = op == BinaryOpCode::Add ? add(p, q) : sub(p, q);
    const auto table = cut_table(result, o.levels);
    write_shape_comment(buf, result);
    io::write_cut_table(buf, table);
  } else {
    io::write_cut_table(buf, op == BinaryOpCode::Mul ? mul(p, q, o.levels) : div(p, q, o.levels));
  }
  out << buf.str();
}

void cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const Tolerance tol(o.eps);
  std::optional<double> violation;
  if (!o.table.empty()) {
    if (!o.file.empty()) throw Error(ErrorCode::Parse, "give either a PTFN file or --table, not both");
    if (o.kind.empty()) throw Error(ErrorCode::Parse, "--table requires --kind");
    const auto kind = parse_kind(o.kind);
    if (!kind) throw Error(ErrorCode::Parse, "unknown kind '" + o.kind + "'");
    std::istringstream csv(read_source(o.table, in));
    violation = first_kind_violation(io::read_curve(csv), *kind, tol);
  } else {
    if (o.file.empty()) throw Error(ErrorCode::Parse, "verify requires a PTFN file or --table");
    const auto p = io::parse_ptfn(read_source(o.file, in));
    violation = find_kind_violation(p, o.verify_grid, tol);
  }
  if (violation) {
    out << "violation at x=" << io::format_number(*violation) << '\n';
  } else {
    out << "ok\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Pseudo fuzzy sets and pseudo triangular fuzzy numbers", "pseudofuzzy"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--eps", o.eps, "absolute comparison tolerance")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "print x,mu,lambda at one point");
  eval->add_option("file", o.file, "PTFN JSON document, '-' for stdin")->required();
  eval->add_option("x", o.x, "evaluation point")->required();

  auto* curve = app.add_subcommand("curve", "sample mu and lambda as CSV");
  curve->add_option("file", o.file, "PTFN JSON document, '-' for stdin")->required();
  curve->add_option("--n", o.n, "number of samples (>= 2)")->required();
  curve->add_option("--xmin", o.xmin, "first sample")->required();
  curve->add_option("--xmax", o.xmax, "last sample")->required();

  auto* classify = app.add_subcommand("classify", "print the magnitude-sum case A, B or C");
  classify->add_option("mu", o.mu)->required();
  classify->add_option("lambda", o.lambda)->required();

  auto* cut = app.add_subcommand("cut", "print a level cut as lo,hi");
  cut->add_option("file", o.file, "PTFN JSON document, '-' for stdin")->required();
  cut->add_option("level", o.level, "alpha in [0,1] for mu, beta in [-1,0] for lambda")->required();
  cut->add_option("--which", o.which)->check(CLI::IsMember({"mu", "lambda"}))->capture_default_str();

  auto* point = app.add_subcommand("point", "print the double parametric crisp point x(r, s)");
  point->add_option("file", o.file, "PTFN JSON document, '-' for stdin")->required();
  point->add_option("r", o.r)->required();
  point->add_option("s", o.s)->required();

  auto* arith = app.add_subcommand("arith", "level-cut arithmetic, emitted as alpha,lo,hi");
  arith->add_option("op", o.op)->required()->check(CLI::IsMember({"add", "sub", "mul", "div", "scale"}));
  arith->add_option("file", o.file, "first operand")->required();
  arith->add_option("file2", o.file2, "second operand (binary ops)");
  arith->add_option("--factor", o.factor, "scale factor (scale only)");
  arith->add_option("--levels", o.levels)->capture_default_str();
  arith->add_option("--grid", o.oracle_grid, "oracle samples per operand")->capture_default_str();
  arith->add_flag("--oracle", o.oracle, "use the brute-force extension principle");

  auto* verify = app.add_subcommand("verify", "check the kind identity of a PTFN or a CSV curve");
  verify->add_option("file", o.file, "PTFN JSON document, '-' for stdin");
  verify->add_option("--grid", o.verify_grid)->capture_default_str();
  verify->add_option("--table", o.table, "x,mu,lambda CSV to check instead of a PTFN");
  verify->add_option("--kind", o.kind, "identity to check with --table")
      ->check(CLI::IsMember({"dependent", "independent"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*eval) cmd_eval(o, in, out);
    else if (*curve) cmd_curve(o, in, out);
    else if (*classify) cmd_classify(o, out);
    else if (*cut) cmd_cut(o, in, out);
    else if (*point) cmd_point(o, in, out);
    else if (*arith) cmd_arith(o, in, out);
    else if (*verify) cmd_verify(o, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kOk;
}

}  // namespace pseudofuzzy::cli
