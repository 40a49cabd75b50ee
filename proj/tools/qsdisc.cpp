// Command-line driver: weight-system reports on stdout.
//
// exit 0  success (for `compare`: arrangements agree after the shift)
// exit 1  precondition failure (not quasi-symmetric / not Calabi-Yau / ...)
// exit 2  invalid input

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qsdisc/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) qsdisc::raise(qsdisc::Errc::InvalidInput, "cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

qsdisc::RatVec parse_lambda(const std::string& s) {
  qsdisc::RatVec out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(qsdisc::parse_rat(item));
  if (out.empty()) qsdisc::raise(qsdisc::Errc::InvalidInput, "empty --eval vector");
  return out;
}

struct Options {
  std::string command;
  std::string input_path;
  bool json = false;
  bool reduce = false;
  bool approx = false;
  std::string eval;
};

int run(const Options& opt) {
  using namespace qsdisc;

  InputDocument doc = parse_input(read_file(opt.input_path));
  IntMatrix q = input_matrix(doc);
  std::optional<Reduction> reduction;
  WeightSystem ws = [&] {
    if (!opt.reduce) return validate(q);
    Reduction red = reduce_to_image(q);
    WeightSystem reduced = red.system;
    if (!(red.basis == IntMatrix::identity(q.rows()))) reduction = std::move(red);
    return reduced;
  }();
  ReportContext ctx{std::move(doc), std::move(ws), std::move(reduction), opt.approx};

  bool equal_after_shift = true;
  Json report;
  if (opt.command == "check")
    report = check_report(ctx);
  else if (opt.command == "lines")
    report = lines_report(ctx);
  else if (opt.command == "circuits")
    report = circuits_report(ctx);
  else if (opt.command == "horn")
    report = horn_report(ctx, opt.eval.empty()
                                  ? std::nullopt
                                  : std::optional<RatVec>(parse_lambda(opt.eval)));
  else if (opt.command == "discriminant")
    report = discriminant_report(ctx);
  else if (opt.command == "hls")
    report = hls_report(ctx);
  else if (opt.command == "compare")
    report = compare_report(ctx, &equal_after_shift);

  std::cout << (opt.json ? serialize(report) : render_text(report));
  if (opt.command == "compare" && !equal_after_shift) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact discriminant and zonotope arrangements of torus weight systems"};
  app.require_subcommand(1);

  Options opt;
  const char* descriptions[][2] = {
      {"check", "validate the weights and report the basic predicates"},
      {"lines", "group the weights into lines with lattice lengths"},
      {"circuits", "circuit normals and their constants (quasi-symmetric only)"},
      {"horn", "factored uniformization map; constancy; optional evaluation"},
      {"discriminant", "the discriminant hyperplane arrangement"},
      {"hls", "the zonotope facet arrangement"},
      {"compare", "verify both arrangements agree after the imaginary shift"},
  };
  for (const auto& d : descriptions) {
    CLI::App* sub = app.add_subcommand(d[0], d[1]);
    sub->add_option("input", opt.input_path, "weight-system JSON file")->required();
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_flag("--reduce", opt.reduce, "rewrite non-surjective weights in a basis of their image");
    sub->add_flag("--approx", opt.approx, "annotate exact values with decimals");
    if (std::string(d[0]) == "horn")
      sub->add_option("--eval", opt.eval, "evaluate the map at a rational point, e.g. 1,2/3");
    sub->callback([&opt, sub] { opt.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message or the requested help text
    return code == 0 ? 0 : 2;
  }

  try {
    return run(opt);
  } catch (const qsdisc::Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return e.is_input_error() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}
