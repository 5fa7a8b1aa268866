// Command-line front end: runs a verification suite over a
// structure-constant spec file and emits a JSON report.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "envlab/report.hpp"

namespace {

// "--weights g:1,1,2" or "f:1,1,2,3,4,5,6"
std::optional<envlab::WeightStructure> parse_weights_flag(const std::string& s) {
  using namespace envlab;
  if (s.size() < 3 || s[1] != ':') return std::nullopt;
  WeightStructure w;
  if (s[0] == 'g')
    w.kind = WeightKind::Grading;
  else if (s[0] == 'f')
    w.kind = WeightKind::Filtration;
  else
    return std::nullopt;
  std::size_t pos = 2;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    try {
      const int v = std::stoi(s.substr(pos, next - pos));
      if (v < 1) return std::nullopt;
      w.weights.push_back(v);
    } catch (...) {
      return std::nullopt;
    }
    pos = next + 1;
  }
  return w.weights.empty() ? std::nullopt : std::make_optional(w);
}

// "--bump 2,0;2,-1" : one "a,b" pair per basis vector, meaning f(a t + b).
std::optional<envlab::BumpFamily> parse_bump_flag(const std::string& s) {
  using namespace envlab;
  BumpFamily fam;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(';', pos);
    if (next == std::string::npos) next = s.size();
    const std::string pair = s.substr(pos, next - pos);
    const std::size_t comma = pair.find(',');
    if (comma == std::string::npos) return std::nullopt;
    const auto a = Rational::parse(pair.substr(0, comma));
    const auto b = Rational::parse(pair.substr(comma + 1));
    if (!a || !b) return std::nullopt;
    fam.affine.emplace_back(*a, *b);
    if (next == s.size()) break;
    pos = next + 1;
  }
  return fam;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"envlab: exact verification suites over Lie-algebra spec files"};
  app.get_formatter()->column_width(34);

  std::string suite, spec_path, out_path, weights_flag, bump_flag;
  envlab::SuiteParams params;

  app.add_option("suite", suite,
                 "structure|series|hopf|cohomology|koszul|parallelize|contract|weights|all")
      ->required();
  app.add_option("spec", spec_path, "path to a .alg structure-constant file")->required();
  app.add_option("--cutoff", params.cutoff, "truncation cutoff W (default 4)");
  app.add_option("--degree", params.degree, "polynomial degree bound D (default 3)");
  app.add_option("--weight-cutoff", params.weight_cutoff,
                 "weight-sequence validation cutoff (default 8)");
  app.add_option("--out", out_path, "write the report to this file instead of stdout");
  app.add_option("--weights", weights_flag, "override weights: g|f:w1,...,wN");
  app.add_option("--bump", bump_flag, "bump family for the contract suite: a1,b1;...;aN,bN");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!envlab::suite_known(suite)) {
      std::cerr << "error: unknown suite '" << suite << "'\n";
      return 2;
    }
    envlab::AlgebraSpec spec = envlab::parse_spec_file(spec_path);
    if (!weights_flag.empty()) {
      const auto w = parse_weights_flag(weights_flag);
      if (!w) {
        std::cerr << "error: bad --weights flag\n";
        return 2;
      }
      if (static_cast<int>(w->weights.size()) != spec.algebra.dim()) {
        std::cerr << "error: --weights count differs from the algebra dimension\n";
        return 2;
      }
      spec.weights = w;
    }
    if (!bump_flag.empty()) {
      const auto b = parse_bump_flag(bump_flag);
      if (!b || static_cast<int>(b->affine.size()) != spec.algebra.dim()) {
        std::cerr << "error: bad --bump flag\n";
        return 2;
      }
      params.bump = b;
    }
    if (params.cutoff < 0 || params.degree < 0 || params.weight_cutoff < 0) {
      std::cerr << "error: parameters must be nonnegative\n";
      return 2;
    }

    const envlab::Report report = envlab::run_suite(spec, suite, params);
    if (out_path.empty()) {
      std::cout << report.to_string();
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot open output file\n";
        return 2;
      }
      out << report.to_string();
    }
    return report.exit_code();
  } catch (const envlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const envlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
