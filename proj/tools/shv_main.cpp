// Command-line front end: canonical forms in, canonical forms out.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 malformed input.

#include "shv/json_io.hpp"
#include "shv/microlocal.hpp"
#include "shv/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

namespace {

using namespace shv;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

std::string interval_text(const Interval& iv) { return iv.str(); }

void print_line_sheaf(const LineSheaf& s) {
  if (s.summands.empty()) {
    std::cout << "0\n";
    return;
  }
  for (const auto& sm : s.summands)
    std::cout << "k_" << interval_text(sm.iv) << "  deg " << sm.deg << "  x" << sm.mult << "\n";
}

void print_circle_sheaf(const CircleSheaf& s) {
  if (s.empty()) {
    std::cout << "0\n";
    return;
  }
  for (const auto& sm : s.wrapped)
    std::cout << "e_* k_" << interval_text(sm.w.lift()) << "  deg " << sm.deg << "  x" << sm.mult
              << "\n";
  for (const auto& sm : s.local)
    std::cout << "L(alpha=" << sm.alpha.str() << ", r=" << sm.r << ")  deg " << sm.deg << "  x"
              << sm.mult << "\n";
}

void print_sheaf(const std::variant<LineSheaf, CircleSheaf>& s, bool as_json) {
  if (as_json) {
    std::visit([](const auto& x) { std::cout << to_json(x).dump(2) << "\n"; }, s);
  } else {
    std::visit([](const auto& x) {
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, LineSheaf>)
        print_line_sheaf(x);
      else
        print_circle_sheaf(x);
    }, s);
  }
}

Rational parse_rational_flag(const std::string& s, const std::string& flag) {
  auto r = Rational::parse(s);
  if (!r) throw ParseError("flag " + flag + ": bad rational literal \"" + s + "\"");
  return *r;
}

// Windows are open intervals given as "lo,hi".
Interval parse_window(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("--window: expected \"lo,hi\"");
  Rational lo = parse_rational_flag(s.substr(0, comma), "--window");
  Rational hi = parse_rational_flag(s.substr(comma + 1), "--window");
  if (!(lo < hi)) throw ParseError("--window: empty window");
  return Interval::bounded(lo, false, hi, false);
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["suite"] = r.suite;
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  j["millis"] = r.millis;
  j["passed"] = r.passed();
  return j;
}

void print_report(const VerificationReport& r) {
  std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.suite << "  (" << r.cases << " cases, "
            << r.millis << " ms)\n";
  for (const auto& f : r.failures) std::cout << "  counterexample: " << f << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Exact calculus of constructible sheaves on the line and the circle"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string input, second, alpha_s = "1", lambda_s, window_s, p_s, q_s, suite;
  long long r_flag = 1;
  int degree = 0;
  std::size_t grid_size = 0;
  std::uint64_t seed = 1;

  auto* dec = app.add_subcommand("decompose", "canonical decomposition of a quiver model");
  dec->add_option("--input", input, "model file")->required();

  auto* ss = app.add_subcommand("ss", "microsupport of a canonical sheaf");
  ss->add_option("--input", input, "sheaf file")->required();

  auto* coh = app.add_subcommand("cohomology", "global cohomology ranks");
  coh->add_option("--input", input, "sheaf file")->required();

  auto* ten = app.add_subcommand("tensor", "tensor product of two canonical sheaves");
  ten->add_option("--input", input, "first sheaf file")->required();
  ten->add_option("second", second, "second sheaf file")->required();

  auto* dua = app.add_subcommand("dual", "duality on canonical sheaves");
  dua->add_option("--input", input, "sheaf file")->required();

  auto* hom = app.add_subcommand("hom", "hom dimension between line sheaves");
  hom->add_option("--input", input, "source sheaf file")->required();
  hom->add_option("second", second, "target sheaf file")->required();

  auto* twi = app.add_subcommand("twist", "Mayer-Vietoris twist over the standard two-arc cover");
  twi->add_option("--input", input, "circle sheaf file")->required();
  twi->add_option("--lambda", lambda_s, "twisting scalar (rational)")->required();

  auto* inv = app.add_subcommand("invariant", "Jordan-datum counting invariant");
  inv->add_option("--input", input, "circle sheaf file")->required();
  inv->add_option("--alpha", alpha_s, "eigenvalue (rational)");
  inv->add_option("--r", r_flag, "block size");
  inv->add_option("--degree", degree, "cohomological degree");

  auto* lnk = app.add_subcommand("linked", "linked covectors over a window");
  lnk->add_option("--input", input, "line sheaf file")->required();
  lnk->add_option("--p", p_s, "first covector (JSON)")->required();
  lnk->add_option("--q", q_s, "second covector (JSON)")->required();
  lnk->add_option("--window", window_s, "open window \"lo,hi\"")->required();

  auto* ver = app.add_subcommand("verify-lemmas", "run the property-grid verification suites");
  ver->add_option("--suite", suite, "suite name (default: all)");
  ver->add_option("--grid-size", grid_size, "grid scale (0 = suite default)");
  ver->add_option("--seed", seed, "seed for the randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (dec->parsed()) {
    auto rep = rep_from_json(load_json(input));
    std::variant<LineSheaf, CircleSheaf> out;
    if (std::holds_alternative<LineQuiverRep>(rep))
      out = decompose_line_sheaf(std::get<LineQuiverRep>(rep));
    else
      out = decompose_circle(std::get<CircleQuiverRep>(rep));
    print_sheaf(out, as_json);
    return 0;
  }
  if (ss->parsed()) {
    auto sheaf = sheaf_from_json(load_json(input));
    auto cvs = std::holds_alternative<LineSheaf>(sheaf) ? ss_line(std::get<LineSheaf>(sheaf))
                                                        : ss_circle(std::get<CircleSheaf>(sheaf));
    if (as_json) {
      json arr = json::array();
      for (const auto& c : cvs) arr.push_back(to_json(c));
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& c : cvs)
        std::cout << c.base.str() << " " << (c.sign > 0 ? "+" : "-") << "  deg " << c.deg << "  x"
                  << c.mult << "\n";
    }
    return 0;
  }
  if (coh->parsed()) {
    auto sheaf = sheaf_from_json(load_json(input));
    auto table = std::holds_alternative<LineSheaf>(sheaf)
                     ? cohomology_line(std::get<LineSheaf>(sheaf))
                     : cohomology_circle(std::get<CircleSheaf>(sheaf));
    if (as_json) {
      json j = json::object();
      for (const auto& [d, m] : table) j[std::to_string(d)] = m;
      std::cout << j.dump(2) << "\n";
    } else {
      if (table.empty()) std::cout << "0\n";
      for (const auto& [d, m] : table) std::cout << "H^" << d << " = " << m << "\n";
    }
    return 0;
  }
  if (ten->parsed()) {
    auto a = sheaf_from_json(load_json(input));
    auto b = sheaf_from_json(load_json(second));
    if (a.index() != b.index()) throw ParseError("tensor: operands live on different spaces");
    std::variant<LineSheaf, CircleSheaf> out;
    if (std::holds_alternative<LineSheaf>(a))
      out = tensor_line(std::get<LineSheaf>(a), std::get<LineSheaf>(b));
    else
      out = tensor_circle(std::get<CircleSheaf>(a), std::get<CircleSheaf>(b));
    print_sheaf(out, as_json);
    return 0;
  }
  if (dua->parsed()) {
    auto sheaf = sheaf_from_json(load_json(input));
    std::variant<LineSheaf, CircleSheaf> out;
    if (std::holds_alternative<LineSheaf>(sheaf))
      out = dual_line(std::get<LineSheaf>(sheaf));
    else
      out = dual_circle(std::get<CircleSheaf>(sheaf));
    print_sheaf(out, as_json);
    return 0;
  }
  if (hom->parsed()) {
    auto a = sheaf_from_json(load_json(input));
    auto b = sheaf_from_json(load_json(second));
    if (!std::holds_alternative<LineSheaf>(a) || !std::holds_alternative<LineSheaf>(b))
      throw ParseError("hom: expects two line sheaves");
    std::cout << hom_dim_line(std::get<LineSheaf>(a), std::get<LineSheaf>(b)) << "\n";
    return 0;
  }
  if (twi->parsed()) {
    auto sheaf = sheaf_from_json(load_json(input));
    if (!std::holds_alternative<CircleSheaf>(sheaf)) throw ParseError("twist: expects a circle sheaf");
    CircleSheaf f = std::get<CircleSheaf>(sheaf);
    f.canonicalize();
    Rational lambda = parse_rational_flag(lambda_s, "--lambda");
    CoverSpec cover{{Rational(7, 8), Rational(3, 4)}, {Rational(3, 8), Rational(3, 4)}};
    std::size_t n = f.wrapped.size() + f.local.size();
    AutSpec aut{{std::vector<Rational>(n, lambda), std::vector<Rational>(n, Rational(1))}};
    print_sheaf(std::variant<LineSheaf, CircleSheaf>(mv_twist(f, cover, aut)), as_json);
    return 0;
  }
  if (inv->parsed()) {
    auto sheaf = sheaf_from_json(load_json(input));
    if (!std::holds_alternative<CircleSheaf>(sheaf))
      throw ParseError("invariant: expects a circle sheaf");
    if (r_flag <= 0) throw ParseError("--r must be positive");
    Rational alpha = parse_rational_flag(alpha_s, "--alpha");
    if (alpha.is_zero()) throw ParseError("--alpha must be nonzero");
    std::cout << h_invariant(std::get<CircleSheaf>(sheaf), alpha, (std::size_t)r_flag, degree)
              << "\n";
    return 0;
  }
  if (lnk->parsed()) {
    auto sheaf = sheaf_from_json(load_json(input));
    if (!std::holds_alternative<LineSheaf>(sheaf)) throw ParseError("linked: expects a line sheaf");
    Covector p, q;
    try {
      p = covector_from_json(json::parse(p_s));
      q = covector_from_json(json::parse(q_s));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("covector flag: ") + e.what());
    }
    Interval window = parse_window(window_s);
    const LineSheaf& f = std::get<LineSheaf>(sheaf);
    bool criterion = f_linked_interval_criterion(f, p, q, window);
    bool exact = f_linked_exact(f, p, q, window);
    if (as_json) {
      std::cout << json{{"criterion", criterion}, {"linked", exact}}.dump(2) << "\n";
    } else {
      std::cout << "interval criterion: " << (criterion ? "yes" : "no") << "\n"
                << "linked:             " << (exact ? "yes" : "no") << "\n";
    }
    return 0;
  }
  if (ver->parsed()) {
    std::vector<VerificationReport> reports;
    if (suite.empty())
      reports = run_all_suites(grid_size, seed);
    else
      reports.push_back(run_suite(suite, grid_size, seed));
    bool all_pass = true;
    if (as_json) {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& r : reports) print_report(r);
    }
    for (const auto& r : reports) all_pass = all_pass && r.passed();
    return all_pass ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
