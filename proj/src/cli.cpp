#include "beloch/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "beloch/error.hpp"
#include "beloch/oracles.hpp"
#include "beloch/parabola.hpp"
#include "beloch/render.hpp"
#include "beloch/report.hpp"

namespace beloch::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, std::size_t count, const char* flag) {
  std::vector<double> out;
  const char* at = text.data();
  const char* end = text.data() + text.size();
  while (true) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(at, end, v);
    if (ec != std::errc{}) break;
    out.push_back(v);
    at = ptr;
    if (at == end || *at != ',') break;
    ++at;
  }
  if (at != end || out.size() != count) {
    throw UsageError(std::string(flag) + " expects " + std::to_string(count) + " comma-separated numbers");
  }
  return out;
}

std::string g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    err << "cannot write " << path << "\n";
    return false;
  }
  return true;
}

void print_solve_table(const CubicEq& eq, std::ostream& out) {
  out << "x^3 - (" << g6(eq.a) << ") x^2 - (" << g6(eq.b) << ") x + (" << g6(eq.c) << ") = 0\n";
  out << "r            fold x + r y - r^2 = 0     residual\n";
  for (const FoldSolution& s : solve_by_folding(eq)) {
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %-26s %s\n", g6(s.r).c_str(),
                  ("(" + g6(s.fold.a()) + ", " + g6(s.fold.b()) + ", " + g6(s.fold.c()) + ")").c_str(),
                  g6(s.residual_marked).c_str());
    out << line;
  }
}

void print_analysis_table(const nlohmann::ordered_json& j, std::ostream& out) {
  out << "P              (" << g6(j["params"]["p"]) << ", " << g6(j["params"]["q"]) << ")\n";
  out << "discriminant   " << g6(j["discriminant"]) << "\n";
  out << "hessian        " << g6(j["hessian"]) << "\n";
  out << "shape          " << j["shape"].get<std::string>() << "\n";
  out << "pass-through r";
  for (const auto& r : j["special_parameters"]) out << "  " << g6(r);
  out << "\n";
  if (!j["fg_count"].is_null()) {
    out << "F meets G      " << j["fg_count"].get<std::string>();
    for (const auto& w : j["witnesses"]) out << "  r=" << g6(w["r"]);
    out << "\n";
  }
  if (!j["winding"].is_null()) {
    const auto& w = j["winding"];
    out << "winding at A   " << (w["value"].is_null() ? std::string("undefined") : std::to_string(w["value"].get<int>()))
        << "\n";
  }
  for (const auto& note : j["errata_notes"]) out << "note: " << note.get<std::string>() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cubic equations by folding and the geometry of the curve they trace", "beloch"};
  app.require_subcommand(1, 1);

  double a = 0, b = 0, c = 0, p = 0, q = 0, alpha = 2.0;
  bool json = false;
  std::string coeffs, out_path, window, range;
  int n = 0;
  std::uint64_t seed = 0;
  int trials = 200;

  auto* solve = app.add_subcommand("solve", "solve x^3 - a x^2 - b x + c = 0 by folding");
  solve->add_option("--a", a)->required();
  solve->add_option("--b", b)->required();
  solve->add_option("--c", c)->required();
  solve->add_flag("--json", json);

  auto* analyze = app.add_subcommand("analyze", "shape of the curve at P(p, q)");
  analyze->add_option("--p", p)->required();
  analyze->add_option("--q", q)->required();
  analyze->add_option("--alpha", alpha);
  analyze->add_flag("--json", json);

  auto* winding = app.add_subcommand("winding", "winding number of the closed loop around A");
  winding->add_option("--p", p)->required();
  winding->add_option("--q", q)->required();

  auto* surface = app.add_subcommand("surface", "critical points of z = F(x, y)");
  surface->add_option("--p", p)->required();
  surface->add_option("--q", q)->required();

  auto* general = app.add_subcommand("classify-general", "origin shape of a0 y^2 - a1 x y^2 - a2 x y - a3 x^2 - a4 x^3");
  general->add_option("--coeffs", coeffs, "a0,a1,a2,a3,a4")->required();

  auto* plot = app.add_subcommand("plot", "SVG figure of the curve, the parabola and the marked points");
  plot->add_option("--p", p)->required();
  plot->add_option("--q", q)->required();
  plot->add_option("--out", out_path)->required();
  plot->add_option("--window", window, "x0,y0,x1,y1");

  auto* csv = app.add_subcommand("orbit-csv", "orbit samples as CSV");
  csv->add_option("--p", p)->required();
  csv->add_option("--q", q)->required();
  csv->add_option("--range", range, "r0,r1")->required();
  csv->add_option("--n", n)->required();
  csv->add_option("--out", out_path)->required();

  auto* verify = app.add_subcommand("verify", "randomized oracle cross-checks");
  auto* seed_opt = verify->add_option("--seed", seed);
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help("", CLI::AppFormatMode::All);
    return 2;
  }

  try {
    if (*solve) {
      const CubicEq eq{a, b, c};
      if (json) {
        out << dump_report(solve_report(eq));
      } else {
        print_solve_table(eq, out);
      }
    } else if (*analyze) {
      const auto report = analysis_report(BelochParams::make(p, q, alpha));
      if (json) {
        out << dump_report(report);
      } else {
        print_analysis_table(report, out);
      }
    } else if (*winding) {
      out << dump_report(winding_report(BelochParams::make(p, q)));
    } else if (*surface) {
      out << dump_report(surface_report(BelochParams::make(p, q)));
    } else if (*general) {
      const auto v = parse_list(coeffs, 5, "--coeffs");
      out << dump_report(general_report({v[0], v[1], v[2], v[3], v[4]}));
    } else if (*plot) {
      std::optional<Rect> view;
      if (!window.empty()) {
        const auto v = parse_list(window, 4, "--window");
        view = Rect{v[0], v[1], v[2], v[3]};
      }
      if (!write_file(out_path, render_svg(make_scene(BelochParams::make(p, q), view)), err)) return 1;
    } else if (*csv) {
      const auto v = parse_list(range, 2, "--range");
      if (!write_file(out_path, export_orbit_csv(BelochParams::make(p, q), v[0], v[1], n), err)) return 1;
    } else if (*verify) {
      VerifyOptions opts;
      opts.trials = trials;
      if (*seed_opt) {
        opts.seed = seed;
      } else if (const char* env = std::getenv("BELOCH_SEED")) {
        const std::string s(env);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), opts.seed);
        if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("BELOCH_SEED must be an unsigned integer");
      }
      out << "seed " << opts.seed << "\n";
      if (!run_verify(opts, out)) return 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help("", CLI::AppFormatMode::All);
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace beloch::cli
