#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <unistd.h>

#include "ga/kepler.hpp"
#include "ga/session.hpp"
#include "ga/text.hpp"

namespace {

std::array<double, 3> parse_triple(const std::string &text) {
  std::array<double, 3> out{};
  std::stringstream in(text);
  std::string part;
  std::size_t i = 0;
  while (std::getline(in, part, ',')) {
    if (i == 3)
      throw CLI::ValidationError("expected three comma-separated numbers: " +
                                 text);
    std::size_t used = 0;
    try {
      out[i] = std::stod(part, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0)
      throw CLI::ValidationError("not a number: '" + part + "'");
    ++i;
  }
  if (i != 3)
    throw CLI::ValidationError("expected three comma-separated numbers: " +
                               text);
  return out;
}

// Scripts stop at the first failing line and report its status; the REPL
// keeps going.
int run_lines(ga::Session &session, std::istream &in, bool interactive,
              bool prompt) {
  std::string line;
  int status = 0;
  while (true) {
    if (prompt)
      std::cout << "> " << std::flush;
    if (!std::getline(in, line))
      break;
    const ga::Outcome out = session.execute(line);
    if (!out.output.empty())
      (out.status == 0 ? std::cout : std::cerr) << out.output << '\n';
    if (out.quit)
      break;
    if (out.status != 0) {
      status = out.status;
      if (!interactive)
        break;
    }
  }
  return interactive ? 0 : status;
}

struct KeplerArgs {
  double m = 1.0;
  double k = 1.0;
  std::string r0 = "1,0,0";
  std::string v0 = "0,1,0";
  double dt = 1e-3;
  long steps = 1000;
  std::string csv;
};

void write_row(std::FILE *f, const ga::kepler::OrbitState &s,
               const ga::kepler::Conserved &c) {
  const auto r = s.r.vector_part();
  const auto v = s.v.vector_part();
  const auto e = c.e.vector_part();
  auto L = [&](std::initializer_list<int> idx) {
    return c.L.coeff(ga::BasisBlade::from_indices(idx));
  };
  std::fprintf(f,
               "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
               "%.17g,%.17g,%.17g,%.17g\n",
               s.t, r[0], r[1], r[2], v[0], v[1], v[2], L({2, 3}), 0.0 - L({1, 3}),
               L({1, 2}), e[0], e[1], e[2], c.E);
}

int run_kepler(const KeplerArgs &a) {
  namespace kp = ga::kepler;
  const kp::OrbitState s0 =
      kp::make_state(parse_triple(a.r0), parse_triple(a.v0), a.m, a.k);
  const auto states = kp::simulate(s0, a.dt, a.steps);

  if (!a.csv.empty()) {
    std::unique_ptr<std::FILE, int (*)(std::FILE *)> f(
        std::fopen(a.csv.c_str(), "w"), &std::fclose);
    if (!f) {
      std::cerr << "error: cannot open " << a.csv << '\n';
      return 2;
    }
    std::fputs("t,rx,ry,rz,vx,vy,vz,L_yz,L_zx,L_xy,ex,ey,ez,E\n", f.get());
    for (const auto &s : states)
      write_row(f.get(), s, kp::conserved(s));
  }

  const kp::Conserved first = kp::conserved(states.front());
  const kp::Conserved last = kp::conserved(states.back());
  std::cout << "steps " << a.steps << ", t = "
            << ga::format_number(states.back().t) << '\n';
  std::cout << "L: " << ga::format(first.L) << " -> " << ga::format(last.L)
            << '\n';
  std::cout << "e: " << ga::format(first.e) << " -> " << ga::format(last.e)
            << '\n';
  std::cout << "E: " << ga::format_number(first.E) << " -> "
            << ga::format_number(last.E) << '\n';
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Geometric algebra calculator"};
  std::string algebra;
  double tolerance = ga::default_tolerance;
  std::string expression;
  std::string script;
  app.add_option("--algebra", algebra, "signature as p,q");
  app.add_option("--tolerance", tolerance, "coefficient cutoff")
      ->check(CLI::NonNegativeNumber);
  auto *expr_opt = app.add_option("-e,--expr", expression, "evaluate one expression");
  auto *script_opt =
      app.add_option("--script", script, "run a file of expressions")
          ->check(CLI::ExistingFile);
  expr_opt->excludes(script_opt);

  KeplerArgs kargs;
  auto *kepler = app.add_subcommand("kepler", "integrate a Kepler orbit");
  kepler->add_option("--m", kargs.m, "mass")->capture_default_str();
  kepler->add_option("--k", kargs.k, "force constant")->capture_default_str();
  kepler->add_option("--r0", kargs.r0, "initial position x,y,z")
      ->capture_default_str();
  kepler->add_option("--v0", kargs.v0, "initial velocity x,y,z")
      ->capture_default_str();
  kepler->add_option("--dt", kargs.dt, "time step")->capture_default_str();
  kepler->add_option("--steps", kargs.steps, "number of steps")
      ->capture_default_str();
  kepler->add_option("--csv", kargs.csv, "write every state to this file");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (kepler->parsed())
      return run_kepler(kargs);

    if (algebra.empty()) {
      std::cerr << "error: --algebra p,q is required\n";
      return 1;
    }
    ga::Session session(ga::parse_algebra_spec(algebra, tolerance));

    if (!expr_opt->empty()) {
      const ga::Outcome out = session.execute(expression);
      (out.status == 0 ? std::cout : std::cerr) << out.output << '\n';
      return out.status;
    }
    if (!script_opt->empty()) {
      std::ifstream in(script);
      return run_lines(session, in, false, false);
    }
    return run_lines(session, std::cin, true, isatty(0) != 0);
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ga::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ga::Errc::syntax_error ? 1 : 2;
  }
}
