#pragma once

// Command-line front end. run_cli is the whole program; main() only forwards
// the process streams.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gieseker/verify.hpp"

namespace gieseker {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int domain = 2;
}  // namespace exit_code

namespace detail {

struct CliState {
  std::string format = "text";
  std::string output;
  long n = 0, m = 0, r = 0, d = 0;
  std::string lambda, beta, render;
  bool frobenius = false;
  long max_n = 1, max_m = 1, max_r = 1;
  std::string inject_fault;
  unsigned threads = 0;
};

inline void add_int(CLI::App* app, const std::string& flag, long& target, const std::string& help) {
  app->add_option(flag, target, help)->required();
}

inline std::string dyck_text(const std::vector<DyckPath>& paths, Format f) {
  if (f == Format::json) {
    json arr = json::array();
    for (const auto& p : paths) arr.push_back({{"steps", p.steps()}, {"runs", p.vertical_runs()}});
    return arr.dump();
  }
  std::string out;
  for (const auto& p : paths) {
    if (!out.empty()) out += '\n';
    out += p.steps();
  }
  return out;
}

inline std::string glr_text(const std::map<Partition, long long>& mult, Format f) {
  if (f == Format::json) {
    json terms = json::array();
    for (const auto& [mu, c] : mult) terms.push_back({{"partition", to_json(mu)}, {"multiplicity", c}});
    return json{{"terms", terms}}.dump();
  }
  std::string out;
  for (const auto& [mu, c] : mult) {
    if (!out.empty()) out += " + ";
    const std::string w = f == Format::latex ? "W_{" + partition_str(mu) + "}" : "[W" + partition_str(mu) + "]";
    out += (c == 1 ? "" : std::to_string(c) + (f == Format::text ? " " : "")) + w;
  }
  return out.empty() ? "0" : out;
}

inline std::string genfun_text(const GenFunCoeff& g, Format f) {
  if (f == Format::json) return to_json(g).dump();
  if (g.polynomial) return render(*g.polynomial, f);
  return "nonintegral: " + render(g.rational, f);
}

}  // namespace detail

/// Parses argv, runs one command and writes its result to `out` (or the
/// --output file). Diagnostics go to `err`. Returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characters of finite-dimensional Gieseker-variety modules"};
  app.require_subcommand(1);
  detail::CliState st;
  app.add_option("--format", st.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--output", st.output, "Write the result to this file");

  std::function<std::string(Format)> action;

  auto* fd = app.add_subcommand("char-fd", "q-graded GL_r-character of the finite-dimensional module");
  detail::add_int(fd, "--n", st.n, "n");
  detail::add_int(fd, "--m", st.m, "m");
  detail::add_int(fd, "--r", st.r, "rank r");
  fd->callback([&] { action = [&](Format f) { return render(char_fd(st.n, st.m, st.r), f); }; });

  auto* ch = app.add_subcommand("char-cherednik", "graded S_n-character of the finite-dimensional Cherednik module");
  detail::add_int(ch, "--n", st.n, "n");
  detail::add_int(ch, "--m", st.m, "m");
  ch->callback([&] { action = [&](Format f) { return render(char_cherednik_fd(st.n, st.m), f); }; });

  auto* ms = app.add_subcommand("char-minsupp", "GL_r-character of a minimally supported module");
  detail::add_int(ms, "--n", st.n, "n");
  detail::add_int(ms, "--m", st.m, "m");
  detail::add_int(ms, "--r", st.r, "rank r");
  ms->add_option("--lambda", st.lambda, "partition of gcd(m, n), comma separated")->required();
  ms->callback([&] {
    action = [&](Format f) {
      const auto chi = char_minsupp(st.n, st.m, st.r, parse_partition(st.lambda));
      // Characters whose coefficients are all polynomials print exactly as char-fd does.
      if (std::all_of(chi.coeffs.begin(), chi.coeffs.end(), [](const auto& kv) { return kv.second.is_polynomial(); })) {
        GLChar poly;
        poly.r = chi.r;
        for (const auto& [mu, c] : chi.coeffs) poly.set(mu, c.as_polynomial());
        return render(poly, f);
      }
      return render(chi, f);
    };
  });

  auto* sd = app.add_subcommand("char-standard", "graded S_m-character of a standard module");
  sd->add_option("--beta", st.beta, "partition of m, comma separated")->required();
  detail::add_int(sd, "--n", st.n, "n");
  sd->callback([&] {
    action = [&](Format f) {
      const auto beta = parse_partition(st.beta);
      return render(char_standard(beta, st.n, beta.size()), f);
    };
  });

  auto* dim = app.add_subcommand("dim", "dimension of the finite-dimensional module");
  detail::add_int(dim, "--n", st.n, "n");
  detail::add_int(dim, "--m", st.m, "m");
  detail::add_int(dim, "--r", st.r, "rank r");
  dim->callback([&] { action = [&](Format) { return dim_fd(st.n, st.m, st.r).str(); }; });

  auto* gf = app.add_subcommand("genfun", "z^m coefficient of the torus generating function");
  detail::add_int(gf, "--n", st.n, "n");
  detail::add_int(gf, "--r", st.r, "rank r");
  detail::add_int(gf, "--m", st.m, "m");
  gf->callback([&] { action = [&](Format f) { return detail::genfun_text(gen_function_coeff(st.n, st.r, st.m), f); }; });

  auto* qc = app.add_subcommand("qcatalan", "rank-r q-Catalan polynomial in q^(1/d)");
  detail::add_int(qc, "--n", st.n, "n");
  detail::add_int(qc, "--m", st.m, "m");
  detail::add_int(qc, "--r", st.r, "rank r");
  detail::add_int(qc, "--d", st.d, "divisor d of r");
  qc->callback([&] { action = [&](Format f) { return render(chd_closed(st.n, st.m, st.r, st.d), f); }; });

  auto* pk = app.add_subcommand("parking", "rank-r semistandard parking functions");
  pk->require_subcommand(1);
  auto* pc = pk->add_subcommand("count", "number of parking functions");
  auto* pe = pk->add_subcommand("enumerate", "one JSON object per line");
  auto* pt = pk->add_subcommand("t0-char", "torus character of the parking functions");
  for (auto* sub : {pc, pe, pt}) {
    detail::add_int(sub, "--m", st.m, "m");
    detail::add_int(sub, "--n", st.n, "n");
    detail::add_int(sub, "--r", st.r, "rank r");
  }
  pe->add_option("--render", st.render, "draw each object")->check(CLI::IsMember({"ascii"}));
  pc->callback([&] { action = [&](Format) { return parking_count(st.m, st.n, st.r).str(); }; });
  pe->callback([&] {
    action = [&](Format) {
      std::string s;
      for (const auto& pf : parking_enumerate(st.m, st.n, st.r)) {
        if (st.render == "ascii") {
          s += (s.empty() ? "" : "\n") + to_json(pf).dump() + "\n" + render_ascii(pf);
        } else {
          s += to_json(pf).dump() + "\n";
        }
      }
      if (!s.empty() && s.back() == '\n') s.pop_back();
      return s;
    };
  });
  pt->callback([&] { action = [&](Format f) { return render(t0_char_from_pf(st.m, st.n, st.r), f); }; });

  auto* dy = app.add_subcommand("dyck", "rational Dyck paths");
  detail::add_int(dy, "--m", st.m, "m");
  detail::add_int(dy, "--n", st.n, "n");
  dy->add_flag("--frobenius", st.frobenius, "print the S_m-character sum over paths instead");
  dy->add_option("--r", st.r, "print the GL_r multiplicities at q = 1 instead");
  dy->callback([&] {
    action = [&](Format f) {
      if (st.r > 0) return detail::glr_text(glr_char_from_dyck(st.m, st.n, st.r), f);
      if (st.frobenius) return render(frobenius_from_dyck(st.m, st.n), f);
      return detail::dyck_text(dyck_paths(st.m, st.n), f);
    };
  });

  auto* vf = app.add_subcommand("verify", "run the cross-check sweep");
  vf->add_option("--max-n", st.max_n, "largest n")->required();
  vf->add_option("--max-m", st.max_m, "largest m")->required();
  vf->add_option("--max-r", st.max_r, "largest r")->required();
  vf->add_option("--inject-fault", st.inject_fault, "perturb the named check (harness self-test)");
  vf->add_option("--threads", st.threads, "worker count");
  bool verify_failed = false;
  vf->callback([&] {
    action = [&](Format f) {
      const auto rep = run_verify({st.max_n, st.max_m, st.max_r, st.inject_fault, st.threads});
      verify_failed = !rep.all_pass();
      return render(rep, f);
    };
  });

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();
  pk->fallthrough();
  for (auto* sub : {pc, pe, pt}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::domain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::domain;
  }

  try {
    const std::string text = action(parse_format(st.format));
    if (st.output.empty()) {
      out << text << '\n';
    } else {
      std::ofstream file(st.output, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open '" + st.output + "' for writing");
      file << text << '\n';
    }
    return verify_failed ? exit_code::internal : exit_code::ok;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::domain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
}

}  // namespace gieseker
