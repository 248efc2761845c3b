#pragma once

// Cross-check sweep: recomputes each identity through independent code paths
// over a grid of parameters and reports one pass/fail cell per check.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>

#include "gieseker/format.hpp"

namespace gieseker {

struct VerifyParams {
  long n = 0, m = 0, r = 0;
  std::optional<long> d;
  std::optional<Partition> lambda;

  friend auto operator<=>(const VerifyParams&, const VerifyParams&) = default;
};

struct VerifyCell {
  VerifyParams params;
  std::string check;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyParams> grid;  // coprime (n, m, r) cells, in sweep order
  std::vector<VerifyCell> cells;

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !c.pass; }));
  }
  bool all_pass() const { return failures() == 0; }
};

struct VerifyOptions {
  long max_n = 1, max_m = 1, max_r = 1;
  /// Name of a check whose computed side is perturbed before comparison.
  std::string inject_fault;
  /// 0 means GIESEKER_THREADS, else hardware concurrency.
  unsigned threads = 0;
};

/// Non-coprime (n, m) pairs swept for the minimal-support bridge check,
/// filtered by the bounds.
inline const std::vector<std::pair<long, long>>& minsupp_bridge_pairs() {
  static const std::vector<std::pair<long, long>> pairs{{2, 2}, {2, 4}, {4, 2}, {3, 3}, {4, 4}, {4, 6}, {6, 4}};
  return pairs;
}

namespace detail {

using CheckResult = std::pair<bool, std::string>;

inline CheckResult ok() { return {true, ""}; }
inline CheckResult fail(std::string why) { return {false, std::move(why)}; }

// Subtracting 1/2 breaks both equality and integrality.
inline void perturb(GLChar& chi) {
  const QExpPoly half(Rat(-1, 2));
  if (chi.coeffs.empty()) {
    chi.coeffs.emplace(Partition{}, half);
  } else {
    auto& c = chi.coeffs.begin()->second;
    c = c + half;
  }
}

// Bumps the top coefficient so both palindromy and equality checks notice.
inline void perturb(QExpPoly& p) { p = p + (p.is_zero() ? QExpPoly(1L) : QExpPoly::monomial(p.max_exp())); }
inline void perturb(Int& x) { x += 1; }

inline bool nonneg_integral(const GLChar& chi) {
  return std::all_of(chi.coeffs.begin(), chi.coeffs.end(), [](const auto& kv) {
    return kv.second.has_integer_coefficients() && kv.second.has_nonnegative_coefficients();
  });
}

inline Rat total_at_one(const MultiPoly& p) {
  Rat s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

inline CheckResult check_divisibility(long n, long m, long r, bool fault) {
  GLChar chi = char_fd(n, m, r);
  if (fault) perturb(chi);
  if (!nonneg_integral(chi)) return fail("coefficient not a nonnegative integral Laurent polynomial");
  return ok();
}

inline CheckResult check_dimension(long n, long m, long r, bool fault) {
  const Rat expected(binomial(n * r + m - 1, m), Int(n));
  Rat total = total_at_one(torus_at_q_one(char_fd_torus(n, m, r)));
  if (fault) total += 1;
  if (total != expected) return fail("torus character at 1 is " + total.str() + ", expected " + expected.str());
  if (dim_fd(n, m, r) != expected) return fail("dim_fd disagrees with the closed form");
  return ok();
}

inline CheckResult check_symmetry(long n, long m, long r, bool fault) {
  QExpPoly g = graded_dimension(char_fd(n, m, r));
  if (fault) perturb(g);
  const auto rep = symmetry_report(g);
  if (!rep.palindromic) return fail("graded dimension not palindromic: " + to_text(g));
  if (rep.degree != Exp((n - 1) * (m - 1), 2)) return fail("degree " + to_string(rep.degree));
  if (rep.leading != Rat(binomial(r + m - 1, m))) return fail("leading coefficient " + rep.leading.str());
  return ok();
}

inline CheckResult check_parking(long n, long m, long r, bool fault) {
  Int count = parking_count(m, n, r);
  if (fault) perturb(count);
  const Rat dim = dim_fd(n, m, r);
  if (Rat(count) != dim) return fail("parking_count " + count.str() + " vs dim " + dim.str());
  const auto list = parking_enumerate(m, n, r);
  if (Int(list.size()) != count) return fail("enumeration length " + std::to_string(list.size()));
  if (torus_at_q_one(char_fd_torus(n, m, r)) != torus_at_q_one(t0_char_from_pf(m, n, r)))
    return fail("T_0-character differs from the q = 1 torus character");
  return ok();
}

inline CheckResult check_genfun(long n, long m, long r, bool fault) {
  const auto g = gen_function_coeff(n, r, m);
  if (!g.polynomial) return fail("generating-function coefficient not divisible by [n]");
  TorusChar lhs = *g.polynomial;
  if (fault) lhs.add_term(Monomial(static_cast<std::size_t>(r), 0), QExpPoly(1L));
  if (lhs != char_fd_torus(n, m, r)) return fail("generating-function coefficient differs from the torus character");
  return ok();
}

inline CheckResult check_qcatalan(long n, long m, long r, long d, bool fault) {
  QExpPoly sub = chd_substitute(n, m, r, d);
  if (fault) perturb(sub);
  const QExpPoly closed = chd_closed(n, m, r, d);
  if (sub != closed) return fail("substitution " + to_text(sub) + " vs closed form " + to_text(closed));
  if (!closed.has_integer_coefficients() || !closed.has_nonnegative_coefficients()) return fail("negative or fractional coefficient");
  const Rat catalan(binomial(n * r + m - 1, m), Int(n));
  if (closed.eval_at_one() != catalan) return fail("value at q = 1 is " + closed.eval_at_one().str());
  return ok();
}

inline CheckResult check_dyck(long n, long m, long r, bool fault) {
  auto frob = frobenius_from_dyck(m, n);
  if (fault) frob.add_term(Partition::rectangle(1, static_cast<int>(m)), Rat(1));
  for (const auto& lambda : partitions_of(static_cast<int>(m))) {
    const Rat expected = principal_spec(lambda, static_cast<int>(n)).eval_at_one() / Rat(n);
    if (frob.coeff(lambda) != expected) return fail("coefficient of s" + partition_str(lambda) + " is " + frob.coeff(lambda).str());
  }
  const auto glr = glr_char_from_dyck(m, n, r);
  const auto chi = char_fd(n, m, r);
  std::map<Partition, long long> at_one;
  for (const auto& [mu, c] : chi.coeffs) at_one.emplace(mu, numerator_of(c.eval_at_one()).convert_to<long long>());
  if (glr != at_one) return fail("GL_r multiplicities from Dyck paths differ from char_fd at q = 1");
  return ok();
}

inline CheckResult check_minsupp(long n, long m, long r, bool fault) {
  const auto ms = char_minsupp(n, m, r, Partition{1});
  GLChar canon;
  canon.r = ms.r;
  for (const auto& [mu, c] : ms.coeffs) {
    if (!c.is_polynomial()) return fail("coefficient of W" + partition_str(mu) + " is not a Laurent polynomial: " + to_text(c));
    canon.set(mu, c.as_polynomial());
  }
  if (fault) perturb(canon);
  if (canon != char_fd(n, m, r)) return fail("minimal-support character differs from char_fd");
  return ok();
}

inline CheckResult check_minsupp_bridge(long n, long m, long r, const Partition& lambda, bool fault) {
  const auto sm = char_S_module(lambda, n, m);
  const auto ms = char_minsupp(n, m, r, lambda);
  for (const auto& mu : partitions_of(static_cast<int>(m), static_cast<int>(std::min(n, r)))) {
    QRatFun lhs = ms.coeff(mu);
    if (fault) lhs = lhs + QRatFun(1L);
    if (lhs != sm.coeff(mu)) return fail("coefficient of W" + partition_str(mu) + " disagrees with the S_m-module expansion");
  }
  return ok();
}

inline CheckResult check_r1_closed_form(long n, long m, bool fault) {
  const QRatFun expected = QRatFun(qbinom(n + m - 1, n)) / QRatFun(qint(m));
  QExpPoly fd = char_fd(n, m, 1).coeff(Partition{static_cast<int>(m)});
  if (fault) perturb(fd);
  if (QRatFun(fd) != expected) return fail("r = 1 character " + to_text(fd) + " vs " + to_text(expected));
  const auto ch = char_cherednik_fd(n, m);
  auto it = ch.coeffs.find(Partition{static_cast<int>(n)});
  const QExpPoly triv = it == ch.coeffs.end() ? QExpPoly() : it->second;
  if (QRatFun(triv) != expected) return fail("trivial isotype " + to_text(triv) + " vs " + to_text(expected));
  return ok();
}

struct Task {
  VerifyParams params;
  std::string check;
  std::function<CheckResult(bool)> run;
};

inline std::vector<Task> plan(const VerifyOptions& opt, std::vector<VerifyParams>& grid) {
  std::vector<Task> tasks;
  for (long n = 1; n <= opt.max_n; ++n)
    for (long m = 1; m <= opt.max_m; ++m) {
      if (std::gcd(n, m) != 1) continue;
      for (long r = 1; r <= opt.max_r; ++r) {
        const VerifyParams p{n, m, r, std::nullopt, std::nullopt};
        grid.push_back(p);
        auto add = [&](const char* name, std::function<CheckResult(bool)> f) { tasks.push_back({p, name, std::move(f)}); };
        add("divisibility", [=](bool f) { return check_divisibility(n, m, r, f); });
        add("dimension", [=](bool f) { return check_dimension(n, m, r, f); });
        add("symmetry", [=](bool f) { return check_symmetry(n, m, r, f); });
        add("parking", [=](bool f) { return check_parking(n, m, r, f); });
        add("genfun", [=](bool f) { return check_genfun(n, m, r, f); });
        add("dyck", [=](bool f) { return check_dyck(n, m, r, f); });
        add("minsupp", [=](bool f) { return check_minsupp(n, m, r, f); });
        if (r == 1) add("r1-closed-form", [=](bool f) { return check_r1_closed_form(n, m, f); });
        for (long d = 1; d <= r; ++d) {
          if (r % d != 0) continue;
          VerifyParams pd = p;
          pd.d = d;
          tasks.push_back({pd, "qcatalan", [=](bool f) { return check_qcatalan(n, m, r, d, f); }});
        }
      }
    }
  for (const auto& [n, m] : minsupp_bridge_pairs()) {
    if (n > opt.max_n || m > opt.max_m) continue;
    for (long r = 1; r <= opt.max_r; ++r)
      for (const auto& lambda : partitions_of(static_cast<int>(std::gcd(n, m)))) {
        const VerifyParams p{n, m, r, std::nullopt, lambda};
        tasks.push_back({p, "minsupp-bridge", [=](bool f) { return check_minsupp_bridge(n, m, r, lambda, f); }});
      }
  }
  return tasks;
}

inline unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GIESEKER_THREADS")) {
    const int k = std::atoi(env);
    if (k > 0) return static_cast<unsigned>(k);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace detail

/// Runs every configured check; the result is sorted by (n, m, r, check)
/// and does not depend on the number of workers.
inline VerifyReport run_verify(const VerifyOptions& opt) {
  if (opt.max_n < 1 || opt.max_m < 1 || opt.max_r < 1) throw DomainError("verify bounds must be at least 1");
  VerifyReport report;
  auto tasks = detail::plan(opt, report.grid);
  report.cells.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& t = tasks[i];
      VerifyCell& cell = report.cells[i];
      cell.params = t.params;
      cell.check = t.check;
      try {
        std::tie(cell.pass, cell.detail) = t.run(t.check == opt.inject_fault);
      } catch (const std::exception& e) {
        cell.pass = false;
        cell.detail = std::string("exception: ") + e.what();
      }
    }
  };
  const unsigned k = std::min<unsigned>(detail::worker_count(opt.threads), static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < k; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::stable_sort(report.cells.begin(), report.cells.end(), [](const VerifyCell& a, const VerifyCell& b) {
    return std::tie(a.params.n, a.params.m, a.params.r, a.check, a.params.d, a.params.lambda) <
           std::tie(b.params.n, b.params.m, b.params.r, b.check, b.params.d, b.params.lambda);
  });
  return report;
}

inline VerifyReport cmd_verify(long max_n, long max_m, long max_r) { return run_verify({max_n, max_m, max_r, "", 0}); }

inline std::string params_str(const VerifyParams& p) {
  std::string s = "n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) + " r=" + std::to_string(p.r);
  if (p.d) s += " d=" + std::to_string(*p.d);
  if (p.lambda) s += " lambda=" + detail::partition_str(*p.lambda);
  return s;
}

inline json to_json(const VerifyReport& rep) {
  json grid = json::array();
  for (const auto& p : rep.grid) grid.push_back({p.n, p.m, p.r});
  json cells = json::array();
  for (const auto& c : rep.cells) {
    json params = {{"n", c.params.n}, {"m", c.params.m}, {"r", c.params.r}};
    if (c.params.d) params["d"] = *c.params.d;
    if (c.params.lambda) params["lambda"] = to_json(*c.params.lambda);
    cells.push_back({{"params", params}, {"check", c.check}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  }
  return {{"grid", grid}, {"cells", cells}, {"failures", rep.failures()}};
}

inline std::string to_text(const VerifyReport& rep) {
  std::string out = "cells:";
  for (const auto& p : rep.grid) out += " (" + std::to_string(p.n) + "," + std::to_string(p.m) + "," + std::to_string(p.r) + ")";
  out += '\n';
  for (const auto& c : rep.cells) {
    out += (c.pass ? "PASS " : "FAIL ") + params_str(c.params) + " " + c.check;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += '\n';
  }
  out += std::to_string(rep.cells.size()) + " checks, " + std::to_string(rep.failures()) + " failed";
  return out;
}

inline std::string to_latex(const VerifyReport& rep) { return to_text(rep); }

}  // namespace gieseker
