#pragma once

// Rational Dyck paths and rank-r semistandard parking functions.

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "gieseker/characters.hpp"

namespace gieseker {

/// Lattice path from (0,0) to (n,m) with 'U' = (0,1) and 'R' = (1,0) steps,
/// weakly above y = (m/n) x.
class DyckPath {
public:
  DyckPath(long m, long n, std::string steps) : m_(m), n_(n), steps_(std::move(steps)) {
    long x = 0, y = 0;
    for (char s : steps_) {
      if (s == 'U') {
        ++y;
      } else if (s == 'R') {
        ++x;
      } else {
        throw DomainError(std::string("invalid step '") + s + "'");
      }
      if (n_ * y < m_ * x) throw DomainError("path '" + steps_ + "' dips below the diagonal");
    }
    if (x != n_ || y != m_) throw DomainError("path '" + steps_ + "' does not end at (n, m)");
  }

  long m() const { return m_; }
  long n() const { return n_; }
  const std::string& steps() const { return steps_; }

  /// Lengths of maximal blocks of consecutive U steps, in path order.
  std::vector<int> vertical_runs() const {
    std::vector<int> runs;
    int cur = 0;
    for (char s : steps_) {
      if (s == 'U') {
        ++cur;
      } else if (cur > 0) {
        runs.push_back(cur);
        cur = 0;
      }
    }
    if (cur > 0) runs.push_back(cur);
    return runs;
  }

  /// x-coordinate of each U step, bottom to top.
  std::vector<long> up_columns() const {
    std::vector<long> cols;
    long x = 0;
    for (char s : steps_) {
      if (s == 'U') {
        cols.push_back(x);
      } else {
        ++x;
      }
    }
    return cols;
  }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
  long m_, n_;
  std::string steps_;
};

inline std::vector<int> vertical_runs(const DyckPath& d) { return d.vertical_runs(); }

/// All m/n-Dyck paths, lexicographic in the step string with U < R.
inline std::vector<DyckPath> dyck_paths(long m, long n) {
  detail::require_positive(m, "m");
  detail::require_positive(n, "n");
  std::vector<DyckPath> out;
  std::string cur;
  std::function<void(long, long)> rec = [&](long x, long y) {
    if (x == n && y == m) {
      out.emplace_back(m, n, cur);
      return;
    }
    if (y < m) {
      cur.push_back('U');
      rec(x, y + 1);
      cur.pop_back();
    }
    if (x < n && n * y >= m * (x + 1)) {
      cur.push_back('R');
      rec(x + 1, y);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

/// Dyck path with a label in {1..r} on each U step. Labels are stored in
/// step order (bottom to top); read top to bottom they weakly increase
/// along every vertical run.
class ParkingFunction {
public:
  ParkingFunction(DyckPath path, std::vector<int> labels, int r) : path_(std::move(path)), labels_(std::move(labels)), r_(r) {
    if (static_cast<long>(labels_.size()) != path_.m()) throw DomainError("one label per vertical step required");
    for (int l : labels_)
      if (l < 1 || l > r_) throw DomainError("label out of range 1..r");
    std::size_t pos = 0;
    for (int a : path_.vertical_runs()) {
      for (int t = 1; t < a; ++t)
        if (labels_[pos + static_cast<std::size_t>(t)] > labels_[pos + static_cast<std::size_t>(t) - 1])
          throw DomainError("labels must weakly increase down each vertical run");
      pos += static_cast<std::size_t>(a);
    }
  }

  const DyckPath& path() const { return path_; }
  const std::vector<int>& labels() const { return labels_; }
  int rank() const { return r_; }

  /// Multiplicity of each label value.
  std::vector<int> content() const {
    std::vector<int> c(static_cast<std::size_t>(r_), 0);
    for (int l : labels_) ++c[static_cast<std::size_t>(l - 1)];
    return c;
  }

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;

private:
  DyckPath path_;
  std::vector<int> labels_;
  int r_;
};

/// Every rank-r semistandard m/n-parking function; ordered by path, then by
/// label vector (step order) lexicographically.
inline std::vector<ParkingFunction> parking_enumerate(long m, long n, long r) {
  detail::require_positive(r, "r");
  std::vector<ParkingFunction> out;
  const int rr = static_cast<int>(r);
  for (const auto& path : dyck_paths(m, n)) {
    const auto runs = path.vertical_runs();
    std::vector<int> labels;
    // Within a run, step order is bottom to top, so labels weakly decrease.
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t run, int left, int cap) {
      if (run == runs.size()) {
        out.emplace_back(path, labels, rr);
        return;
      }
      if (left == 0) {
        rec(run + 1, run + 1 < runs.size() ? runs[run + 1] : 0, rr);
        return;
      }
      for (int v = 1; v <= cap; ++v) {
        labels.push_back(v);
        rec(run, left - 1, v);
        labels.pop_back();
      }
    };
    rec(0, runs.empty() ? 0 : runs[0], rr);
  }
  return out;
}

/// sum over paths of prod_i binom(r + a_i - 1, a_i), a_i the run lengths.
inline Int parking_count(long m, long n, long r) {
  detail::require_positive(r, "r");
  Int total = 0;
  for (const auto& path : dyck_paths(m, n)) {
    Int w = 1;
    for (int a : path.vertical_runs()) w *= binomial(r + a - 1, a);
    total += w;
  }
  return total;
}

/// T_0-character sum_{(D, phi)} prod_i q_i^{-|phi^{-1}(i)|}; q-degree 0.
inline TorusChar t0_char_from_pf(long m, long n, long r) {
  TorusChar out(static_cast<int>(r));
  for (const auto& pf : parking_enumerate(m, n, r)) {
    Monomial e = pf.content();
    for (int& x : e) x = -x;
    out.add_term(e, QExpPoly(1L));
  }
  return out;
}

/// sum over Dyck paths of h_{a_1} ... h_{a_l}, in Schur coordinates.
inline SymFunc<Rat> frobenius_from_dyck(long m, long n) {
  detail::require_positive(m, "m");
  detail::require_positive(n, "n");
  if (std::gcd(m, n) != 1) throw NonCoprimeError(n, m);
  SymFunc<Rat> out(Basis::schur, static_cast<int>(m));
  for (const auto& path : dyck_paths(m, n)) {
    SymFunc<Rat> prod = complete_homog(0);
    for (int a : path.vertical_runs()) prod = multiply(prod, complete_homog(a));
    out += prod;
  }
  return out;
}

/// Schur expansion of sum over Dyck paths of h_{a_1}(x) ... h_{a_l}(x) in r
/// variables; the q = 1 image of the GL_r-character.
inline std::map<Partition, long long> glr_char_from_dyck(long m, long n, long r) {
  detail::require_positive(m, "m");
  detail::require_positive(n, "n");
  detail::require_positive(r, "r");
  if (std::gcd(m, n) != 1) throw NonCoprimeError(n, m);
  const int rr = static_cast<int>(r);
  MultiPoly total(rr);
  for (const auto& path : dyck_paths(m, n)) {
    MultiPoly prod = MultiPoly::constant(rr, Rat(1));
    for (int a : path.vertical_runs()) prod = prod * complete_homog_poly(a, rr);
    total += prod;
  }
  std::map<Partition, long long> out;
  for (const auto& [mu, c] : schur_expand_poly(total)) {
    if (!is_integer(c)) throw IndivisibleError("non-integral GL_r multiplicity");
    out.emplace(mu, numerator_of(c).convert_to<long long>());
  }
  return out;
}

/// ASCII picture: one line per row from the top, the label sits left of the
/// path's vertical step, '.' marks cells right of the path.
inline std::string render_ascii(const ParkingFunction& pf) {
  const auto cols = pf.path().up_columns();
  const long n = pf.path().n();
  std::string out;
  for (std::size_t k = cols.size(); k-- > 0;) {
    std::string line(static_cast<std::size_t>(2 * n + 2), ' ');
    const auto x = static_cast<std::size_t>(cols[k]);
    line[2 * x] = static_cast<char>('0' + pf.labels()[k] % 10);
    line[2 * x + 1] = '|';
    for (std::size_t c = x; c < static_cast<std::size_t>(n); ++c) line[2 * c + 2] = '.';
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  out += ' ';
  out += '+';
  for (long c = 0; c < n; ++c) out += "-+";
  out += '\n';
  return out;
}

}  // namespace gieseker
