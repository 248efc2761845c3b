#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "gieseker/rational.hpp"

namespace gieseker {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0. Boxes are addressed 1-indexed as
/// (row, column).
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
  }

  /// (a^k)
  static Partition rectangle(int a, int k) { return k == 0 || a == 0 ? Partition{} : Partition(std::vector<int>(static_cast<std::size_t>(k), a)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int num_rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Row length, zero past the last row. Rows are 1-indexed.
  int row(int i) const { return i >= 1 && i <= num_rows() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

  bool contains(int i, int j) const { return i >= 1 && j >= 1 && j <= row(i); }

  Partition conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
      c.assign(static_cast<std::size_t>(parts_[0]), 0);
      for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    }
    Partition r;
    r.parts_ = std::move(c);
    return r;
  }

  int hook(int i, int j) const {
    require_box(i, j);
    int arm = row(i) - j;
    int leg = 0;
    while (contains(i + leg + 1, j)) ++leg;
    return arm + leg + 1;
  }

  int content(int i, int j) const {
    require_box(i, j);
    return j - i;
  }

  /// Sum of contents of all boxes.
  long kappa() const {
    long s = 0;
    for (int i = 1; i <= num_rows(); ++i)
      for (int j = 1; j <= row(i); ++j) s += j - i;
    return s;
  }

  Partition scaled(int k) const {
    if (k < 1) throw DomainError("scale factor must be positive");
    std::vector<int> p = parts_;
    for (int& x : p) x *= k;
    Partition r;
    r.parts_ = std::move(p);
    return r;
  }

  /// Multiplicity of part i.
  int multiplicity(int i) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), i)); }

  /// Centralizer order z = prod_i i^{k_i} k_i! of a permutation with this
  /// cycle type.
  Int z_class() const {
    Int z = 1;
    std::size_t a = 0;
    while (a < parts_.size()) {
      std::size_t b = a;
      while (b < parts_.size() && parts_[b] == parts_[a]) ++b;
      long k = static_cast<long>(b - a);
      Int ip = 1;
      for (long t = 0; t < k; ++t) ip *= parts_[a];
      z *= ip * factorial(k);
      a = b;
    }
    return z;
  }

  /// Sign of a permutation of this cycle type.
  int sign() const { return (size() - num_rows()) % 2 == 0 ? 1 : -1; }

  /// Union of multisets of parts.
  Partition joined(const Partition& o) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), o.parts_.begin(), o.parts_.end());
    std::sort(p.begin(), p.end(), std::greater<>());
    Partition r;
    r.parts_ = std::move(p);
    return r;
  }

  std::string to_string(char sep = ',') const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

private:
  void require_box(int i, int j) const {
    if (!contains(i, j))
      throw DomainError("box (" + std::to_string(i) + "," + std::to_string(j) + ") is outside the diagram (" +
                        to_string() + ")");
  }

  std::vector<int> parts_;
};

/// All partitions of m in descending lexicographic order.
inline std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw DomainError("partitions_of: m must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

/// Partitions of m with at most k rows, descending lexicographic order.
inline std::vector<Partition> partitions_of(int m, int max_rows) {
  auto all = partitions_of(m);
  std::erase_if(all, [&](const Partition& p) { return p.num_rows() > max_rows; });
  return all;
}

/// Parses "3,1" (or "" for the empty partition).
inline Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  if (s.empty() || s == "0") return Partition{};
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    auto tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!detail::is_int_literal(tok) || tok[0] == '-' || tok[0] == '+')
      throw DomainError("invalid partition part '" + tok + "' in '" + s + "'");
    if (tok.size() > 6) throw DomainError("partition part too large in '" + s + "'");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace gieseker
