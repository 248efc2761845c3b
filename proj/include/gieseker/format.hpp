#pragma once

// Text, LaTeX and JSON renderings, plus JSON readers for the same schemas.

#include <json.hpp>

#include <sstream>
#include <string>

#include "gieseker/characters.hpp"
#include "gieseker/parking.hpp"

namespace gieseker {

using json = nlohmann::json;

enum class Format { text, json, latex };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  throw DomainError("unknown format '" + s + "' (expected text, json or latex)");
}

namespace detail {

enum class Style { text, latex };

inline std::string power(const std::string& var, Exp e, Style st) {
  if (e == Exp(1)) return var;
  if (st == Style::latex) return var + "^{" + to_string(e) + "}";
  if (e.denominator() == 1) return var + "^" + to_string(e);
  return var + "^(" + to_string(e) + ")";
}

inline std::string rat_str(const Rat& c, Style st) {
  if (st == Style::latex && !is_integer(c)) {
    std::string sgn = c < 0 ? "-" : "";
    return sgn + "\\frac{" + Int(boost::multiprecision::abs(numerator_of(c))).str() + "}{" + denominator_of(c).str() + "}";
  }
  return c.str();
}

/// Joins signed terms: the first keeps its sign, later ones become " + t" / " - t"
/// (text) or "+t" / "-t" (latex).
inline std::string join_signed(const std::vector<std::pair<bool, std::string>>& terms, Style st) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [neg, body] = terms[i];
    if (i == 0) {
      out += (neg ? "-" : "") + body;
    } else if (st == Style::text) {
      out += (neg ? " - " : " + ") + body;
    } else {
      out += (neg ? "-" : "+") + body;
    }
  }
  return out;
}

/// Highest exponent first, matching the usual display of q-numbers.
inline std::string poly_str(const QExpPoly& p, Style st, const std::string& var = "q") {
  if (p.is_zero()) return "0";
  std::vector<std::pair<bool, std::string>> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const Rat a = boost::multiprecision::abs(c);
    std::string body;
    if (e == Exp(0)) {
      body = rat_str(a, st);
    } else {
      std::string sep = st == Style::text && a != 1 ? " " : "";
      body = (a == 1 ? "" : rat_str(a, st) + sep) + power(var, e, st);
    }
    terms.emplace_back(c < 0, body);
  }
  return join_signed(terms, st);
}

inline std::string ratfun_str(const QRatFun& f, Style st) {
  if (f.is_polynomial()) return poly_str(f.num(), st);
  if (st == Style::latex) return "\\frac{" + poly_str(f.num(), st) + "}{" + poly_str(f.den(), st) + "}";
  return "(" + poly_str(f.num(), st) + ")/(" + poly_str(f.den(), st) + ")";
}

inline std::string coef_str(const QExpPoly& p, Style st) { return poly_str(p, st); }
inline std::string coef_str(const QRatFun& f, Style st) { return ratfun_str(f, st); }
inline std::string coef_str(const Rat& c, Style st) { return rat_str(c, st); }

inline bool coef_is_one(const QExpPoly& p) { return p == QExpPoly(1L); }
inline bool coef_is_one(const QRatFun& f) { return f == QRatFun(1L); }
inline bool coef_is_one(const Rat& c) { return c == 1; }

/// Wraps a coefficient in parentheses unless it is a single term.
template <class C>
std::string coef_prefix(const C& c, Style st) {
  if (coef_is_one(c)) return "";
  std::string s = coef_str(c, st);
  bool single = true;
  if constexpr (std::is_same_v<C, QExpPoly>) single = c.size() == 1;
  if constexpr (std::is_same_v<C, QRatFun>) single = !c.is_polynomial() || c.num().size() == 1;
  if (!single) s = "(" + s + ")";
  if (st == Style::text) s += " ";
  return s;
}

inline std::string partition_str(const Partition& p) { return "(" + p.to_string() + ")"; }

}  // namespace detail

inline std::string to_text(const QExpPoly& p) { return detail::poly_str(p, detail::Style::text); }
inline std::string to_latex(const QExpPoly& p) { return detail::poly_str(p, detail::Style::latex); }
inline std::string to_text(const QRatFun& f) { return detail::ratfun_str(f, detail::Style::text); }
inline std::string to_latex(const QRatFun& f) { return detail::ratfun_str(f, detail::Style::latex); }

// ---- JSON ----

inline json to_json(const Rat& c) { return c.str(); }

inline json to_json(const QExpPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", to_string(e)}, {"coef", c.str()}});
  return {{"terms", terms}};
}

inline json to_json(const QRatFun& f) {
  if (f.is_polynomial()) return to_json(f.num());
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline json to_json(const Partition& p) { return p.parts(); }

template <Coefficient C>
json to_json(const SymFunc<C>& f) {
  json terms = json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({{"partition", to_json(it->first)}, {"coef", to_json(it->second)}});
  return {{"basis", basis_name(f.basis())}, {"degree", f.degree()}, {"terms", terms}};
}

template <Coefficient C>
json to_json(const BasicGLChar<C>& chi) {
  json terms = json::array();
  for (const auto& [mu, c] : chi.coeffs) terms.push_back({{"partition", to_json(mu)}, {"coef", to_json(c)}});
  return {{"r", chi.r}, {"terms", terms}};
}

inline json to_json(const GradedSnChar& chi) {
  json terms = json::array();
  for (const auto& [lambda, c] : chi.coeffs) terms.push_back({{"partition", to_json(lambda)}, {"coef", to_json(c)}});
  return {{"n", chi.n}, {"terms", terms}};
}

/// One entry per (torus weight, q-exponent) pair.
inline json to_json(const TorusChar& t) {
  json terms = json::array();
  for (const auto& [e, c] : t.terms())
    for (const auto& [qe, k] : c.terms()) terms.push_back({{"q", to_string(qe)}, {"x", e}, {"coef", k.str()}});
  return {{"r", t.nvars()}, {"terms", terms}};
}

inline json to_json(const RationalTorusChar& t) {
  json terms = json::array();
  for (const auto& [e, c] : t.terms()) terms.push_back({{"x", e}, {"coef", to_json(c)}});
  return {{"r", t.nvars()}, {"terms", terms}};
}

inline json to_json(const GenFunCoeff& g) {
  return {{"nonintegral", g.nonintegral}, {"value", g.polynomial ? to_json(*g.polynomial) : to_json(g.rational)}};
}

inline json to_json(const ParkingFunction& pf) { return {{"steps", pf.path().steps()}, {"labels", pf.labels()}}; }

inline json to_json(const SymmetryReport& s) {
  return {{"palindromic", s.palindromic}, {"degree", to_string(s.degree)}, {"leading", s.leading.str()}};
}

// ---- JSON readers ----

inline QExpPoly qexppoly_from_json(const json& j) {
  QExpPoly p;
  for (const auto& t : j.at("terms")) {
    Rat c = parse_rat(t.at("coef").get<std::string>());
    if (c == 0) throw DomainError("zero coefficient in serialized polynomial");
    p.add_term(parse_exp(t.at("exp").get<std::string>()), c);
  }
  return p;
}

inline QRatFun qratfun_from_json(const json& j) {
  if (j.contains("terms")) return QRatFun(qexppoly_from_json(j));
  return QRatFun(qexppoly_from_json(j.at("num")), qexppoly_from_json(j.at("den")));
}

inline Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

template <Coefficient C>
C coef_from_json(const json& j) {
  if constexpr (std::is_same_v<C, Rat>) {
    return parse_rat(j.get<std::string>());
  } else if constexpr (std::is_same_v<C, QExpPoly>) {
    return qexppoly_from_json(j);
  } else {
    return qratfun_from_json(j);
  }
}

template <Coefficient C>
SymFunc<C> symfunc_from_json(const json& j) {
  const auto b = j.at("basis").get<std::string>();
  if (b != "schur" && b != "powersum") throw DomainError("unknown basis '" + b + "'");
  SymFunc<C> f(b == "schur" ? Basis::schur : Basis::powersum, j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) f.add_term(partition_from_json(t.at("partition")), coef_from_json<C>(t.at("coef")));
  return f;
}

template <Coefficient C>
BasicGLChar<C> glchar_from_json(const json& j) {
  BasicGLChar<C> chi;
  chi.r = j.at("r").get<int>();
  for (const auto& t : j.at("terms")) chi.set(partition_from_json(t.at("partition")), coef_from_json<C>(t.at("coef")));
  return chi;
}

inline TorusChar torus_from_json(const json& j) {
  TorusChar t(j.at("r").get<int>());
  for (const auto& term : j.at("terms"))
    t.add_term(term.at("x").get<Monomial>(),
               QExpPoly::monomial(parse_exp(term.at("q").get<std::string>()), parse_rat(term.at("coef").get<std::string>())));
  return t;
}

inline ParkingFunction parking_from_json(const json& j, int r) {
  const auto steps = j.at("steps").get<std::string>();
  long m = 0, n = 0;
  for (char s : steps) (s == 'U' ? m : n)++;
  return ParkingFunction(DyckPath(m, n, steps), j.at("labels").get<std::vector<int>>(), r);
}

// ---- text / LaTeX for composite values ----

template <Coefficient C>
std::string to_text(const BasicGLChar<C>& chi) {
  if (chi.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [mu, c] : chi.coeffs) {
    if (!out.empty()) out += " + ";
    out += detail::coef_prefix(c, detail::Style::text) + "[W*" + detail::partition_str(mu) + "]";
  }
  return out;
}

template <Coefficient C>
std::string to_latex(const BasicGLChar<C>& chi) {
  if (chi.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [mu, c] : chi.coeffs) {
    if (!out.empty()) out += " + ";
    out += detail::coef_prefix(c, detail::Style::latex) + "W^{*}_{" + detail::partition_str(mu) + "}";
  }
  return out;
}

inline std::string to_text(const GradedSnChar& chi) {
  if (chi.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : chi.coeffs) {
    if (!out.empty()) out += " + ";
    out += detail::coef_prefix(c, detail::Style::text) + "[V" + detail::partition_str(lambda) + "]";
  }
  return out;
}

inline std::string to_latex(const GradedSnChar& chi) {
  if (chi.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : chi.coeffs) {
    if (!out.empty()) out += " + ";
    out += detail::coef_prefix(c, detail::Style::latex) + "V_{" + detail::partition_str(lambda) + "}";
  }
  return out;
}

/// Schur-basis terms in descending lexicographic order.
template <Coefficient C>
std::string to_text(const SymFunc<C>& f) {
  if (f.is_zero()) return "0";
  const char* sym = f.basis() == Basis::schur ? "s" : "p";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += detail::coef_prefix(it->second, detail::Style::text) + sym + detail::partition_str(it->first);
  }
  return out;
}

template <Coefficient C>
std::string to_latex(const SymFunc<C>& f) {
  if (f.is_zero()) return "0";
  const char* sym = f.basis() == Basis::schur ? "s" : "p";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += detail::coef_prefix(it->second, detail::Style::latex) + sym + "_{" + detail::partition_str(it->first) + "}";
  }
  return out;
}

namespace detail {

inline std::string torus_monomial(const Monomial& e, Style st) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (st == Style::latex) {
      const auto idx = std::to_string(j + 1);
      out += power("q_" + (idx.size() == 1 ? idx : "{" + idx + "}"), Exp(e[j]), st);
    } else {
      if (!out.empty()) out += " ";
      out += power("q" + std::to_string(j + 1), Exp(e[j]), st);
    }
  }
  return out;
}

template <Coefficient C>
std::string torus_str(const BasicMultiPoly<C>& t, Style st) {
  if (t.is_zero()) return "0";
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [e, c] : t.terms()) {
    const std::string mono = torus_monomial(e, st);
    bool neg = false;
    std::string coef;
    if constexpr (std::is_same_v<C, QExpPoly>) {
      if (c.size() == 1 && c.min_exp() == 0) {
        neg = c.leading_coeff() < 0;
        Rat a = boost::multiprecision::abs(c.leading_coeff());
        coef = mono.empty() ? rat_str(a, st) : (a == 1 ? "" : rat_str(a, st) + (st == Style::text ? " " : ""));
      } else {
        coef = coef_prefix(c, st);
        if (mono.empty() && st == Style::text) coef.pop_back();
      }
    } else {
      coef = coef_prefix(c, st);
      if (mono.empty() && coef.empty()) coef = "1";
      if (mono.empty() && st == Style::text && !coef.empty() && coef.back() == ' ') coef.pop_back();
    }
    terms.emplace_back(neg, coef + mono);
  }
  return join_signed(terms, Style::text);
}

}  // namespace detail

inline std::string to_text(const TorusChar& t) { return detail::torus_str(t, detail::Style::text); }
inline std::string to_latex(const TorusChar& t) { return detail::torus_str(t, detail::Style::latex); }
inline std::string to_text(const RationalTorusChar& t) { return detail::torus_str(t, detail::Style::text); }
inline std::string to_latex(const RationalTorusChar& t) { return detail::torus_str(t, detail::Style::latex); }

inline std::string to_text(const ParkingFunction& pf) {
  std::string s = pf.path().steps() + " [";
  for (std::size_t i = 0; i < pf.labels().size(); ++i) s += (i ? "," : "") + std::to_string(pf.labels()[i]);
  return s + "]";
}

/// Renders any supported value in the requested format; JSON is compact.
template <class T>
std::string render(const T& value, Format f) {
  switch (f) {
    case Format::json:
      return to_json(value).dump();
    case Format::latex:
      return to_latex(value);
    case Format::text:
    default:
      return to_text(value);
  }
}

}  // namespace gieseker
