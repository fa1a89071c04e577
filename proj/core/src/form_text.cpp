#include "pwcoh/form_text.hpp"

#include <sstream>
#include <vector>

#include "pwcoh/combinatorics.hpp"

namespace pwcoh {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<std::vector<int>> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& tok : split(text, ' ')) {
    if (tok.empty()) continue;
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
    }
    out.push_back(v);
  }
  return out;
}

// Ascending 1-based entries of a mask: bit v prints as v+1.
std::string mask_list(Mask m) {
  std::ostringstream os;
  bool first = true;
  for (int b : mask_bits(m)) {
    if (!first) os << " ";
    os << b + 1;
    first = false;
  }
  return os.str();
}

std::optional<Mask> mask_from_list(const std::vector<int>& entries, int limit) {
  Mask m = 0;
  int prev = 0;
  for (int e : entries) {
    if (e <= prev || e > limit) return std::nullopt;
    m |= Mask{1} << (e - 1);
    prev = e;
  }
  return m;
}

}  // namespace

std::string polynomial_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (int v = 0; v < p.nvars(); ++v) {
      const int e = m.exp(v);
      if (e == 0) continue;
      os << " t" << v + 1;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::optional<Polynomial> parse_polynomial(const std::string& text, int nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars) return std::nullopt;
  if (text.empty()) return std::nullopt;
  Polynomial p(nvars);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(" + ", pos);
    if (end == std::string::npos) end = text.size();
    const std::string term = text.substr(pos, end - pos);
    pos = end == text.size() ? end : end + 3;

    const auto tokens = split(term, ' ');
    if (tokens.empty() || tokens[0].empty()) return std::nullopt;
    const auto coef = parse_rational(tokens[0]);
    if (!coef) return std::nullopt;
    Monomial m;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const std::string& tok = tokens[i];
      if (tok.size() < 2 || tok[0] != 't') return std::nullopt;
      const auto caret = tok.find('^');
      const auto vi = parse_int_list(tok.substr(1, caret - 1));
      if (!vi || vi->size() != 1) return std::nullopt;
      int e = 1;
      if (caret != std::string::npos) {
        const auto ei = parse_int_list(tok.substr(caret + 1));
        if (!ei || ei->size() != 1 || (*ei)[0] < 1) return std::nullopt;
        e = (*ei)[0];
      }
      const int v = (*vi)[0];
      if (v < 1 || v > nvars) return std::nullopt;
      if (m.exp(v - 1) + e > Monomial::kMaxExp) return std::nullopt;
      m = m.with_exp(v - 1, m.exp(v - 1) + e);
    }
    p.add_term(m, *coef);
  }
  return p;
}

std::string polyform_text(const PolyForm& w) {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, poly] : w.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << polynomial_text(poly) << ") * dt[" << mask_list(key.i_mask)
       << "] ^ theta[" << mask_list(key.j_mask) << "]";
  }
  return os.str();
}

std::optional<PolyForm> parse_polyform(const std::string& text, const Simplex& s,
                                       int fiber_dim, int degree) {
  try {
    PolyForm w(s, fiber_dim, degree);
    if (text == "0") return w;
    if (text.empty()) return std::nullopt;
    const int k = s.dimension();

    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != '(') return std::nullopt;
      const std::size_t close = text.find(')', pos);
      if (close == std::string::npos) return std::nullopt;
      const auto poly = parse_polynomial(text.substr(pos + 1, close - pos - 1), k);
      if (!poly) return std::nullopt;

      static const std::string kDt = " * dt[";
      if (text.compare(close + 1, kDt.size(), kDt) != 0) return std::nullopt;
      const std::size_t dt_open = close + 1 + kDt.size();
      const std::size_t dt_close = text.find(']', dt_open);
      if (dt_close == std::string::npos) return std::nullopt;
      const auto dts = parse_int_list(text.substr(dt_open, dt_close - dt_open));
      if (!dts) return std::nullopt;
      const auto i_mask = mask_from_list(*dts, k);
      if (!i_mask) return std::nullopt;

      static const std::string kTheta = " ^ theta[";
      if (text.compare(dt_close + 1, kTheta.size(), kTheta) != 0) return std::nullopt;
      const std::size_t th_open = dt_close + 1 + kTheta.size();
      const std::size_t th_close = text.find(']', th_open);
      if (th_close == std::string::npos) return std::nullopt;
      const auto ths = parse_int_list(text.substr(th_open, th_close - th_open));
      if (!ths) return std::nullopt;
      const auto j_mask = mask_from_list(*ths, fiber_dim);
      if (!j_mask) return std::nullopt;

      w.add_term(*i_mask, *j_mask, *poly);

      pos = th_close + 1;
      if (pos == text.size()) break;
      if (text.compare(pos, 3, " + ") != 0) return std::nullopt;
      pos += 3;
      if (pos == text.size()) return std::nullopt;
    }
    return w;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace pwcoh
