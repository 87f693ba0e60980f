#include "homsuper/cli_format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "homsuper/errors.hpp"

namespace homsuper {

bool is_valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '.') return false;
  return true;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

Scalar parse_coeff(const std::string& tok, int line) {
  try {
    return scalar_from_string(tok);
  } catch (const std::exception& e) {
    throw ParseError(line, std::string("bad rational '") + tok + "': " + e.what());
  }
}

struct Builder {
  std::string name;
  bool have_name = false;
  std::vector<std::string> even_names, odd_names;
  bool have_even = false, have_odd = false;
  bool alpha_identity = false;
  std::vector<std::vector<Scalar>> alpha_rows;
  int alpha_line = 0;
  bool have_alpha = false;
  // Ordered pair -> (value, defining line).
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Vec, int>> brackets;
};

}  // namespace

HomLieSuperAlgebra parse_algebra(std::istream& in) {
  Builder b;
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  std::vector<std::string> all_names;
  std::size_t even_dim = 0, n = 0;
  auto index_of = [&](const std::string& nm, int line) -> std::size_t {
    for (std::size_t i = 0; i < all_names.size(); ++i)
      if (all_names[i] == nm) return i;
    throw ParseError(line, "unknown basis name '" + nm + "'");
  };
  auto parity_of = [&](std::size_t i) -> int { return i < even_dim ? 0 : 1; };

  std::size_t pending_alpha_rows = 0;
  bool names_final = false;
  auto finalize_names = [&](int line) {
    if (names_final) return;
    if (!b.have_even && !b.have_odd && (b.even_names.empty() && b.odd_names.empty())) {
      // Zero-dimensional algebra is allowed.
    }
    all_names = b.even_names;
    all_names.insert(all_names.end(), b.odd_names.begin(), b.odd_names.end());
    even_dim = b.even_names.size();
    n = all_names.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (all_names[i] == all_names[j])
          throw ParseError(line, "duplicate basis name '" + all_names[i] + "'");
    names_final = true;
  };

  for (std::size_t li = 0; li < lines.size(); ++li) {
    int line = static_cast<int>(li) + 1;
    std::vector<std::string> toks = tokenize(lines[li]);
    if (toks.empty()) continue;

    if (pending_alpha_rows > 0) {
      std::size_t r = b.alpha_rows.size();
      if (toks.size() != n)
        throw ParseError(line, "alpha row needs " + std::to_string(n) + " entries, got " +
                                   std::to_string(toks.size()));
      std::vector<Scalar> row;
      for (std::size_t c = 0; c < n; ++c) {
        Scalar v = parse_coeff(toks[c], line);
        if (v != 0 && parity_of(r) != parity_of(c))
          throw ParseError(line, "alpha entry (" + all_names[r] + ", " + all_names[c] +
                                     ") mixes parity blocks");
        row.push_back(v);
      }
      b.alpha_rows.push_back(std::move(row));
      --pending_alpha_rows;
      continue;
    }

    const std::string& kw = toks[0];
    if (kw == "name") {
      if (b.have_name) throw ParseError(line, "duplicate name line");
      if (toks.size() != 2) throw ParseError(line, "name line needs exactly one identifier");
      if (!is_valid_identifier(toks[1])) throw ParseError(line, "bad name '" + toks[1] + "'");
      b.name = toks[1];
      b.have_name = true;
    } else if (kw == "even" || kw == "odd") {
      if (names_final) throw ParseError(line, kw + " line must precede alpha and bracket lines");
      bool& flag = (kw == "even") ? b.have_even : b.have_odd;
      if (flag) throw ParseError(line, "duplicate " + kw + " line");
      flag = true;
      auto& dst = (kw == "even") ? b.even_names : b.odd_names;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        if (!is_valid_identifier(toks[t]))
          throw ParseError(line, "bad basis name '" + toks[t] + "'");
        for (const auto& prior : b.even_names)
          if (prior == toks[t]) throw ParseError(line, "duplicate basis name '" + toks[t] + "'");
        for (const auto& prior : b.odd_names)
          if (prior == toks[t]) throw ParseError(line, "duplicate basis name '" + toks[t] + "'");
        dst.push_back(toks[t]);
      }
    } else if (kw == "alpha") {
      if (b.have_alpha) throw ParseError(line, "duplicate alpha line");
      finalize_names(line);
      b.have_alpha = true;
      b.alpha_line = line;
      if (toks.size() == 2 && toks[1] == "identity") {
        b.alpha_identity = true;
      } else if (toks.size() == 2 && toks[1] == "rows") {
        pending_alpha_rows = n;
      } else {
        throw ParseError(line, "alpha line must be 'alpha identity' or 'alpha rows'");
      }
    } else if (kw == "bracket") {
      finalize_names(line);
      // bracket a b = c1 t1 + c2 t2 + ...
      if (toks.size() < 4 || toks[3] != "=")
        throw ParseError(line, "bracket line must look like 'bracket a b = coeff basis ...'");
      std::size_t i = index_of(toks[1], line);
      std::size_t j = index_of(toks[2], line);
      Vec value = zero_vec(n);
      std::size_t t = 4;
      if (t >= toks.size()) throw ParseError(line, "bracket line has an empty right-hand side");
      int target = (parity_of(i) + parity_of(j)) % 2;
      while (t < toks.size()) {
        if (t + 1 >= toks.size())
          throw ParseError(line, "bracket term needs a coefficient and a basis name");
        Scalar coef = parse_coeff(toks[t], line);
        std::size_t idx = index_of(toks[t + 1], line);
        if (coef != 0 && parity_of(idx) != target)
          throw ParseError(line, "term '" + toks[t + 1] +
                                     "' has the wrong parity for bracket [" + toks[1] + ", " +
                                     toks[2] + "]");
        value[idx] += coef;
        t += 2;
        if (t < toks.size()) {
          if (toks[t] != "+") throw ParseError(line, "bracket terms must be joined with '+'");
          ++t;
        }
      }
      auto key = std::make_pair(i, j);
      if (b.brackets.count(key))
        throw ParseError(line, "duplicate bracket for pair (" + toks[1] + ", " + toks[2] + ")");
      int sign = (parity_of(i) && parity_of(j)) ? 1 : -1;
      auto mirror = b.brackets.find(std::make_pair(j, i));
      if (mirror != b.brackets.end() && mirror->second.first != vec_scaled(value, Scalar(sign)))
        throw ParseError(line, "bracket [" + toks[1] + ", " + toks[2] +
                                   "] contradicts super skew-symmetry with the line " +
                                   std::to_string(mirror->second.second) + " value");
      if (i == j && sign == -1 && !vec_is_zero(value))
        throw ParseError(line, "bracket [" + toks[1] + ", " + toks[1] +
                                   "] must vanish for an even element");
      b.brackets[key] = {std::move(value), line};
    } else {
      throw ParseError(line, "unknown directive '" + kw + "'");
    }
  }

  int eof_line = static_cast<int>(lines.size());
  if (pending_alpha_rows > 0) throw ParseError(eof_line, "alpha rows block ended early");
  if (!b.have_name) throw ParseError(eof_line, "missing name line");
  finalize_names(eof_line);
  if (!b.have_alpha) throw ParseError(eof_line, "missing alpha line");

  Matrix alpha = Matrix::identity(n);
  if (!b.alpha_identity) {
    alpha = Matrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) alpha.at(r, c) = b.alpha_rows[r][c];
  }

  std::vector<std::vector<Vec>> structure(n, std::vector<Vec>(n, zero_vec(n)));
  for (const auto& [key, val] : b.brackets) structure[key.first][key.second] = val.first;
  // Complete by super skew-symmetry where only one orientation was given.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (b.brackets.count({i, j}) || !b.brackets.count({j, i})) continue;
      int sign = (parity_of(i) && parity_of(j)) ? 1 : -1;
      structure[i][j] = vec_scaled(structure[j][i], Scalar(sign));
    }

  try {
    return HomLieSuperAlgebra(b.name, all_names, even_dim, std::move(structure),
                              std::move(alpha));
  } catch (const Error& e) {
    throw ParseError(eof_line, e.what());
  }
}

HomLieSuperAlgebra parse_algebra_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_algebra(ss);
}

HomLieSuperAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_algebra(in);
}

std::string serialize_algebra(const HomLieSuperAlgebra& a) {
  std::ostringstream out;
  std::size_t n = a.dim();
  out << "name " << a.name() << "\n";
  out << "even";
  for (std::size_t i = 0; i < a.even_dim(); ++i) out << " " << a.basis_name(i);
  out << "\n";
  if (a.odd_dim() > 0) {
    out << "odd";
    for (std::size_t i = a.even_dim(); i < n; ++i) out << " " << a.basis_name(i);
    out << "\n";
  }
  if (a.alpha().is_identity()) {
    out << "alpha identity\n";
  } else {
    out << "alpha rows\n";
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c)
        out << (c ? " " : "") << scalar_to_string(a.alpha().at(r, c));
      out << "\n";
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vec& v = a.bracket_basis(i, j);
      if (vec_is_zero(v)) continue;
      out << "bracket " << a.basis_name(i) << " " << a.basis_name(j) << " =";
      bool first = true;
      for (std::size_t t = 0; t < n; ++t) {
        if (v[t] == 0) continue;
        out << (first ? " " : " + ") << scalar_to_string(v[t]) << " " << a.basis_name(t);
        first = false;
      }
      out << "\n";
    }
  return out.str();
}

}  // namespace homsuper
