#include "liekit/lie_file.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace liekit {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
  /// Text after the first '=', whitespace removed.
  std::string rhs;
  std::string rhs_raw;
  bool has_rhs = false;
};

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& message) {
  throw ParseError(ErrorKind::SyntaxError, line, message);
}
[[noreturn]] void semantic(std::size_t line, const std::string& message) {
  throw ParseError(ErrorKind::SemanticError, line, message);
}

long long to_int(const Line& line, const std::string& token) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  syntax(line.number, "expected an integer, got '" + token + "'");
}

Rational to_rational(std::size_t line, const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const std::exception&) {
    syntax(line, "expected a rational number, got '" + token + "'");
  }
}

/// 1-based index token checked against the dimension.
std::size_t to_index(const Line& line, const std::string& token, std::size_t dim) {
  const long long v = to_int(line, token);
  if (v < 1 || static_cast<std::size_t>(v) > dim) {
    semantic(line.number, "index " + token + " out of range 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(v - 1);
}

bool is_number_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; }

/// Parses "c*k + c*k - c*k" where c is a rational or a tuple "(c1,...,cd)".
std::vector<std::pair<RingElement, std::size_t>> parse_terms(const Line& line, const ScalarDomain& domain,
                                                             std::size_t dim) {
  const std::string& s = line.rhs;
  std::vector<std::pair<RingElement, std::size_t>> out;
  std::size_t pos = 0;
  if (s.empty()) syntax(line.number, "empty right-hand side");
  while (pos < s.size()) {
    int sign = 1;
    bool any_sign = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      any_sign = true;
      ++pos;
    }
    if (!out.empty() && !any_sign) syntax(line.number, "expected '+' or '-' between terms");
    RingElement coeff;
    if (pos < s.size() && s[pos] == '(') {
      const auto close = s.find(')', pos);
      if (close == std::string::npos) syntax(line.number, "unterminated coefficient tuple");
      std::vector<std::string> parts;
      std::string current;
      for (std::size_t i = pos + 1; i < close; ++i) {
        if (s[i] == ',') {
          parts.push_back(current);
          current.clear();
        } else {
          current.push_back(s[i]);
        }
      }
      parts.push_back(current);
      if (parts.size() != domain.dim()) {
        semantic(line.number, "coefficient tuple has " + std::to_string(parts.size()) + " entries, ring has dimension " +
                                  std::to_string(domain.dim()));
      }
      coeff = domain.zero();
      for (std::size_t a = 0; a < parts.size(); ++a) coeff[a] = domain.base().from(to_rational(line.number, parts[a]));
      pos = close + 1;
    } else {
      const std::size_t start = pos;
      while (pos < s.size() && is_number_char(s[pos])) ++pos;
      if (start == pos) syntax(line.number, "expected a coefficient at '" + s.substr(start) + "'");
      coeff = domain.from_base(to_rational(line.number, s.substr(start, pos - start)));
    }
    if (pos >= s.size() || s[pos] != '*') syntax(line.number, "expected '*' after coefficient");
    ++pos;
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) syntax(line.number, "expected a basis index after '*'");
    const std::size_t k = to_index(line, s.substr(start, pos - start), dim);
    if (sign < 0) coeff = domain.neg(coeff);
    out.emplace_back(std::move(coeff), k);
  }
  return out;
}

std::string format_coeff(const ScalarDomain& domain, const RingElement& c) {
  if (domain.is_field()) return to_string(c[0]);
  std::string out = "(";
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (a) out += ",";
    out += to_string(c[a]);
  }
  return out + ")";
}

std::string field_spec(const Field& field) {
  return field.is_rational() ? "Q" : "F " + std::to_string(field.characteristic());
}

}  // namespace

LieAlgebra LieFile::algebra() const { return LieAlgebra::make(domain, dim, brackets, names, grading); }

std::optional<BilinearForm> LieFile::bilinear_form() const {
  if (form.empty()) return std::nullopt;
  return make_form(dim, form);
}

LieFile parse_lie(std::string_view text) {
  std::vector<Line> lines;
  {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string raw(text.substr(start, end - start));
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      Line line;
      line.number = number;
      if (auto eq = raw.find('='); eq != std::string::npos) {
        line.has_rhs = true;
        line.rhs_raw = raw.substr(eq + 1);
        for (char c : raw.substr(eq + 1)) {
          if (!std::isspace(static_cast<unsigned char>(c))) line.rhs.push_back(c);
        }
        raw.erase(eq);
      }
      line.tokens = split_ws(raw);
      if (!line.tokens.empty()) lines.push_back(std::move(line));
      else if (line.has_rhs) syntax(number, "'=' without a keyword");
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  LieFile file;
  Field base = Field::rationals();
  std::optional<std::size_t> table_dim;
  std::size_t table_line = 0;
  bool truncated = false;
  std::size_t truncated_n = 0;
  std::optional<std::pair<std::size_t, std::vector<std::string>>> unit_line;
  std::optional<std::size_t> dim;
  std::optional<std::pair<std::size_t, std::vector<std::string>>> names_line;
  std::optional<std::pair<std::size_t, std::vector<long long>>> grading_decl;
  std::vector<const Line*> weight_lines;
  std::vector<const Line*> bracket_lines;
  std::vector<const Line*> form_lines;
  std::size_t grading_free = 0;

  auto expect_rhs = [](const Line& line, bool wanted) {
    if (line.has_rhs != wanted) syntax(line.number, wanted ? "missing '='" : "unexpected '='");
  };

  for (const Line& line : lines) {
    const auto& t = line.tokens;
    const std::string& key = t[0];
    if (key == "field") {
      expect_rhs(line, false);
      std::string spec;
      for (std::size_t i = 1; i < t.size(); ++i) spec += (i > 1 ? " " : "") + t[i];
      try {
        base = parse_field(spec);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::EvenCharacteristic || e.kind() == ErrorKind::NotPrime) semantic(line.number, e.what());
        syntax(line.number, "bad field '" + spec + "'");
      }
    } else if (key == "ring") {
      expect_rhs(line, false);
      if (t.size() >= 2 && t[1] == "truncated") {
        if (t.size() != 4 && t.size() != 5) syntax(line.number, "expected 'ring truncated <Q|F p> <N>'");
        std::string spec = t[2];
        if (t.size() == 5) spec += " " + t[3];
        try {
          base = parse_field(spec);
        } catch (const Error& e) {
          syntax(line.number, std::string("bad field: ") + e.what());
        }
        const long long n = to_int(line, t.back());
        if (n < 1) semantic(line.number, "truncation bound must be positive");
        truncated = true;
        truncated_n = static_cast<std::size_t>(n);
      } else if (t.size() == 3 && t[1] == "table") {
        const long long d = to_int(line, t[2]);
        if (d < 1) semantic(line.number, "ring dimension must be positive");
        table_dim = static_cast<std::size_t>(d);
        table_line = line.number;
      } else {
        syntax(line.number, "expected 'ring truncated ...' or 'ring table <d>'");
      }
    } else if (key == "mult") {
      expect_rhs(line, true);
      if (!table_dim) semantic(line.number, "'mult' before 'ring table'");
      if (t.size() != 3) syntax(line.number, "expected 'mult <i> <j> = <coeffs>'");
      to_index(line, t[1], *table_dim);
      to_index(line, t[2], *table_dim);
    } else if (key == "unit") {
      expect_rhs(line, false);
      if (!table_dim) semantic(line.number, "'unit' before 'ring table'");
      unit_line = std::pair{line.number, std::vector<std::string>(t.begin() + 1, t.end())};
    } else if (key == "dim") {
      expect_rhs(line, false);
      if (t.size() != 2) syntax(line.number, "expected 'dim <n>'");
      const long long n = to_int(line, t[1]);
      if (n < 0) semantic(line.number, "dimension must be nonnegative");
      if (dim) semantic(line.number, "duplicate 'dim'");
      dim = static_cast<std::size_t>(n);
    } else if (key == "names") {
      expect_rhs(line, false);
      names_line = std::pair{line.number, std::vector<std::string>(t.begin() + 1, t.end())};
    } else if (key == "grading") {
      expect_rhs(line, false);
      if (t.size() < 3 || t[1] != "free") syntax(line.number, "expected 'grading free <r> [torsion <m>...]'");
      const long long r = to_int(line, t[2]);
      if (r < 0) semantic(line.number, "free rank must be nonnegative");
      std::vector<long long> torsion;
      if (t.size() > 3) {
        if (t[3] != "torsion") syntax(line.number, "expected 'torsion'");
        for (std::size_t i = 4; i < t.size(); ++i) torsion.push_back(to_int(line, t[i]));
      }
      grading_free = static_cast<std::size_t>(r);
      grading_decl = std::pair{line.number, torsion};
    } else if (key == "weight") {
      expect_rhs(line, false);
      weight_lines.push_back(&line);
    } else if (key == "bracket") {
      expect_rhs(line, true);
      if (t.size() != 3) syntax(line.number, "expected 'bracket <i> <j> = ...'");
      bracket_lines.push_back(&line);
    } else if (key == "form") {
      expect_rhs(line, true);
      if (t.size() != 3) syntax(line.number, "expected 'form <i> <j> = <c>'");
      form_lines.push_back(&line);
    } else {
      syntax(line.number, "unknown keyword '" + key + "'");
    }
  }

  if (truncated && table_dim) semantic(table_line, "both 'ring truncated' and 'ring table'");
  if (truncated) {
    file.domain = ScalarDomain::truncated_polynomial(base, truncated_n);
  } else if (table_dim) {
    const std::size_t d = *table_dim;
    std::vector<Rational> mult(d * d * d);
    for (const Line& line : lines) {
      if (line.tokens[0] != "mult") continue;
      const std::size_t i = to_index(line, line.tokens[1], d);
      const std::size_t j = to_index(line, line.tokens[2], d);
      std::string raw = line.rhs_raw;
      for (char& c : raw) {
        if (c == ',') c = ' ';
      }
      const std::vector<std::string> coeffs = split_ws(raw);
      if (coeffs.size() != d) semantic(line.number, "expected " + std::to_string(d) + " coefficients");
      for (std::size_t k = 0; k < d; ++k) {
        const Rational c = base.from(to_rational(line.number, coeffs[k]));
        mult[(i * d + j) * d + k] = c;
        mult[(j * d + i) * d + k] = c;
      }
    }
    if (!unit_line) semantic(table_line, "'ring table' needs a 'unit' line");
    if (unit_line->second.size() != d) semantic(unit_line->first, "unit needs " + std::to_string(d) + " coefficients");
    RingElement unit(d);
    for (std::size_t k = 0; k < d; ++k) unit[k] = base.from(to_rational(unit_line->first, unit_line->second[k]));
    try {
      file.domain = ScalarDomain::comm_algebra(base, d, std::move(mult), std::move(unit));
    } catch (const Error& e) {
      semantic(table_line, e.what());
    }
  } else {
    file.domain = ScalarDomain::field(base);
  }

  if (!dim) semantic(0, "missing 'dim'");
  file.dim = *dim;
  const std::size_t n = file.dim;

  if (names_line) {
    if (names_line->second.size() != n) {
      semantic(names_line->first, "expected " + std::to_string(n) + " names, got " + std::to_string(names_line->second.size()));
    }
    std::set<std::string> seen;
    for (const auto& name : names_line->second) {
      if (!seen.insert(name).second) semantic(names_line->first, "duplicate name '" + name + "'");
    }
    file.names = names_line->second;
  }

  if (grading_decl) {
    const std::size_t arity = grading_free + grading_decl->second.size();
    std::vector<std::optional<Weight>> weights(n);
    for (const Line* line : weight_lines) {
      const auto& t = line->tokens;
      if (t.size() < 2) syntax(line->number, "expected 'weight <i> <components>'");
      const std::size_t i = to_index(*line, t[1], n);
      if (t.size() - 2 != arity) {
        semantic(line->number, "weight has " + std::to_string(t.size() - 2) + " components, grading has arity " +
                                   std::to_string(arity));
      }
      if (weights[i]) semantic(line->number, "duplicate weight for basis vector " + t[1]);
      Weight w;
      for (std::size_t c = 2; c < t.size(); ++c) w.push_back(to_int(*line, t[c]));
      weights[i] = std::move(w);
    }
    std::vector<Weight> all;
    for (std::size_t i = 0; i < n; ++i) {
      if (!weights[i]) semantic(grading_decl->first, "no weight given for basis vector " + std::to_string(i + 1));
      all.push_back(*weights[i]);
    }
    try {
      file.grading = Grading(grading_free, grading_decl->second, std::move(all));
    } catch (const Error& e) {
      semantic(grading_decl->first, e.what());
    }
  } else if (!weight_lines.empty()) {
    semantic(weight_lines.front()->number, "'weight' without 'grading'");
  }

  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  for (const Line* line : bracket_lines) {
    const std::size_t i = to_index(*line, line->tokens[1], n);
    const std::size_t j = to_index(*line, line->tokens[2], n);
    if (i == j) semantic(line->number, "diagonal bracket [e_i, e_i]");
    if (i > j) semantic(line->number, "bracket indices must satisfy i < j");
    if (!seen_pairs.insert({i, j}).second) semantic(line->number, "duplicate bracket");
    BracketEntry entry{i, j, {}};
    std::map<std::size_t, RingElement> acc;
    for (auto& [c, k] : parse_terms(*line, file.domain, n)) {
      auto it = acc.find(k);
      if (it == acc.end()) acc.emplace(k, c);
      else it->second = file.domain.add(it->second, c);
    }
    for (auto& [k, c] : acc) {
      if (!file.domain.is_zero(c)) entry.terms.push_back({k, c});
    }
    file.brackets.push_back(std::move(entry));
  }

  std::set<std::pair<std::size_t, std::size_t>> seen_form;
  for (const Line* line : form_lines) {
    std::size_t i = to_index(*line, line->tokens[1], n);
    std::size_t j = to_index(*line, line->tokens[2], n);
    if (i > j) std::swap(i, j);
    if (!seen_form.insert({i, j}).second) semantic(line->number, "duplicate form entry");
    if (!file.domain.is_field()) semantic(line->number, "forms are supported over fields only");
    file.form.emplace_back(i, j, file.domain.base().from(to_rational(line->number, line->rhs)));
  }
  return file;
}

std::string emit_lie(const LieFile& file) {
  std::ostringstream out;
  const ScalarDomain& d = file.domain;
  if (d.is_field()) {
    out << "field " << field_spec(d.base()) << "\n";
  } else if (d.truncation() > 0) {
    out << "ring truncated " << field_spec(d.base()) << " " << d.truncation() << "\n";
  } else {
    out << "field " << field_spec(d.base()) << "\n";
    out << "ring table " << d.dim() << "\n";
    for (std::size_t i = 0; i < d.dim(); ++i) {
      for (std::size_t j = i; j < d.dim(); ++j) {
        bool nonzero = false;
        for (std::size_t k = 0; k < d.dim(); ++k) nonzero = nonzero || !Field::is_zero(d.structure(i, j, k));
        if (!nonzero) continue;
        out << "mult " << i + 1 << " " << j + 1 << " = ";
        for (std::size_t k = 0; k < d.dim(); ++k) out << (k ? " " : "") << to_string(d.structure(i, j, k));
        out << "\n";
      }
    }
    out << "unit";
    for (const auto& c : d.unit()) out << " " << to_string(c);
    out << "\n";
  }
  out << "dim " << file.dim << "\n";
  if (!file.names.empty()) {
    out << "names";
    for (const auto& name : file.names) out << " " << name;
    out << "\n";
  }
  if (file.grading) {
    const Grading& g = *file.grading;
    out << "grading free " << g.free_rank();
    if (!g.torsion().empty()) {
      out << " torsion";
      for (long long m : g.torsion()) out << " " << m;
    }
    out << "\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
      out << "weight " << i + 1;
      for (long long c : g.weight(i)) out << " " << c;
      out << "\n";
    }
  }
  for (const auto& entry : file.brackets) {
    out << "bracket " << entry.i + 1 << " " << entry.j + 1 << " =";
    for (std::size_t t = 0; t < entry.terms.size(); ++t) {
      out << (t ? " + " : " ") << format_coeff(d, entry.terms[t].coeff) << "*" << entry.terms[t].index + 1;
    }
    out << "\n";
  }
  for (const auto& [i, j, c] : file.form) out << "form " << i + 1 << " " << j + 1 << " = " << to_string(c) << "\n";
  return out.str();
}

LieFile lie_file_from(const LieAlgebra& g, const std::optional<BilinearForm>& form) {
  LieFile file;
  file.domain = g.domain();
  file.dim = g.dim();
  file.names = g.names();
  file.grading = g.grading();
  file.brackets = g.table();
  if (form) {
    for (std::size_t i = 0; i < form->dim(); ++i) {
      for (std::size_t j = i; j < form->dim(); ++j) {
        if (!Field::is_zero((*form)(i, j))) file.form.emplace_back(i, j, (*form)(i, j));
      }
    }
  }
  return file;
}

}  // namespace liekit
