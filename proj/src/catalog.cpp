#include "liekit/catalog.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <tuple>
#include <utility>

#include "liekit/error.hpp"

namespace liekit {

namespace {

using FormEntries = std::vector<std::tuple<std::size_t, std::size_t, Rational>>;

/// Accumulates brackets by basis name; [b,a] is stored as -[a,b].
class TableBuilder {
 public:
  TableBuilder(const ScalarDomain& domain, std::vector<std::string> names)
      : domain_(domain), names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = i;
  }

  std::size_t at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorKind::UnknownName, "no basis vector " + name);
    return it->second;
  }

  void add(std::size_t i, std::size_t j, const RingElement& c, std::size_t k) {
    if (i == j) throw Error(ErrorKind::SemanticError, "diagonal bracket");
    RingElement coeff = c;
    if (i > j) {
      std::swap(i, j);
      coeff = domain_.neg(coeff);
    }
    auto& slot = terms_[{i, j}][k];
    if (slot.empty()) slot = domain_.zero();
    slot = domain_.add(slot, coeff);
  }
  void add(std::size_t i, std::size_t j, const Rational& c, std::size_t k) { add(i, j, domain_.from_base(c), k); }
  void add(const std::string& a, const std::string& b, const Rational& c, const std::string& k) {
    add(at(a), at(b), c, at(k));
  }

  LieAlgebra build(std::optional<Grading> grading = std::nullopt) const {
    std::vector<BracketEntry> table;
    for (const auto& [pair, row] : terms_) {
      BracketEntry entry{pair.first, pair.second, {}};
      for (const auto& [k, c] : row) {
        if (!domain_.is_zero(c)) entry.terms.push_back({k, c});
      }
      if (!entry.terms.empty()) table.push_back(std::move(entry));
    }
    return LieAlgebra::make(domain_, names_.size(), table, names_, std::move(grading));
  }

  const std::vector<std::string>& names() const { return names_; }

 private:
  ScalarDomain domain_;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, RingElement>> terms_;
};

struct ParsedName {
  std::string base;
  std::string args;
  bool has_args = false;
};

ParsedName split_name(std::string_view name) {
  std::string text;
  for (char c : name) {
    if (c != ' ' && c != '\t') text.push_back(c);
  }
  ParsedName out;
  const auto open = text.find('(');
  if (open == std::string::npos) {
    out.base = text;
    return out;
  }
  if (text.back() != ')') throw Error(ErrorKind::UnknownName, "unbalanced parentheses in " + text);
  out.base = text.substr(0, open);
  out.args = text.substr(open + 1, text.size() - open - 2);
  out.has_args = true;
  return out;
}

long long parse_int(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadParameter, "expected an integer in " + context + ", got '" + text + "'");
  }
}

std::vector<long long> parse_int_list(const std::string& args, const std::string& context) {
  std::vector<long long> out;
  std::string current;
  for (char c : args) {
    if (c == ',') {
      out.push_back(parse_int(current, context));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(parse_int(current, context));
  return out;
}

/// "3+4", "3,4", "[2]3+4".
std::vector<long long> parse_partition(const std::string& args) {
  std::vector<long long> parts;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw Error(ErrorKind::BadPartition, "empty part in w(" + args + ")");
    long long mult = 1;
    std::string body = token;
    if (body.front() == '[') {
      const auto close = body.find(']');
      if (close == std::string::npos) throw Error(ErrorKind::BadPartition, "bad multiplicity in " + token);
      mult = parse_int(body.substr(1, close - 1), "w(" + args + ")");
      body = body.substr(close + 1);
    }
    const long long part = parse_int(body, "w(" + args + ")");
    if (mult < 1 || part < 1) throw Error(ErrorKind::BadPartition, "parts must be positive in w(" + args + ")");
    for (long long m = 0; m < mult; ++m) parts.push_back(part);
    token.clear();
  };
  for (char c : args) {
    if (c == '+' || c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return parts;
}

std::string join_parts(const std::vector<long long>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(parts[i]);
  }
  return out;
}

Grading integer_grading(const std::vector<long long>& degrees) { return Grading::integer(degrees); }

void attach(CatalogEntry& entry, const std::string& label, const Grading& grading) {
  if (entry.gradings.empty()) entry.algebra = entry.algebra.with_grading(grading);
  else entry.algebra.with_grading(grading);  // validates compatibility
  entry.gradings.push_back({label, grading});
}

void fact(CatalogEntry& entry, const std::string& key, std::size_t value, FactOrigin origin = FactOrigin::Literature) {
  entry.facts.push_back({key, value, origin});
}

CatalogEntry make_abelian(const ScalarDomain& domain, long long n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "abelian(n) needs n >= 1");
  std::vector<std::string> names;
  for (long long i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  CatalogEntry entry;
  entry.name = "abelian(" + std::to_string(n) + ")";
  entry.parameters = {n};
  entry.algebra = TableBuilder(domain, names).build();
  attach(entry, "degree one", integer_grading(std::vector<long long>(n, 1)));
  fact(entry, "dim", n);
  fact(entry, "nilpotency_length", 1);
  fact(entry, "kill_dim", static_cast<std::size_t>(n * (n + 1) / 2));
  fact(entry, "koszul_rank", 0);
  return entry;
}

CatalogEntry make_heisenberg(const ScalarDomain& domain, long long n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::BadParameter, "heisenberg(n) needs odd n >= 3");
  const long long k = (n - 1) / 2;
  std::vector<std::string> names;
  for (long long i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  for (long long i = 1; i <= k; ++i) names.push_back("y" + std::to_string(i));
  names.push_back("z");
  TableBuilder b(domain, names);
  for (long long i = 1; i <= k; ++i) b.add("x" + std::to_string(i), "y" + std::to_string(i), 1, "z");
  CatalogEntry entry;
  entry.name = "heisenberg(" + std::to_string(n) + ")";
  entry.parameters = {n};
  entry.algebra = b.build();
  std::vector<long long> degrees(n, 1);
  degrees.back() = 2;
  attach(entry, "carnot", integer_grading(degrees));
  fact(entry, "dim", n);
  fact(entry, "nilpotency_length", 2);
  fact(entry, "kill_dim", static_cast<std::size_t>(k * (2 * k + 1)), FactOrigin::Computed);
  fact(entry, "koszul_rank", 0);
  return entry;
}

CatalogEntry make_filiform(const ScalarDomain& domain, long long n) {
  if (n < 3) throw Error(ErrorKind::BadParameter, "filiform(n) needs n >= 3");
  std::vector<std::string> names;
  for (long long i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  TableBuilder b(domain, names);
  for (long long i = 2; i < n; ++i) b.add(0, i - 1, Rational(1), i);
  CatalogEntry entry;
  entry.name = "filiform(" + std::to_string(n) + ")";
  entry.parameters = {n};
  entry.algebra = b.build();
  std::vector<long long> degrees(n);
  degrees[0] = 1;
  for (long long i = 2; i <= n; ++i) degrees[i - 1] = i - 1;
  attach(entry, "carnot", integer_grading(degrees));
  fact(entry, "dim", n);
  fact(entry, "nilpotency_length", n - 1);
  fact(entry, "koszul_rank", 0);
  return entry;
}

CatalogEntry make_sl2(const ScalarDomain& domain) {
  TableBuilder b(domain, {"e1", "e0", "em1"});
  b.add("e0", "e1", 1, "e1");
  b.add("e0", "em1", -1, "em1");
  b.add("e1", "em1", 1, "e0");
  CatalogEntry entry;
  entry.name = "sl2";
  entry.algebra = b.build();
  attach(entry, "cartan", integer_grading({1, 0, -1}));
  entry.form = make_form(3, {{0, 2, Rational(1)}, {1, 1, Rational(1)}});
  fact(entry, "dim", 3);
  fact(entry, "kill_dim", 1, FactOrigin::Computed);
  return entry;
}

CatalogEntry make_aff2(const ScalarDomain& domain) {
  TableBuilder b(domain, {"x", "y"});
  b.add("x", "y", 1, "y");
  CatalogEntry entry;
  entry.name = "aff2";
  entry.algebra = b.build();
  attach(entry, "weight", integer_grading({0, 1}));
  fact(entry, "dim", 2);
  fact(entry, "kill_dim", 1, FactOrigin::Computed);
  return entry;
}

CatalogEntry make_oscillator4(const ScalarDomain& domain) {
  TableBuilder b(domain, {"h", "x", "y", "z"});
  b.add("x", "y", 1, "z");
  b.add("h", "x", 1, "y");
  b.add("h", "y", -1, "x");
  CatalogEntry entry;
  entry.name = "oscillator4";
  entry.algebra = b.build();
  entry.form = make_form(4, {{0, 3, Rational(1)}, {1, 1, Rational(1)}, {2, 2, Rational(1)}});
  fact(entry, "dim", 4);
  return entry;
}

CatalogEntry make_w(const ScalarDomain& domain, const std::vector<long long>& parts, const CatalogOptions& options) {
  std::vector<long long> odd;
  std::vector<long long> quad;
  for (long long p : parts) {
    if (p % 4 == 2) throw Error(ErrorKind::BadPartition, "part " + std::to_string(p) + " is 2 mod 4");
    (p % 2 ? odd : quad).push_back(p);
  }
  const bool single = parts.size() == 1;
  auto e_name = [&](std::size_t i, long long j) {
    return single ? "e" + std::to_string(j) : "e" + std::to_string(i + 1) + "_" + std::to_string(j);
  };
  auto f_name = [&](std::size_t k, long long l) {
    return single ? "f" + std::to_string(l) : "f" + std::to_string(k + 1) + "_" + std::to_string(l);
  };
  std::vector<std::string> names{"x"};
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (long long j = 1; j <= odd[i]; ++j) names.push_back(e_name(i, j));
  }
  for (std::size_t k = 0; k < quad.size(); ++k) {
    for (long long l = 1; l <= quad[k]; ++l) names.push_back(f_name(k, l));
  }
  names.push_back("z");
  const std::size_t n = names.size();

  TableBuilder b(domain, names);
  FormEntries form{{0, n - 1, Rational(1)}};
  for (std::size_t i = 0; i < odd.size(); ++i) {
    const long long a = odd[i];
    for (long long j = 1; j < a; ++j) {
      const Rational s = (j % 2) ? 1 : -1;
      b.add("x", e_name(i, j), s, e_name(i, j + 1));
      if (j < a - j) b.add(e_name(i, j), e_name(i, a - j), s, "z");
    }
    for (long long j = 1; j <= a; ++j) {
      if (j <= a + 1 - j) form.emplace_back(b.at(e_name(i, j)), b.at(e_name(i, a + 1 - j)), Rational(1));
    }
  }
  for (std::size_t k = 0; k < quad.size(); ++k) {
    const long long q = quad[k];
    for (long long l = 1; l + 2 <= q; ++l) {
      const Rational s = (l % 2) ? -1 : 1;
      b.add("x", f_name(k, l), s, f_name(k, l + 2));
      if (l < q - 1 - l) b.add(f_name(k, l), f_name(k, q - 1 - l), s, "z");
    }
    for (long long l = 1; l <= q; ++l) {
      if (l < q + 1 - l) form.emplace_back(b.at(f_name(k, l)), b.at(f_name(k, q + 1 - l)), Rational(1));
    }
  }

  CatalogEntry entry;
  entry.name = "w(" + join_parts(parts) + ")";
  entry.parameters = parts;
  entry.algebra = b.build();
  entry.form = make_form(n, form);

  const bool uniform = std::all_of(parts.begin(), parts.end(), [&](long long p) { return p == parts.front(); });
  if (uniform) {
    const long long p = parts.front();
    std::vector<long long> degrees{1};
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (long long j = 1; j <= p; ++j) degrees.push_back(p % 2 ? j : (j + 1) / 2);
    }
    degrees.push_back(p % 2 ? p : p / 2);
    attach(entry, "carnot", integer_grading(degrees));
  }
  {
    std::vector<long long> degrees(n, 1);
    degrees.front() = 0;
    degrees.back() = 2;
    attach(entry, "012", integer_grading(degrees));
  }
  if (options.r) {
    const long long r = *options.r;
    if (r < 1) throw Error(ErrorKind::BadParameter, "r must be positive");
    for (long long a : odd) {
      if (r < a - 1) throw Error(ErrorKind::BadParameter, "r must be at least a_i - 1 = " + std::to_string(a - 1));
    }
    for (long long q : quad) {
      if (r < q / 2 - 1) throw Error(ErrorKind::BadParameter, "r must be at least b_k/2 - 1 = " + std::to_string(q / 2 - 1));
    }
    std::vector<long long> degrees{2};
    for (long long a : odd) {
      for (long long j = 1; j <= a; ++j) degrees.push_back(r - a + 2 * j);
    }
    for (long long q : quad) {
      for (long long l = 1; l <= q; ++l) degrees.push_back(r - q / 2 + 2 * ((l + 1) / 2));
    }
    degrees.push_back(2 * r);
    attach(entry, "positive r=" + std::to_string(r), integer_grading(degrees));
  }

  long long length = 0;
  for (long long a : odd) length = std::max(length, a);
  for (long long q : quad) length = std::max(length, q / 2);
  fact(entry, "dim", n);
  fact(entry, "nilpotency_length", static_cast<std::size_t>(length));
  if (n <= 9) fact(entry, "koszul_rank", 0);
  return entry;
}

/// T_N = X_{n,i} with N = 3n + i, i in {-1, 0, 1}.
std::pair<long long, long long> t_split(long long big_n) {
  const long long n = (big_n + 1) / 3;
  return {n, big_n - 3 * n};
}

CatalogEntry make_xy(const ScalarDomain& domain, bool is_x, long long param) {
  long long first = 0;
  long long last = 0;
  long long pair_sum = 0;
  long long k = 0;
  if (is_x) {
    if (param < 2 || (param + 1) % 3 != 0) throw Error(ErrorKind::BadParameter, "X(m) needs m = 3k-1 with k >= 1");
    k = (param + 1) / 3;
    first = 1;
    last = 3 * k - 1;
    pair_sum = 3 * k;
  } else {
    if (param < 3 || param % 3 != 0) throw Error(ErrorKind::BadParameter, "Y(m) needs m = 3k with k >= 1");
    k = param / 3;
    first = 2;
    last = 3 * k + 1;
    pair_sum = 3 * k + 3;
  }
  std::vector<std::string> names;
  for (long long t = first; t <= last; ++t) names.push_back("T" + std::to_string(t));
  TableBuilder b(domain, names);
  for (long long p = first; p <= last; ++p) {
    for (long long q = p + 1; q <= last; ++q) {
      if (p + q > last) continue;
      const auto [np, ip] = t_split(p);
      const auto [nq, iq] = t_split(q);
      if (ip + iq < -1 || ip + iq > 1 || ip == iq) continue;
      b.add(static_cast<std::size_t>(p - first), static_cast<std::size_t>(q - first), Rational(static_cast<long>(ip - iq)),
            static_cast<std::size_t>(p + q - first));
    }
  }
  FormEntries form;
  for (long long p = first; p <= last; ++p) {
    const long long q = pair_sum - p;
    if (q < p || q > last) continue;
    form.emplace_back(p - first, q - first, Rational(p % 3 == 0 ? 1 : -2));
  }
  CatalogEntry entry;
  entry.name = std::string(is_x ? "X(" : "Y(") + std::to_string(param) + ")";
  entry.parameters = {param};
  entry.algebra = b.build();
  entry.form = make_form(names.size(), form);

  std::vector<long long> carnot;
  std::vector<Weight> bi;
  for (long long t = first; t <= last; ++t) {
    const auto [n, i] = t_split(t);
    if (is_x) {
      const long long block = (t + 2) / 3;
      carnot.push_back(t % 3 == 0 ? 2 * block : 2 * block - 1);
    } else {
      carnot.push_back(n);
    }
    bi.push_back({n, i});
  }
  attach(entry, "carnot", integer_grading(carnot));
  attach(entry, "(n,i)", Grading(2, {}, bi));
  fact(entry, "dim", static_cast<std::size_t>(param));
  fact(entry, "nilpotency_length", static_cast<std::size_t>(is_x ? 2 * k - 1 : k));
  if (param <= 9) fact(entry, "koszul_rank", 0);
  return entry;
}

CatalogEntry make_kath9_4c(const ScalarDomain& domain) {
  std::vector<std::string> names;
  for (int i = 1; i <= 9; ++i) names.push_back("X" + std::to_string(i));
  TableBuilder b(domain, names);
  const std::vector<std::tuple<int, int, int>> coeffs{{1, 2, -1}, {2, 3, 1}, {1, 3, 1}, {1, 6, -1}, {3, 6, 1},
                                                      {2, 5, -1}, {3, 5, 1}, {2, 7, -1}, {1, 7, 1}};
  for (const auto& [i, j, a] : coeffs) b.add(i - 1, j - 1, Rational(a), i + j - 1);
  FormEntries form;
  for (int i = 1; i <= 5; ++i) form.emplace_back(i - 1, 9 - i, Rational(1));
  CatalogEntry entry;
  entry.name = "kath9_4c";
  entry.algebra = b.build();
  entry.form = make_form(9, form);
  attach(entry, "12|3|456|7|89", integer_grading({1, 1, 2, 3, 3, 3, 4, 5, 5}));
  attach(entry, "index", integer_grading({1, 2, 3, 4, 5, 6, 7, 8, 9}));
  attach(entry, "26|13579|48", integer_grading({1, 0, 1, 2, 1, 0, 1, 2, 1}));
  fact(entry, "dim", 9);
  fact(entry, "nilpotency_length", 5);
  fact(entry, "koszul_rank", 0);
  return entry;
}

/// w(7) on the basis Y_i, i in {1..11} minus {2, 10}.
CatalogEntry make_w7_y(const ScalarDomain& domain, bool twisted) {
  std::vector<std::string> names;
  std::vector<long long> index;
  for (int i = 1; i <= 11; ++i) {
    if (i == 2 || i == 10) continue;
    names.push_back("Y" + std::to_string(i));
    index.push_back(i);
  }
  TableBuilder b(domain, names);
  auto y = [](int i) { return "Y" + std::to_string(i); };
  for (int i = 3; i <= 8; ++i) {
    const Rational s = (i % 2) ? -1 : 1;
    b.add(y(1), y(i), s, y(i + 1));
    if (i < 11 - i) b.add(y(i), y(11 - i), s, y(11));
  }
  if (twisted) {
    b.add(y(3), y(4), 1, y(7));
    b.add(y(3), y(5), -1, y(8));
    b.add(y(4), y(5), 1, y(9));
  }
  FormEntries form;
  for (std::size_t p = 0; p < names.size(); ++p) {
    for (std::size_t q = p; q < names.size(); ++q) {
      if (index[p] + index[q] == 12) form.emplace_back(p, q, Rational(1));
    }
  }
  CatalogEntry entry;
  entry.name = twisted ? "w7_twisted" : "w7";
  entry.algebra = b.build();
  entry.form = make_form(names.size(), form);
  attach(entry, "index", integer_grading(index));
  fact(entry, "dim", 9);
  fact(entry, "nilpotency_length", 7);
  fact(entry, "koszul_rank", 0);
  fact(entry, "derived2_dim", twisted ? 2 : 1);
  return entry;
}

CatalogEntry make_g12(const ScalarDomain& domain) {
  const std::vector<std::string> names{"E3", "E9", "Y1", "Y4", "Y5", "Y6", "Y7", "Y8", "Y11", "Z3", "Z6", "Z9"};
  TableBuilder b(domain, names);
  b.add("Y1", "Y4", 1, "Y5");
  b.add("Y1", "Y5", -1, "Y6");
  b.add("Y1", "Y6", 1, "Y7");
  b.add("Y1", "Y7", -1, "Y8");
  b.add("Y4", "Y7", 1, "Y11");
  b.add("Y5", "Y6", -1, "Y11");
  b.add("E3", "Y1", 1, "Y4");
  b.add("E3", "Y4", 1, "Y7");
  b.add("E3", "Y4", 1, "Z3");
  b.add("E3", "Y5", -1, "Y8");
  b.add("E3", "Y8", -1, "Y11");
  b.add("E3", "Z3", 1, "Z6");
  b.add("E3", "Z6", -1, "Z9");
  b.add("E3", "Z9", -1, "Y8");
  b.add("Y1", "Y8", 1, "E9");
  b.add("Y4", "Y5", 1, "E9");
  b.add("Z3", "Z6", 1, "E9");
  b.add("Y4", "Z9", 1, "E9");

  CatalogEntry entry;
  entry.name = "g12";
  entry.algebra = b.build();
  const std::vector<long long> index{3, 9, 1, 4, 5, 6, 7, 8, 11, 3, 6, 9};
  FormEntries form;
  for (std::size_t p = 0; p < names.size(); ++p) {
    for (std::size_t q = p; q < names.size(); ++q) {
      if (index[p] + index[q] == 12 && names[p][0] == names[q][0]) form.emplace_back(p, q, Rational(1));
    }
  }
  entry.form = make_form(names.size(), form);
  std::vector<Weight> mod4;
  for (long long i : index) mod4.push_back({i});
  attach(entry, "index mod 4", Grading(0, {4}, mod4));
  entry.chain = chain_from_names(entry.algebra, {{2, {"E3", "Y1", "Y8"}},
                                                 {4, {"E3", "Y4", "Y5"}},
                                                 {-3, {"E3", "Y4", "Z9"}},
                                                 {1, {"Y1", "Y4", "Y7"}},
                                                 {-3, {"E3", "Z3", "Z6"}},
                                                 {-3, {"Y1", "Y6", "Y5"}},
                                                 {4, {"Y1", "Y4", "Z3"}},
                                                 {3, {"E3", "Z6", "Y7"}}});
  fact(entry, "dim", 12);
  fact(entry, "nilpotency_length", 7);
  fact(entry, "kill_dim", 5);
  fact(entry, "koszul_rank", 1);
  return entry;
}

CatalogEntry make_solvable9(const ScalarDomain& domain) {
  TableBuilder b(domain, {"x", "y", "z", "yp", "xp", "u1", "um1", "v1", "vm1"});
  b.add("x", "y", 1, "z");
  b.add("z", "x", 1, "yp");
  b.add("y", "z", 1, "xp");
  b.add("x", "u1", 1, "u1");
  b.add("x", "um1", -1, "um1");
  b.add("y", "v1", 1, "v1");
  b.add("y", "vm1", -1, "vm1");
  b.add("u1", "um1", 1, "xp");
  b.add("v1", "vm1", 1, "yp");
  CatalogEntry entry;
  entry.name = "solvable9";
  entry.algebra = b.build();
  entry.form = make_form(9, {{0, 4, Rational(1)},
                             {1, 3, Rational(1)},
                             {2, 2, Rational(1)},
                             {5, 6, Rational(1)},
                             {7, 8, Rational(1)}});
  attach(entry, "cartan",
         Grading(2, {}, {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  entry.chain = chain_from_names(entry.algebra, {{1, {"x", "y", "z"}}, {-1, {"u1", "um1", "x"}}, {-1, {"v1", "vm1", "y"}}});
  fact(entry, "dim", 9);
  return entry;
}

std::string signed_label(const std::string& letter, int i) {
  return letter + (i < 0 ? "m" + std::to_string(-i) : std::to_string(i));
}

CatalogEntry make_octonion(const ScalarDomain& domain, const CatalogOptions& options) {
  std::vector<std::string> names;
  for (int i = -3; i <= 3; ++i) names.push_back(signed_label("E", i));
  for (int i = -3; i <= 3; ++i) names.push_back(signed_label("F", i));
  TableBuilder b(domain, names);
  // f(e_row, e_col) = sign * e_result, upper triangle of the alternating table
  const std::vector<std::tuple<int, int, int, int>> f{
      {-3, 0, -1, -3}, {-3, 1, 1, -2}, {-3, 2, -1, -1}, {-3, 3, 1, 0}, {-2, -1, -1, -3}, {-2, 0, 1, -2},
      {-2, 2, -1, 0},  {-2, 3, 1, 1},  {-1, 0, 1, -1},  {-1, 1, -1, 0}, {-1, 3, -1, 2},  {0, 1, 1, 1},
      {0, 2, 1, 2},    {0, 3, -1, 3},  {1, 2, 1, 3}};
  for (const auto& [row, col, sign, result] : f) {
    b.add(signed_label("E", row), signed_label("E", col), sign, signed_label("F", result));
  }
  FormEntries form;
  for (int i = -3; i <= 3; ++i) form.emplace_back(i + 3, 7 + (3 - i), Rational(1));

  CatalogEntry entry;
  entry.name = "char3_octonion";
  entry.algebra = b.build();
  entry.form = make_form(14, form);
  std::vector<long long> index;
  std::vector<Weight> bi;
  for (int level = 1; level <= 2; ++level) {
    for (int i = -3; i <= 3; ++i) {
      index.push_back(i);
      bi.push_back({i, level});
    }
  }
  attach(entry, "index", integer_grading(index));
  attach(entry, "(index,level)", Grading(2, {}, bi));
  entry.chain = chain_from_names(entry.algebra, {{1, {"E0", "E1", "Em1"}},
                                                 {1, {"E0", "E2", "Em2"}},
                                                 {1, {"E0", "Em3", "E3"}},
                                                 {-1, {"E1", "E2", "Em3"}},
                                                 {-1, {"Em1", "Em2", "E3"}}});
  if (options.require_cycle && domain.base().characteristic() != 3) {
    throw Error(ErrorKind::CharacteristicMismatch,
                "the distinguished chain of char3_octonion is a cycle only in characteristic 3");
  }
  fact(entry, "dim", 14);
  fact(entry, "nilpotency_length", 2);
  if (domain.base().characteristic() == 3) fact(entry, "koszul_rank", 1, FactOrigin::Computed);
  return entry;
}

/// A nonzero ring element squaring to zero.
RingElement square_zero_element(const ScalarDomain& domain) {
  if (domain.truncation() >= 2) return domain.basis_element(domain.truncation() - 1);
  for (std::size_t i = 0; i < domain.dim(); ++i) {
    const RingElement e = domain.basis_element(i);
    if (domain.is_zero(domain.mul(e, e))) return e;
  }
  throw Error(ErrorKind::BadParameter, "nonreduced_rank3 needs a ring with a basis element of square zero");
}

CatalogEntry make_nonreduced(const ScalarDomain& domain) {
  if (domain.is_field()) throw Error(ErrorKind::BadParameter, "nonreduced_rank3 needs a non-reduced ring, not a field");
  const RingElement t = square_zero_element(domain);
  TableBuilder b(domain, {"e1", "e2", "e3"});
  b.add(0, 1, t, 2);
  b.add(1, 2, t, 0);
  b.add(2, 0, t, 1);
  CatalogEntry entry;
  entry.name = "nonreduced_rank3";
  entry.algebra = b.build();
  attach(entry, "(Z/2)^3", Grading(0, {2, 2, 2}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  entry.chain = chain_from_names(entry.algebra, {{1, {"e1", "e2", "e3"}}});
  fact(entry, "dim", 3);
  fact(entry, "nilpotency_length", 2);
  return entry;
}

CatalogEntry make_coadjoint_sl2(const ScalarDomain& domain) {
  if (!domain.is_field()) throw Error(ErrorKind::BadParameter, "coadjoint(sl2) is built over a field");
  const LieAlgebra base = coadjoint_double(make_sl2(domain).algebra.without_grading());
  std::vector<BracketEntry> table = base.table();
  CatalogEntry entry;
  entry.name = "coadjoint(sl2)";
  entry.algebra = LieAlgebra::make(domain, 6, table, {"e1", "e0", "em1", "Em1", "E0", "E1"});
  entry.form = make_form(6, {{0, 3, Rational(1)}, {1, 4, Rational(1)}, {2, 5, Rational(1)}});
  attach(entry, "(i,level)", Grading(2, {}, {{1, 0}, {0, 0}, {-1, 0}, {-1, 1}, {0, 1}, {1, 1}}));
  attach(entry, "level", integer_grading({0, 0, 0, 1, 1, 1}));
  fact(entry, "dim", 6);
  return entry;
}

CatalogEntry make_two_nilpotent(const ScalarDomain& domain, const std::vector<long long>& args) {
  if (args.size() != 3 || args[1] < 1 || args[2] < 1) {
    throw Error(ErrorKind::BadParameter, "two_nilpotent_random(seed,v,w) needs v, w >= 1");
  }
  const auto v = static_cast<std::size_t>(args[1]);
  const auto w = static_cast<std::size_t>(args[2]);
  std::mt19937_64 rng(static_cast<std::uint64_t>(args[0]));
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= v; ++i) names.push_back("v" + std::to_string(i));
  for (std::size_t i = 1; i <= w; ++i) names.push_back("w" + std::to_string(i));
  TableBuilder b(domain, names);
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      for (std::size_t k = 0; k < w; ++k) {
        const int c = coeff(rng);
        if (c) b.add(i, j, Rational(c), v + k);
      }
    }
  }
  CatalogEntry entry;
  entry.name = "two_nilpotent_random(" + std::to_string(args[0]) + "," + std::to_string(v) + "," + std::to_string(w) + ")";
  entry.parameters = args;
  entry.algebra = b.build();
  std::vector<long long> degrees(v, 1);
  degrees.resize(v + w, 2);
  attach(entry, "12", integer_grading(degrees));
  fact(entry, "dim", v + w);
  if (domain.base().characteristic() != 3) fact(entry, "koszul_rank", 0);
  return entry;
}

/// a abelian acting on m by polynomials in one random matrix, plus a central
/// cocycle [a_i, a_j] = c_ij z.
CatalogEntry make_metabelian(const ScalarDomain& domain, const std::vector<long long>& args) {
  if (args.size() != 3 || args[1] < 1 || args[2] < 1) {
    throw Error(ErrorKind::BadParameter, "metabelian_random(seed,a,m) needs a, m >= 1");
  }
  const auto na = static_cast<std::size_t>(args[1]);
  const auto nm = static_cast<std::size_t>(args[2]);
  std::mt19937_64 rng(static_cast<std::uint64_t>(args[0]));
  std::uniform_int_distribution<int> coeff(-2, 2);
  const Field& field = domain.base();

  Matrix base(nm, nm);
  for (std::size_t i = 0; i < nm; ++i) {
    for (std::size_t j = 0; j < nm; ++j) base(i, j) = field.from_int(coeff(rng));
  }
  std::vector<Matrix> powers{Matrix::identity(nm)};
  for (std::size_t p = 1; p < 3; ++p) powers.push_back(multiply(field, powers.back(), base));

  std::vector<std::string> names;
  for (std::size_t i = 1; i <= na; ++i) names.push_back("a" + std::to_string(i));
  for (std::size_t i = 1; i <= nm; ++i) names.push_back("m" + std::to_string(i));
  names.push_back("z");
  TableBuilder b(domain, names);
  for (std::size_t i = 0; i < na; ++i) {
    Matrix rho(nm, nm);
    for (std::size_t p = 1; p < powers.size(); ++p) {
      const Rational c = field.from_int(coeff(rng));
      for (std::size_t r = 0; r < nm; ++r) {
        for (std::size_t s = 0; s < nm; ++s) rho(r, s) = field.add(rho(r, s), field.mul(c, powers[p](r, s)));
      }
    }
    for (std::size_t s = 0; s < nm; ++s) {
      for (std::size_t r = 0; r < nm; ++r) {
        if (!Field::is_zero(rho(r, s))) b.add(i, na + s, rho(r, s), na + r);
      }
    }
    for (std::size_t j = i + 1; j < na; ++j) {
      const int c = coeff(rng);
      if (c) b.add(i, j, Rational(c), na + nm);
    }
  }
  CatalogEntry entry;
  entry.name = "metabelian_random(" + std::to_string(args[0]) + "," + std::to_string(na) + "," + std::to_string(nm) + ")";
  entry.parameters = args;
  entry.algebra = b.build();
  fact(entry, "dim", na + nm + 1);
  return entry;
}

}  // namespace

std::optional<std::size_t> CatalogEntry::fact(std::string_view key) const {
  for (const auto& f : facts) {
    if (f.key == key) return f.value;
  }
  return std::nullopt;
}

CatalogEntry catalog_make(std::string_view name, const ScalarDomain& domain, const CatalogOptions& options) {
  const ParsedName parsed = split_name(name);
  const std::string& base = parsed.base;
  auto single_int = [&]() {
    const auto args = parse_int_list(parsed.args, std::string(name));
    if (args.size() != 1) throw Error(ErrorKind::BadParameter, std::string(name) + " takes one integer");
    return args.front();
  };
  auto no_args = [&]() {
    if (parsed.has_args) throw Error(ErrorKind::BadParameter, base + " takes no parameters");
  };

  if (base == "abelian") return make_abelian(domain, single_int());
  if (base == "heisenberg") return make_heisenberg(domain, single_int());
  if (base == "filiform") return make_filiform(domain, single_int());
  if (base == "sl2") return no_args(), make_sl2(domain);
  if (base == "aff2") return no_args(), make_aff2(domain);
  if (base == "oscillator4") return no_args(), make_oscillator4(domain);
  if (base == "w") return make_w(domain, parse_partition(parsed.args), options);
  if (base == "X") return make_xy(domain, true, single_int());
  if (base == "Y") return make_xy(domain, false, single_int());
  if (base == "kath9_4c") return no_args(), make_kath9_4c(domain);
  if (base == "w7") return no_args(), make_w7_y(domain, false);
  if (base == "w7_twisted") return no_args(), make_w7_y(domain, true);
  if (base == "g12") return no_args(), make_g12(domain);
  if (base == "solvable9") return no_args(), make_solvable9(domain);
  if (base == "char3_octonion") return no_args(), make_octonion(domain, options);
  if (base == "nonreduced_rank3") return no_args(), make_nonreduced(domain);
  if (base == "coadjoint") {
    if (parsed.args != "sl2") throw Error(ErrorKind::UnknownName, "only coadjoint(sl2) is available");
    return make_coadjoint_sl2(domain);
  }
  if (base == "two_nilpotent_random") return make_two_nilpotent(domain, parse_int_list(parsed.args, std::string(name)));
  if (base == "metabelian_random") return make_metabelian(domain, parse_int_list(parsed.args, std::string(name)));
  throw Error(ErrorKind::UnknownName, "no catalog entry named '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"abelian(4)",  "heisenberg(5)", "filiform(6)",  "sl2",        "aff2",           "oscillator4",
          "w(3)",        "w(4)",          "w(5)",         "w(3+3)",     "w(3+4)",         "w(7)",
          "X(5)",        "X(8)",          "Y(6)",         "Y(9)",       "kath9_4c",       "w7",
          "w7_twisted",  "g12",           "solvable9",    "char3_octonion", "coadjoint(sl2)",
          "two_nilpotent_random(1,4,3)", "metabelian_random(1,2,3)"};
}

}  // namespace liekit
