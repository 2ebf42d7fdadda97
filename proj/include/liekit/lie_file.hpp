#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "liekit/error.hpp"
#include "liekit/lie_algebra.hpp"
#include "liekit/scalars.hpp"

namespace liekit {

/// Parsed `.lie` document.
///
///   # comment
///   field Q | field F <p>
///   ring truncated <Q | F p> <N>
///   ring table <d>            (base field from a preceding `field` line, Q by default)
///   mult <i> <j> = <c_1> ... <c_d>
///   unit <c_1> ... <c_d>
///   dim <n>
///   names <id> ...
///   grading free <r> [torsion <m_1> ... <m_s>]
///   weight <i> <t_1> ... <t_(r+s)>
///   bracket <i> <j> = <c>*<k> [+ <c>*<k> ...]     (i < j)
///   form <i> <j> = <c>
///
/// Indices are 1-based. Coefficients are rationals such as 3, -1/2; over a ring
/// a coefficient may be a tuple (c_1,...,c_d) in the ring basis.
struct LieFile {
  ScalarDomain domain = ScalarDomain::field(Field::rationals());
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::optional<Grading> grading;
  /// 0-based.
  std::vector<BracketEntry> brackets;
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> form;

  LieAlgebra algebra() const;
  std::optional<BilinearForm> bilinear_form() const;
};

/// SyntaxError or SemanticError tied to a line of the input (0 when not line specific).
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Throws ParseError of kind SyntaxError or SemanticError.
LieFile parse_lie(std::string_view text);
std::string emit_lie(const LieFile& file);

LieFile lie_file_from(const LieAlgebra& g, const std::optional<BilinearForm>& form = std::nullopt);

}  // namespace liekit
