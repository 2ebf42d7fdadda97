#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "liekit/catalog.hpp"
#include "liekit/lie_file.hpp"

using namespace liekit;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string bin() {
  const char* b = std::getenv("LIEKIT_BIN");
  REQUIRE_MESSAGE(b != nullptr, "LIEKIT_BIN is not set");
  return b;
}

Run run(const std::string& args) {
  Run r;
  const std::string cmd = "'" + bin() + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "liekit_test_cli";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

const char* const kHeisenberg = R"(# Heisenberg algebra
field Q
dim 3
names x y z
bracket 1 2 = 1*3
)";

ErrorKind parse_error(const std::string& text, std::size_t* line = nullptr) {
  try {
    parse_lie(text);
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  FAIL("parsed without error");
  return ErrorKind::UnknownName;
}

}  // namespace

TEST_CASE(".lie parsing") {
  const LieFile f = parse_lie(kHeisenberg);
  CHECK(f.dim == 3);
  CHECK(f.names == std::vector<std::string>{"x", "y", "z"});
  const LieAlgebra g = f.algebra();
  CHECK(g.bracket(g.basis_vector(0), g.basis_vector(1)) == Vector{0, 0, 1});

  const LieFile r = parse_lie(R"(ring truncated Q 2
dim 3
bracket 1 2 = (0,1)*3
bracket 1 3 = 1/2*3 + -1*2
)");
  CHECK(r.domain.dim() == 2);
  CHECK(r.brackets.size() == 2);
  CHECK(r.brackets[0].terms[0].coeff == RingElement{0, 1});
  CHECK(r.brackets[1].terms.size() == 2);

  const LieFile t = parse_lie(R"(ring table 2
mult 1 1 = 1 0
mult 1 2 = 0 1
mult 2 1 = 0 1
mult 2 2 = 0 0
unit 1 0
dim 1
)");
  CHECK(t.domain == truncated_polynomial(Field::rationals(), 2));

  const LieFile gr = parse_lie(R"(field F 5
dim 3
grading free 1 torsion 4
weight 1 1 1
weight 2 1 2
weight 3 2 3
bracket 1 2 = 3*3
form 3 3 = 2
)");
  CHECK(gr.domain.base().characteristic() == 5);
  REQUIRE(gr.grading.has_value());
  CHECK(gr.grading->weight(2) == Weight{2, 3});
  CHECK(gr.algebra().graded());
  CHECK(gr.form.size() == 1);
}

TEST_CASE(".lie errors carry a kind and a line") {
  std::size_t line = 0;
  CHECK(parse_error("dim 3\nbracket 1 1 = 1*2\n", &line) == ErrorKind::SemanticError);
  CHECK(line == 2);
  CHECK(parse_error("dim 3\nbracket 2 1 = 1*3\n") == ErrorKind::SemanticError);
  CHECK(parse_error("dim 3\nbracket 1 2 = 1*4\n") == ErrorKind::SemanticError);
  CHECK(parse_error("dim 2\nnames a\n") == ErrorKind::SemanticError);
  CHECK(parse_error("dim 2\ngrading free 2\nweight 1 1\n") == ErrorKind::SemanticError);
  CHECK(parse_error("dim 3\nbracket 1 2 = 1*3\nbracket 1 2 = 1*3\n") == ErrorKind::SemanticError);
  CHECK(parse_error("dim 3\nfrobnicate\n", &line) == ErrorKind::SyntaxError);
  CHECK(line == 2);
  CHECK(parse_error("dim x\n") == ErrorKind::SyntaxError);
  CHECK(parse_error("dim 3\nbracket 1 2 = 1*\n") == ErrorKind::SyntaxError);
  CHECK(parse_error("field F 2\ndim 1\n") == ErrorKind::SemanticError);
}

TEST_CASE("emitting an algebra and reading it back") {
  const CatalogEntry e = catalog_make("g12");
  const std::string text = emit_lie(lie_file_from(e.algebra, e.form));
  const LieFile back = parse_lie(text);
  CHECK(back.algebra() == e.algebra);
  CHECK(back.bilinear_form() == e.form);
}

TEST_CASE("betti and koszul commands") {
  const Run b = run("betti 'catalog:abelian(4)'");
  CHECK(b.code == 0);
  CHECK(b.out.find("1 4 6 4 1") != std::string::npos);
  const Run k = run("koszul catalog:g12");
  CHECK(k.code == 0);
  CHECK(k.out.find("reduced Koszul rank: 1") != std::string::npos);
  const auto path = write_temp("heis.lie", kHeisenberg);
  const Run h = run("betti " + path.string());
  CHECK(h.code == 0);
  CHECK(h.out.find("1 2 2 1") != std::string::npos);
}

TEST_CASE("json output") {
  const Run j = run("--json betti 'catalog:heisenberg(3)'");
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("betti") == nlohmann::json::array({1, 2, 2, 1}));
  const Run k = run("--json kill catalog:g12");
  REQUIRE(k.code == 0);
  const auto kill = nlohmann::json::parse(k.out);
  CHECK(kill.at("kill_dim") == 5);
  CHECK(kill.at("filtration").at(1) == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("betti /nonexistent/file.lie").code == 2);
  const auto bad = write_temp("bad.lie", "dim 3\nbracket 1 1 = 1*2\n");
  CHECK(run("check " + bad.string()).code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("betti catalog:nonsense").code == 2);
  CHECK(run("verify-paper --only nowhere").code == 2);
  CHECK(run("current-h2 --ring 'truncated Q 2' catalog:sl2").code == 0);
  CHECK(run("forms catalog:sl2").code == 0);
  CHECK(run("quadrable catalog:oscillator4").code == 0);
}

TEST_CASE("catalog emission parses back") {
  const Run list = run("catalog list");
  REQUIRE(list.code == 0);
  for (const auto& name : catalog_names()) {
    CHECK(list.out.find(name) != std::string::npos);
    const Run e = run("catalog emit '" + name + "'");
    REQUIRE_MESSAGE(e.code == 0, name);
    const LieFile f = parse_lie(e.out);
    CHECK_MESSAGE(f.algebra().without_grading() == catalog_make(name).algebra.without_grading(), name);
  }
  const Run ring = run("catalog emit nonreduced_rank3 --ring 'truncated Q 2'");
  CHECK(ring.code == 0);
  CHECK(parse_lie(ring.out).domain.dim() == 2);
}

TEST_CASE("reports are deterministic") {
  const Run a = run("verify-paper --only sec7,char3");
  const Run b = run("verify-paper --only sec7,char3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("betti catalog:g12").out == run("betti catalog:g12").out);
}

TEST_CASE("verify-paper sec6") {
  const Run r = run("verify-paper --only sec6");
  CHECK(r.code == 0);
  CHECK(r.out.find("J(c) = -2") != std::string::npos);
  CHECK(r.out.find("1 2 4 9 15 22 26 22 15 9 4 2 1") != std::string::npos);
}
