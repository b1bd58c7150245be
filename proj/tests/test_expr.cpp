#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ga/expr.hpp"
#include "ga/session.hpp"
#include "ga/text.hpp"
#include "ga/transforms.hpp"
#include "support.hpp"

using namespace ga;

namespace {

const Signature e3 = make_algebra(3, 0);

std::string tree(const char *src, const Signature &sig = e3) {
  return expr::to_sexpr(expr::parse(src, sig));
}

std::string eval(const char *src, const Signature &sig = e3,
                 const expr::Environment &env = {}) {
  return format(expr::evaluate(expr::parse(src, sig), env, sig));
}

Errc parse_error(const char *src, const Signature &sig = e3) {
  try {
    expr::parse(src, sig);
  } catch (const Error &err) {
    return err.code();
  }
  FAIL("expected a parse error for ", src);
  return Errc::invalid_argument;
}

Errc eval_error(const char *src, const Signature &sig = e3) {
  try {
    eval(src, sig);
  } catch (const Error &err) {
    return err.code();
  }
  FAIL("expected an evaluation error for ", src);
  return Errc::invalid_argument;
}

} // namespace

TEST_CASE("parse trees") {
  CHECK(tree("e1 ^ e2") == "(^ e1 e2)");
  CHECK(tree("A <| B ^ C * D") == "(* (<| A (^ B C)) D)");
  CHECK(tree("A <| B ^ C D") == "(* (<| A (^ B C)) D)");
  CHECK(parse_error("e4") == Errc::unknown_basis_index);
  CHECK(tree("e12") == "e1_2");
}

TEST_CASE("precedence table") {
  // Operators loosest first; each pair in both orders.
  const std::vector<std::string> ops{"+", "|", "*", "<|", "^"};
  auto sym = [](const std::string &op) { return op; };
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = 0; j < ops.size(); ++j) {
      const std::string src = "a " + ops[i] + " b " + ops[j] + " c";
      const std::string got = tree(src.c_str());
      std::string expected;
      if (i >= j) // left associative, or the first binds tighter
        expected = "(" + sym(ops[j]) + " (" + sym(ops[i]) + " a b) c)";
      else
        expected = "(" + sym(ops[i]) + " a (" + sym(ops[j]) + " b c))";
      INFO(src);
      CHECK(got == expected);
    }
  CHECK(tree("a - b - c") == "(- (- a b) c)");
  CHECK(tree("a |> b <| c") == "(<| (|> a b) c)");
  CHECK(tree("a + b |> c") == "(+ a (|> b c))");
  CHECK(tree("-a ^ b") == "(^ (neg a) b)");
  CHECK(tree("~a b") == "(* (rev a) b)");
  CHECK(tree("a ~b") == "(* a (rev b))");
  CHECK(tree("!a ^ ~b") == "(^ (ginv a) (rev b))");
  CHECK(tree("2 e1") == "(* 2 e1)");
  CHECK(tree("(a + b) c") == "(* (+ a b) c)");
  CHECK(tree("a - -b") == "(- a (neg b))");
  CHECK(tree("grade(a, -1)") == "(grade a -1)");
  CHECK(tree("rev(a b)") == "(rev (* a b))");
}

TEST_CASE("syntax errors carry offsets") {
  try {
    expr::parse("e1 + ) e2", e3);
    FAIL("no error");
  } catch (const expr::ExprError &err) {
    CHECK(err.code() == Errc::syntax_error);
    CHECK(err.offset() == 5);
  }
  CHECK(parse_error("") == Errc::syntax_error);
  CHECK(parse_error("e1 +") == Errc::syntax_error);
  CHECK(parse_error("(e1") == Errc::syntax_error);
  CHECK(parse_error("e1 < e2") == Errc::syntax_error);
  CHECK(parse_error("e1 $ e2") == Errc::syntax_error);
  CHECK(parse_error("grade(e1, 1.5)") == Errc::syntax_error);
  CHECK(parse_error("grade(e1, a)") == Errc::syntax_error);
  CHECK(parse_error("proj(e1)") == Errc::syntax_error);
  CHECK(parse_error("rev") == Errc::syntax_error);
  CHECK(parse_error("e1_4") == Errc::unknown_basis_index);
}

TEST_CASE("evaluation examples") {
  CHECK(eval("dual(e1 ^ e2)") == "1*e3");
  CHECK(eval("rev(e1 e2 e3)") == "-1*e123");
  CHECK(eval("(e1 e2)|(e1 e2)") == "1");
  CHECK(eval("e2 e1") == "-1*e12");
  CHECK(eval("e21") == "-1*e12");
  CHECK(eval("e11") == "1");
  CHECK(eval("2*e1 + 3 e2 - e3") == "2*e1 + 3*e2 - 1*e3");
  CHECK(eval("e1 <| e12") == "1*e2");
  CHECK(eval("e12 |> e2") == "1*e1");
  CHECK(eval("~e12 + !e1") == "-1*e1 - 1*e12");
  CHECK(eval("conj(1 + e1 + e12 + e123)") == "1 - 1*e1 - 1*e12 + 1*e123");
  CHECK(eval("ginv(e1 + e12)") == "-1*e1 + 1*e12");
  CHECK(eval("idual(dual(e1))") == "1*e1");
  CHECK(eval("inv(2 e12)") == "-0.5*e12");
  CHECK(eval("grade(3 + 2 e1 + e12, 1)") == "2*e1");
  CHECK(eval("grade(e1, -2)") == "0");
  CHECK(eval("norm2(e1 + e2)") == "2");
  CHECK(eval("comm(e12, e1)") == "-1*e2");
  CHECK(eval("proj(e1 + e3, e12)") == "1*e1");
  CHECK(eval("rej(e1 + e3, e1)") == "1*e3");
  CHECK(eval("reflect(e3, e1)") == "1*e3");
  CHECK(eval("versor(e1, e12)") == "-1*e1");
  CHECK(eval("rotor(e1, e1)") == "1");
  CHECK(eval("even(1 + e1 + e12)") == "1 + 1*e12");
  CHECK(eval("odd(1 + e1 + e12)") == "1*e1");
  CHECK(eval("det(2 e1, e2, e1 + e3)") == "2");
  CHECK(eval("exp(0 e12)") == "1");
  CHECK(eval("I") == "1*e123");
  CHECK(eval("I I") == "-1");
  CHECK(eval("1.5e1 e1") == "15*e1");
  // exp of a bivector and expb agree with the closed form.
  const Multivector r = expr::evaluate(expr::parse("exp(0.25 e12)", e3), {}, e3);
  CHECK(approx_equal(r, exp_bivector(parse_multivector("1*e12", e3), -0.5),
                     1e-15));
  const Multivector rb =
      expr::evaluate(expr::parse("expb(e12, 1.5)", e3), {}, e3);
  CHECK(approx_equal(rb, exp_bivector(parse_multivector("1*e12", e3), 1.5),
                     1e-15));
  // exp of a non-bivector goes through the series.
  const Multivector ex = expr::evaluate(expr::parse("exp(1)", e3), {}, e3);
  CHECK(ex.scalar_part() == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
}

TEST_CASE("evaluation errors") {
  CHECK(eval_error("x + 1") == Errc::unbound_name);
  CHECK(eval_error("inv(1 + e1)") == Errc::not_a_versor);
  const Signature sta = make_algebra(1, 3);
  CHECK(eval_error("inv(e1 + e4)", sta) == Errc::null_versor);
  CHECK(eval_error("proj(e1, 1 + e2)") == Errc::non_blade);
  CHECK(eval_error("expb(e1, 1)") == Errc::non_bivector);
  CHECK(eval_error("expb(e12, e1)") == Errc::invalid_argument);
  CHECK(eval_error("det(e1, e2)") == Errc::invalid_argument);
  CHECK(eval_error("det(e1, e2, e12)") == Errc::non_vector);
  CHECK(eval_error("dual(1)", make_algebra(0, 0)) == Errc::no_volume_element);
  try {
    eval("e1 + inv(0 e1)");
    FAIL("no error");
  } catch (const expr::ExprError &err) {
    CHECK(err.code() == Errc::null_versor);
    CHECK(err.offset() == 5);
  }
}

TEST_CASE("environment lookups") {
  expr::Environment env;
  env.emplace("A", parse_multivector("1 + 1*e1", e3));
  env.emplace("I", parse_multivector("2", e3));
  CHECK(eval("A A", e3, env) == "2 + 2*e1");
  CHECK(eval("I", e3, env) == "2");
  CHECK(expr::is_reserved_name("e12"));
  CHECK(expr::is_reserved_name("proj"));
  CHECK(!expr::is_reserved_name("I"));
  CHECK(!expr::is_reserved_name("energy"));
}

TEST_CASE("format then parse reproduces values") {
  test::Rng rng(61);
  for (int n = 1; n <= 6; ++n) {
    const Signature sig = make_algebra(n - n / 2, n / 2);
    for (int i = 0; i < 50; ++i) {
      const Multivector a = test::random_multivector(rng, sig, 0.5);
      const std::string text = format(a);
      CHECK(expr::evaluate(expr::parse(text, sig), {}, sig) == a);
    }
  }
  // Two-digit indices.
  const Signature big = make_algebra(6, 6);
  const Multivector b = test::random_multivector(rng, big, 0.01);
  CHECK(expr::evaluate(expr::parse(format(b), big), {}, big) == b);
}

TEST_CASE("session commands") {
  Session s(e3);
  CHECK(s.execute("").output.empty());
  CHECK(s.execute("   # comment").output.empty());
  auto out = s.execute(":let R = rotor(e1, (e1 + e2))");
  CHECK(out.status == 0);
  CHECK(out.output.rfind("R = ", 0) == 0);
  out = s.execute("versor(e1, R)");
  CHECK(out.status == 0);
  // Twice the angle from e1 + e2 to e1: a quarter turn clockwise.
  CHECK(out.output == "-1*e2");
  CHECK(s.execute(":let e1 = 3").status == 1);
  CHECK(s.execute(":let proj = 3").status == 1);
  CHECK(s.execute(":let 9x = 3").status == 1);
  CHECK(s.execute(":let x 3").status == 1);
  CHECK(s.execute("1 +").status == 1);
  CHECK(s.execute("y").status == 2);
  CHECK(s.execute(":bogus").status == 1);
  out = s.execute(":algebra 1,3");
  CHECK(out.output == "algebra 1,3");
  CHECK(s.algebra().q() == 3);
  CHECK(s.environment().empty());
  CHECK(s.execute("R").status == 2);
  CHECK(s.execute("norm2(e1 + e4)").output == "0");
  CHECK(s.execute(":algebra x").status == 1);
  CHECK(s.execute(":algebra 20,0").status == 1);
  CHECK(s.execute(":quit").quit);

  // Same input, same transcript.
  auto run = [] {
    Session t(e3);
    std::string log;
    for (const char *line : {":let a = e1 + 2 e2", "a a", "dual(a)", "x", "a ^ e3"})
      log += t.execute(line).output + "\n";
    return log;
  };
  CHECK(run() == run());
}
