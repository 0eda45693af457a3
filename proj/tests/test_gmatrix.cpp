#include <doctest.h>

#include <random>

#include "paracolor/gmatrix.hpp"
#include "test_util.hpp"

using namespace paracolor;
using testutil::thrown_kind;

namespace {

GradedMatrix unit4(size_t i, size_t j) {
  std::vector<Poly> e(16, Poly());
  e[i * 4 + j] = Poly(1);
  return make_graded(std::move(e), BasisGrading::standard4());
}

}  // namespace

TEST_CASE("standard basis grading") {
  const BasisGrading b = BasisGrading::standard4();
  REQUIRE(b.dim() == 4);
  CHECK(b.arity() == 2);
  CHECK(b.grades[0].str() == "00");
  CHECK(b.grades[1].str() == "10");
  CHECK(b.grades[2].str() == "01");
  CHECK(b.grades[3].str() == "11");
}

TEST_CASE("unit matrices land in the expected sectors") {
  auto sector = [](size_t i, size_t j) { return unit4(i, j).grade.str(); };
  // 1-based positions quoted in comments.
  CHECK(sector(0, 0) == "00");  // (1,1)
  CHECK(sector(1, 1) == "00");
  CHECK(sector(0, 1) == "10");  // (1,2)
  CHECK(sector(1, 0) == "10");
  CHECK(sector(2, 3) == "10");  // (3,4)
  CHECK(sector(3, 2) == "10");
  CHECK(sector(0, 2) == "01");  // (1,3)
  CHECK(sector(2, 0) == "01");
  CHECK(sector(1, 3) == "01");  // (2,4)
  CHECK(sector(3, 1) == "01");
  CHECK(sector(0, 3) == "11");  // (1,4)
  CHECK(sector(3, 0) == "11");
  CHECK(sector(1, 2) == "11");  // (2,3)
  CHECK(sector(2, 1) == "11");
}

TEST_CASE("grade inference rejects mixed sectors") {
  std::vector<Poly> e(16, Poly());
  e[0 * 4 + 1] = Poly(1);  // sector 10
  e[0 * 4 + 2] = Poly(1);  // sector 01
  CHECK(thrown_kind([&] {
          make_graded(std::move(e), BasisGrading::standard4());
        }) == ErrorKind::InhomogeneousMatrix);
  const GradedMatrix z =
      make_graded(std::vector<Poly>(16, Poly()), BasisGrading::standard4());
  CHECK(z.grade == GradeWord::zero(2));
  CHECK(z.is_zero());
}

TEST_CASE("two-particle basis sectors") {
  const BasisGrading b1 = BasisGrading::standard4();
  const BasisGrading b2 = BasisGrading::kron(b1, b1);
  REQUIRE(b2.dim() == 16);
  auto idx_of = [&](const char* g) {
    std::vector<size_t> out;
    for (size_t i = 0; i < 16; ++i)
      if (b2.grades[i] == GradeWord::parse(g)) out.push_back(i);
    return out;
  };
  CHECK(idx_of("00") == std::vector<size_t>{0, 5, 10, 15});
  CHECK(idx_of("10") == std::vector<size_t>{1, 4, 11, 14});
  CHECK(idx_of("01") == std::vector<size_t>{2, 7, 8, 13});
  CHECK(idx_of("11") == std::vector<size_t>{3, 6, 9, 12});
}

TEST_CASE("arithmetic guards") {
  const GradedMatrix a = unit4(0, 1);
  const GradedMatrix b = unit4(0, 2);
  CHECK(thrown_kind([&] { mat_add(a, b); }) == ErrorKind::GradeMismatch);
  CHECK(mat_add(a, GradedMatrix::zero(4, GradeWord::zero(2))) == a);
  CHECK(mat_sub(a, a).is_zero());
  const BasisGrading basis = BasisGrading::standard4();
  // E(1,2) E(2,4) = E(1,4), sectors 10 * 01 = 11.
  const GradedMatrix p = mat_multiply(a, unit4(1, 3), basis);
  CHECK(p == unit4(0, 3));
  CHECK(p.grade.str() == "11");
  CHECK(mat_multiply(a, a, basis).is_zero());
  CHECK(dagger(a) == unit4(1, 0));
}

TEST_CASE("graded tensor product placement and sign") {
  const BasisGrading b1 = BasisGrading::standard4();
  const BilinearForm ls = BilinearForm::preset("LS");
  const GradedMatrix id4 = GradedMatrix::identity(4, 2);
  CHECK(graded_kron(id4, id4, ls, b1, b1) == GradedMatrix::identity(16, 2));

  // Column grade 00: no crossing sign.
  const GradedMatrix x = unit4(2, 0);  // sector 01
  const GradedMatrix y = unit4(1, 0);  // sector 10
  GradedMatrix expect = GradedMatrix::zero(16, GradeWord::parse("11"));
  expect.at(2 * 4 + 1, 0) = Poly(1);
  CHECK(graded_kron(x, y, ls, b1, b1) == expect);

  // Column grade 01 meets row grade 10: sign -<10,01>.
  const GradedMatrix xs = unit4(0, 2);  // sector 01
  GradedMatrix expect2 = GradedMatrix::zero(16, GradeWord::parse("11"));
  expect2.at(0 * 4 + 1, 2 * 4 + 0) = Poly(-1);
  CHECK(graded_kron(xs, y, ls, b1, b1) == expect2);
  // The plain-statistics form crosses without a sign.
  GradedMatrix expect3 = expect2;
  expect3.at(0 * 4 + 1, 2 * 4 + 0) = Poly(1);
  CHECK(graded_kron(xs, y, BilinearForm::preset("LA"), b1, b1) == expect3);
}

TEST_CASE("tensor product respects products") {
  const BasisGrading b1 = BasisGrading::standard4();
  const BasisGrading b2 = BasisGrading::kron(b1, b1);
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<size_t> pick(0, 3);
  for (const std::string& preset : BilinearForm::preset_names()) {
    const BilinearForm form = BilinearForm::preset(preset);
    for (int rep = 0; rep < 40; ++rep) {
      const GradedMatrix x = unit4(pick(rng), pick(rng));
      const GradedMatrix y = unit4(pick(rng), pick(rng));
      const GradedMatrix u = unit4(pick(rng), pick(rng));
      const GradedMatrix v = unit4(pick(rng), pick(rng));
      const GradedMatrix lhs = mat_multiply(graded_kron(x, y, form, b1, b1),
                                            graded_kron(u, v, form, b1, b1),
                                            b2);
      const int sign = form.koszul(y.grade, u.grade);
      GradedMatrix rhs = graded_kron(mat_multiply(x, u, b1),
                                     mat_multiply(y, v, b1), form, b1, b1);
      if (sign < 0) rhs = mat_scale(Poly(-1), rhs);
      CAPTURE(preset);
      CAPTURE(rep);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("tensor product is associative") {
  const BasisGrading b1 = BasisGrading::standard4();
  const BasisGrading b2 = BasisGrading::kron(b1, b1);
  const BilinearForm cls = BilinearForm::preset("CLS");
  std::mt19937 rng(7);
  std::uniform_int_distribution<size_t> pick(0, 3);
  for (int rep = 0; rep < 20; ++rep) {
    const GradedMatrix x = unit4(pick(rng), pick(rng));
    const GradedMatrix y = unit4(pick(rng), pick(rng));
    const GradedMatrix z = unit4(pick(rng), pick(rng));
    const GradedMatrix left =
        graded_kron(graded_kron(x, y, cls, b1, b1), z, cls, b2, b1);
    const GradedMatrix right =
        graded_kron(x, graded_kron(y, z, cls, b1, b1), cls, b1, b2);
    CHECK(left == right);
  }
}

TEST_CASE("numeric evaluation flags the degenerate coupling range") {
  std::vector<Poly> e(16, Poly());
  const Poly l = Poly::lambda();
  e[0 * 4 + 0] = Poly(0);
  e[1 * 4 + 1] = l;
  e[2 * 4 + 2] = Poly(1);
  e[3 * 4 + 3] = l + Poly(1);
  const GradedMatrix h = make_graded(std::move(e), BasisGrading::standard4());
  const EvalResult at3 = evaluate(h, Rational(3));
  CHECK(!at3.out_of_regime);
  CHECK(at3.a[1 * 4 + 1] == Rational(3));
  CHECK(at3.a[2 * 4 + 2] == Rational(1));
  CHECK(at3.a[3 * 4 + 3] == Rational(4));
  CHECK(evaluate(h, Rational(1)).out_of_regime);
  CHECK(evaluate(h, Rational(1, 2)).out_of_regime);
  CHECK(!evaluate(h, Rational(5, 4)).out_of_regime);
}

TEST_CASE("collision couplings") {
  const Poly l = Poly::lambda();
  const std::vector<Poly> energies = {
      Poly(0),          Poly(1),          Poly(2),
      l,                l + Poly(1),      l + Poly(2),
      Poly(2) * l,      Poly(2) * l + Poly(1), Poly(2) * l + Poly(2)};
  const std::set<Rational> expect = {Rational(-2), Rational(-1),
                                     Rational(-1, 2), Rational(0),
                                     Rational(1, 2), Rational(1), Rational(2)};
  CHECK(collision_set(energies) == expect);
  CHECK(collision_set({l, Poly(1)}) == std::set<Rational>{Rational(1)});
  CHECK(collision_set({l, l + Poly(1)}).empty());
  CHECK(thrown_kind([&] { collision_set({l * l}); }) ==
        ErrorKind::NonLinearEnergy);
}

TEST_CASE("matrix table round trip") {
  std::vector<Poly> e(16, Poly());
  e[1 * 4 + 0] = Poly::lambda() + Poly(1);
  e[3 * 4 + 2] = Poly(-2);
  const GradedMatrix m = make_graded(e, BasisGrading::standard4());
  const std::vector<Poly> back = parse_matrix_entries(matrix_str(m), 4);
  CHECK(back == m.a);
  CHECK(thrown_kind([] { parse_matrix_entries("1 0\n0 1\n", 4); }) ==
        ErrorKind::ParseError);
}
