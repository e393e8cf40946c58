#include "cobord/cli/golden.hpp"

#include <map>

#include "cobord/frobenius/algebra.hpp"
#include "cobord/surface/cobordism.hpp"
#include "cobord/tqft/evaluator.hpp"

namespace cobord::golden {

using exact::Matrix;
using exact::Rational;

namespace {

Matrix from_digit_rows(const std::vector<std::string>& rows) {
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] != '0') m.set(i, j, Rational(rows[i][j] - '0'));
    }
  }
  return m;
}

Matrix qz5_mul() {
  return from_digit_rows({
      "1000000001000100010001000",
      "0100010000000010001000100",
      "0010001000100000000100010",
      "0001000100010001000000001",
      "0000100010001000100010000",
  });
}

}  // namespace

std::vector<Fixture> fixtures() {
  const Rational third(1, 3), half(1, 2), two_thirds(2, 3);
  return {
      {"qz5.mul", qz5_mul()},
      {"qz5.unit", Matrix::from_rows({{1}, {0}, {0}, {0}, {0}})},
      {"qz5.comul", qz5_mul().transpose().scaled(Rational(1, 5))},
      {"qz5.counit", Matrix::from_rows({{5, 0, 0, 0, 0}})},
      {"zqs3.mul", Matrix::from_rows({{1, 0, 0, 0, 3, 0, 0, 0, 2},
                                      {0, 1, 0, 1, 0, 2, 0, 2, 0},
                                      {0, 0, 1, 0, 3, 0, 1, 0, 1}})},
      {"zqs3.unit", Matrix::from_rows({{1}, {0}, {0}})},
      {"zqs3.counit", Matrix::from_rows({{1, 0, 0}})},
      {"zqs3.pairing", Matrix::from_rows({{1, 0, 0, 0, 3, 0, 0, 0, 2}})},
      {"zqs3.copairing", Matrix::from_rows({{1, 0, 0, 0, third, 0, 0, 0, half}}).transpose()},
      {"zqs3.comul", Matrix::from_rows({{1, 0, 0, 0, third, 0, 0, 0, half},
                                        {0, 1, 0, 1, 0, 1, 0, 1, 0},
                                        {0, 0, 1, 0, two_thirds, 0, 1, 0, half}})
                         .transpose()},
      {"zqs3.handle", Matrix::from_rows({{3, 0, 3}, {0, 6, 0}, {Rational(3, 2), 0, Rational(9, 2)}})},
  };
}

std::vector<Comparison> run() {
  const auto qz5 = frobenius::qz5();
  const auto zqs3 = frobenius::zqs3();
  const auto pd = frobenius::pairing_copairing(zqs3);
  const tqft::Evaluator zqs3_eval(zqs3);
  const std::map<std::string, Matrix> actual{
      {"qz5.mul", qz5.mul},
      {"qz5.unit", qz5.unit},
      {"qz5.comul", qz5.comul},
      {"qz5.counit", qz5.counit},
      {"zqs3.mul", zqs3.mul},
      {"zqs3.unit", zqs3.unit},
      {"zqs3.counit", zqs3.counit},
      {"zqs3.pairing", pd.pairing},
      {"zqs3.copairing", pd.copairing},
      {"zqs3.comul", zqs3.comul},
      {"zqs3.handle", zqs3_eval.evaluate(surface::e_block(1, 1, 1)).matrix},
  };
  std::vector<Comparison> out;
  for (const auto& f : fixtures()) {
    Comparison c;
    c.name = f.name;
    c.expected = exact::to_json(f.expected).dump();
    c.actual = exact::to_json(actual.at(f.name)).dump();
    c.match = c.expected == c.actual;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cobord::golden
