#include <stdexcept>

#include "cobord/tqft/evaluator.hpp"

namespace cobord::tqft {

Matrix zqs3_handle_power(surface::Genus k) {
  if (k == 0) throw std::invalid_argument("zqs3_handle_power: closed form holds for k >= 1");
  const long kk = static_cast<long>(k);
  const Rational two(2);
  const Rational p_odd = two.pow(2 * kk - 1);  // 2^(2k-1)
  const Rational p_even = two.pow(2 * kk);     // 2^(2k)
  const Rational half(1, 2);
  return Matrix::from_rows({{p_odd + 1, 0, p_even - 1},
                            {0, Rational(3) * p_odd, 0},
                            {p_odd - half, 0, p_even + half}})
      .scaled(Rational(3, 2).pow(kk - 1));
}

Rational closed_invariant(AlgebraTag tag, surface::Genus k) {
  const long kk = static_cast<long>(k);
  // At k = 0 both factors are fractional and multiply out to the sphere value 1.
  const Rational zqs3 = Rational(3, 2).pow(kk - 1) * (Rational(2).pow(2 * kk - 1) + Rational(1));
  switch (tag) {
    case AlgebraTag::QZ5: return Rational(5);
    case AlgebraTag::ZQS3: return zqs3;
    case AlgebraTag::A: return Rational(5) * zqs3;
  }
  throw std::invalid_argument("unknown algebra tag");
}

}  // namespace cobord::tqft
