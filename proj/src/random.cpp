// Copyright 2026 The hahn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hahn/random.hpp"

namespace hahn {

Coeff RandomSeries::coeff() {
  if (ctx_.is_finite()) return ctx_.element(below(ctx_.order()));
  const long num = static_cast<long>(below(11)) - 5;
  const long den = static_cast<long>(below(3)) + 1;
  return Coeff(make_rat(num, den));
}

Coeff RandomSeries::nonzero_coeff() {
  while (true) {
    Coeff c = coeff();
    if (!ctx_.is_zero(c)) return c;
  }
}

Rat RandomSeries::exponent(const Rat& lo, const Rat& hi, unsigned max_den) {
  const long den = static_cast<long>(below(max_den)) + 1;
  const Rat a = lo * den, b = hi * den;
  Int first, last;
  mpz_cdiv_q(first.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  mpz_fdiv_q(last.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
  if (last < first) return lo;
  const Int span = last - first + 1;
  const Int k = first + Int(static_cast<unsigned long>(below(span.get_ui())));
  Rat r(k, Int(den));
  r.canonicalize();
  return r;
}

Series RandomSeries::series(const SeriesShape& shape) {
  const unsigned n = shape.min_terms + static_cast<unsigned>(below(shape.max_terms - shape.min_terms + 1));
  Series::Terms t;
  for (unsigned i = 0; i < n; ++i) t.insert_or_assign(exponent(shape.lo, shape.hi, shape.max_den), nonzero_coeff());
  if (shape.exact) return Series(ctx_, std::move(t));
  Rat top = t.empty() ? shape.lo : t.rbegin()->first;
  return Series(ctx_, std::move(t), Cap(Rat(top + make_rat(static_cast<long>(below(4)) + 1, 4))));
}

Series RandomSeries::monic_positive(unsigned max_terms, unsigned max_den) {
  Rat lead = exponent(Rat(0), Rat(2), max_den);
  while (lead <= 0) lead = exponent(Rat(0), Rat(2), max_den);
  Series::Terms t{{lead, ctx_.one()}};
  const unsigned extra = static_cast<unsigned>(below(max_terms));
  for (unsigned i = 0; i < extra; ++i) {
    const Rat e = exponent(lead, lead + 2, max_den);
    if (e > lead) t.insert_or_assign(e, nonzero_coeff());
  }
  return Series(ctx_, std::move(t));
}

Series RandomSeries::trace_zero(const SeriesShape& shape) {
  Series s = series(shape);
  auto terms = s.terms();
  terms.erase(Rat(0));
  return Series(ctx_, std::move(terms), s.cap());
}

AdditivePoly RandomSeries::additive(unsigned max_top) {
  const unsigned top = ctx_.is_finite() ? static_cast<unsigned>(below(max_top + 1)) : 0;
  std::vector<Coeff> c(top + 1);
  for (auto& v : c) v = coeff();
  c.back() = nonzero_coeff();
  return AdditivePoly(ctx_, std::move(c));
}

}  // namespace hahn
