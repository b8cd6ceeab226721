#pragma once

#include <random>
#include <utility>
#include <vector>

#include "verdier/ring.hpp"

// Hand-rolled generators for the property tests. Everything is seeded
// explicitly so failures reproduce.

namespace vtest {

using namespace verdier;

// random normal-form polynomial in the ring
inline Polynomial random_polynomial(const Ring& ring, std::mt19937_64& rng,
                                    int max_terms = 6) {
  std::uniform_int_distribution<int> term_count(0, max_terms);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> exp(0, 2);
  const int n = ring.generator_count();
  std::vector<std::pair<Exponents, Rational>> terms;
  const int k = term_count(rng);
  for (int t = 0; t < k; ++t) {
    Exponents e(n, 0);
    for (int i = 0; i < n; ++i) e[i] = exp(rng);
    terms.emplace_back(std::move(e), Rational(num(rng), den(rng)));
  }
  return ring.make(terms);
}

// raw named terms with exponents large enough to force rewriting
inline TermList random_raw_terms(const Ring& ring, std::mt19937_64& rng,
                                 int max_terms = 6) {
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> exp(0, 5);
  TermList terms;
  const int k = term_count(rng);
  for (int t = 0; t < k; ++t) {
    NamedMonomial m;
    for (int i = 0; i < ring.generator_count(); ++i) {
      const int e = exp(rng);
      if (e > 0) m.emplace(ring.generator(i).name, e);
    }
    terms.emplace_back(std::move(m), Rational(num(rng)));
  }
  return terms;
}

// random nonzero degree-1 class with small nonnegative coefficients
inline Polynomial random_divisor_class(const Ring& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(0, 4);
  for (;;) {
    std::vector<std::pair<Exponents, Rational>> terms;
    for (int i = 0; i < ring.generator_count(); ++i) {
      if (ring.generator(i).degree != 1) continue;
      const int c = coeff(rng);
      if (c == 0) continue;
      Exponents e(ring.generator_count(), 0);
      e[i] = 1;
      terms.emplace_back(std::move(e), Rational(c));
    }
    Polynomial p = ring.make(terms);
    if (!p.is_zero()) return p;
  }
}

}  // namespace vtest
