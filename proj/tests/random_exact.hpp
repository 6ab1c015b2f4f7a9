#pragma once
// Seeded random field elements and sparse polynomials for property tests.
#include <gmpxx.h>

#include <random>
#include <vector>

#include "saitoforge/cycnum.hpp"
#include "saitoforge/mpoly.hpp"

namespace oracle {

inline sf::CycNum random_cyc(std::mt19937& rng) {
  static const int orders[] = {1, 3, 4, 5, 8, 12};
  int n = orders[rng() % 6];
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<mpq_class> c(static_cast<std::size_t>(sf::euler_phi(n)));
  for (auto& q : c) {
    q = mpq_class(num(rng), den(rng));
    q.canonicalize();
  }
  return sf::CycNum::from_coeffs(n, c);
}

inline sf::MPoly random_poly(std::mt19937& rng, const sf::Ring& r, int terms, int maxdeg) {
  std::vector<sf::Term> ts;
  std::uniform_int_distribution<int> deg(0, maxdeg);
  for (int k = 0; k < terms; ++k) {
    sf::Monomial m;
    for (std::size_t i = 0; i < r->names.size(); ++i) m.e[i] = static_cast<std::uint16_t>(deg(rng));
    ts.push_back(sf::Term{m, 0, random_cyc(rng)});
  }
  return sf::MPoly::from_terms(r, ts);
}

}  // namespace oracle
