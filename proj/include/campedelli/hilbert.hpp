#pragma once

// Hilbert series of monomial ideals, and the projective dimension and degree
// they encode.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "campedelli/monomial.hpp"

namespace campedelli {

struct HilbertData {
  /// N(t) with HS(t) = N(t) / (1 - t)^nvars, ascending coefficients.
  std::vector<mpz_class> numerator;
  int nvars = 0;
  /// Projective dimension; -1 for the empty scheme.
  int dimension = -1;
  /// Degree; 0 for the empty scheme.
  mpz_class degree = 0;

  std::string numerator_string() const;
};

/// N(t) for k[x_0..x_{n-1}] / <gens>, by pivot recursion with memoization.
std::vector<mpz_class> hilbert_numerator(const std::vector<Monomial>& gens, int nvars);

/// Dimension and degree of Proj(k[x] / <gens>).
HilbertData hilbert_data(const std::vector<Monomial>& gens, int nvars);

/// Coefficient of t^d in the Hilbert series.
mpz_class hilbert_function(const std::vector<mpz_class>& numerator, int nvars, int d);

/// Number of monomials outside <gens>; nullopt when infinite.
std::optional<std::size_t> count_standard_monomials(const std::vector<Monomial>& gens, int nvars);

/// Minimal generators of the monomial ideal, sorted canonically.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

}  // namespace campedelli
