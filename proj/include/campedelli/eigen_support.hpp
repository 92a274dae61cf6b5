#pragma once

// Lets the exact scalars serve as Eigen::Matrix coefficients.  Only storage,
// block access and products are used; all elimination is exact and lives in
// linalg.hpp.

#include <Eigen/Core>

#include "campedelli/fields.hpp"

namespace campedelli::detail {

template <class K>
struct ExactNumTraits {
  using Real = K;
  using NonInteger = K;
  using Nested = K;
  using Literal = K;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32
  };
  static K epsilon() { return K(0); }
  static K dummy_precision() { return K(0); }
  static K highest() { return K(0); }
  static K lowest() { return K(0); }
  static int digits10() { return 0; }
  static int max_digits10() { return 0; }
};

}  // namespace campedelli::detail

namespace Eigen {

template <>
struct NumTraits<campedelli::Rational> : campedelli::detail::ExactNumTraits<campedelli::Rational> {};
template <>
struct NumTraits<campedelli::PrimeFieldElement> : campedelli::detail::ExactNumTraits<campedelli::PrimeFieldElement> {};
template <>
struct NumTraits<campedelli::CyclotomicElement> : campedelli::detail::ExactNumTraits<campedelli::CyclotomicElement> {};

}  // namespace Eigen

namespace campedelli {

template <class K>
using Matrix = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vector = Eigen::Matrix<K, Eigen::Dynamic, 1>;

}  // namespace campedelli
