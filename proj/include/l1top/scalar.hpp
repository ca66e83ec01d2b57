#ifndef L1TOP_SCALAR_HPP
#define L1TOP_SCALAR_HPP

#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace l1top
{

// Expression templates are off so the types behave as plain values inside
// Eigen expressions.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<BigInt>;
using IntVector = VectorX<BigInt>;
using RationalMatrix = MatrixX<Rational>;
using RationalVector = VectorX<Rational>;

inline BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

inline BigInt floor_of(const Rational& x)
{
    return floor_div(numerator(x), denominator(x));
}

inline BigInt ceil_of(const Rational& x)
{
    return -floor_div(-numerator(x), denominator(x));
}

inline bool is_integer(const Rational& x)
{
    return denominator(x) == 1;
}

/// Canonical text form: "p" for integers, "p/q" with q > 0 otherwise.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Accepts "p", "p/q", with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace l1top

#endif
