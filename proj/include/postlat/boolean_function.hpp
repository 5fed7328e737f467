#pragma once

/*!
  \file boolean_function.hpp
  \brief Finite Boolean functions stored as packed truth tables

  A function of arity n (0 <= n <= 6) is a 2^n-bit table.  The row of the
  tuple (a1,...,an) has index sum a_i * 2^(n-i), so a1 is the high bit and
  row 0 is the all-zeros tuple.  The textual form is the bitstring whose
  character p is the value at row p, e.g. conjunction is `0001`.
*/

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace postlat
{

class boolean_function
{
public:
  static constexpr int max_arity = 6;

  /*! \brief The nullary constant 0. */
  boolean_function() = default;

  /*! \brief Builds a function from its packed table; bits above 2^arity must be zero. */
  boolean_function( int arity, std::uint64_t table );

  static boolean_function from_bits( std::string_view bits );
  static boolean_function constant( int arity, bool value );

  /*! \brief Projection onto variable `index` (0-based, so index 0 is a1). */
  static boolean_function projection( int arity, int index );

  int arity() const noexcept { return arity_; }
  std::uint64_t table() const noexcept { return table_; }
  std::uint64_t num_rows() const noexcept { return std::uint64_t{ 1 } << arity_; }
  std::uint64_t mask() const noexcept { return table_mask( arity_ ); }

  bool operator()( std::uint64_t row ) const noexcept { return ( table_ >> row ) & 1u; }
  bool evaluate( std::span<const bool> inputs ) const;

  /*! \brief Value of input a_{index+1} in the given row. */
  static bool input_bit( int arity, std::uint64_t row, int index ) noexcept
  {
    return ( row >> ( arity - 1 - index ) ) & 1u;
  }

  bool is_constant() const noexcept { return table_ == 0u || table_ == mask(); }

  std::string bits() const;

  static std::uint64_t table_mask( int arity ) noexcept
  {
    return arity >= 6 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << arity ) ) - 1u );
  }

  friend bool operator==( const boolean_function&, const boolean_function& ) = default;
  friend auto operator<=>( const boolean_function&, const boolean_function& ) = default;

private:
  int arity_ = 0;
  std::uint64_t table_ = 0u;
};

/*! \brief Largest m such that f is c-separating of degree m.

  `infinite()` means the whole preimage f^-1(c) is c-separating; this is
  also the case when the preimage is empty.  A value of 0 means f is not
  c-separating even of degree 1 (some tuple of f^-1(c) has no coordinate
  equal to c).
*/
class separating_degree
{
public:
  static separating_degree infinite() { return separating_degree{}; }
  static separating_degree finite( int value ) { return separating_degree{ value }; }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  int value() const { return *value_; }

  /*! \brief True iff f is c-separating of degree `m` (every degree m' <= the stored one). */
  bool at_least( int m ) const noexcept { return !value_ || *value_ >= m; }

  std::string to_string() const;

  friend bool operator==( const separating_degree&, const separating_degree& ) = default;

private:
  separating_degree() = default;
  explicit separating_degree( int v ) : value_( v ) {}

  std::optional<int> value_;
};

/*! \brief Returns the dual function not f(not x1, ..., not xn). */
boolean_function dual( const boolean_function& f );

bool is_reproducing( const boolean_function& f, bool c );
bool is_monotone( const boolean_function& f );
bool is_self_dual( const boolean_function& f );
bool is_affine( const boolean_function& f );
bool is_essentially_unary( const boolean_function& f );

/*! \brief f is a constant or a conjunction of a nonempty set of variables. */
bool is_conjunction_or_constant( const boolean_function& f );

/*! \brief f is a constant or a disjunction of a nonempty set of variables. */
bool is_disjunction_or_constant( const boolean_function& f );

/*! \brief f is a constant or a projection. */
bool is_projection_or_constant( const boolean_function& f );

/*! \brief True iff the value of f can change when input `index` flips. */
bool depends_on( const boolean_function& f, int index );

separating_degree compute_separating_degree( const boolean_function& f, bool c );

/*! \brief The (n+1)-ary threshold "at least n of n+1 inputs are 1". */
boolean_function threshold( int n );

/*! \brief Pointwise composition f(g1(x), ..., gm(x)); all gs share one arity. */
boolean_function apply( const boolean_function& f, std::span<const boolean_function> gs );

/*! \brief Arity-0 functions become the arity-1 constant; others are returned as is. */
boolean_function lift_nullary( const boolean_function& f );

/*! \brief Restricts one input to a constant; the result has arity n-1. */
boolean_function cofactor( const boolean_function& f, int index, bool value );

/*! \brief Bit-parallel composition on raw tables of a common arity.

  `args[i]` is the packed table of the i-th argument; the result is the
  packed table of f applied pointwise.  `mask` selects the valid rows.
*/
std::uint64_t compose_tables( const boolean_function& f, std::span<const std::uint64_t> args, std::uint64_t mask );

} // namespace postlat
