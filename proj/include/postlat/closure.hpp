#pragma once

/*!
  \file closure.hpp
  \brief Bounded-arity closure of a base with witness formulas

  The k-ary part of [B] is enumerated breadth-first by witness size:
  projections and nullary members of B are the size-1 seeds, and a
  composition f(g1, ..., gm) has size 1 + sum of the argument sizes.
  Every function therefore receives a smallest witness.  Ties are broken
  by the declaration order of f in B and then by the discovery order of
  the arguments.
*/

#include "postlat/base.hpp"
#include "postlat/formula.hpp"

#include <optional>
#include <vector>

namespace postlat
{

inline constexpr int max_closure_arity = 4;

class closure_set
{
public:
  int arity() const noexcept { return arity_; }

  /*! \brief Functions in discovery order (non-decreasing witness size). */
  const std::vector<boolean_function>& functions() const noexcept { return functions_; }
  const std::vector<formula>& witnesses() const noexcept { return witnesses_; }

  std::size_t size() const noexcept { return functions_.size(); }
  bool contains( const boolean_function& f ) const;

  /*! \brief Witness over x1..xk, if f is in the set. */
  std::optional<formula> witness( const boolean_function& f ) const;

private:
  friend closure_set closure( const base&, int );
  friend std::optional<formula> represent( const boolean_function&, const base& );

  int arity_ = 0;
  std::vector<boolean_function> functions_;
  std::vector<formula> witnesses_;
};

/*! \brief The k-ary part of [B] (k <= 4). */
closure_set closure( const base& b, int k = 3 );

/*! \brief Smallest B-formula over x1..xn equivalent to f, or nothing if f is not in [B].

  Nullary targets are lifted to unary constants first, so the result may
  mention x1 when B has no nullary member with the requested value.
*/
std::optional<formula> represent( const boolean_function& f, const base& b );

/*! \brief Variable name of the i-th input (0-based) used by witnesses. */
std::string witness_variable( int index );

} // namespace postlat
