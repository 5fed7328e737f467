#pragma once

/*!
  \file reductions.hpp
  \brief Equivalence-preserving translations of B-formulas into B'-formulas

  Every pipeline takes a formula over B and a second base B' with
  B contained in [B'], and returns an equivalent formula over B', possibly
  extended by one literal conjunction or disjunction.  Which pipeline
  applies depends on the position of [B] in the lattice:

    (a) [B] in V, (b) [B] in L, (c) [B] in E      normal forms, target B'
    (d) S00 <= [B] <= S0^2                          target B' + and
    (e) S10 <= [B] <= S1^2                          target B' + or
    (f) D2 <= [B] <= D                              target B' + and (or or)
    (g) M2 <= [B]                                   target B'

  The cases overlap (for instance I2 lies in V, L and E); `theorem_case`
  takes the first one that matches.
*/

#include "postlat/clones.hpp"
#include "postlat/formula.hpp"

#include <optional>
#include <string>
#include <vector>

namespace postlat
{

enum class extra_connective
{
  none,
  conjunction,
  disjunction
};

std::string_view to_string( extra_connective e );

struct certificate
{
  int depth_in = 0;
  int depth_out = 0;
  std::uint64_t size_in = 0;
  std::uint64_t size_out = 0;

  /*! \brief False when the joint variable count exceeded the verification cap. */
  bool verified = false;
  bool equivalent = false;
};

struct reduction_output
{
  formula result;
  base target;
  extra_connective extra = extra_connective::none;
  std::vector<std::string> fresh_vars;
  certificate check;

  /*! \brief Dispatcher case letter ('a'..'g'), or 0 when a pipeline was called directly. */
  char theorem_case = 0;

  /*! \brief Pipeline that produced the result, e.g. "S00", "S02", "D-direct". */
  std::string route;
};

struct normal_form
{
  bool c = false;

  /*! \brief Relevant propositions, in order of first occurrence. */
  std::vector<std::string> indices;
  formula result;
};

/*! \brief phi == c & x_I, for [B] inside E. */
normal_form normalize_E( const formula& phi, const base& b );

/*! \brief phi == c | x_I, for [B] inside V. */
normal_form normalize_V( const formula& phi, const base& b );

/*! \brief phi == c ^ x_I, for [B] inside L. */
normal_form normalize_L( const formula& phi, const base& b );

enum class constant_mode
{
  /*! Replace 1 by a disjunction and 0 by a conjunction of all propositions. */
  junction,
  /*! Replace 1 by t | !t and 0 by t & !t for a fresh proposition t. */
  tautology
};

struct elimination
{
  formula result;
  std::vector<std::string> fresh_vars;
};

/*! \brief Removes literal constants from a formula over B' + {0,1}.

  Constants in [B' + extra] are replaced by their representation; the
  others are handled according to `mode`.  `original` is the formula the
  input is equivalent to; it is used for the side conditions of the
  junction mode (phi(0..0) = 0 when 1 is missing, phi(1..1) = 1 when 0 is
  missing).
*/
elimination eliminate_constants( const formula& phi, const base& b_prime, constant_mode mode, extra_connective extra, const formula& original );

reduction_output reduce_S00( const formula& phi, const base& b, const base& b_prime );
reduction_output reduce_S10( const formula& phi, const base& b, const base& b_prime );
reduction_output reduce_S02( const formula& phi, const base& b, const base& b_prime );
reduction_output reduce_S12( const formula& phi, const base& b, const base& b_prime );

/*! \brief `want` must be conjunction or disjunction. */
reduction_output reduce_D( const formula& phi, const base& b, const base& b_prime, extra_connective want = extra_connective::conjunction );

reduction_output reduce_EVL( const formula& phi, const base& b, const base& b_prime );

/*! \brief Dispatcher case letter 'a'..'g' for the clone generated by B. */
char theorem_case( const base& b );

reduction_output theorem_reduce( const formula& phi, const base& b, const base& b_prime );

struct canonical_mapping
{
  clone_name clone;

  /*! \brief Canonical connective set for BF, M, L, N, E and V; empty otherwise. */
  std::optional<base> canonical;
  char theorem_case = 0;
  extra_connective extra = extra_connective::none;
};

canonical_mapping canonical_equivalent( const base& b );

/*! \brief Translates phi over B into the canonical set of [B]; requires a canonical set. */
reduction_output to_canonical( const formula& phi, const base& b );

/*! \brief Translates phi over the canonical set of [B] back into B. */
reduction_output from_canonical( const formula& phi, const base& b );

} // namespace postlat
