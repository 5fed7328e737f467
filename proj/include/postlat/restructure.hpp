#pragma once

/*!
  \file restructure.hpp
  \brief Logarithmic-depth rewriting of formulas

  All three variants pick a subformula psi, recurse on psi and on the two
  cofactors phi[psi/0] and phi[psi/1], and recombine:

  - full:  (phi0 & !psi) | (phi1 & psi)            over {and, or, not, 0, 1}
  - g:     g(phi0, phi1, psi) = phi0 | (phi1 & psi)  for monotone phi
  - h:     h(phi1, phi0, psi) = phi1 & (phi0 | psi)  for monotone phi

  The monotone variants rely on phi0 <= phi1.  Every cofactor is constant
  folded before recursing.  With k the largest connective arity and m the
  number of proposition occurrences, each level shrinks m by the factor
  k/(k+1), so the output depth is at most c * ceil(log_{(k+1)/k} m) + d0.
*/

#include "postlat/formula.hpp"

#include <optional>
#include <vector>

namespace postlat
{

struct split_choice
{
  /*! \brief Child indices from the root down to psi. */
  std::vector<std::size_t> path;
  formula subformula;
  std::uint64_t m = 0; // leaves of the whole formula
  std::uint64_t leaves = 0; // leaves of psi
  int k = 0;
};

/*! \brief Descends into the heaviest child (leftmost on ties) until leaves * (k+1) <= k * m. */
split_choice select_split( const formula& phi );

enum class restructure_mode
{
  full,
  g,
  h
};

std::string_view to_string( restructure_mode mode );
restructure_mode parse_restructure_mode( std::string_view text );

/*! \brief Monotone variant with combiner g; `combiner` may replace g by any ternary c with c(a, b, z) = a | (b & z) whenever a <= b. */
formula restructure_monotone_g( const formula& phi, const std::optional<connective>& combiner = std::nullopt );

/*! \brief Monotone variant with combiner h; `combiner` may replace h by any ternary c with c(b, a, z) = b & (a | z) whenever a <= b. */
formula restructure_monotone_h( const formula& phi, const std::optional<connective>& combiner = std::nullopt );

formula restructure_full( const formula& phi );

formula restructure( const formula& phi, restructure_mode mode );

/*! \brief Depth law depth <= a * log2(max(m, 1)) + b for a formula whose largest arity is k. */
struct depth_law
{
  double a = 0.0;
  double b = 0.0;

  double bound( std::uint64_t leaves ) const;
};

depth_law depth_law_for( restructure_mode mode, int k );

/*! \brief Constants C of the size laws: size_out <= C * size_in^2 (monotone) or C * size_in^3 (full). */
inline constexpr double monotone_size_constant = 4.0;
inline constexpr double full_size_constant = 4.0;

} // namespace postlat
