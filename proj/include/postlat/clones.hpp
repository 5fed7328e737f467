#pragma once

/*!
  \file clones.hpp
  \brief Post's lattice: clone catalog, identification and inclusion

  Every clone of Boolean functions is one of the catalog entries below.
  Each entry has a defining predicate (a conjunction of the properties in
  boolean_function.hpp) and a finite base.  The S-families carry a degree
  parameter n >= 2; the unparameterized S-clones are their limits.

  Identification works on predicates: [B] is the inclusion-minimal catalog
  clone whose predicate holds for every member of B.  Closure search is
  kept as an independent route in closure.hpp.
*/

#include "postlat/base.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace postlat
{

enum class clone_family
{
  BF,
  R0,
  R1,
  R2,
  M,
  M0,
  M1,
  M2,
  S0,
  S1,
  S02,
  S01,
  S00,
  S12,
  S11,
  S10,
  D,
  D1,
  D2,
  L,
  L0,
  L1,
  L2,
  L3,
  E,
  E0,
  E1,
  E2,
  V,
  V0,
  V1,
  V2,
  N,
  N2,
  I,
  I0,
  I1,
  I2
};

bool is_separating_family( clone_family family );

struct clone_name
{
  clone_family family = clone_family::BF;

  /*! \brief Degree n >= 2 for S-families; empty for the limit clone and for every other family. */
  std::optional<int> degree;

  friend bool operator==( const clone_name&, const clone_name& ) = default;
};

/*! \brief Largest degree parameter with a base inside the arity cap (t_n^{n+1} has arity n+1). */
inline constexpr int max_catalog_degree = 5;

/*! \brief Renders `S0^2`, `S00^3`, `S02`, `BF`, ... */
std::string to_string( const clone_name& c );
clone_name parse_clone_name( std::string_view text );

/*! \brief Catalog in table order; S-families are expanded for degrees 2..max_degree before their limit. */
std::vector<clone_name> catalog( int max_degree = max_catalog_degree );

bool satisfies( const clone_name& c, const boolean_function& f );
bool satisfies( const clone_name& c, const base& b );

/*! \brief Canonical base of a catalog clone. */
base base_of( const clone_name& c );

/*! \brief True iff inner is a subclone of outer. */
bool includes( const clone_name& outer, const clone_name& inner );

/*! \brief The dual clone (S0 <-> S1, E <-> V, M0 <-> M1, ...). */
clone_name dual( const clone_name& c );

struct clone_identification
{
  clone_name clone;
  separating_degree zero_degree = separating_degree::infinite(); // min over B, c = 0
  separating_degree one_degree = separating_degree::infinite();  // min over B, c = 1
};

clone_identification identify( const base& b );
clone_name clone_of( const base& b );

/*! \brief f belongs to [B]. */
bool member( const boolean_function& f, const base& b );

/*! \brief True iff the constant `value` belongs to [B] (as a unary constant function). */
bool contains_constant( const base& b, bool value );

enum class sat_complexity
{
  np_complete,
  logspace
};

std::string_view to_string( sat_complexity c );

/*! \brief Satisfiability of B-formulas is NP-complete iff x -/> y is in [B]. */
sat_complexity classify_sat( const base& b );

/*! \brief DOT digraph of the covering relation among catalog clones with degrees <= max_degree. */
std::string lattice_dot( int max_degree );

/*! \brief Covering pairs (lower, upper) among `catalog(max_degree)`. */
std::vector<std::pair<clone_name, clone_name>> covering_edges( int max_degree );

} // namespace postlat
