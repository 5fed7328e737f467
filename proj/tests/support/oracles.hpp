#pragma once

#include "postlat/base.hpp"
#include "postlat/boolean_function.hpp"
#include "postlat/clones.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace postlat::testing
{

/*! Separating degree by enumerating every subset of f^-1(c).

  inter[A] is the set of coordinates fixed to c across A, built from the
  subset without its lowest tuple.  The degree is one less than the
  smallest A with an empty intersection.
*/
inline separating_degree subset_oracle_degree( const boolean_function& f, bool c )
{
  const int n = f.arity();
  std::vector<std::uint32_t> s_sets;
  for ( std::uint64_t r = 0; r < f.num_rows(); ++r )
  {
    if ( f( r ) != c )
    {
      continue;
    }
    std::uint32_t s = 0;
    for ( int i = 0; i < n; ++i )
    {
      if ( boolean_function::input_bit( n, r, i ) == c )
      {
        s |= 1u << i;
      }
    }
    s_sets.push_back( s );
  }
  const std::size_t p = s_sets.size();
  const std::uint32_t all = n == 0 ? 0u : ( ( 1u << n ) - 1u );
  std::vector<std::uint32_t> inter( std::size_t{ 1 } << p );
  inter[0] = all;
  int smallest = -1;
  for ( std::uint64_t a = 1; a < inter.size(); ++a )
  {
    const int low = std::countr_zero( a );
    inter[a] = inter[a & ( a - 1 )] & s_sets[low];
    if ( inter[a] == 0u )
    {
      const int size = std::popcount( a );
      if ( smallest < 0 || size < smallest )
      {
        smallest = size;
      }
    }
  }
  return smallest < 0 ? separating_degree::infinite() : separating_degree::finite( smallest - 1 );
}

/*! All functions of arity k (k <= 4) satisfying the predicate of c. */
inline std::set<boolean_function> predicate_fragment( const clone_name& c, int k )
{
  std::set<boolean_function> out;
  const std::uint64_t count = std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << k );
  for ( std::uint64_t t = 0; t < count; ++t )
  {
    boolean_function f( k, t );
    if ( satisfies( c, f ) )
    {
      out.insert( f );
    }
  }
  return out;
}

/*! Random base of arity <= 3 whose members are drawn from a random catalog clone.

  Sampling inside a clone instead of uniformly keeps small clones in the
  mix; uniform tables would almost always generate BF.
*/
class base_sampler
{
public:
  explicit base_sampler( std::uint64_t seed ) : rng_( seed ), clones_( catalog( 3 ) ) {}

  base operator()()
  {
    const auto& c = clones_[pick( clones_.size() )];
    const int members = std::uniform_int_distribution<int>( 1, 3 )( rng_ );
    base b;
    for ( int i = 0; i < members; ++i )
    {
      const int arity = std::uniform_int_distribution<int>( 0, 3 )( rng_ );
      std::vector<boolean_function> fitting;
      const std::uint64_t count = std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << arity );
      for ( std::uint64_t t = 0; t < count; ++t )
      {
        boolean_function f( arity, t );
        if ( satisfies( c, f ) )
        {
          fitting.push_back( f );
        }
      }
      if ( fitting.empty() )
      {
        continue;
      }
      b.add_function_if_absent( { "f" + std::to_string( i ), fitting[pick( fitting.size() )] } );
    }
    if ( b.empty() )
    {
      b.add( { "id", boolean_function::projection( 1, 0 ) } );
    }
    return b;
  }

private:
  std::size_t pick( std::size_t n ) { return std::uniform_int_distribution<std::size_t>( 0, n - 1 )( rng_ ); }

  std::mt19937_64 rng_;
  std::vector<clone_name> clones_;
};

} // namespace postlat::testing
