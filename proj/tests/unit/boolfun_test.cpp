#include "postlat/boolean_function.hpp"
#include "postlat/error.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <array>

using namespace postlat;

namespace
{

boolean_function fn( const char* bits ) { return boolean_function::from_bits( bits ); }

const auto conj = fn( "0001" );
const auto disj = fn( "0111" );
const auto neg = fn( "10" );
const auto maj3 = fn( "00010111" );

} // namespace

TEST_SUITE( "boolfun" )
{

TEST_CASE( "table layout" )
{
  CHECK( conj.arity() == 2 );
  CHECK( conj.table() == 0b1000u );
  CHECK( conj.bits() == "0001" );
  CHECK( boolean_function::projection( 2, 0 ).bits() == "0011" );
  CHECK( boolean_function::projection( 2, 1 ).bits() == "0101" );
  CHECK( boolean_function::constant( 0, true ).bits() == "1" );
  CHECK_THROWS_AS( fn( "010" ), error );
  CHECK_THROWS_AS( boolean_function( 7, 0 ), error );
  CHECK( boolean_function( 6, ~std::uint64_t{ 0 } ).is_constant() );

  const std::array<bool, 3> in{ true, false, true };
  CHECK( maj3.evaluate( in ) );
}

TEST_CASE( "dual" )
{
  CHECK( dual( conj ) == disj );
  CHECK( dual( maj3 ) == maj3 );
  CHECK( dual( boolean_function::constant( 0, true ) ) == boolean_function::constant( 0, false ) );
}

TEST_CASE( "reproducing" )
{
  CHECK( is_reproducing( conj, false ) );
  CHECK( is_reproducing( conj, true ) );
  CHECK( is_reproducing( fn( "0110" ), false ) );
  CHECK( !is_reproducing( fn( "0110" ), true ) );
  CHECK( is_reproducing( fn( "1001" ), true ) );
  CHECK( !is_reproducing( fn( "1001" ), false ) );
}

TEST_CASE( "monotone, self-dual, affine, unary" )
{
  CHECK( is_monotone( conj ) );
  CHECK( is_monotone( disj ) );
  CHECK( !is_monotone( neg ) );
  CHECK( is_monotone( maj3 ) );

  CHECK( is_self_dual( neg ) );
  CHECK( is_self_dual( maj3 ) );
  CHECK( !is_self_dual( conj ) );

  CHECK( is_affine( fn( "0110" ) ) );
  CHECK( is_affine( fn( "1001" ) ) );
  CHECK( !is_affine( conj ) );

  CHECK( is_essentially_unary( neg ) );
  CHECK( is_essentially_unary( boolean_function::projection( 3, 2 ) ) );
  CHECK( !is_essentially_unary( conj ) );
}

TEST_CASE( "junction predicates" )
{
  CHECK( is_conjunction_or_constant( conj ) );
  CHECK( is_conjunction_or_constant( boolean_function::constant( 2, true ) ) );
  CHECK( is_conjunction_or_constant( boolean_function::projection( 2, 1 ) ) );
  CHECK( !is_conjunction_or_constant( disj ) );
  CHECK( is_disjunction_or_constant( disj ) );
  CHECK( !is_disjunction_or_constant( maj3 ) );
  CHECK( is_projection_or_constant( boolean_function::projection( 3, 0 ) ) );
  CHECK( !is_projection_or_constant( neg ) );
}

TEST_CASE( "separating degree examples" )
{
  CHECK( compute_separating_degree( fn( "1101" ), false ).is_infinite() );
  CHECK( compute_separating_degree( maj3, true ) == separating_degree::finite( 2 ) );
  CHECK( compute_separating_degree( boolean_function::constant( 2, false ), true ).is_infinite() );

  // 00 lies in the preimage of 1 and has no coordinate equal to 1
  CHECK( compute_separating_degree( fn( "1101" ), true ) == separating_degree::finite( 0 ) );
  CHECK( separating_degree::finite( 2 ).at_least( 1 ) );
  CHECK( !separating_degree::finite( 2 ).at_least( 3 ) );
  CHECK( separating_degree::infinite().to_string() == "inf" );
}

TEST_CASE( "separating degree matches the subset oracle on arity <= 3" )
{
  for ( int n = 0; n <= 3; ++n )
  {
    for ( std::uint64_t t = 0; t < ( std::uint64_t{ 1 } << ( 1u << n ) ); ++t )
    {
      const boolean_function f( n, t );
      for ( bool c : { false, true } )
      {
        const auto d = compute_separating_degree( f, c );
        CAPTURE( f.bits() );
        CAPTURE( c );
        CHECK( d == testing::subset_oracle_degree( f, c ) );
        CHECK( ( d.is_infinite() || d.value() <= std::max( n - 1, 0 ) ) );
        // duality swaps the two constants
        CHECK( compute_separating_degree( dual( f ), !c ) == d );
      }
    }
  }
}

TEST_CASE( "degree is downward closed" )
{
  // for every m <= degree, all m-subsets of the preimage share a c-coordinate
  for ( std::uint64_t t = 0; t < 256; ++t )
  {
    const boolean_function f( 3, t );
    const auto d = compute_separating_degree( f, true );
    std::vector<std::uint32_t> s;
    for ( std::uint64_t r = 0; r < 8; ++r )
    {
      if ( f( r ) )
      {
        s.push_back( static_cast<std::uint32_t>( r ) );
      }
    }
    for ( std::uint64_t a = 1; a < ( std::uint64_t{ 1 } << s.size() ); ++a )
    {
      std::uint32_t inter = 7;
      for ( std::size_t i = 0; i < s.size(); ++i )
      {
        if ( ( a >> i ) & 1u )
        {
          inter &= s[i];
        }
      }
      if ( d.at_least( std::popcount( a ) ) )
      {
        CHECK( inter != 0u );
      }
    }
  }
}

TEST_CASE( "dual preserves monotone and affine" )
{
  for ( std::uint64_t t = 0; t < 256; ++t )
  {
    const boolean_function f( 3, t );
    CHECK( dual( dual( f ) ) == f );
    CHECK( is_monotone( f ) == is_monotone( dual( f ) ) );
    CHECK( is_affine( f ) == is_affine( dual( f ) ) );
  }
}

TEST_CASE( "thresholds" )
{
  CHECK( threshold( 2 ) == maj3 );
  CHECK( threshold( 1 ) == disj );
  CHECK( dual( threshold( 2 ) ) == maj3 );
  CHECK( threshold( 3 ).bits() == "0000000100010111" );
  CHECK( dual( threshold( 3 ) ).bits() == "0001011101111111" );
  CHECK_THROWS_AS( threshold( 6 ), error );

  for ( int n = 1; n <= 3; ++n )
  {
    const auto t = threshold( n );
    CAPTURE( n );
    CHECK( is_monotone( t ) );
    CHECK( is_reproducing( t, true ) );
    CHECK( compute_separating_degree( t, true ) == separating_degree::finite( n ) );
    CHECK( compute_separating_degree( t, true ) == testing::subset_oracle_degree( t, true ) );
  }
  // t_2 and t_3 are not 0-separating
  CHECK( !compute_separating_degree( threshold( 2 ), false ).is_infinite() );
  CHECK( !compute_separating_degree( threshold( 3 ), false ).is_infinite() );
}

TEST_CASE( "apply and cofactor" )
{
  const auto p1 = boolean_function::projection( 2, 0 );
  const std::array<boolean_function, 2> same{ p1, p1 };
  CHECK( postlat::apply( disj, same ) == p1 );

  const std::array<boolean_function, 1> inner{ conj };
  CHECK( postlat::apply( neg, inner ).bits() == "1110" );

  const auto g = fn( "00011111" );
  const auto p2 = boolean_function::projection( 2, 1 );
  const std::array<boolean_function, 3> ident{ p1, p2, p2 };
  CHECK( postlat::apply( g, ident ) == disj );

  const std::array<boolean_function, 1> wrong{ conj };
  CHECK_THROWS_AS( postlat::apply( conj, wrong ), error );

  CHECK( cofactor( g, 0, false ) == conj );
  CHECK( cofactor( g, 0, true ) == boolean_function::constant( 2, true ) );
  CHECK( depends_on( g, 2 ) );
  CHECK( !depends_on( cofactor( g, 1, false ), 1 ) );
  CHECK( lift_nullary( boolean_function::constant( 0, true ) ) == boolean_function::constant( 1, true ) );
}

} // TEST_SUITE
