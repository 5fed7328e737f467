#include "postlat/closure.hpp"
#include "postlat/clones.hpp"
#include "postlat/error.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace postlat;

namespace
{

clone_name cn( const char* text ) { return parse_clone_name( text ); }
base bs( const char* text ) { return parse_base( text ); }
boolean_function fn( const char* bits ) { return boolean_function::from_bits( bits ); }

std::string id_of( const char* text ) { return to_string( clone_of( bs( text ) ) ); }

} // namespace

TEST_SUITE( "clones" )
{

TEST_CASE( "names" )
{
  CHECK( to_string( cn( "S00^3" ) ) == "S00^3" );
  CHECK( cn( "S00^3" ).family == clone_family::S00 );
  CHECK( cn( "S00^3" ).degree == 3 );
  CHECK( !cn( "S00" ).degree );
  CHECK( to_string( cn( "BF" ) ) == "BF" );
  CHECK_THROWS_AS( cn( "M^2" ), error );
  CHECK_THROWS_AS( cn( "S0^1" ), error );
  CHECK_THROWS_AS( cn( "Q" ), error );
}

TEST_CASE( "clone_of examples" )
{
  CHECK( id_of( "and/2:0001\nnot/1:10" ) == "BF" );
  CHECK( id_of( "imp/2:1101" ) == "S0" );
  CHECK( id_of( "maj/3:00010111" ) == "D2" );
  CHECK( id_of( "xor/2:0110" ) == "L0" );
  CHECK( id_of( "id/1:01" ) == "I2" );
  CHECK( id_of( "and/2:0001" ) == "E2" );
  CHECK( id_of( "and/2:0001\nor/2:0111" ) == "M2" );
  CHECK( id_of( "g/3:00011111" ) == "S00" );
  CHECK( id_of( "t/3:00010111\nimp/2:1101" ) == "S0^2" );
  CHECK( id_of( "nimp/2:0010" ) == "S1" );
  CHECK( id_of( "zero/0:0" ) == "I0" );
  CHECK( to_string( clone_of( base{ { "t5", threshold( 5 ) }, { "zero", boolean_function::constant( 0, false ) } } ) ) == "S11^5" );

  const auto idn = identify( bs( "imp/2:1101" ) );
  CHECK( idn.zero_degree.is_infinite() );
  CHECK( idn.one_degree == separating_degree::finite( 0 ) );
}

TEST_CASE( "includes" )
{
  CHECK( includes( cn( "M" ), cn( "M2" ) ) );
  CHECK( includes( cn( "L3" ), cn( "L2" ) ) );
  CHECK( !includes( cn( "E" ), cn( "V" ) ) );
  CHECK( includes( cn( "S0^2" ), cn( "S0^3" ) ) );
  CHECK( !includes( cn( "S0^3" ), cn( "S0^2" ) ) );
  CHECK( includes( cn( "S0^5" ), cn( "S0" ) ) );
  for ( const auto& c : catalog( 3 ) )
  {
    CHECK( includes( c, cn( "I2" ) ) );
    CHECK( includes( cn( "BF" ), c ) );
    CHECK( includes( c, c ) );
  }
}

TEST_CASE( "catalog soundness" )
{
  const auto all = catalog( 3 );
  CHECK( all.size() == 54u );
  for ( const auto& c : all )
  {
    CAPTURE( to_string( c ) );
    const auto b = base_of( c );
    CHECK( satisfies( c, b ) );
    CHECK( clone_of( b ) == c );
  }
}

TEST_CASE( "minimality" )
{
  const auto all = catalog( max_catalog_degree );
  testing::base_sampler sample( 3 );
  for ( int i = 0; i < 200; ++i )
  {
    const auto b = sample();
    const auto c = clone_of( b );
    for ( const auto& other : all )
    {
      if ( other != c && satisfies( other, b ) )
      {
        CHECK( includes( other, c ) );
        CHECK( !includes( c, other ) );
      }
    }
  }
}

TEST_CASE( "duality symmetry" )
{
  const std::vector<const char*> bases{ "imp/2:1101", "and/2:0001", "g/3:00011111", "and/2:0001\none/0:1", "s02/3:00101111", "and/2:0001\nzero/0:0\none/0:1",
                                        "t/3:00010111\nimp/2:1101", "xor/2:0110", "d1/3:00101011" };
  for ( const auto* text : bases )
  {
    const auto b = bs( text );
    CAPTURE( text );
    CHECK( clone_of( dual( b ) ) == dual( clone_of( b ) ) );
  }
  CHECK( dual( cn( "S0" ) ) == cn( "S1" ) );
  CHECK( dual( cn( "E" ) ) == cn( "V" ) );
  CHECK( dual( cn( "S00^2" ) ) == cn( "S10^2" ) );
  CHECK( dual( cn( "M0" ) ) == cn( "M1" ) );
  CHECK( dual( cn( "D" ) ) == cn( "D" ) );
}

TEST_CASE( "member and classify_sat" )
{
  CHECK( member( fn( "0010" ), bs( "and/2:0001\nnot/1:10" ) ) );
  CHECK( !member( fn( "0111" ), bs( "and/2:0001" ) ) );
  // maj is 1-separating of degree 2 only, so it lies in S11^2 but not in S11 = [{h, 0}]
  CHECK( member( threshold( 2 ), bs( "t2/3:00010111\nzero/0:0" ) ) );
  CHECK( !member( threshold( 2 ), bs( "h/3:00000111\nzero/0:0" ) ) );
  CHECK( contains_constant( bs( "h/3:00000111\nzero/0:0" ), false ) );
  CHECK( !contains_constant( bs( "h/3:00000111\nzero/0:0" ), true ) );
  CHECK( contains_constant( bs( "nand/2:1110" ), true ) );

  CHECK( classify_sat( bs( "and/2:0001\nor/2:0111\nnot/1:10" ) ) == sat_complexity::np_complete );
  CHECK( classify_sat( bs( "imp/2:1101" ) ) == sat_complexity::logspace );
  CHECK( classify_sat( bs( "and/2:0001\nor/2:0111" ) ) == sat_complexity::logspace );
  CHECK( to_string( sat_complexity::np_complete ) == "NP-complete" );
}

TEST_CASE( "lattice" )
{
  const auto nodes = catalog( 2 );
  CHECK( nodes.size() == 46u );

  const auto edges = covering_edges( 2 );
  std::map<std::string, std::vector<std::string>> up;
  for ( const auto& [lower, upper] : edges )
  {
    CHECK( includes( upper, lower ) );
    up[to_string( lower )].push_back( to_string( upper ) );
  }
  // M is reachable from M2, and I2 lies below every node
  auto reachable = [&]( const std::string& from ) {
    std::set<std::string> seen{ from };
    std::vector<std::string> todo{ from };
    while ( !todo.empty() )
    {
      const auto cur = todo.back();
      todo.pop_back();
      for ( const auto& next : up[cur] )
      {
        if ( seen.insert( next ).second )
        {
          todo.push_back( next );
        }
      }
    }
    return seen;
  };
  CHECK( reachable( "M2" ).count( "M" ) == 1u );
  CHECK( reachable( "I2" ).size() == nodes.size() );
  CHECK( std::find( edges.begin(), edges.end(), std::pair{ cn( "M1" ), cn( "M" ) } ) != edges.end() );

  const auto dot = lattice_dot( 2 );
  CHECK( dot.starts_with( "digraph post_lattice {" ) );
  CHECK( dot.find( "\"M1\" -> \"M\";" ) != std::string::npos );
  CHECK( dot.find( "\"S00^2\"" ) != std::string::npos );
  CHECK( dot.find( "S00^3" ) == std::string::npos );
}

} // TEST_SUITE

TEST_SUITE( "closure" )
{

TEST_CASE( "closure examples" )
{
  CHECK( closure( bs( "and/2:0001\nnot/1:10" ), 2 ).size() == 16u );

  const auto g2 = closure( bs( "g/3:00011111" ), 2 );
  CHECK( g2.size() == 3u );
  REQUIRE( g2.witness( fn( "0111" ) ) );
  CHECK( to_string( *g2.witness( fn( "0111" ) ) ) == "g(x1, x2, x2)" );

  const auto id2 = closure( bs( "id/1:01" ), 2 );
  CHECK( id2.size() == 2u );
  CHECK( id2.contains( boolean_function::projection( 2, 0 ) ) );
  CHECK( id2.contains( boolean_function::projection( 2, 1 ) ) );

  CHECK( closure( bs( "g/3:00011111" ), 3 ).size() == 10u );
  CHECK( closure( bs( "maj/3:00010111" ), 3 ).size() == 4u );
  CHECK( closure( bs( "and/2:0001\nor/2:0111\nzero/0:0\none/0:1" ), 3 ).size() == 20u );
  CHECK_THROWS_AS( closure( bs( "id/1:01" ), 5 ), error );
}

TEST_CASE( "witnesses evaluate to their functions and grow in size" )
{
  const auto c = closure( bs( "s02/3:00101111\none/0:1" ), 3 );
  std::vector<std::string> order{ "x1", "x2", "x3" };
  std::uint64_t last = 0;
  for ( std::size_t i = 0; i < c.size(); ++i )
  {
    CHECK( truth_table( c.witnesses()[i], order ) == c.functions()[i] );
    CHECK( c.witnesses()[i].size() >= last );
    last = c.witnesses()[i].size();
  }
}

TEST_CASE( "closure agrees with the predicate fragment" )
{
  testing::base_sampler sample( 5 );
  for ( int i = 0; i < 60; ++i )
  {
    const auto b = sample();
    const auto c = closure( b, 2 );
    const std::set<boolean_function> got( c.functions().begin(), c.functions().end() );
    CHECK( got == testing::predicate_fragment( clone_of( b ), 2 ) );
  }
}

TEST_CASE( "represent" )
{
  const auto or_rep = represent( fn( "0111" ), bs( "g/3:00011111" ) );
  REQUIRE( or_rep );
  CHECK( to_string( *or_rep ) == "g(x1, x2, x2)" );

  const auto neg = represent( fn( "10" ), bs( "s02/3:00101111\nzero/0:0\none/0:1" ) );
  REQUIRE( neg );
  CHECK( truth_table( *neg, { "x1" } ) == fn( "10" ) );
  CHECK( to_string( *neg ) == "s02(zero(), one(), x1)" );

  CHECK( !represent( fn( "0010" ), bs( "and/2:0001\nor/2:0111" ) ) );

  // a nullary target is looked up as the unary constant
  const auto one = represent( boolean_function::constant( 0, true ), bs( "imp/2:1101" ) );
  REQUIRE( one );
  CHECK( to_string( *one ) == "x1 -> x1" );
}

} // TEST_SUITE
