#include "postlat/error.hpp"
#include "postlat/formula.hpp"
#include "support/random_formula.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace postlat;

namespace
{

formula var( const char* name ) { return formula::proposition( name ); }

error_kind kind_of( auto&& f )
{
  try
  {
    f();
  }
  catch ( const error& e )
  {
    return e.kind();
  }
  FAIL( "no error thrown" );
  return error_kind::invalid_argument;
}

base mixed_base()
{
  return parse_base( "and/2:0001\nor/2:0111\nnot/1:10\nxor/2:0110\nimp/2:1101\niff/2:1001\nnimp/2:0010\nmaj/3:00010111\ng/3:00011111" );
}

} // namespace

TEST_SUITE( "formula" )
{

TEST_CASE( "infix parse builds the expected tree" )
{
  const auto phi = parse( "x & (y | z)" );
  REQUIRE( phi.is_apply() );
  CHECK( phi.op().name == "and" );
  CHECK( phi.args()[0] == var( "x" ) );
  CHECK( phi.args()[1] == formula::apply( connectives::disjunction(), { var( "y" ), var( "z" ) } ) );
}

TEST_CASE( "prefix call resolves in the base" )
{
  const auto b = parse_base( "g/3:00011111" );
  const auto phi = parse( "g(x,y,z)", b );
  CHECK( phi.op().name == "g" );
  CHECK( phi.op().function == boolean_function::from_bits( "00011111" ) );
  CHECK( phi.args().size() == 3u );
}

TEST_CASE( "parse errors" )
{
  CHECK( kind_of( [] { parse( "x &" ); } ) == error_kind::syntax );
  CHECK( kind_of( [] { parse( "foo(x)" ); } ) == error_kind::unknown_connective );
  CHECK( kind_of( [] { parse( "and(x)" ); } ) == error_kind::arity_mismatch );
  CHECK( kind_of( [] { parse( "__t0 & x" ); } ) == error_kind::syntax );
  CHECK( parse( "__t0 & x", {}, { .allow_reserved = true } ).args()[0] == var( "__t0" ) );

  try
  {
    parse( "x & )" );
  }
  catch ( const error& e )
  {
    CHECK( e.position() == 4u );
  }
}

TEST_CASE( "precedence and associativity" )
{
  CHECK( parse( "!x & y | z" ) == parse( "((!x) & y) | z" ) );
  CHECK( parse( "x | y ^ z" ) == parse( "(x | y) ^ z" ) );
  CHECK( parse( "x -> y -> z" ) == parse( "x -> (y -> z)" ) );
  CHECK( parse( "x ^ y -> z <-> w" ) == parse( "((x ^ y) -> z) <-> w" ) );
  CHECK( parse( "x & y & z" ) == parse( "(x & y) & z" ) );
}

TEST_CASE( "evaluate" )
{
  CHECK( evaluate( parse( "x & y" ), { { "x", true }, { "y", true } } ) );
  CHECK( !evaluate( parse( "x -> y" ), { { "x", true }, { "y", false } } ) );

  // x -/> y agrees with x & !y on all four rows
  const auto nimp = parse( "x -/> y" );
  const auto spelled = parse( "x & !y" );
  for ( int r = 0; r < 4; ++r )
  {
    const assignment alpha{ { "x", ( r & 2 ) != 0 }, { "y", ( r & 1 ) != 0 } };
    CHECK( evaluate( nimp, alpha ) == evaluate( spelled, alpha ) );
  }
  CHECK( evaluate( nimp, { { "x", true }, { "y", false } } ) );

  CHECK( kind_of( [] { evaluate( parse( "x & y" ), { { "x", true } } ); } ) == error_kind::unbound_proposition );
}

TEST_CASE( "truth tables" )
{
  CHECK( truth_table( parse( "x & y" ), { "x", "y" } ).bits() == "0001" );
  CHECK( truth_table( parse( "x" ), { "x", "y" } ).bits() == "0011" );
  CHECK( truth_table( parse( "(x & y) | (x & z) | (y & z)" ), { "x", "y", "z" } ).bits() == "00010111" );
  CHECK( kind_of( [] { truth_table( parse( "x & y" ), { "x" } ); } ) == error_kind::missing_variable );

  // renaming the variables together with var_order leaves the table alone
  const auto phi = parse( "(a -> b) & !c" );
  const auto renamed = instantiate( phi, { { "a", var( "p" ) }, { "b", var( "q" ) }, { "c", var( "r" ) } } );
  CHECK( truth_table( phi, { "c", "a", "b" } ) == truth_table( renamed, { "r", "p", "q" } ) );
}

TEST_CASE( "truth_bits beyond one word" )
{
  std::vector<std::string> order;
  std::vector<formula> xs;
  for ( int i = 1; i <= 8; ++i )
  {
    order.push_back( "x" + std::to_string( i ) );
    xs.push_back( var( order.back().c_str() ) );
  }
  const auto phi = balanced( connectives::exclusive_or(), xs );
  const auto words = truth_bits( phi, order );
  REQUIRE( words.size() == 4u );
  for ( std::uint64_t r = 0; r < 256; ++r )
  {
    CHECK( ( ( words[r / 64] >> ( r % 64 ) ) & 1u ) == static_cast<std::uint64_t>( std::popcount( r ) & 1 ) );
  }
}

TEST_CASE( "substitute" )
{
  const auto y_or_z = parse( "y | z" );
  CHECK( substitute( parse( "x & (y | z)" ), y_or_z, formula::constant( false ) ) == parse( "x & 0" ) );
  CHECK( substitute( var( "x" ), var( "x" ), var( "y" ) ) == var( "y" ) );
  CHECK( substitute( parse( "(y | z) & (y | z)" ), y_or_z, var( "w" ) ) == parse( "w & w" ) );

  // replacements are not rescanned
  CHECK( substitute( parse( "x & y" ), var( "x" ), parse( "x & x" ) ) == parse( "(x & x) & y" ) );
}

TEST_CASE( "metrics" )
{
  const auto single = metrics( var( "x" ) );
  CHECK( single.size == 1u );
  CHECK( single.depth == 0 );
  CHECK( single.leaf_count == 1u );
  CHECK( single.vars == std::vector<std::string>{ "x" } );

  const auto m = metrics( parse( "x & (y | z)" ) );
  CHECK( m.size == 5u );
  CHECK( m.depth == 2 );
  CHECK( m.leaf_count == 3u );
  CHECK( m.vars == std::vector<std::string>{ "x", "y", "z" } );

  const auto chain = parse( "x1 & (x2 & (x3 & x4))" );
  CHECK( chain.depth() == 3 );
  CHECK( chain.leaf_count() == 4u );

  const auto with_constant = parse( "x & 1" );
  CHECK( with_constant.size() == 3u );
  CHECK( with_constant.leaf_count() == 1u );
}

TEST_CASE( "equivalence" )
{
  CHECK( equivalent( parse( "x & y" ), parse( "!(!x | !y)" ) ) );
  CHECK( equivalent( var( "x" ), parse( "x | (t & !t)" ) ) );
  CHECK( equivalent( var( "x" ), parse( "x & (t | !t)" ) ) );
  CHECK( !equivalent( parse( "x -> y" ), parse( "y -> x" ) ) );

  std::vector<formula> xs;
  for ( int i = 0; i < 21; ++i )
  {
    xs.push_back( formula::proposition( "v" + std::to_string( i ) ) );
  }
  const auto wide = balanced( connectives::conjunction(), xs );
  CHECK( kind_of( [&] { equivalent( wide, wide ); } ) == error_kind::cap_exceeded );
}

TEST_CASE( "fold_constants" )
{
  CHECK( fold_constants( parse( "x & 0" ) ) == formula::constant( false ) );
  CHECK( fold_constants( parse( "x & 1" ) ) == var( "x" ) );
  CHECK( fold_constants( parse( "(x | 1) & y" ) ) == var( "y" ) );
  CHECK( fold_constants( parse( "x ^ 1" ) ) == parse( "x ^ 1" ) );
  CHECK( fold_constants( parse( "x & y" ) ) == parse( "x & y" ) );
}

TEST_CASE( "random round trip and substitution identity" )
{
  const auto b = mixed_base();
  testing::formula_generator gen( 7, { .vars = 6, .max_nodes = 40, .constant_rate = 0.1 } );
  for ( int i = 0; i < 300; ++i )
  {
    const auto phi = gen( b );
    const auto text = to_string( phi );
    CAPTURE( text );
    CHECK( parse( text, b ) == phi );
    CHECK( substitute( phi, phi.args().empty() ? phi : phi.args()[0], phi.args().empty() ? phi : phi.args()[0] ) == phi );
    CHECK( equivalent( phi, phi ) );
  }
}

TEST_CASE( "equivalence relation on random samples" )
{
  const auto b = parse_base( "and/2:0001\nor/2:0111\nnot/1:10" );
  testing::formula_generator gen( 11, { .vars = 3, .max_nodes = 9 } );
  std::vector<formula> sample;
  for ( int i = 0; i < 40; ++i )
  {
    sample.push_back( gen( b ) );
  }
  for ( const auto& a : sample )
  {
    for ( const auto& c : sample )
    {
      CHECK( equivalent( a, c ) == equivalent( c, a ) );
      for ( const auto& d : sample )
      {
        if ( equivalent( a, c ) && equivalent( c, d ) )
        {
          CHECK( equivalent( a, d ) );
        }
      }
    }
  }
}

TEST_CASE( "base literals" )
{
  const auto c = parse_literal( "and/2:0001" );
  CHECK( c.name == "and" );
  CHECK( c.function == boolean_function( 2, 0b1000 ) );
  CHECK( format_literal( c ) == "and/2:0001" );
  CHECK( kind_of( [] { parse_literal( "and/2:001" ); } ) == error_kind::invalid_argument );

  const auto b = parse_base( "# comment\nand/2:0001\n\nnot/1:10  # negation\n" );
  CHECK( b.size() == 2u );
  CHECK( format_base( b ) == "and/2:0001\nnot/1:10\n" );
  CHECK( kind_of( [] { parse_base( "f/1:10\nf/1:01" ); } ) == error_kind::invalid_argument );
}

} // TEST_SUITE
