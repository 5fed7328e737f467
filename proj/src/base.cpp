#include "postlat/base.hpp"

#include "postlat/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace postlat
{

base::base( std::initializer_list<connective> items )
{
  for ( const auto& c : items )
  {
    add( c );
  }
}

void base::add( connective c )
{
  if ( find( c.name ) != nullptr )
  {
    throw error( error_kind::invalid_argument, "duplicate connective name '" + c.name + "'" );
  }
  items_.push_back( std::move( c ) );
}

void base::add_function_if_absent( const connective& c )
{
  if ( contains_function( c.function ) )
  {
    return;
  }
  auto item = c;
  for ( int suffix = 1; find( item.name ) != nullptr; ++suffix )
  {
    item.name = c.name + "_" + std::to_string( suffix );
  }
  items_.push_back( std::move( item ) );
}

const connective* base::find( std::string_view name ) const
{
  const auto it = std::find_if( items_.begin(), items_.end(), [&]( const auto& c ) { return c.name == name; } );
  return it == items_.end() ? nullptr : &*it;
}

const connective* base::find_function( const boolean_function& f ) const
{
  const auto it = std::find_if( items_.begin(), items_.end(), [&]( const auto& c ) { return c.function == f; } );
  return it == items_.end() ? nullptr : &*it;
}

int base::max_arity() const
{
  int k = 0;
  for ( const auto& c : items_ )
  {
    k = std::max( k, c.arity() );
  }
  return k;
}

base merge( const base& a, const base& b )
{
  base result = a;
  for ( const auto& c : b )
  {
    result.add_function_if_absent( c );
  }
  return result;
}

base dual( const base& b )
{
  base result;
  for ( const auto& c : b )
  {
    result.add( connective{ c.name + "_d", dual( c.function ) } );
  }
  return result;
}

namespace
{

bool is_identifier( std::string_view s )
{
  if ( s.empty() || !( std::isalpha( static_cast<unsigned char>( s[0] ) ) || s[0] == '_' ) )
  {
    return false;
  }
  return std::all_of( s.begin() + 1, s.end(), []( char ch ) {
    return std::isalnum( static_cast<unsigned char>( ch ) ) || ch == '_' || ch == '\'';
  } );
}

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
  {
    s.remove_prefix( 1 );
  }
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
  {
    s.remove_suffix( 1 );
  }
  return s;
}

} // namespace

connective parse_literal( std::string_view text )
{
  text = trim( text );
  const auto slash = text.find( '/' );
  const auto colon = text.find( ':' );
  if ( slash == std::string_view::npos || colon == std::string_view::npos || colon < slash )
  {
    throw error( error_kind::invalid_argument, "function literal must look like name/arity:bits, got '" + std::string( text ) + "'" );
  }
  const auto name = text.substr( 0, slash );
  const auto arity_text = text.substr( slash + 1, colon - slash - 1 );
  const auto bits = text.substr( colon + 1 );
  if ( !is_identifier( name ) && name != "0" && name != "1" )
  {
    throw error( error_kind::invalid_argument, "invalid connective name '" + std::string( name ) + "'" );
  }
  if ( arity_text.empty() || !std::all_of( arity_text.begin(), arity_text.end(), []( char ch ) { return std::isdigit( static_cast<unsigned char>( ch ) ); } ) )
  {
    throw error( error_kind::invalid_argument, "invalid arity in '" + std::string( text ) + "'" );
  }
  const int arity = std::stoi( std::string( arity_text ) );
  if ( arity > boolean_function::max_arity )
  {
    throw error( error_kind::cap_exceeded, "arity " + std::to_string( arity ) + " exceeds cap " + std::to_string( boolean_function::max_arity ) );
  }
  auto f = boolean_function::from_bits( bits );
  if ( f.arity() != arity )
  {
    throw error( error_kind::arity_mismatch, "bitstring of length " + std::to_string( bits.size() ) + " does not match arity " + std::to_string( arity ) );
  }
  return connective{ std::string( name ), f };
}

std::string format_literal( const connective& c )
{
  return c.name + "/" + std::to_string( c.arity() ) + ":" + c.function.bits();
}

base parse_base( std::string_view text )
{
  base result;
  std::istringstream in{ std::string( text ) };
  std::string line;
  while ( std::getline( in, line ) )
  {
    std::string_view view = line;
    if ( const auto hash = view.find( '#' ); hash != std::string_view::npos )
    {
      view = view.substr( 0, hash );
    }
    view = trim( view );
    if ( view.empty() )
    {
      continue;
    }
    result.add( parse_literal( view ) );
  }
  return result;
}

base load_base_file( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw error( error_kind::invalid_argument, "cannot open base file '" + path + "'" );
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_base( buffer.str() );
}

std::string format_base( const base& b )
{
  std::string out;
  for ( const auto& c : b )
  {
    out += format_literal( c );
    out += '\n';
  }
  return out;
}

namespace connectives
{

namespace
{

connective make( const char* name, const char* bits )
{
  return connective{ name, boolean_function::from_bits( bits ) };
}

} // namespace

const std::vector<connective>& all()
{
  static const std::vector<connective> table = {
      make( "0", "0" ),
      make( "1", "1" ),
      make( "id", "01" ),
      make( "not", "10" ),
      make( "and", "0001" ),
      make( "or", "0111" ),
      make( "xor", "0110" ),
      make( "imp", "1101" ),
      make( "iff", "1001" ),
      make( "nimp", "0010" ),
      make( "g", "00011111" ),
      make( "h", "00000111" ),
      make( "maj", "00010111" ),
  };
  return table;
}

const connective& bottom() { return all()[0]; }
const connective& top() { return all()[1]; }
const connective& identity() { return all()[2]; }
const connective& negation() { return all()[3]; }
const connective& conjunction() { return all()[4]; }
const connective& disjunction() { return all()[5]; }
const connective& exclusive_or() { return all()[6]; }
const connective& implication() { return all()[7]; }
const connective& equivalence() { return all()[8]; }
const connective& non_implication() { return all()[9]; }
const connective& g() { return all()[10]; }
const connective& h() { return all()[11]; }
const connective& majority() { return all()[12]; }

const connective& constant( bool value )
{
  return value ? top() : bottom();
}

const connective* find( std::string_view name )
{
  const auto& table = all();
  const auto it = std::find_if( table.begin(), table.end(), [&]( const auto& c ) { return c.name == name; } );
  return it == table.end() ? nullptr : &*it;
}

} // namespace connectives

} // namespace postlat
