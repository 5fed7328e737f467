#include "postlat/boolean_function.hpp"

#include "postlat/error.hpp"

#include <bit>
#include <queue>
#include <vector>

namespace postlat
{

boolean_function::boolean_function( int arity, std::uint64_t table ) : arity_( arity ), table_( table )
{
  if ( arity < 0 || arity > max_arity )
  {
    throw error( error_kind::cap_exceeded, "arity " + std::to_string( arity ) + " outside 0.." + std::to_string( max_arity ) );
  }
  if ( ( table & ~table_mask( arity ) ) != 0u )
  {
    throw error( error_kind::invalid_argument, "truth table has bits beyond 2^arity rows" );
  }
}

boolean_function boolean_function::from_bits( std::string_view bits )
{
  const auto len = bits.size();
  if ( len == 0u || !std::has_single_bit( len ) )
  {
    throw error( error_kind::invalid_argument, "bitstring length must be a power of two, got " + std::to_string( len ) );
  }
  const int arity = std::countr_zero( len );
  if ( arity > max_arity )
  {
    throw error( error_kind::cap_exceeded, "bitstring describes arity " + std::to_string( arity ) + " > " + std::to_string( max_arity ) );
  }
  std::uint64_t table = 0u;
  for ( std::size_t p = 0; p < len; ++p )
  {
    if ( bits[p] == '1' )
    {
      table |= std::uint64_t{ 1 } << p;
    }
    else if ( bits[p] != '0' )
    {
      throw error( error_kind::invalid_argument, std::string( "invalid character '" ) + bits[p] + "' in bitstring" );
    }
  }
  return boolean_function( arity, table );
}

boolean_function boolean_function::constant( int arity, bool value )
{
  return boolean_function( arity, value ? table_mask( arity ) : 0u );
}

boolean_function boolean_function::projection( int arity, int index )
{
  if ( index < 0 || index >= arity )
  {
    throw error( error_kind::invalid_argument, "projection index out of range" );
  }
  std::uint64_t table = 0u;
  for ( std::uint64_t row = 0; row < ( std::uint64_t{ 1 } << arity ); ++row )
  {
    if ( input_bit( arity, row, index ) )
    {
      table |= std::uint64_t{ 1 } << row;
    }
  }
  return boolean_function( arity, table );
}

bool boolean_function::evaluate( std::span<const bool> inputs ) const
{
  if ( static_cast<int>( inputs.size() ) != arity_ )
  {
    throw error( error_kind::arity_mismatch, "expected " + std::to_string( arity_ ) + " inputs" );
  }
  std::uint64_t row = 0u;
  for ( bool b : inputs )
  {
    row = ( row << 1 ) | ( b ? 1u : 0u );
  }
  return ( *this )( row );
}

std::string boolean_function::bits() const
{
  std::string s( num_rows(), '0' );
  for ( std::uint64_t p = 0; p < num_rows(); ++p )
  {
    if ( ( *this )( p ) )
    {
      s[p] = '1';
    }
  }
  return s;
}

std::string separating_degree::to_string() const
{
  return value_ ? std::to_string( *value_ ) : std::string( "inf" );
}

boolean_function dual( const boolean_function& f )
{
  const auto last = f.num_rows() - 1u;
  std::uint64_t table = 0u;
  for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
  {
    if ( !f( last ^ row ) )
    {
      table |= std::uint64_t{ 1 } << row;
    }
  }
  return boolean_function( f.arity(), table );
}

bool is_reproducing( const boolean_function& f, bool c )
{
  return f( c ? f.num_rows() - 1u : 0u ) == c;
}

bool is_monotone( const boolean_function& f )
{
  for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
  {
    if ( !f( row ) )
    {
      continue;
    }
    // a 1 at row must stay 1 on every cover row | bit
    for ( int b = 0; b < f.arity(); ++b )
    {
      const auto up = row | ( std::uint64_t{ 1 } << b );
      if ( up != row && !f( up ) )
      {
        return false;
      }
    }
  }
  return true;
}

bool is_self_dual( const boolean_function& f )
{
  return dual( f ) == f;
}

bool is_affine( const boolean_function& f )
{
  const int n = f.arity();
  const bool c = f( 0u );
  std::uint64_t linear = 0u;
  for ( int b = 0; b < n; ++b )
  {
    if ( f( std::uint64_t{ 1 } << b ) != c )
    {
      linear |= std::uint64_t{ 1 } << b;
    }
  }
  for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
  {
    const bool expected = c ^ ( std::popcount( row & linear ) & 1 );
    if ( f( row ) != expected )
    {
      return false;
    }
  }
  return true;
}

bool depends_on( const boolean_function& f, int index )
{
  const auto bit = std::uint64_t{ 1 } << ( f.arity() - 1 - index );
  for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
  {
    if ( ( row & bit ) == 0u && f( row ) != f( row | bit ) )
    {
      return true;
    }
  }
  return false;
}

namespace
{

std::uint64_t dependency_mask( const boolean_function& f )
{
  std::uint64_t m = 0u;
  for ( int i = 0; i < f.arity(); ++i )
  {
    if ( depends_on( f, i ) )
    {
      m |= std::uint64_t{ 1 } << ( f.arity() - 1 - i );
    }
  }
  return m;
}

} // namespace

bool is_essentially_unary( const boolean_function& f )
{
  return std::popcount( dependency_mask( f ) ) <= 1;
}

bool is_conjunction_or_constant( const boolean_function& f )
{
  if ( f.is_constant() )
  {
    return true;
  }
  const auto dep = dependency_mask( f );
  for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
  {
    if ( f( row ) != ( ( row & dep ) == dep ) )
    {
      return false;
    }
  }
  return true;
}

bool is_disjunction_or_constant( const boolean_function& f )
{
  if ( f.is_constant() )
  {
    return true;
  }
  const auto dep = dependency_mask( f );
  for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
  {
    if ( f( row ) != ( ( row & dep ) != 0u ) )
    {
      return false;
    }
  }
  return true;
}

bool is_projection_or_constant( const boolean_function& f )
{
  if ( f.is_constant() )
  {
    return true;
  }
  const auto dep = dependency_mask( f );
  if ( std::popcount( dep ) != 1 )
  {
    return false;
  }
  for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
  {
    if ( f( row ) != ( ( row & dep ) != 0u ) )
    {
      return false;
    }
  }
  return true;
}

separating_degree compute_separating_degree( const boolean_function& f, bool c )
{
  const int n = f.arity();
  const std::uint64_t all = ( std::uint64_t{ 1 } << n ) - 1u;

  // Each tuple a of f^-1(c) contributes S_a = { i : a_i = c } (as row bits).
  // A tuple set is c-separating iff its S-sets intersect; find the fewest
  // tuples whose intersection is empty by BFS over intersection states.
  std::vector<std::uint64_t> sets;
  for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
  {
    if ( f( row ) == c )
    {
      sets.push_back( c ? row : ( ~row & all ) );
    }
  }
  if ( sets.empty() )
  {
    return separating_degree::infinite();
  }

  std::vector<int> dist( std::size_t{ 1 } << n, -1 );
  std::queue<std::uint64_t> frontier;
  for ( auto s : sets )
  {
    if ( dist[s] < 0 )
    {
      dist[s] = 1;
      frontier.push( s );
    }
  }
  while ( !frontier.empty() )
  {
    const auto state = frontier.front();
    frontier.pop();
    if ( state == 0u )
    {
      return separating_degree::finite( dist[state] - 1 );
    }
    for ( auto s : sets )
    {
      const auto next = state & s;
      if ( dist[next] < 0 )
      {
        dist[next] = dist[state] + 1;
        frontier.push( next );
      }
    }
  }
  return separating_degree::infinite();
}

boolean_function threshold( int n )
{
  if ( n < 1 || n + 1 > boolean_function::max_arity )
  {
    throw error( error_kind::cap_exceeded, "threshold t_n^{n+1} needs 1 <= n <= " + std::to_string( boolean_function::max_arity - 1 ) );
  }
  const int arity = n + 1;
  std::uint64_t table = 0u;
  for ( std::uint64_t row = 0; row < ( std::uint64_t{ 1 } << arity ); ++row )
  {
    if ( std::popcount( row ) >= n )
    {
      table |= std::uint64_t{ 1 } << row;
    }
  }
  return boolean_function( arity, table );
}

std::uint64_t compose_tables( const boolean_function& f, std::span<const std::uint64_t> args, std::uint64_t mask )
{
  const int m = f.arity();
  std::uint64_t result = 0u;
  for ( std::uint64_t t = 0; t < f.num_rows(); ++t )
  {
    if ( !f( t ) )
    {
      continue;
    }
    std::uint64_t term = mask;
    for ( int i = 0; i < m; ++i )
    {
      term &= boolean_function::input_bit( m, t, i ) ? args[i] : ~args[i];
    }
    result |= term;
  }
  return result & mask;
}

boolean_function apply( const boolean_function& f, std::span<const boolean_function> gs )
{
  if ( static_cast<int>( gs.size() ) != f.arity() )
  {
    throw error( error_kind::arity_mismatch, "apply: " + std::to_string( gs.size() ) + " arguments for arity " + std::to_string( f.arity() ) );
  }
  if ( gs.empty() )
  {
    throw error( error_kind::arity_mismatch, "apply: nullary outer function has no argument arity" );
  }
  const int k = gs.front().arity();
  std::vector<std::uint64_t> tables;
  tables.reserve( gs.size() );
  for ( const auto& g : gs )
  {
    if ( g.arity() != k )
    {
      throw error( error_kind::arity_mismatch, "apply: inner functions must share one arity" );
    }
    tables.push_back( g.table() );
  }
  return boolean_function( k, compose_tables( f, tables, boolean_function::table_mask( k ) ) );
}

boolean_function lift_nullary( const boolean_function& f )
{
  return f.arity() == 0 ? boolean_function::constant( 1, f( 0u ) ) : f;
}

boolean_function cofactor( const boolean_function& f, int index, bool value )
{
  const int n = f.arity();
  if ( index < 0 || index >= n )
  {
    throw error( error_kind::invalid_argument, "cofactor index out of range" );
  }
  const int low_bits = n - 1 - index; // row bits below the restricted input
  std::uint64_t table = 0u;
  for ( std::uint64_t r = 0; r < ( std::uint64_t{ 1 } << ( n - 1 ) ); ++r )
  {
    const auto low = r & ( ( std::uint64_t{ 1 } << low_bits ) - 1u );
    const auto high = r >> low_bits;
    const auto row = ( high << ( low_bits + 1 ) ) | ( std::uint64_t{ value } << low_bits ) | low;
    if ( f( row ) )
    {
      table |= std::uint64_t{ 1 } << r;
    }
  }
  return boolean_function( n - 1, table );
}

} // namespace postlat
