#include "postlat/clones.hpp"

#include "postlat/error.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace postlat
{

namespace
{

struct family_info
{
  clone_family family;
  const char* name;
};

constexpr std::array<family_info, 38> families = { {
    { clone_family::BF, "BF" },   { clone_family::R0, "R0" },   { clone_family::R1, "R1" },   { clone_family::R2, "R2" },
    { clone_family::M, "M" },     { clone_family::M0, "M0" },   { clone_family::M1, "M1" },   { clone_family::M2, "M2" },
    { clone_family::S0, "S0" },   { clone_family::S1, "S1" },   { clone_family::S02, "S02" }, { clone_family::S01, "S01" },
    { clone_family::S00, "S00" }, { clone_family::S12, "S12" }, { clone_family::S11, "S11" }, { clone_family::S10, "S10" },
    { clone_family::D, "D" },     { clone_family::D1, "D1" },   { clone_family::D2, "D2" },   { clone_family::L, "L" },
    { clone_family::L0, "L0" },   { clone_family::L1, "L1" },   { clone_family::L2, "L2" },   { clone_family::L3, "L3" },
    { clone_family::E, "E" },     { clone_family::E0, "E0" },   { clone_family::E1, "E1" },   { clone_family::E2, "E2" },
    { clone_family::V, "V" },     { clone_family::V0, "V0" },   { clone_family::V1, "V1" },   { clone_family::V2, "V2" },
    { clone_family::N, "N" },     { clone_family::N2, "N2" },   { clone_family::I, "I" },     { clone_family::I0, "I0" },
    { clone_family::I1, "I1" },   { clone_family::I2, "I2" },
} };

const char* family_name( clone_family f )
{
  for ( const auto& info : families )
  {
    if ( info.family == f )
    {
      return info.name;
    }
  }
  return "?";
}

// Property signature of one function; nullary functions are lifted first.
struct properties
{
  bool r0, r1, mono, self_dual, affine, unary, conj, disj, proj;
  separating_degree d0 = separating_degree::infinite();
  separating_degree d1 = separating_degree::infinite();

  explicit properties( const boolean_function& g )
  {
    const auto f = lift_nullary( g );
    r0 = is_reproducing( f, false );
    r1 = is_reproducing( f, true );
    mono = is_monotone( f );
    self_dual = is_self_dual( f );
    affine = is_affine( f );
    unary = is_essentially_unary( f );
    conj = is_conjunction_or_constant( f );
    disj = is_disjunction_or_constant( f );
    proj = is_projection_or_constant( f );
    d0 = compute_separating_degree( f, false );
    d1 = compute_separating_degree( f, true );
  }
};

bool separating( const separating_degree& d, const std::optional<int>& degree )
{
  return degree ? d.at_least( *degree ) : d.is_infinite();
}

bool holds( const clone_name& c, const properties& p )
{
  const bool r2 = p.r0 && p.r1;
  const bool s0 = separating( p.d0, c.degree );
  const bool s1 = separating( p.d1, c.degree );
  switch ( c.family )
  {
  case clone_family::BF:
    return true;
  case clone_family::R0:
    return p.r0;
  case clone_family::R1:
    return p.r1;
  case clone_family::R2:
    return r2;
  case clone_family::M:
    return p.mono;
  case clone_family::M0:
    return p.mono && p.r0;
  case clone_family::M1:
    return p.mono && p.r1;
  case clone_family::M2:
    return p.mono && r2;
  case clone_family::S0:
    return s0;
  case clone_family::S02:
    return s0 && r2;
  case clone_family::S01:
    return s0 && p.mono;
  case clone_family::S00:
    return s0 && r2 && p.mono;
  case clone_family::S1:
    return s1;
  case clone_family::S12:
    return s1 && r2;
  case clone_family::S11:
    return s1 && p.mono;
  case clone_family::S10:
    return s1 && r2 && p.mono;
  case clone_family::D:
    return p.self_dual;
  case clone_family::D1:
    return p.self_dual && r2;
  case clone_family::D2:
    return p.self_dual && p.mono;
  case clone_family::L:
    return p.affine;
  case clone_family::L0:
    return p.affine && p.r0;
  case clone_family::L1:
    return p.affine && p.r1;
  case clone_family::L2:
    return p.affine && r2;
  case clone_family::L3:
    return p.affine && p.self_dual;
  case clone_family::E:
    return p.conj;
  case clone_family::E0:
    return p.conj && p.r0;
  case clone_family::E1:
    return p.conj && p.r1;
  case clone_family::E2:
    return p.conj && r2;
  case clone_family::V:
    return p.disj;
  case clone_family::V0:
    return p.disj && p.r0;
  case clone_family::V1:
    return p.disj && p.r1;
  case clone_family::V2:
    return p.disj && r2;
  case clone_family::N:
    return p.unary;
  case clone_family::N2:
    return p.unary && p.self_dual;
  case clone_family::I:
    return p.proj;
  case clone_family::I0:
    return p.proj && p.r0;
  case clone_family::I1:
    return p.proj && p.r1;
  case clone_family::I2:
    return p.proj && r2;
  }
  return false;
}

void check_degree( const clone_name& c )
{
  if ( c.degree && !is_separating_family( c.family ) )
  {
    throw error( error_kind::invalid_argument, std::string( family_name( c.family ) ) + " takes no degree parameter" );
  }
  if ( c.degree && ( *c.degree < 2 || *c.degree > max_catalog_degree ) )
  {
    throw error( error_kind::cap_exceeded, "degree parameter must lie in 2.." + std::to_string( max_catalog_degree ) );
  }
}

connective named( const char* name, const char* bits )
{
  return connective{ name, boolean_function::from_bits( bits ) };
}

std::vector<properties> base_properties( const clone_name& c )
{
  std::vector<properties> out;
  for ( const auto& item : base_of( c ) )
  {
    out.emplace_back( item.function );
  }
  return out;
}

struct catalog_entry
{
  clone_name name;
  std::vector<properties> base;
};

const std::vector<catalog_entry>& full_catalog()
{
  static const std::vector<catalog_entry> entries = [] {
    std::vector<catalog_entry> out;
    for ( const auto& c : catalog( max_catalog_degree ) )
    {
      out.push_back( { c, base_properties( c ) } );
    }
    return out;
  }();
  return entries;
}

const catalog_entry& entry_of( const clone_name& c )
{
  check_degree( c );
  for ( const auto& e : full_catalog() )
  {
    if ( e.name == c )
    {
      return e;
    }
  }
  throw error( error_kind::invalid_argument, "unknown clone " + to_string( c ) );
}

} // namespace

bool is_separating_family( clone_family family )
{
  switch ( family )
  {
  case clone_family::S0:
  case clone_family::S1:
  case clone_family::S02:
  case clone_family::S01:
  case clone_family::S00:
  case clone_family::S12:
  case clone_family::S11:
  case clone_family::S10:
    return true;
  default:
    return false;
  }
}

std::string to_string( const clone_name& c )
{
  std::string s = family_name( c.family );
  return c.degree ? s + "^" + std::to_string( *c.degree ) : s;
}

clone_name parse_clone_name( std::string_view text )
{
  std::string family_text( text );
  std::optional<int> degree;
  if ( const auto caret = text.find( '^' ); caret != std::string_view::npos )
  {
    const auto rest = text.substr( caret + 1 );
    if ( rest.empty() || rest.size() > 2 || !std::all_of( rest.begin(), rest.end(), []( char ch ) { return ch >= '0' && ch <= '9'; } ) )
    {
      throw error( error_kind::invalid_argument, "invalid degree in clone name '" + std::string( text ) + "'" );
    }
    degree = std::stoi( std::string( rest ) );
    family_text = std::string( text.substr( 0, caret ) );
  }
  for ( const auto& info : families )
  {
    if ( family_text == info.name )
    {
      clone_name c{ info.family, degree };
      check_degree( c );
      return c;
    }
  }
  throw error( error_kind::invalid_argument, "unknown clone name '" + std::string( text ) + "'" );
}

std::vector<clone_name> catalog( int max_degree )
{
  if ( max_degree > max_catalog_degree )
  {
    throw error( error_kind::cap_exceeded, "catalog degrees are capped at " + std::to_string( max_catalog_degree ) );
  }
  std::vector<clone_name> out;
  auto add_family = [&]( clone_family f ) {
    for ( int n = 2; n <= max_degree; ++n )
    {
      out.push_back( { f, n } );
    }
    out.push_back( { f, std::nullopt } );
  };
  using cf = clone_family;
  for ( auto f : { cf::BF, cf::R0, cf::R1, cf::R2, cf::M, cf::M0, cf::M1, cf::M2 } )
  {
    out.push_back( { f, std::nullopt } );
  }
  // Table order lists S0 before S0^n; the parameterized entries are placed
  // ahead of their limit so that every family reads from large to small.
  for ( auto f : { cf::S0, cf::S1, cf::S02, cf::S01, cf::S00, cf::S12, cf::S11, cf::S10 } )
  {
    add_family( f );
  }
  for ( auto f : { cf::D, cf::D1, cf::D2, cf::L, cf::L0, cf::L1, cf::L2, cf::L3, cf::E, cf::E0, cf::E1, cf::E2, cf::V, cf::V0, cf::V1, cf::V2, cf::N,
                   cf::N2, cf::I, cf::I0, cf::I1, cf::I2 } )
  {
    out.push_back( { f, std::nullopt } );
  }
  return out;
}

bool satisfies( const clone_name& c, const boolean_function& f )
{
  check_degree( c );
  return holds( c, properties( f ) );
}

bool satisfies( const clone_name& c, const base& b )
{
  check_degree( c );
  return std::all_of( b.begin(), b.end(), [&]( const connective& item ) { return holds( c, properties( item.function ) ); } );
}

base base_of( const clone_name& c )
{
  check_degree( c );
  namespace k = connectives;
  const auto thr = [&]() { return connective{ "t" + std::to_string( *c.degree ), threshold( *c.degree ) }; };
  const auto thr_dual = [&]() { return connective{ "t" + std::to_string( *c.degree ) + "_d", dual( threshold( *c.degree ) ) }; };
  const auto s02 = named( "s02", "00101111" ); // x | (y & !z)
  const auto s12 = named( "s12", "00001011" ); // x & (y | !z)
  using cf = clone_family;
  switch ( c.family )
  {
  case cf::BF:
    return { k::conjunction(), k::negation() };
  case cf::R0:
    return { k::conjunction(), k::exclusive_or() };
  case cf::R1:
    return { k::disjunction(), k::equivalence() };
  case cf::R2:
    return { k::disjunction(), named( "and_iff", "00001001" ) };
  case cf::M:
    return { k::conjunction(), k::disjunction(), k::bottom(), k::top() };
  case cf::M0:
    return { k::conjunction(), k::disjunction(), k::bottom() };
  case cf::M1:
    return { k::conjunction(), k::disjunction(), k::top() };
  case cf::M2:
    return { k::conjunction(), k::disjunction() };
  case cf::S0:
    return c.degree ? base{ k::implication(), thr_dual() } : base{ k::implication() };
  case cf::S1:
    return c.degree ? base{ k::non_implication(), thr() } : base{ k::non_implication() };
  case cf::S02:
    return c.degree ? base{ s02, thr_dual() } : base{ s02 };
  case cf::S01:
    return c.degree ? base{ thr_dual(), k::top() } : base{ k::g(), k::top() };
  case cf::S00:
    return c.degree ? base{ k::g(), thr_dual() } : base{ k::g() };
  case cf::S12:
    return c.degree ? base{ s12, thr() } : base{ s12 };
  case cf::S11:
    return c.degree ? base{ thr(), k::bottom() } : base{ k::h(), k::bottom() };
  case cf::S10:
    return c.degree ? base{ k::h(), thr() } : base{ k::h() };
  case cf::D:
    return { named( "d", "10001110" ) }; // maj(x, !y, !z)
  case cf::D1:
    return { named( "d1", "00101011" ) }; // maj(x, y, !z)
  case cf::D2:
    return { k::majority() };
  case cf::L:
    return { k::exclusive_or(), k::top() };
  case cf::L0:
    return { k::exclusive_or() };
  case cf::L1:
    return { k::equivalence() };
  case cf::L2:
    return { named( "xor3", "01101001" ) };
  case cf::L3:
    return { named( "xnor3", "10010110" ) };
  case cf::E:
    return { k::conjunction(), k::bottom(), k::top() };
  case cf::E0:
    return { k::conjunction(), k::bottom() };
  case cf::E1:
    return { k::conjunction(), k::top() };
  case cf::E2:
    return { k::conjunction() };
  case cf::V:
    return { k::disjunction(), k::bottom(), k::top() };
  case cf::V0:
    return { k::disjunction(), k::bottom() };
  case cf::V1:
    return { k::disjunction(), k::top() };
  case cf::V2:
    return { k::disjunction() };
  case cf::N:
    return { k::negation(), k::bottom(), k::top() };
  case cf::N2:
    return { k::negation() };
  case cf::I:
    return { k::identity(), k::bottom(), k::top() };
  case cf::I0:
    return { k::identity(), k::bottom() };
  case cf::I1:
    return { k::identity(), k::top() };
  case cf::I2:
    return { k::identity() };
  }
  throw error( error_kind::invalid_argument, "unknown clone family" );
}

bool includes( const clone_name& outer, const clone_name& inner )
{
  check_degree( outer );
  const auto& e = entry_of( inner );
  return std::all_of( e.base.begin(), e.base.end(), [&]( const properties& p ) { return holds( outer, p ); } );
}

clone_name dual( const clone_name& c )
{
  using cf = clone_family;
  auto swap = [&]( cf f ) { return clone_name{ f, c.degree }; };
  switch ( c.family )
  {
  case cf::R0:
    return swap( cf::R1 );
  case cf::R1:
    return swap( cf::R0 );
  case cf::M0:
    return swap( cf::M1 );
  case cf::M1:
    return swap( cf::M0 );
  case cf::S0:
    return swap( cf::S1 );
  case cf::S1:
    return swap( cf::S0 );
  case cf::S02:
    return swap( cf::S12 );
  case cf::S12:
    return swap( cf::S02 );
  case cf::S01:
    return swap( cf::S11 );
  case cf::S11:
    return swap( cf::S01 );
  case cf::S00:
    return swap( cf::S10 );
  case cf::S10:
    return swap( cf::S00 );
  case cf::L0:
    return swap( cf::L1 );
  case cf::L1:
    return swap( cf::L0 );
  case cf::E:
    return swap( cf::V );
  case cf::V:
    return swap( cf::E );
  case cf::E0:
    return swap( cf::V1 );
  case cf::V1:
    return swap( cf::E0 );
  case cf::E1:
    return swap( cf::V0 );
  case cf::V0:
    return swap( cf::E1 );
  case cf::E2:
    return swap( cf::V2 );
  case cf::V2:
    return swap( cf::E2 );
  case cf::I0:
    return swap( cf::I1 );
  case cf::I1:
    return swap( cf::I0 );
  default:
    return c;
  }
}

clone_identification identify( const base& b )
{
  if ( b.max_arity() > boolean_function::max_arity )
  {
    throw error( error_kind::cap_exceeded, "base arity exceeds the cap" );
  }
  std::vector<properties> props;
  for ( const auto& item : b )
  {
    props.emplace_back( item.function );
  }
  clone_identification result;
  for ( const auto& p : props )
  {
    if ( !p.d0.is_infinite() && ( result.zero_degree.is_infinite() || p.d0.value() < result.zero_degree.value() ) )
    {
      result.zero_degree = p.d0;
    }
    if ( !p.d1.is_infinite() && ( result.one_degree.is_infinite() || p.d1.value() < result.one_degree.value() ) )
    {
      result.one_degree = p.d1;
    }
  }

  std::vector<const catalog_entry*> candidates;
  for ( const auto& e : full_catalog() )
  {
    if ( std::all_of( props.begin(), props.end(), [&]( const properties& p ) { return holds( e.name, p ); } ) )
    {
      candidates.push_back( &e );
    }
  }
  for ( const auto* c : candidates )
  {
    const bool below_all = std::all_of( candidates.begin(), candidates.end(), [&]( const catalog_entry* other ) {
      return std::all_of( c->base.begin(), c->base.end(), [&]( const properties& p ) { return holds( other->name, p ); } );
    } );
    if ( below_all )
    {
      result.clone = c->name;
      return result;
    }
  }
  // Unreachable when the catalog lists every clone.
  throw error( error_kind::invalid_argument, "no inclusion-minimal catalog clone contains the base" );
}

clone_name clone_of( const base& b )
{
  return identify( b ).clone;
}

bool member( const boolean_function& f, const base& b )
{
  return satisfies( clone_of( b ), f );
}

bool contains_constant( const base& b, bool value )
{
  return member( boolean_function::constant( 1, value ), b );
}

std::string_view to_string( sat_complexity c )
{
  return c == sat_complexity::np_complete ? "NP-complete" : "Logspace";
}

sat_complexity classify_sat( const base& b )
{
  return member( connectives::non_implication().function, b ) ? sat_complexity::np_complete : sat_complexity::logspace;
}

std::vector<std::pair<clone_name, clone_name>> covering_edges( int max_degree )
{
  if ( max_degree < 1 || max_degree > 4 )
  {
    throw error( error_kind::cap_exceeded, "lattice degree must lie in 1..4" );
  }
  const auto nodes = catalog( max_degree );
  const auto n = nodes.size();
  std::vector<std::vector<bool>> below( n, std::vector<bool>( n ) ); // below[i][j]: nodes[i] strictly inside nodes[j]
  for ( std::size_t i = 0; i < n; ++i )
  {
    for ( std::size_t j = 0; j < n; ++j )
    {
      below[i][j] = i != j && includes( nodes[j], nodes[i] ) && !includes( nodes[i], nodes[j] );
    }
  }
  std::vector<std::pair<clone_name, clone_name>> edges;
  for ( std::size_t i = 0; i < n; ++i )
  {
    for ( std::size_t j = 0; j < n; ++j )
    {
      if ( !below[i][j] )
      {
        continue;
      }
      bool covered = true;
      for ( std::size_t m = 0; m < n && covered; ++m )
      {
        covered = !( below[i][m] && below[m][j] );
      }
      if ( covered )
      {
        edges.emplace_back( nodes[i], nodes[j] );
      }
    }
  }
  return edges;
}

std::string lattice_dot( int max_degree )
{
  const auto edges = covering_edges( max_degree );
  std::ostringstream out;
  out << "digraph post_lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for ( const auto& c : catalog( max_degree ) )
  {
    out << "  \"" << to_string( c ) << "\";\n";
  }
  for ( const auto& [lower, upper] : edges )
  {
    out << "  \"" << to_string( lower ) << "\" -> \"" << to_string( upper ) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace postlat
