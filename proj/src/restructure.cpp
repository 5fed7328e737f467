#include "postlat/restructure.hpp"

#include "postlat/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace postlat
{

namespace
{

// Propositions and constants only: emit x, !x or the constant.
formula base_case( const formula& phi, bool allow_negation )
{
  const auto vars = variables( phi );
  const auto f = truth_table( phi, vars );
  if ( f.is_constant() )
  {
    return formula::constant( f( 0u ) );
  }
  auto x = formula::proposition( vars.front() );
  if ( f( 1u ) )
  {
    return x;
  }
  if ( !allow_negation )
  {
    throw error( error_kind::precondition, "monotone restructuring met a negated proposition" );
  }
  return formula::apply( connectives::negation(), { x } );
}

struct cofactors
{
  formula psi;
  formula zero;
  formula one;
};

cofactors split( const formula& phi )
{
  auto psi = select_split( phi ).subformula;
  return { psi, fold_constants( substitute( phi, psi, formula::constant( false ) ) ),
           fold_constants( substitute( phi, psi, formula::constant( true ) ) ) };
}

void require_monotone( const formula& phi )
{
  for ( const auto& c : connectives_of( phi ) )
  {
    if ( !is_monotone( c.function ) )
    {
      throw error( error_kind::precondition, "connective '" + c.name + "' is not monotone" );
    }
  }
}

void require_ternary( const connective& c )
{
  if ( c.arity() != 3 )
  {
    throw error( error_kind::invalid_argument, "combiner '" + c.name + "' must be ternary" );
  }
}

formula monotone( const formula& phi, const connective& combiner, bool dual_form )
{
  if ( phi.leaf_count() <= 1 )
  {
    return base_case( phi, false );
  }
  const auto parts = split( phi );
  auto a = monotone( parts.zero, combiner, dual_form );
  auto b = monotone( parts.one, combiner, dual_form );
  auto c = monotone( parts.psi, combiner, dual_form );
  if ( dual_form )
  {
    std::swap( a, b );
  }
  return fold_constants( formula::apply( combiner, { std::move( a ), std::move( b ), std::move( c ) } ) );
}

formula full( const formula& phi )
{
  if ( phi.leaf_count() <= 1 )
  {
    return base_case( phi, true );
  }
  const auto parts = split( phi );
  const auto a = full( parts.zero );
  const auto b = full( parts.one );
  const auto c = full( parts.psi );
  const auto& land = connectives::conjunction();
  auto combined = formula::apply( connectives::disjunction(),
                                  { formula::apply( land, { a, formula::apply( connectives::negation(), { c } ) } ), formula::apply( land, { b, c } ) } );
  return fold_constants( combined );
}

} // namespace

split_choice select_split( const formula& phi )
{
  split_choice choice{ {}, phi, phi.leaf_count(), 0, 0 };
  if ( choice.m < 2 )
  {
    throw error( error_kind::precondition, "splitting needs at least two proposition occurrences" );
  }
  choice.k = phi.max_arity();
  const auto k = static_cast<std::uint64_t>( choice.k );
  formula cur = phi;
  while ( cur.leaf_count() * ( k + 1 ) > k * choice.m )
  {
    const auto& args = cur.args();
    std::size_t best = 0;
    for ( std::size_t i = 1; i < args.size(); ++i )
    {
      if ( args[i].leaf_count() > args[best].leaf_count() )
      {
        best = i;
      }
    }
    choice.path.push_back( best );
    formula next = args[best];
    cur = next;
  }
  choice.subformula = cur;
  choice.leaves = cur.leaf_count();
  return choice;
}

std::string_view to_string( restructure_mode mode )
{
  switch ( mode )
  {
  case restructure_mode::full:
    return "full";
  case restructure_mode::g:
    return "g";
  case restructure_mode::h:
    return "h";
  }
  return "?";
}

restructure_mode parse_restructure_mode( std::string_view text )
{
  for ( auto mode : { restructure_mode::full, restructure_mode::g, restructure_mode::h } )
  {
    if ( text == to_string( mode ) )
    {
      return mode;
    }
  }
  throw error( error_kind::invalid_argument, "unknown mode '" + std::string( text ) + "' (expected full, g or h)" );
}

formula restructure_monotone_g( const formula& phi, const std::optional<connective>& combiner )
{
  require_monotone( phi );
  const auto& c = combiner ? *combiner : connectives::g();
  require_ternary( c );
  return monotone( phi, c, false );
}

formula restructure_monotone_h( const formula& phi, const std::optional<connective>& combiner )
{
  require_monotone( phi );
  const auto& c = combiner ? *combiner : connectives::h();
  require_ternary( c );
  return monotone( phi, c, true );
}

formula restructure_full( const formula& phi )
{
  return full( phi );
}

formula restructure( const formula& phi, restructure_mode mode )
{
  switch ( mode )
  {
  case restructure_mode::g:
    return restructure_monotone_g( phi );
  case restructure_mode::h:
    return restructure_monotone_h( phi );
  case restructure_mode::full:
    break;
  }
  return restructure_full( phi );
}

double depth_law::bound( std::uint64_t leaves ) const
{
  return a * std::log2( static_cast<double>( std::max<std::uint64_t>( leaves, 1u ) ) ) + b;
}

depth_law depth_law_for( restructure_mode mode, int k )
{
  // per level: 3 for (A & !C) | (B & C), 2 as stated for the monotone
  // variants (one combiner per level suffices in practice)
  const double c = mode == restructure_mode::full ? 3.0 : 2.0;
  const double d0 = mode == restructure_mode::full ? 1.0 : 0.0;
  const double kk = std::max( k, 2 );
  return { c / std::log2( ( kk + 1.0 ) / kk ), c + d0 };
}

} // namespace postlat
