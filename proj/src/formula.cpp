#include "postlat/formula.hpp"

#include "postlat/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>
#include <variant>

namespace postlat
{

struct formula::node
{
  std::string name; // proposition name; empty for applications
  connective op;
  std::vector<formula> args;
  bool proposition = false;

  std::uint64_t size = 1;
  std::uint64_t leaves = 0;
  int depth = 0;
  int max_arity = 0;
  std::size_t hash = 0;
};

namespace
{

std::size_t mix( std::size_t seed, std::size_t value )
{
  return seed ^ ( value + 0x9e3779b97f4a7c15ull + ( seed << 6 ) + ( seed >> 2 ) );
}

} // namespace

formula formula::proposition( std::string name )
{
  if ( name.empty() )
  {
    throw error( error_kind::invalid_argument, "proposition names must be nonempty" );
  }
  auto n = std::make_shared<node>();
  n->proposition = true;
  n->leaves = 1;
  n->hash = mix( 0x51ed27, std::hash<std::string>{}( name ) );
  n->name = std::move( name );
  return formula( std::move( n ) );
}

formula formula::apply( connective op, std::vector<formula> args )
{
  if ( static_cast<int>( args.size() ) != op.arity() )
  {
    throw error( error_kind::arity_mismatch, "connective '" + op.name + "' has arity " + std::to_string( op.arity() ) + " but got " +
                                                 std::to_string( args.size() ) + " arguments" );
  }
  auto n = std::make_shared<node>();
  n->max_arity = op.arity();
  std::size_t h = mix( std::hash<std::string>{}( op.name ), op.function.table() );
  h = mix( h, static_cast<std::size_t>( op.arity() ) );
  int child_depth = -1;
  for ( const auto& a : args )
  {
    n->size += a.node_->size;
    n->leaves += a.node_->leaves;
    child_depth = std::max( child_depth, a.node_->depth );
    n->max_arity = std::max( n->max_arity, a.node_->max_arity );
    h = mix( h, a.node_->hash );
  }
  n->depth = child_depth + 1; // nullary: 0
  n->hash = h;
  n->op = std::move( op );
  n->args = std::move( args );
  return formula( std::move( n ) );
}

formula formula::constant( bool value )
{
  return apply( connectives::constant( value ), {} );
}

bool formula::is_proposition() const noexcept { return node_->proposition; }
bool formula::is_constant() const noexcept { return !node_->proposition && node_->args.empty(); }

bool formula::constant_value() const
{
  if ( !is_constant() )
  {
    throw error( error_kind::invalid_argument, "formula is not a constant" );
  }
  return node_->op.function( 0u );
}

const std::string& formula::name() const
{
  if ( !node_->proposition )
  {
    throw error( error_kind::invalid_argument, "formula is not a proposition" );
  }
  return node_->name;
}

const connective& formula::op() const
{
  if ( node_->proposition )
  {
    throw error( error_kind::invalid_argument, "proposition has no connective" );
  }
  return node_->op;
}

const std::vector<formula>& formula::args() const { return node_->args; }
std::uint64_t formula::size() const noexcept { return node_->size; }
int formula::depth() const noexcept { return node_->depth; }
std::uint64_t formula::leaf_count() const noexcept { return node_->leaves; }
int formula::max_arity() const noexcept { return node_->max_arity; }
std::size_t formula::hash() const noexcept { return node_->hash; }

bool operator==( const formula& a, const formula& b )
{
  if ( a.node_ == b.node_ )
  {
    return true;
  }
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if ( x.hash != y.hash || x.size != y.size || x.proposition != y.proposition )
  {
    return false;
  }
  if ( x.proposition )
  {
    return x.name == y.name;
  }
  return x.op == y.op && x.args == y.args;
}

std::vector<std::string> variables( const formula& phi )
{
  std::vector<std::string> out;
  std::set<std::string, std::less<>> seen;
  std::function<void( const formula& )> visit = [&]( const formula& f ) {
    if ( f.is_proposition() )
    {
      if ( seen.insert( f.name() ).second )
      {
        out.push_back( f.name() );
      }
      return;
    }
    for ( const auto& a : f.args() )
    {
      visit( a );
    }
  };
  visit( phi );
  return out;
}

formula_metrics metrics( const formula& phi )
{
  return formula_metrics{ phi.size(), phi.depth(), phi.leaf_count(), variables( phi ) };
}

bool evaluate( const formula& phi, const assignment& alpha )
{
  if ( phi.is_proposition() )
  {
    const auto it = alpha.find( phi.name() );
    if ( it == alpha.end() )
    {
      throw error( error_kind::unbound_proposition, "proposition '" + phi.name() + "' has no value" );
    }
    return it->second;
  }
  std::uint64_t row = 0u;
  for ( const auto& a : phi.args() )
  {
    row = ( row << 1 ) | ( evaluate( a, alpha ) ? 1u : 0u );
  }
  return phi.op().function( row );
}

namespace
{

void check_var_order( const formula& phi, const std::vector<std::string>& var_order )
{
  std::set<std::string, std::less<>> names( var_order.begin(), var_order.end() );
  if ( names.size() != var_order.size() )
  {
    throw error( error_kind::invalid_argument, "variable order contains duplicates" );
  }
  for ( const auto& v : variables( phi ) )
  {
    if ( !names.contains( v ) )
    {
      throw error( error_kind::missing_variable, "variable '" + v + "' missing from variable order" );
    }
  }
}

// Row pattern of input `bit` (counted from the low end of the row index).
std::vector<std::uint64_t> input_pattern( int bit, std::size_t words, std::uint64_t last_mask )
{
  static constexpr std::uint64_t low_patterns[6] = {
      0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
      0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
  std::vector<std::uint64_t> out( words );
  for ( std::size_t w = 0; w < words; ++w )
  {
    if ( bit < 6 )
    {
      out[w] = low_patterns[bit];
    }
    else
    {
      out[w] = ( ( w >> ( bit - 6 ) ) & 1u ) ? ~std::uint64_t{ 0 } : 0u;
    }
  }
  out.back() &= last_mask;
  return out;
}

struct bit_evaluator
{
  std::unordered_map<std::string, std::vector<std::uint64_t>> inputs;
  std::size_t words = 1;
  std::uint64_t last_mask = ~std::uint64_t{ 0 };

  std::vector<std::uint64_t> run( const formula& phi ) const
  {
    if ( phi.is_proposition() )
    {
      return inputs.at( phi.name() );
    }
    std::vector<std::vector<std::uint64_t>> children;
    children.reserve( phi.args().size() );
    for ( const auto& a : phi.args() )
    {
      children.push_back( run( a ) );
    }
    std::vector<std::uint64_t> out( words );
    std::vector<std::uint64_t> column( children.size() );
    for ( std::size_t w = 0; w < words; ++w )
    {
      for ( std::size_t i = 0; i < children.size(); ++i )
      {
        column[i] = children[i][w];
      }
      out[w] = compose_tables( phi.op().function, column, w + 1 == words ? last_mask : ~std::uint64_t{ 0 } );
    }
    return out;
  }
};

} // namespace

std::vector<std::uint64_t> truth_bits( const formula& phi, const std::vector<std::string>& var_order )
{
  check_var_order( phi, var_order );
  const int n = static_cast<int>( var_order.size() );
  if ( n > 40 )
  {
    throw error( error_kind::cap_exceeded, "too many variables for a truth table" );
  }
  bit_evaluator ev;
  ev.words = n <= 6 ? 1u : ( std::size_t{ 1 } << ( n - 6 ) );
  ev.last_mask = n <= 6 ? boolean_function::table_mask( n ) : ~std::uint64_t{ 0 };
  for ( int i = 0; i < n; ++i )
  {
    ev.inputs.emplace( var_order[i], input_pattern( n - 1 - i, ev.words, ev.last_mask ) );
  }
  return ev.run( phi );
}

boolean_function truth_table( const formula& phi, const std::vector<std::string>& var_order )
{
  if ( static_cast<int>( var_order.size() ) > boolean_function::max_arity )
  {
    check_var_order( phi, var_order );
    throw error( error_kind::cap_exceeded, "truth_table supports at most " + std::to_string( boolean_function::max_arity ) + " variables" );
  }
  const auto bits = truth_bits( phi, var_order );
  return boolean_function( static_cast<int>( var_order.size() ), bits.front() );
}

formula substitute( const formula& phi, const formula& alpha, const formula& beta )
{
  if ( phi == alpha )
  {
    return beta;
  }
  if ( phi.is_proposition() || phi.args().empty() || phi.size() <= alpha.size() )
  {
    return phi;
  }
  std::vector<formula> args;
  args.reserve( phi.args().size() );
  bool changed = false;
  for ( const auto& a : phi.args() )
  {
    args.push_back( substitute( a, alpha, beta ) );
    changed = changed || !( args.back().node_id() == a.node_id() );
  }
  return changed ? formula::apply( phi.op(), std::move( args ) ) : phi;
}

formula instantiate( const formula& phi, const std::map<std::string, formula, std::less<>>& bindings )
{
  if ( phi.is_proposition() )
  {
    const auto it = bindings.find( phi.name() );
    return it == bindings.end() ? phi : it->second;
  }
  if ( phi.args().empty() )
  {
    return phi;
  }
  std::vector<formula> args;
  args.reserve( phi.args().size() );
  for ( const auto& a : phi.args() )
  {
    args.push_back( instantiate( a, bindings ) );
  }
  return formula::apply( phi.op(), std::move( args ) );
}

formula instantiate_positional( const formula& pattern, const std::vector<formula>& args )
{
  std::map<std::string, formula, std::less<>> bindings;
  for ( std::size_t i = 0; i < args.size(); ++i )
  {
    bindings.emplace( "x" + std::to_string( i + 1 ), args[i] );
  }
  return instantiate( pattern, bindings );
}

bool equivalent( const formula& phi, const formula& psi, int cap )
{
  auto vars = variables( phi );
  for ( const auto& v : variables( psi ) )
  {
    if ( std::find( vars.begin(), vars.end(), v ) == vars.end() )
    {
      vars.push_back( v );
    }
  }
  if ( static_cast<int>( vars.size() ) > cap )
  {
    throw error( error_kind::cap_exceeded, std::to_string( vars.size() ) + " variables exceed the verification cap of " + std::to_string( cap ) );
  }
  return truth_bits( phi, vars ) == truth_bits( psi, vars );
}

formula fold_constants( const formula& phi )
{
  if ( phi.is_proposition() || phi.args().empty() )
  {
    return phi;
  }
  std::vector<formula> args;
  args.reserve( phi.args().size() );
  bool changed = false;
  bool any_constant = false;
  for ( const auto& a : phi.args() )
  {
    args.push_back( fold_constants( a ) );
    changed = changed || args.back().node_id() != a.node_id();
    any_constant = any_constant || args.back().is_constant();
  }
  if ( any_constant )
  {
    auto restricted = phi.op().function;
    std::vector<formula> rest;
    for ( int i = static_cast<int>( args.size() ) - 1; i >= 0; --i )
    {
      if ( args[i].is_constant() )
      {
        restricted = cofactor( restricted, i, args[i].constant_value() );
      }
    }
    for ( const auto& a : args )
    {
      if ( !a.is_constant() )
      {
        rest.push_back( a );
      }
    }
    if ( restricted.is_constant() )
    {
      return formula::constant( restricted( 0u ) );
    }
    for ( int j = 0; j < restricted.arity(); ++j )
    {
      if ( restricted == boolean_function::projection( restricted.arity(), j ) )
      {
        return rest[j];
      }
    }
  }
  return changed ? formula::apply( phi.op(), std::move( args ) ) : phi;
}

base connectives_of( const formula& phi )
{
  base out;
  std::function<void( const formula& )> visit = [&]( const formula& f ) {
    if ( f.is_proposition() )
    {
      return;
    }
    if ( out.find( f.op().name ) == nullptr && !out.contains_function( f.op().function ) )
    {
      out.add( f.op() );
    }
    for ( const auto& a : f.args() )
    {
      visit( a );
    }
  };
  visit( phi );
  return out;
}

bool uses_only( const formula& phi, const base& b )
{
  if ( phi.is_proposition() )
  {
    return true;
  }
  if ( !b.contains_function( phi.op().function ) )
  {
    return false;
  }
  return std::all_of( phi.args().begin(), phi.args().end(), [&]( const formula& a ) { return uses_only( a, b ); } );
}

formula balanced( const connective& op, const std::vector<formula>& items )
{
  if ( items.empty() )
  {
    throw error( error_kind::invalid_argument, "balanced tree over an empty list" );
  }
  if ( op.arity() != 2 )
  {
    throw error( error_kind::arity_mismatch, "balanced trees need a binary connective" );
  }
  std::function<formula( std::size_t, std::size_t )> build = [&]( std::size_t lo, std::size_t hi ) -> formula {
    if ( hi - lo == 1 )
    {
      return items[lo];
    }
    const auto mid = lo + ( hi - lo + 1 ) / 2;
    return formula::apply( op, { build( lo, mid ), build( mid, hi ) } );
  };
  return build( 0, items.size() );
}

} // namespace postlat
