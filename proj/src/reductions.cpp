#include "postlat/reductions.hpp"

#include "postlat/closure.hpp"
#include "postlat/error.hpp"
#include "postlat/restructure.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace postlat
{

namespace
{

using cf = clone_family;

clone_name clone( cf family, std::optional<int> degree = std::nullopt )
{
  return { family, degree };
}

const boolean_function xor3 = boolean_function::from_bits( "01101001" );
const boolean_function xnor3 = boolean_function::from_bits( "10010110" );

void require_generates( const base& b, const base& b_prime )
{
  for ( const auto& c : b )
  {
    if ( !member( c.function, b_prime ) )
    {
      throw error( error_kind::precondition, "connective '" + c.name + "' is not generated by the target base" );
    }
  }
}

void require_over( const formula& phi, const clone_name& cl )
{
  for ( const auto& c : connectives_of( phi ) )
  {
    if ( !satisfies( cl, c.function ) )
    {
      throw error( error_kind::precondition, "connective '" + c.name + "' lies outside the clone " + to_string( cl ) + " of the source base" );
    }
  }
}

void require_position( bool ok, std::string_view what, const clone_name& cl )
{
  if ( !ok )
  {
    throw error( error_kind::precondition, std::string( what ) + " does not hold for [B] = " + to_string( cl ) );
  }
}

const connective& junction_of( extra_connective e )
{
  return e == extra_connective::disjunction ? connectives::disjunction() : connectives::conjunction();
}

base with_extra( const base& b, extra_connective e )
{
  base out = b;
  if ( e != extra_connective::none )
  {
    out.add_function_if_absent( junction_of( e ) );
  }
  return out;
}

base with_constants( const base& b )
{
  return merge( b, base{ connectives::bottom(), connectives::top() } );
}

assignment constant_assignment( const std::vector<std::string>& vars, bool value )
{
  assignment alpha;
  for ( const auto& v : vars )
  {
    alpha[v] = value;
  }
  return alpha;
}

// Connectives are replaced by their smallest representation over `source`.
class translator
{
public:
  explicit translator( base source ) : source_( std::move( source ) ) {}

  const base& source() const { return source_; }

  bool has( const boolean_function& f ) const { return member( f, source_ ); }

  formula pattern( const boolean_function& f )
  {
    const auto key = std::make_pair( f.arity(), f.table() );
    if ( const auto it = cache_.find( key ); it != cache_.end() )
    {
      return it->second;
    }
    formula result = formula::constant( false );
    if ( const auto* same = source_.find_function( f ); same != nullptr && f.arity() > 0 )
    {
      std::vector<formula> args;
      for ( int i = 0; i < f.arity(); ++i )
      {
        args.push_back( formula::proposition( witness_variable( i ) ) );
      }
      result = formula::apply( *same, std::move( args ) );
    }
    else if ( auto rep = represent( f, source_ ) )
    {
      result = *rep;
    }
    else
    {
      throw error( error_kind::representation, "function " + f.bits() + " has no representation over " + format_base_names() );
    }
    cache_.emplace( key, result );
    return result;
  }

  formula apply( const boolean_function& f, std::vector<formula> args ) { return instantiate_positional( pattern( f ), args ); }

  formula translate( const formula& phi )
  {
    if ( const auto it = memo_.find( phi.node_id() ); it != memo_.end() )
    {
      return it->second;
    }
    formula result = phi;
    if ( phi.is_constant() )
    {
      result = formula::constant( phi.constant_value() );
    }
    else if ( phi.is_apply() )
    {
      std::vector<formula> args;
      for ( const auto& a : phi.args() )
      {
        args.push_back( translate( a ) );
      }
      result = apply( phi.op().function, std::move( args ) );
    }
    memo_.emplace( phi.node_id(), result );
    keep_.push_back( phi );
    return result;
  }

private:
  std::string format_base_names() const
  {
    std::string out = "{";
    for ( const auto& c : source_ )
    {
      out += ( out.size() > 1 ? ", " : "" ) + c.name;
    }
    return out + "}";
  }

  base source_;
  std::map<std::pair<int, std::uint64_t>, formula> cache_;
  std::unordered_map<const void*, formula> memo_;
  std::vector<formula> keep_; // keeps memo keys alive
};

// Left-heavy tree; groups of `arity` (2 or 3).  Ternary trees need an odd count.
formula tree( translator& tr, const boolean_function& op, const std::vector<formula>& items, std::size_t lo, std::size_t hi,
              const std::optional<boolean_function>& root = std::nullopt )
{
  const auto n = hi - lo;
  if ( n == 1 )
  {
    return items[lo];
  }
  const auto& fn = root ? *root : op;
  if ( op.arity() == 2 )
  {
    const auto mid = lo + ( n + 1 ) / 2;
    return tr.apply( fn, { tree( tr, op, items, lo, mid ), tree( tr, op, items, mid, hi ) } );
  }
  // three odd parts: 1 + 2 * share each, the remainder pairs go left
  const auto pairs = ( n - 3 ) / 2;
  std::size_t sizes[3];
  for ( std::size_t i = 0; i < 3; ++i )
  {
    sizes[i] = 1 + 2 * ( pairs / 3 + ( i < pairs % 3 ? 1 : 0 ) );
  }
  const auto a = lo + sizes[0];
  const auto b = a + sizes[1];
  return tr.apply( fn, { tree( tr, op, items, lo, a ), tree( tr, op, items, a, b ), tree( tr, op, items, b, hi ) } );
}

formula tree( translator& tr, const boolean_function& op, const std::vector<formula>& items, const std::optional<boolean_function>& root = std::nullopt )
{
  return tree( tr, op, items, 0, items.size(), root );
}

std::vector<formula> propositions( const std::vector<std::string>& names )
{
  std::vector<formula> out;
  for ( const auto& n : names )
  {
    out.push_back( formula::proposition( n ) );
  }
  return out;
}

// A variable-free representation of a constant over `b`, if one exists.
std::optional<formula> closed_constant( const base& b, bool value )
{
  return closure( b, 0 ).witness( boolean_function::constant( 0, value ) );
}

// Constant `value` over the translator's base, anchored at `anchor` when it needs a variable.
formula constant_formula( translator& tr, bool value, const std::optional<std::string>& anchor )
{
  if ( const auto* member = tr.source().find_function( boolean_function::constant( 0, value ) ) )
  {
    return formula::apply( *member, {} );
  }
  if ( anchor )
  {
    return tr.apply( boolean_function::constant( 1, value ), { formula::proposition( *anchor ) } );
  }
  if ( auto closed = closed_constant( tr.source(), value ) )
  {
    return *closed;
  }
  throw error( error_kind::representation, std::string( "constant " ) + ( value ? "1" : "0" ) + " has no variable-free representation over the target" );
}

formula replace_constants( const formula& phi, const base& keep, const std::optional<formula> replacement[2],
                           std::unordered_map<const void*, formula>& memo, std::vector<formula>& alive )
{
  if ( phi.is_proposition() )
  {
    return phi;
  }
  if ( const auto it = memo.find( phi.node_id() ); it != memo.end() )
  {
    return it->second;
  }
  formula result = phi;
  if ( phi.is_constant() )
  {
    if ( !keep.contains_function( phi.op().function ) )
    {
      result = *replacement[phi.constant_value() ? 1 : 0];
    }
  }
  else
  {
    std::vector<formula> args;
    bool changed = false;
    for ( const auto& a : phi.args() )
    {
      args.push_back( replace_constants( a, keep, replacement, memo, alive ) );
      changed = changed || args.back().node_id() != a.node_id();
    }
    if ( changed )
    {
      result = formula::apply( phi.op(), std::move( args ) );
    }
  }
  memo.emplace( phi.node_id(), result );
  alive.push_back( phi );
  return result;
}

void collect_constants( const formula& phi, const base& keep, bool needed[2] )
{
  if ( phi.is_constant() )
  {
    if ( !keep.contains_function( phi.op().function ) )
    {
      needed[phi.constant_value() ? 1 : 0] = true;
    }
    return;
  }
  if ( phi.is_apply() )
  {
    for ( const auto& a : phi.args() )
    {
      collect_constants( a, keep, needed );
    }
  }
}

certificate certify( const formula& in, const formula& out )
{
  certificate cert;
  cert.depth_in = in.depth();
  cert.depth_out = out.depth();
  cert.size_in = in.size();
  cert.size_out = out.size();
  auto vars = variables( in );
  for ( const auto& v : variables( out ) )
  {
    if ( std::find( vars.begin(), vars.end(), v ) == vars.end() )
    {
      vars.push_back( v );
    }
  }
  if ( static_cast<int>( vars.size() ) <= default_verification_cap )
  {
    cert.verified = true;
    cert.equivalent = equivalent( in, out );
  }
  return cert;
}

reduction_output finish( const formula& in, formula out, const base& b_prime, extra_connective extra, std::vector<std::string> fresh, std::string route )
{
  reduction_output r{ out, with_extra( b_prime, extra ), extra, std::move( fresh ), certify( in, out ), 0, std::move( route ) };
  if ( r.check.verified && !r.check.equivalent )
  {
    throw error( error_kind::representation, "internal error: the " + r.route + " pipeline produced an inequivalent formula" );
  }
  return r;
}

enum class route_kind
{
  monotone_g,
  monotone_h,
  full
};

reduction_output pipeline( const formula& phi, const base& b_prime, route_kind kind, const std::optional<connective>& combiner, extra_connective extra,
                           constant_mode mode, std::string route )
{
  formula restructured = kind == route_kind::full         ? restructure_full( phi )
                         : kind == route_kind::monotone_g ? restructure_monotone_g( phi, combiner )
                                                          : restructure_monotone_h( phi, combiner );
  translator tr( kind == route_kind::full ? with_constants( b_prime ) : b_prime );
  const auto translated = tr.translate( restructured );
  auto elim = eliminate_constants( translated, b_prime, mode, extra, phi );
  return finish( phi, elim.result, b_prime, extra, std::move( elim.fresh_vars ), std::move( route ) );
}

reduction_output direct( const formula& phi, const base& b_prime, extra_connective extra, std::string route )
{
  translator tr( b_prime );
  auto elim = eliminate_constants( tr.translate( phi ), b_prime, constant_mode::junction, extra, phi );
  return finish( phi, elim.result, b_prime, extra, std::move( elim.fresh_vars ), std::move( route ) );
}

struct checked
{
  clone_name cl;
};

checked prepare( const formula& phi, const base& b, const base& b_prime )
{
  const auto cl = clone_of( b );
  require_over( phi, cl );
  require_generates( b, b_prime );
  return { cl };
}

reduction_output monotone_route( const formula& phi, const base& b_prime, bool dual_side, extra_connective extra, std::string route )
{
  return pipeline( phi, b_prime, dual_side ? route_kind::monotone_h : route_kind::monotone_g, std::nullopt, extra, constant_mode::junction,
                   std::move( route ) );
}

reduction_output full_route( const formula& phi, const base& b_prime, extra_connective extra, std::string route )
{
  return pipeline( phi, b_prime, route_kind::full, std::nullopt, extra, constant_mode::junction, std::move( route ) );
}

} // namespace

std::string_view to_string( extra_connective e )
{
  switch ( e )
  {
  case extra_connective::conjunction:
    return "and";
  case extra_connective::disjunction:
    return "or";
  case extra_connective::none:
    break;
  }
  return "none";
}

normal_form normalize_E( const formula& phi, const base& b )
{
  const auto cl = clone_of( b );
  require_position( includes( clone( cf::E ), cl ), "[B] <= E", cl );
  require_over( phi, cl );
  const auto vars = variables( phi );
  auto alpha = constant_assignment( vars, true );
  normal_form nf{ evaluate( phi, alpha ), {}, formula::constant( false ) };
  if ( nf.c )
  {
    for ( const auto& v : vars )
    {
      alpha[v] = false;
      if ( !evaluate( phi, alpha ) )
      {
        nf.indices.push_back( v );
      }
      alpha[v] = true;
    }
  }
  nf.result = !nf.c ? formula::constant( false ) : nf.indices.empty() ? formula::constant( true ) : balanced( connectives::conjunction(), propositions( nf.indices ) );
  return nf;
}

normal_form normalize_V( const formula& phi, const base& b )
{
  const auto cl = clone_of( b );
  require_position( includes( clone( cf::V ), cl ), "[B] <= V", cl );
  require_over( phi, cl );
  const auto vars = variables( phi );
  auto alpha = constant_assignment( vars, false );
  normal_form nf{ evaluate( phi, alpha ), {}, formula::constant( true ) };
  if ( !nf.c )
  {
    for ( const auto& v : vars )
    {
      alpha[v] = true;
      if ( evaluate( phi, alpha ) )
      {
        nf.indices.push_back( v );
      }
      alpha[v] = false;
    }
  }
  nf.result = nf.c ? formula::constant( true ) : nf.indices.empty() ? formula::constant( false ) : balanced( connectives::disjunction(), propositions( nf.indices ) );
  return nf;
}

normal_form normalize_L( const formula& phi, const base& b )
{
  const auto cl = clone_of( b );
  require_position( includes( clone( cf::L ), cl ), "[B] <= L", cl );
  require_over( phi, cl );
  const auto vars = variables( phi );
  auto alpha = constant_assignment( vars, false );
  normal_form nf{ evaluate( phi, alpha ), {}, formula::constant( false ) };
  for ( const auto& v : vars )
  {
    alpha[v] = true;
    if ( evaluate( phi, alpha ) != nf.c )
    {
      nf.indices.push_back( v );
    }
    alpha[v] = false;
  }
  auto items = propositions( nf.indices );
  if ( nf.c )
  {
    items.insert( items.begin(), formula::constant( true ) );
  }
  nf.result = items.empty() ? formula::constant( false ) : balanced( connectives::exclusive_or(), items );
  return nf;
}

elimination eliminate_constants( const formula& phi, const base& b_prime, constant_mode mode, extra_connective extra, const formula& original )
{
  const auto target = with_extra( b_prime, extra );
  const auto folded = fold_constants( phi );
  if ( folded.is_constant() )
  {
    // the propositions folded away can still carry the constant
    translator tr( target );
    auto vars = variables( phi );
    if ( vars.empty() )
    {
      vars = variables( original );
    }
    const auto anchor = vars.empty() ? std::nullopt : std::optional<std::string>( vars.front() );
    return { constant_formula( tr, folded.constant_value(), anchor ), {} };
  }

  bool needed[2] = { false, false };
  collect_constants( folded, target, needed );
  if ( !needed[0] && !needed[1] )
  {
    return { folded, {} };
  }

  translator tr( target );
  const auto vars = variables( folded );
  std::optional<formula> replacement[2];
  std::vector<std::string> fresh;

  if ( mode == constant_mode::tautology )
  {
    const auto t = formula::proposition( "__t0" );
    fresh.push_back( "__t0" );
    const auto not_t = tr.apply( connectives::negation().function, { t } );
    for ( int v = 0; v < 2; ++v )
    {
      if ( needed[v] )
      {
        replacement[v] = tr.apply( ( v ? connectives::disjunction() : connectives::conjunction() ).function, { t, not_t } );
      }
    }
  }
  else
  {
    for ( int v = 0; v < 2; ++v )
    {
      if ( !needed[v] )
      {
        continue;
      }
      if ( contains_constant( target, v == 1 ) )
      {
        replacement[v] = constant_formula( tr, v == 1, vars.front() );
        continue;
      }
      // 1 -> x1 | ... | xn needs phi(0..0) = 0; 0 -> x1 & ... & xn needs phi(1..1) = 1
      const bool probe = v == 0;
      if ( evaluate( original, constant_assignment( variables( original ), probe ) ) != probe )
      {
        throw error( error_kind::precondition, std::string( "constant " ) + ( v ? "1" : "0" ) + " cannot be eliminated: the formula is not " +
                                                   ( v ? "0" : "1" ) + "-reproducing" );
      }
      const auto& junction = v ? connectives::disjunction() : connectives::conjunction();
      if ( vars.size() > 1 && !tr.has( junction.function ) )
      {
        throw error( error_kind::representation, "constant elimination needs '" + junction.name + "' in the target clone" );
      }
      replacement[v] = tree( tr, junction.function, propositions( vars ) );
    }
  }

  std::unordered_map<const void*, formula> memo;
  std::vector<formula> alive;
  return { replace_constants( folded, target, replacement, memo, alive ), std::move( fresh ) };
}

reduction_output reduce_S00( const formula& phi, const base& b, const base& b_prime )
{
  const auto [cl] = prepare( phi, b, b_prime );
  require_position( includes( cl, clone( cf::S00 ) ) && includes( clone( cf::M ), cl ), "S00 <= [B] <= M", cl );
  return monotone_route( phi, b_prime, false, extra_connective::conjunction, "S00" );
}

reduction_output reduce_S10( const formula& phi, const base& b, const base& b_prime )
{
  const auto [cl] = prepare( phi, b, b_prime );
  require_position( includes( cl, clone( cf::S10 ) ) && includes( clone( cf::M ), cl ), "S10 <= [B] <= M", cl );
  return monotone_route( phi, b_prime, true, extra_connective::disjunction, "S10" );
}

reduction_output reduce_S02( const formula& phi, const base& b, const base& b_prime )
{
  const auto [cl] = prepare( phi, b, b_prime );
  require_position( includes( cl, clone( cf::S02 ) ), "S02 <= [B]", cl );
  return full_route( phi, b_prime, extra_connective::conjunction, "S02" );
}

reduction_output reduce_S12( const formula& phi, const base& b, const base& b_prime )
{
  const auto [cl] = prepare( phi, b, b_prime );
  require_position( includes( cl, clone( cf::S12 ) ), "S12 <= [B]", cl );
  return full_route( phi, b_prime, extra_connective::disjunction, "S12" );
}

reduction_output reduce_D( const formula& phi, const base& b, const base& b_prime, extra_connective want )
{
  if ( want == extra_connective::none )
  {
    throw error( error_kind::invalid_argument, "reduce_D needs 'and' or 'or' as the extra connective" );
  }
  const auto [cl] = prepare( phi, b, b_prime );
  require_position( includes( cl, clone( cf::D2 ) ) && includes( clone( cf::D ), cl ), "D2 <= [B] <= D", cl );
  const bool dual_side = want == extra_connective::disjunction;
  if ( cl == clone( cf::D2 ) )
  {
    // g (or h) may be missing from [B']; majority is in [B] and combines
    // phi0 <= phi1 the same way.
    const auto& preferred = dual_side ? connectives::h() : connectives::g();
    const auto combiner = member( preferred.function, b_prime ) ? preferred : connectives::majority();
    try
    {
      return pipeline( phi, b_prime, dual_side ? route_kind::monotone_h : route_kind::monotone_g, combiner, want, constant_mode::junction, "D2" );
    }
    catch ( const error& e )
    {
      if ( e.kind() != error_kind::representation )
      {
        throw;
      }
    }
    // [B' + want] lacks the other junction, so a surviving constant cannot be
    // removed; translate connective by connective instead.
    return direct( phi, b_prime, want, "D-direct" );
  }
  const auto mode = clone_of( b_prime ) == clone( cf::BF ) ? constant_mode::tautology : constant_mode::junction;
  return pipeline( phi, b_prime, route_kind::full, std::nullopt, want, mode, "D1" );
}

reduction_output reduce_EVL( const formula& phi, const base& b, const base& b_prime )
{
  const auto [cl] = prepare( phi, b, b_prime );
  const bool in_v = includes( clone( cf::V ), cl );
  const bool in_l = !in_v && includes( clone( cf::L ), cl );
  const bool in_e = !in_v && !in_l && includes( clone( cf::E ), cl );
  require_position( in_v || in_l || in_e, "[B] <= V, L or E", cl );

  translator tr( b_prime );
  const auto vars = variables( phi );
  const auto anchor = vars.empty() ? std::nullopt : std::optional<std::string>( vars.front() );
  formula out = formula::constant( false );
  std::string route;

  if ( in_v || in_e )
  {
    const auto nf = in_v ? normalize_V( phi, b ) : normalize_E( phi, b );
    route = in_v ? "V" : "E";
    const bool absorbing = in_v ? nf.c : !nf.c; // the constant decides the value on its own
    if ( absorbing || nf.indices.empty() )
    {
      out = constant_formula( tr, nf.c, anchor );
    }
    else
    {
      const auto& op = in_v ? connectives::disjunction() : connectives::conjunction();
      out = tree( tr, op.function, propositions( nf.indices ) );
    }
  }
  else
  {
    const auto nf = normalize_L( phi, b );
    route = "L";
    const auto items = propositions( nf.indices );
    const auto& neg = connectives::negation().function;
    const auto& x2 = connectives::exclusive_or().function;
    const auto& e2 = connectives::equivalence().function;
    const auto j = items.size();
    if ( j == 0 )
    {
      out = constant_formula( tr, nf.c, anchor );
    }
    else if ( j == 1 )
    {
      out = nf.c ? tr.apply( neg, { items[0] } ) : items[0];
    }
    else
    {
      bool parity = false; // constant computed by the tree built so far
      if ( tr.has( x2 ) )
      {
        const bool swap_root = nf.c && tr.has( e2 );
        out = tree( tr, x2, items, swap_root ? std::optional( e2 ) : std::nullopt );
        parity = swap_root;
      }
      else if ( tr.has( e2 ) )
      {
        out = tree( tr, e2, items );
        parity = ( j - 1 ) % 2 == 1;
      }
      else if ( j % 2 == 1 && tr.has( xor3 ) )
      {
        const bool swap_root = nf.c && tr.has( xnor3 );
        out = tree( tr, xor3, items, swap_root ? std::optional( xnor3 ) : std::nullopt );
        parity = swap_root;
      }
      else
      {
        throw error( error_kind::representation, "no affine combiner available over the target base" );
      }
      if ( parity != nf.c )
      {
        out = tr.apply( neg, { out } );
      }
    }
  }
  return finish( phi, out, b_prime, extra_connective::none, {}, route );
}

char theorem_case( const base& b )
{
  const auto cl = clone_of( b );
  if ( includes( clone( cf::V ), cl ) )
    return 'a';
  if ( includes( clone( cf::L ), cl ) )
    return 'b';
  if ( includes( clone( cf::E ), cl ) )
    return 'c';
  if ( includes( cl, clone( cf::S00 ) ) && includes( clone( cf::S0, 2 ), cl ) )
    return 'd';
  if ( includes( cl, clone( cf::S10 ) ) && includes( clone( cf::S1, 2 ), cl ) )
    return 'e';
  if ( includes( cl, clone( cf::D2 ) ) && includes( clone( cf::D ), cl ) )
    return 'f';
  if ( includes( cl, clone( cf::M2 ) ) )
    return 'g';
  throw error( error_kind::invalid_argument, "internal error: " + to_string( cl ) + " falls outside every case of the dispatcher" );
}

reduction_output theorem_reduce( const formula& phi, const base& b, const base& b_prime )
{
  const auto [cl] = prepare( phi, b, b_prime );
  const char c = theorem_case( b );
  reduction_output out = [&]() {
    switch ( c )
    {
    case 'a':
    case 'b':
    case 'c':
      return reduce_EVL( phi, b, b_prime );
    case 'd':
      return includes( clone( cf::S01, 2 ), cl ) ? reduce_S00( phi, b, b_prime ) : reduce_S02( phi, b, b_prime );
    case 'e':
      return includes( clone( cf::S11, 2 ), cl ) ? reduce_S10( phi, b, b_prime ) : reduce_S12( phi, b, b_prime );
    case 'f':
      return reduce_D( phi, b, b_prime, extra_connective::conjunction );
    default:
      break;
    }
    // (g): and, or are in [B] <= [B'], so no literal junction is needed
    if ( !member( connectives::conjunction().function, b_prime ) || !member( connectives::disjunction().function, b_prime ) )
    {
      throw error( error_kind::invalid_argument, "internal error: case (g) without and/or in the target clone" );
    }
    return includes( clone( cf::M ), cl ) ? monotone_route( phi, b_prime, false, extra_connective::none, "M" )
                                          : full_route( phi, b_prime, extra_connective::none, "BF" );
  }();
  out.theorem_case = c;
  return out;
}

canonical_mapping canonical_equivalent( const base& b )
{
  namespace k = connectives;
  canonical_mapping m;
  m.clone = clone_of( b );
  m.theorem_case = theorem_case( b );
  m.extra = m.theorem_case == 'd' || m.theorem_case == 'f' ? extra_connective::conjunction
            : m.theorem_case == 'e'                         ? extra_connective::disjunction
                                                            : extra_connective::none;
  if ( m.clone.degree )
  {
    return m;
  }
  switch ( m.clone.family )
  {
  case cf::BF:
    m.canonical = base{ k::conjunction(), k::disjunction(), k::negation() };
    break;
  case cf::M:
    m.canonical = base{ k::conjunction(), k::disjunction(), k::bottom(), k::top() };
    break;
  case cf::L:
    m.canonical = base{ k::exclusive_or(), k::top() };
    break;
  case cf::N:
    m.canonical = base{ k::negation(), k::top() };
    break;
  case cf::E:
    m.canonical = base{ k::conjunction(), k::bottom(), k::top() };
    break;
  case cf::V:
    m.canonical = base{ k::disjunction(), k::bottom(), k::top() };
    break;
  default:
    break;
  }
  return m;
}

reduction_output to_canonical( const formula& phi, const base& b )
{
  const auto m = canonical_equivalent( b );
  if ( !m.canonical )
  {
    throw error( error_kind::invalid_argument, "no canonical connective set for " + to_string( m.clone ) );
  }
  return theorem_reduce( phi, b, *m.canonical );
}

reduction_output from_canonical( const formula& phi, const base& b )
{
  const auto m = canonical_equivalent( b );
  if ( !m.canonical )
  {
    throw error( error_kind::invalid_argument, "no canonical connective set for " + to_string( m.clone ) );
  }
  return theorem_reduce( phi, *m.canonical, b );
}

} // namespace postlat
