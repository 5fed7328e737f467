#include "postlat/closure.hpp"

#include "postlat/clones.hpp"
#include "postlat/error.hpp"

#include <algorithm>

namespace postlat
{

namespace
{

struct found
{
  std::uint64_t table;
  int size;
  int op;  // index into the base, or -1 for a projection
  int var; // projection index
  std::vector<int> args;
};

class search
{
public:
  search( const base& b, int k, std::optional<std::uint64_t> target )
      : base_( b ), k_( k ), mask_( boolean_function::table_mask( k ) ), target_( target ), seen_( std::size_t{ 1 } << ( 1u << k ), -1 )
  {
  }

  void run()
  {
    buckets_.resize( 2 );
    for ( int i = 0; i < k_; ++i )
    {
      add( boolean_function::projection( k_, i ).table(), 1, -1, i, {} );
    }
    int max_op_arity = 0;
    for ( std::size_t op = 0; op < base_.size(); ++op )
    {
      const auto& f = base_.items()[op].function;
      if ( f.arity() == 0 )
      {
        add( f( 0u ) ? mask_ : 0u, 1, static_cast<int>( op ), -1, {} );
      }
      max_op_arity = std::max( max_op_arity, f.arity() );
    }
    int max_size = 1;
    for ( int s = 2; !done() && s - 1 <= max_op_arity * max_size; ++s )
    {
      buckets_.resize( s + 1 );
      for ( std::size_t op = 0; op < base_.size() && !done(); ++op )
      {
        const auto& f = base_.items()[op].function;
        if ( f.arity() == 0 )
        {
          continue;
        }
        op_ = static_cast<int>( op );
        size_ = s;
        f1_ = cofactor( f, f.arity() - 1, true );
        f0_ = cofactor( f, f.arity() - 1, false );
        parts_.assign( f.arity(), 0 );
        compositions( 0, s - 1 );
      }
      if ( !buckets_[s].empty() )
      {
        max_size = s;
      }
    }
  }

  bool done() const
  {
    if ( target_ )
    {
      return seen_[*target_] >= 0;
    }
    return nodes_.size() == seen_.size();
  }

  const std::vector<found>& nodes() const { return nodes_; }
  int index_of( std::uint64_t table ) const { return seen_[table]; }

private:
  void add( std::uint64_t table, int size, int op, int var, std::vector<int> args )
  {
    if ( seen_[table] >= 0 )
    {
      return;
    }
    seen_[table] = static_cast<int>( nodes_.size() );
    buckets_[size].push_back( static_cast<int>( nodes_.size() ) );
    nodes_.push_back( { table, size, op, var, std::move( args ) } );
  }

  // Splits `remaining` into sizes for argument positions i..arity-1, lexicographically.
  void compositions( std::size_t i, int remaining )
  {
    const auto arity = parts_.size();
    if ( i + 1 == arity )
    {
      if ( remaining >= 1 && remaining < size_ && !buckets_[remaining].empty() )
      {
        parts_[i] = remaining;
        prefix_tables_.clear();
        prefix_ids_.clear();
        product( 0 );
      }
      return;
    }
    const int rest = static_cast<int>( arity - i - 1 );
    for ( int p = 1; p <= remaining - rest && !done(); ++p )
    {
      if ( buckets_[p].empty() )
      {
        continue;
      }
      parts_[i] = p;
      compositions( i + 1, remaining - p );
    }
  }

  void product( std::size_t i )
  {
    const auto arity = parts_.size();
    if ( i + 1 == arity )
    {
      // The last argument varies fastest: f(g1..g_{m-1}, y) = y ? F1 : F0.
      const auto one = compose_tables( f1_, prefix_tables_, mask_ );
      const auto zero = compose_tables( f0_, prefix_tables_, mask_ );
      const auto& last = buckets_[parts_[i]];
      for ( std::size_t j = 0; j < last.size(); ++j )
      {
        const auto g = nodes_[last[j]].table;
        const auto res = ( ( g & one ) | ( ~g & zero ) ) & mask_;
        if ( seen_[res] < 0 )
        {
          auto args = prefix_ids_;
          args.push_back( last[j] );
          add( res, size_, op_, -1, std::move( args ) );
          if ( done() )
          {
            return;
          }
        }
      }
      return;
    }
    const auto& bucket = buckets_[parts_[i]];
    for ( std::size_t j = 0; j < bucket.size() && !done(); ++j )
    {
      prefix_tables_.push_back( nodes_[bucket[j]].table );
      prefix_ids_.push_back( bucket[j] );
      product( i + 1 );
      prefix_tables_.pop_back();
      prefix_ids_.pop_back();
    }
  }

  const base& base_;
  int k_;
  std::uint64_t mask_;
  std::optional<std::uint64_t> target_;
  std::vector<int> seen_;
  std::vector<found> nodes_;
  std::vector<std::vector<int>> buckets_;

  // state of the composition currently being enumerated
  int op_ = 0;
  int size_ = 0;
  boolean_function f1_, f0_;
  std::vector<int> parts_;
  std::vector<std::uint64_t> prefix_tables_;
  std::vector<int> prefix_ids_;
};

class witness_builder
{
public:
  witness_builder( const base& b, const std::vector<found>& nodes ) : base_( b ), nodes_( nodes ), memo_( nodes.size() ) {}

  formula build( int i )
  {
    if ( memo_[i] )
    {
      return *memo_[i];
    }
    const auto& n = nodes_[i];
    formula result = formula::proposition( witness_variable( std::max( n.var, 0 ) ) );
    if ( n.op >= 0 )
    {
      std::vector<formula> args;
      for ( int a : n.args )
      {
        args.push_back( build( a ) );
      }
      result = formula::apply( base_.items()[n.op], std::move( args ) );
    }
    memo_[i] = result;
    return result;
  }

private:
  const base& base_;
  const std::vector<found>& nodes_;
  std::vector<std::optional<formula>> memo_;
};

void check_arity( int k )
{
  if ( k < 0 || k > max_closure_arity )
  {
    throw error( error_kind::cap_exceeded, "closure arity must lie in 0.." + std::to_string( max_closure_arity ) );
  }
}

} // namespace

std::string witness_variable( int index )
{
  return "x" + std::to_string( index + 1 );
}

bool closure_set::contains( const boolean_function& f ) const
{
  return std::find( functions_.begin(), functions_.end(), f ) != functions_.end();
}

std::optional<formula> closure_set::witness( const boolean_function& f ) const
{
  const auto it = std::find( functions_.begin(), functions_.end(), f );
  if ( it == functions_.end() )
  {
    return std::nullopt;
  }
  return witnesses_[it - functions_.begin()];
}

closure_set closure( const base& b, int k )
{
  check_arity( k );
  search s( b, k, std::nullopt );
  s.run();
  closure_set result;
  result.arity_ = k;
  witness_builder builder( b, s.nodes() );
  for ( std::size_t i = 0; i < s.nodes().size(); ++i )
  {
    result.functions_.emplace_back( k, s.nodes()[i].table );
    result.witnesses_.push_back( builder.build( static_cast<int>( i ) ) );
  }
  return result;
}

std::optional<formula> represent( const boolean_function& target, const base& b )
{
  const auto f = lift_nullary( target );
  check_arity( f.arity() );
  if ( !member( f, b ) )
  {
    return std::nullopt;
  }
  search s( b, f.arity(), f.table() );
  s.run();
  const int i = s.index_of( f.table() );
  if ( i < 0 )
  {
    throw error( error_kind::representation, "closure search missed a member of the clone" );
  }
  witness_builder builder( b, s.nodes() );
  return builder.build( i );
}

} // namespace postlat
