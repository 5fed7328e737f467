#pragma once

/*!
  \file base.hpp
  \brief Named connectives and finite bases of connectives

  Function literals use the form `name/arity:bitstring`, e.g. `and/2:0001`.
  A base file holds one literal per line; `#` starts a comment.
*/

#include "postlat/boolean_function.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace postlat
{

struct connective
{
  std::string name;
  boolean_function function;

  int arity() const noexcept { return function.arity(); }

  friend bool operator==( const connective&, const connective& ) = default;
};

/*! \brief Ordered set of named connectives with unique names. */
class base
{
public:
  base() = default;
  base( std::initializer_list<connective> items );

  /*! \brief Appends a connective; throws on a duplicate name. */
  void add( connective c );

  /*! \brief Adds `c` unless a connective with the same function is present. */
  void add_function_if_absent( const connective& c );

  const connective* find( std::string_view name ) const;

  /*! \brief First member with the given function (names are ignored). */
  const connective* find_function( const boolean_function& f ) const;

  bool contains_function( const boolean_function& f ) const { return find_function( f ) != nullptr; }

  const std::vector<connective>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  int max_arity() const;

  friend bool operator==( const base&, const base& ) = default;

private:
  std::vector<connective> items_;
};

/*! \brief Union keeping the order of `a` followed by the new functions of `b`. */
base merge( const base& a, const base& b );

/*! \brief The base of dual functions, names suffixed with `_d`. */
base dual( const base& b );

connective parse_literal( std::string_view text );
std::string format_literal( const connective& c );

base parse_base( std::string_view text );
base load_base_file( const std::string& path );
std::string format_base( const base& b );

/*! \brief Built-in connectives used by the infix grammar and by the transformations. */
namespace connectives
{

const connective& bottom();     // 0
const connective& top();        // 1
const connective& identity();   // id
const connective& negation();   // not  (!)
const connective& conjunction(); // and (&)
const connective& disjunction(); // or  (|)
const connective& exclusive_or(); // xor (^)
const connective& implication(); // imp (->)
const connective& equivalence(); // iff (<->)
const connective& non_implication(); // nimp (-/>)
const connective& g();           // x | (y & z)
const connective& h();           // x & (y | z)
const connective& majority();    // maj

const connective& constant( bool value );

/*! \brief Looks up a built-in connective by name. */
const connective* find( std::string_view name );

const std::vector<connective>& all();

} // namespace connectives

} // namespace postlat
