#pragma once

/*!
  \file formula.hpp
  \brief Propositional formulas over named connectives

  A formula is an immutable tree whose leaves are propositions and whose
  inner nodes apply a connective to exactly `arity` arguments.  Constants
  are nullary applications.  Subtrees are shared, so copying is cheap.

  Metrics:
  - size: number of nodes (propositions, constants and applications)
  - depth: nesting of applications with at least one argument; leaves
    (propositions and constants) have depth 0
  - leaf count: number of proposition occurrences
*/

#include "postlat/base.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace postlat
{

class formula
{
public:
  static formula proposition( std::string name );
  static formula apply( connective op, std::vector<formula> args );
  static formula constant( bool value );

  bool is_proposition() const noexcept;
  bool is_apply() const noexcept { return !is_proposition(); }

  /*! \brief Nullary application. */
  bool is_constant() const noexcept;

  /*! \brief Value of a nullary application. */
  bool constant_value() const;

  const std::string& name() const;
  const connective& op() const;
  const std::vector<formula>& args() const;

  std::uint64_t size() const noexcept;
  int depth() const noexcept;
  std::uint64_t leaf_count() const noexcept;

  /*! \brief Largest arity of a connective occurring in the tree. */
  int max_arity() const noexcept;

  std::size_t hash() const noexcept;

  /*! \brief Address of the shared node; stable for the lifetime of any copy. */
  const void* node_id() const noexcept { return node_.get(); }

  friend bool operator==( const formula& a, const formula& b );

private:
  struct node;
  explicit formula( std::shared_ptr<const node> n ) : node_( std::move( n ) ) {}

  std::shared_ptr<const node> node_;
};

using assignment = std::map<std::string, bool, std::less<>>;

struct formula_metrics
{
  std::uint64_t size = 0;
  int depth = 0;
  std::uint64_t leaf_count = 0;
  std::vector<std::string> vars;
};

/*! \brief Distinct propositions in order of first occurrence. */
std::vector<std::string> variables( const formula& phi );

formula_metrics metrics( const formula& phi );

bool evaluate( const formula& phi, const assignment& alpha );

/*! \brief Truth table over `var_order` (at most 6 variables, first is the high bit). */
boolean_function truth_table( const formula& phi, const std::vector<std::string>& var_order );

/*! \brief Bit-parallel truth table over any number of variables.

  Row r (first variable is the high bit) is bit r%64 of word r/64.  At
  least one word is returned; unused bits of the last word are zero.
*/
std::vector<std::uint64_t> truth_bits( const formula& phi, const std::vector<std::string>& var_order );

/*! \brief Replaces every subtree equal to `alpha` by `beta`, outside-in, without rescanning. */
formula substitute( const formula& phi, const formula& alpha, const formula& beta );

/*! \brief Simultaneously replaces propositions named in `bindings`. */
formula instantiate( const formula& phi, const std::map<std::string, formula, std::less<>>& bindings );

/*! \brief Propositions x1..xn bound to `args` in order. */
formula instantiate_positional( const formula& pattern, const std::vector<formula>& args );

inline constexpr int default_verification_cap = 20;

/*! \brief True iff both formulas agree on all assignments of the joint variables. */
bool equivalent( const formula& phi, const formula& psi, int cap = default_verification_cap );

/*! \brief Partial evaluation of applications with constant arguments.

  An application whose constant arguments force its value becomes that
  constant; one that reduces to a projection becomes the projected
  argument.  Otherwise the node keeps its connective.  Nullary leaves are
  left untouched.
*/
formula fold_constants( const formula& phi );

/*! \brief Distinct connectives occurring in `phi`, in order of first occurrence. */
base connectives_of( const formula& phi );

/*! \brief True iff every connective of `phi` has the function of some member of `b`. */
bool uses_only( const formula& phi, const base& b );

/*! \brief Balanced left-heavy tree of a binary connective; requires a nonempty list. */
formula balanced( const connective& op, const std::vector<formula>& items );

struct parse_options
{
  /*! \brief Accept identifiers starting with `__` (reserved for fresh propositions). */
  bool allow_reserved = false;
};

/*! \brief Parses the ASCII grammar.

  Infix: `&` `|` `^` `->` `-/>` `<->`, prefix `!`, literals `0` `1`,
  calls `name(arg,...)`.  Precedence from tightest: `!`, `&`, `|`, `^`,
  `->`/`-/>` (right associative), `<->`.  Call names resolve in `b` first,
  then among the built-in connectives.
*/
formula parse( std::string_view text, const base& b = {}, parse_options options = {} );

/*! \brief Renders with minimal parentheses; `parse(to_string(phi), b)` rebuilds `phi`. */
std::string to_string( const formula& phi );

} // namespace postlat
