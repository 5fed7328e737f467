#include "postlat/error.hpp"
#include "postlat/formula.hpp"

#include <cctype>
#include <sstream>

namespace postlat
{

namespace
{

enum class token_kind
{
  identifier,
  zero,
  one,
  lparen,
  rparen,
  comma,
  bang,
  amp,
  bar,
  caret,
  arrow,
  not_arrow,
  double_arrow,
  end
};

struct token
{
  token_kind kind;
  std::string_view text;
  std::size_t pos;
};

class lexer
{
public:
  explicit lexer( std::string_view text ) : text_( text ) {}

  token next()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
    const auto start = pos_;
    if ( pos_ >= text_.size() )
    {
      return { token_kind::end, {}, start };
    }
    const char c = text_[pos_];
    if ( std::isalpha( static_cast<unsigned char>( c ) ) || c == '_' )
    {
      while ( pos_ < text_.size() && ( std::isalnum( static_cast<unsigned char>( text_[pos_] ) ) || text_[pos_] == '_' || text_[pos_] == '\'' ) )
      {
        ++pos_;
      }
      return { token_kind::identifier, text_.substr( start, pos_ - start ), start };
    }
    if ( std::isdigit( static_cast<unsigned char>( c ) ) )
    {
      while ( pos_ < text_.size() && std::isalnum( static_cast<unsigned char>( text_[pos_] ) ) )
      {
        ++pos_;
      }
      const auto lit = text_.substr( start, pos_ - start );
      if ( lit == "0" )
      {
        return { token_kind::zero, lit, start };
      }
      if ( lit == "1" )
      {
        return { token_kind::one, lit, start };
      }
      throw error( error_kind::syntax, "invalid literal '" + std::string( lit ) + "' at position " + std::to_string( start ), start );
    }
    auto single = [&]( token_kind k ) {
      ++pos_;
      return token{ k, text_.substr( start, 1 ), start };
    };
    switch ( c )
    {
    case '(':
      return single( token_kind::lparen );
    case ')':
      return single( token_kind::rparen );
    case ',':
      return single( token_kind::comma );
    case '!':
      return single( token_kind::bang );
    case '&':
      return single( token_kind::amp );
    case '|':
      return single( token_kind::bar );
    case '^':
      return single( token_kind::caret );
    default:
      break;
    }
    if ( text_.substr( pos_, 2 ) == "->" )
    {
      pos_ += 2;
      return { token_kind::arrow, text_.substr( start, 2 ), start };
    }
    if ( text_.substr( pos_, 3 ) == "-/>" )
    {
      pos_ += 3;
      return { token_kind::not_arrow, text_.substr( start, 3 ), start };
    }
    if ( text_.substr( pos_, 3 ) == "<->" )
    {
      pos_ += 3;
      return { token_kind::double_arrow, text_.substr( start, 3 ), start };
    }
    throw error( error_kind::syntax, std::string( "unexpected character '" ) + c + "' at position " + std::to_string( start ), start );
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class parser
{
public:
  parser( std::string_view text, const base& b, parse_options options ) : lex_( text ), base_( b ), options_( options )
  {
    advance();
  }

  formula run()
  {
    auto result = parse_iff();
    if ( cur_.kind != token_kind::end )
    {
      fail( "unexpected '" + std::string( cur_.text ) + "'" );
    }
    return result;
  }

private:
  void advance() { cur_ = lex_.next(); }

  [[noreturn]] void fail( const std::string& what ) const
  {
    const std::string where = cur_.kind == token_kind::end ? "end of input" : "position " + std::to_string( cur_.pos );
    throw error( error_kind::syntax, what + " at " + where, cur_.pos );
  }

  formula binary( const connective& op, formula lhs, formula rhs ) const
  {
    return formula::apply( op, { std::move( lhs ), std::move( rhs ) } );
  }

  formula parse_iff()
  {
    auto lhs = parse_imp();
    while ( cur_.kind == token_kind::double_arrow )
    {
      advance();
      lhs = binary( connectives::equivalence(), std::move( lhs ), parse_imp() );
    }
    return lhs;
  }

  formula parse_imp()
  {
    auto lhs = parse_xor();
    if ( cur_.kind == token_kind::arrow || cur_.kind == token_kind::not_arrow )
    {
      const auto& op = cur_.kind == token_kind::arrow ? connectives::implication() : connectives::non_implication();
      advance();
      return binary( op, std::move( lhs ), parse_imp() );
    }
    return lhs;
  }

  formula parse_xor()
  {
    auto lhs = parse_or();
    while ( cur_.kind == token_kind::caret )
    {
      advance();
      lhs = binary( connectives::exclusive_or(), std::move( lhs ), parse_or() );
    }
    return lhs;
  }

  formula parse_or()
  {
    auto lhs = parse_and();
    while ( cur_.kind == token_kind::bar )
    {
      advance();
      lhs = binary( connectives::disjunction(), std::move( lhs ), parse_and() );
    }
    return lhs;
  }

  formula parse_and()
  {
    auto lhs = parse_unary();
    while ( cur_.kind == token_kind::amp )
    {
      advance();
      lhs = binary( connectives::conjunction(), std::move( lhs ), parse_unary() );
    }
    return lhs;
  }

  formula parse_unary()
  {
    if ( cur_.kind == token_kind::bang )
    {
      advance();
      return formula::apply( connectives::negation(), { parse_unary() } );
    }
    return parse_atom();
  }

  formula parse_atom()
  {
    switch ( cur_.kind )
    {
    case token_kind::zero:
      advance();
      return formula::constant( false );
    case token_kind::one:
      advance();
      return formula::constant( true );
    case token_kind::lparen:
    {
      advance();
      auto inner = parse_iff();
      if ( cur_.kind != token_kind::rparen )
      {
        fail( "expected ')'" );
      }
      advance();
      return inner;
    }
    case token_kind::identifier:
      return parse_identifier();
    case token_kind::end:
      fail( "expected a formula" );
    default:
      fail( "unexpected '" + std::string( cur_.text ) + "'" );
    }
  }

  formula parse_identifier()
  {
    const auto name_tok = cur_;
    if ( name_tok.text.starts_with( "__" ) && !options_.allow_reserved )
    {
      fail( "identifiers starting with '__' are reserved" );
    }
    advance();
    if ( cur_.kind != token_kind::lparen )
    {
      return formula::proposition( std::string( name_tok.text ) );
    }
    const connective* op = base_.find( name_tok.text );
    if ( op == nullptr )
    {
      op = connectives::find( name_tok.text );
    }
    if ( op == nullptr )
    {
      throw error( error_kind::unknown_connective, "unknown connective '" + std::string( name_tok.text ) + "' at position " + std::to_string( name_tok.pos ),
                   name_tok.pos );
    }
    advance();
    std::vector<formula> args;
    if ( cur_.kind != token_kind::rparen )
    {
      args.push_back( parse_iff() );
      while ( cur_.kind == token_kind::comma )
      {
        advance();
        args.push_back( parse_iff() );
      }
    }
    if ( cur_.kind != token_kind::rparen )
    {
      fail( "expected ',' or ')'" );
    }
    advance();
    if ( static_cast<int>( args.size() ) != op->arity() )
    {
      throw error( error_kind::arity_mismatch,
                   "connective '" + op->name + "' expects " + std::to_string( op->arity() ) + " arguments, got " + std::to_string( args.size() ) +
                       " at position " + std::to_string( name_tok.pos ),
                   name_tok.pos );
    }
    return formula::apply( *op, std::move( args ) );
  }

  lexer lex_;
  const base& base_;
  parse_options options_;
  token cur_{ token_kind::end, {}, 0 };
};

struct infix_info
{
  const char* symbol;
  int precedence;
  bool right_assoc;
};

const infix_info* infix_of( const connective& op )
{
  static const infix_info iff{ "<->", 0, false };
  static const infix_info imp{ "->", 1, true };
  static const infix_info nimp{ "-/>", 1, true };
  static const infix_info xr{ "^", 2, false };
  static const infix_info orr{ "|", 3, false };
  static const infix_info andd{ "&", 4, false };
  if ( op == connectives::equivalence() )
    return &iff;
  if ( op == connectives::implication() )
    return &imp;
  if ( op == connectives::non_implication() )
    return &nimp;
  if ( op == connectives::exclusive_or() )
    return &xr;
  if ( op == connectives::disjunction() )
    return &orr;
  if ( op == connectives::conjunction() )
    return &andd;
  return nullptr;
}

constexpr int unary_precedence = 5;
constexpr int atom_precedence = 6;

int precedence_of( const formula& phi )
{
  if ( phi.is_proposition() || phi.args().empty() )
  {
    return atom_precedence;
  }
  if ( const auto* info = infix_of( phi.op() ) )
  {
    return info->precedence;
  }
  return phi.op() == connectives::negation() ? unary_precedence : atom_precedence;
}

void render( std::ostream& out, const formula& phi );

void render_child( std::ostream& out, const formula& child, bool parens )
{
  if ( parens )
  {
    out << '(';
  }
  render( out, child );
  if ( parens )
  {
    out << ')';
  }
}

void render( std::ostream& out, const formula& phi )
{
  if ( phi.is_proposition() )
  {
    out << phi.name();
    return;
  }
  const auto& op = phi.op();
  if ( op == connectives::bottom() || op == connectives::top() )
  {
    out << op.name;
    return;
  }
  if ( const auto* info = infix_of( op ) )
  {
    const int lp = precedence_of( phi.args()[0] );
    const int rp = precedence_of( phi.args()[1] );
    const bool left_parens = info->right_assoc ? lp <= info->precedence : lp < info->precedence;
    const bool right_parens = info->right_assoc ? rp < info->precedence : rp <= info->precedence;
    render_child( out, phi.args()[0], left_parens );
    out << ' ' << info->symbol << ' ';
    render_child( out, phi.args()[1], right_parens );
    return;
  }
  if ( op == connectives::negation() )
  {
    out << '!';
    render_child( out, phi.args()[0], precedence_of( phi.args()[0] ) < unary_precedence );
    return;
  }
  out << op.name << '(';
  for ( std::size_t i = 0; i < phi.args().size(); ++i )
  {
    if ( i > 0 )
    {
      out << ", ";
    }
    render( out, phi.args()[i] );
  }
  out << ')';
}

} // namespace

formula parse( std::string_view text, const base& b, parse_options options )
{
  return parser( text, b, options ).run();
}

std::string to_string( const formula& phi )
{
  std::ostringstream out;
  render( out, phi );
  return out.str();
}

} // namespace postlat
