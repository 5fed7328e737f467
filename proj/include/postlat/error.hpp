#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace postlat
{

/*! \brief Category of a domain error. */
enum class error_kind
{
  syntax,
  unknown_connective,
  arity_mismatch,
  unbound_proposition,
  missing_variable,
  cap_exceeded,
  precondition,
  representation,
  invalid_argument
};

std::string_view to_string( error_kind kind );

/*! \brief Exception type thrown by every module of the library.

  `position()` is only meaningful for syntax errors, where it holds the
  byte offset into the parsed text.
*/
class error : public std::runtime_error
{
public:
  error( error_kind kind, const std::string& message, std::size_t position = npos );

  error_kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>( -1 );

private:
  error_kind kind_;
  std::size_t position_;
};

} // namespace postlat
