#include "postlat/error.hpp"

namespace postlat
{

std::string_view to_string( error_kind kind )
{
  switch ( kind )
  {
  case error_kind::syntax:
    return "syntax";
  case error_kind::unknown_connective:
    return "unknown_connective";
  case error_kind::arity_mismatch:
    return "arity_mismatch";
  case error_kind::unbound_proposition:
    return "unbound_proposition";
  case error_kind::missing_variable:
    return "missing_variable";
  case error_kind::cap_exceeded:
    return "cap_exceeded";
  case error_kind::precondition:
    return "precondition";
  case error_kind::representation:
    return "representation";
  case error_kind::invalid_argument:
    return "invalid_argument";
  }
  return "unknown";
}

error::error( error_kind kind, const std::string& message, std::size_t position )
    : std::runtime_error( message ), kind_( kind ), position_( position )
{
}

} // namespace postlat
