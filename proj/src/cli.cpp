#include "postlat/cli.hpp"

#include "postlat/closure.hpp"
#include "postlat/clones.hpp"
#include "postlat/error.hpp"
#include "postlat/reductions.hpp"
#include "postlat/restructure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>

namespace postlat
{

namespace
{

using json = nlohmann::ordered_json;

struct options
{
  std::string base_file;
  std::vector<std::string> fns;
  bool json = false;

  std::string formula;
  std::string formula2;
  std::vector<std::string> assignments;
  std::vector<std::string> vars;
  int arity = 3;
  std::string target;
  std::string mode = "full";
  std::string from_file;
  std::string to_file;
  std::vector<std::string> to_fns;
  int max_degree = 2;
};

base load( const std::string& file, const std::vector<std::string>& fns )
{
  base b = file.empty() ? base{} : load_base_file( file );
  for ( const auto& lit : fns )
  {
    b.add( parse_literal( lit ) );
  }
  return b;
}

json names( const base& b )
{
  json out = json::array();
  for ( const auto& c : b )
  {
    out.push_back( format_literal( c ) );
  }
  return out;
}

std::string brace_list( const base& b )
{
  std::string out = "{";
  for ( const auto& c : b )
  {
    out += ( out.size() > 1 ? ", " : "" ) + c.name;
  }
  return out + "}";
}

json verification( bool verified, bool equivalent )
{
  return verified ? json( equivalent ) : json( "unverified" );
}

// Joint variable count of two formulas, for the verification cap.
std::size_t joint_vars( const formula& a, const formula& b )
{
  auto vars = variables( a );
  for ( const auto& v : variables( b ) )
  {
    if ( std::find( vars.begin(), vars.end(), v ) == vars.end() )
    {
      vars.push_back( v );
    }
  }
  return vars.size();
}

struct result
{
  json data;
  std::string text;
};

using handler = std::function<result( const options& )>;

result cmd_parse( const options& o )
{
  const auto phi = parse( o.formula, load( o.base_file, o.fns ) );
  const auto m = metrics( phi );
  result r;
  r.text = to_string( phi ) + "\n";
  r.data = { { "formula", to_string( phi ) }, { "size", m.size }, { "depth", m.depth }, { "leaves", m.leaf_count }, { "vars", m.vars } };
  return r;
}

result cmd_eval( const options& o )
{
  const auto phi = parse( o.formula, load( o.base_file, o.fns ) );
  assignment alpha;
  json given = json::object();
  for ( const auto& a : o.assignments )
  {
    const auto eq = a.find( '=' );
    const auto value = eq == std::string::npos ? std::string() : a.substr( eq + 1 );
    if ( eq == std::string::npos || eq == 0 || ( value != "0" && value != "1" ) )
    {
      throw error( error_kind::invalid_argument, "assignment '" + a + "' is not of the form NAME=0 or NAME=1" );
    }
    alpha[a.substr( 0, eq )] = value == "1";
    given[a.substr( 0, eq )] = value == "1" ? 1 : 0;
  }
  const bool v = evaluate( phi, alpha );
  return { { { "formula", to_string( phi ) }, { "assignment", given }, { "value", v ? 1 : 0 } }, v ? "1\n" : "0\n" };
}

result cmd_table( const options& o )
{
  const auto phi = parse( o.formula, load( o.base_file, o.fns ) );
  const auto vars = o.vars.empty() ? variables( phi ) : o.vars;
  const auto f = truth_table( phi, vars );
  std::string header;
  for ( const auto& v : vars )
  {
    header += ( header.empty() ? "" : "," ) + v;
  }
  return { { { "vars", vars }, { "table", f.bits() } }, "(" + header + ") " + f.bits() + "\n" };
}

result cmd_id( const options& o )
{
  const auto b = load( o.base_file, o.fns );
  const auto id = identify( b );
  json candidates = json::array();
  for ( const auto& c : catalog() )
  {
    if ( satisfies( c, b ) )
    {
      candidates.push_back( to_string( c ) );
    }
  }
  return { { { "clone", to_string( id.clone ) },
             { "zero_degree", id.zero_degree.to_string() },
             { "one_degree", id.one_degree.to_string() },
             { "candidates", candidates } },
           to_string( id.clone ) + "\n" };
}

result cmd_closure( const options& o )
{
  const auto b = load( o.base_file, o.fns );
  const auto cl = closure( b, o.arity );
  result r;
  json functions = json::array();
  for ( std::size_t i = 0; i < cl.size(); ++i )
  {
    const auto bits = cl.functions()[i].bits();
    const auto w = to_string( cl.witnesses()[i] );
    functions.push_back( { { "table", bits }, { "witness", w } } );
    r.text += bits + "  " + w + "\n";
  }
  r.data = { { "arity", o.arity }, { "size", cl.size() }, { "functions", functions } };
  return r;
}

result cmd_represent( const options& o )
{
  const auto b = load( o.base_file, o.fns );
  const auto target = parse_literal( o.target );
  const auto rep = represent( target.function, b );
  return { { { "target", format_literal( target ) }, { "in_clone", rep.has_value() }, { "formula", rep ? json( to_string( *rep ) ) : json( nullptr ) } },
           rep ? to_string( *rep ) + "\n" : "not in clone\n" };
}

result cmd_member( const options& o )
{
  const auto b = load( o.base_file, o.fns );
  const auto target = parse_literal( o.target );
  const bool in = member( target.function, b );
  return { { { "target", format_literal( target ) }, { "clone", to_string( clone_of( b ) ) }, { "member", in } }, in ? "true\n" : "false\n" };
}

result cmd_classify( const options& o )
{
  const auto b = load( o.base_file, o.fns );
  const auto c = std::string( to_string( classify_sat( b ) ) );
  return { { { "clone", to_string( clone_of( b ) ) }, { "complexity", c } }, c + "\n" };
}

result cmd_depth_reduce( const options& o )
{
  const auto phi = parse( o.formula, load( o.base_file, o.fns ) );
  const auto mode = parse_restructure_mode( o.mode );
  const auto out = restructure( phi, mode );
  const bool verified = joint_vars( phi, out ) <= static_cast<std::size_t>( default_verification_cap );
  const bool eq = verified && equivalent( phi, out );
  const auto law = depth_law_for( mode, phi.max_arity() );
  result r;
  r.data = { { "mode", std::string( to_string( mode ) ) },
             { "formula", to_string( out ) },
             { "depth_in", phi.depth() },
             { "depth_out", out.depth() },
             { "size_in", phi.size() },
             { "size_out", out.size() },
             { "leaves", phi.leaf_count() },
             { "depth_bound", law.bound( phi.leaf_count() ) },
             { "equivalent", verification( verified, eq ) } };
  r.text = to_string( out ) + "\ndepth " + std::to_string( phi.depth() ) + " -> " + std::to_string( out.depth() ) + ", size " +
           std::to_string( phi.size() ) + " -> " + std::to_string( out.size() ) + "\n";
  return r;
}

result cmd_reduce( const options& o )
{
  const auto b = load( o.from_file.empty() ? o.base_file : o.from_file, o.fns );
  const auto b_prime = load( o.to_file, o.to_fns );
  const auto phi = parse( o.formula, b );
  const auto r = theorem_reduce( phi, b, b_prime );
  result out;
  out.data = { { "formula", to_string( r.result ) },
               { "target", names( r.target ) },
               { "extra", std::string( to_string( r.extra ) ) },
               { "fresh_vars", r.fresh_vars },
               { "depth_in", r.check.depth_in },
               { "depth_out", r.check.depth_out },
               { "size_in", r.check.size_in },
               { "size_out", r.check.size_out },
               { "equivalent", verification( r.check.verified, r.check.equivalent ) } };
  out.text = to_string( r.result ) + "\ncase (" + std::string( 1, r.theorem_case ) + "), target " + brace_list( r.target ) + ", extra " +
             std::string( to_string( r.extra ) ) + "\n";
  return out;
}

result cmd_canonical( const options& o )
{
  const auto b = load( o.base_file, o.fns );
  const auto m = canonical_equivalent( b );
  result r;
  r.data = { { "clone", to_string( m.clone ) },
             { "canonical", m.canonical ? names( *m.canonical ) : json( nullptr ) },
             { "case", std::string( 1, m.theorem_case ) },
             { "extra", std::string( to_string( m.extra ) ) } };
  r.text = to_string( m.clone ) + ": " +
           ( m.canonical ? brace_list( *m.canonical ) : "case (" + std::string( 1, m.theorem_case ) + "), extra " + std::string( to_string( m.extra ) ) ) + "\n";
  return r;
}

result cmd_lattice( const options& o )
{
  result r;
  json nodes = json::array();
  for ( const auto& c : catalog( o.max_degree ) )
  {
    nodes.push_back( to_string( c ) );
  }
  json edges = json::array();
  for ( const auto& [lower, upper] : covering_edges( o.max_degree ) )
  {
    edges.push_back( { to_string( lower ), to_string( upper ) } );
  }
  r.data = { { "max_degree", o.max_degree }, { "nodes", nodes }, { "edges", edges } };
  r.text = lattice_dot( o.max_degree );
  return r;
}

result cmd_verify( const options& o )
{
  const auto b = load( o.base_file, o.fns );
  const auto a = parse( o.formula, b );
  const auto c = parse( o.formula2, b );
  const bool eq = equivalent( a, c );
  return { { { "equivalent", eq }, { "vars", joint_vars( a, c ) } }, eq ? "equivalent\n" : "not equivalent\n" };
}

} // namespace

int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Boolean clones, formula restructuring and base reductions", "postlat" };
  app.require_subcommand( 1 );
  options o;
  std::vector<std::pair<CLI::App*, handler>> commands;

  auto add = [&]( const std::string& name, const std::string& description, handler h ) {
    auto* sub = app.add_subcommand( name, description );
    sub->add_option( "--base", o.base_file, "Base file, one name/arity:bits per line" );
    sub->add_option( "--fn", o.fns, "Inline connective name/arity:bits (repeatable)" );
    sub->add_flag( "--json", o.json, "Emit one JSON object" );
    commands.emplace_back( sub, std::move( h ) );
    return sub;
  };

  add( "parse", "Parse and render a formula", cmd_parse )->add_option( "--formula", o.formula )->required();
  {
    auto* s = add( "eval", "Evaluate a formula", cmd_eval );
    s->add_option( "--formula", o.formula )->required();
    s->add_option( "--assign", o.assignments, "NAME=0 or NAME=1 (repeatable)" );
  }
  {
    auto* s = add( "table", "Truth table of a formula", cmd_table );
    s->add_option( "--formula", o.formula )->required();
    s->add_option( "--vars", o.vars, "Variable order, comma separated" )->delimiter( ',' );
  }
  add( "id", "Identify the clone generated by the base", cmd_id );
  add( "closure", "Enumerate the k-ary part of the clone", cmd_closure )->add_option( "--arity", o.arity )->check( CLI::Range( 0, max_closure_arity ) );
  add( "represent", "Smallest formula over the base for a function", cmd_represent )->add_option( "--target", o.target )->required();
  add( "member", "Membership of a function in the clone", cmd_member )->add_option( "--target", o.target )->required();
  add( "classify-sat", "Complexity of satisfiability over the base", cmd_classify );
  {
    auto* s = add( "depth-reduce", "Restructure a formula to logarithmic depth", cmd_depth_reduce );
    s->add_option( "--formula", o.formula )->required();
    s->add_option( "--mode", o.mode, "full, g or h" )->check( CLI::IsMember( { "full", "g", "h" } ) );
  }
  {
    auto* s = add( "reduce", "Translate a formula over one base into another", cmd_reduce );
    s->add_option( "--from", o.from_file, "Source base file" );
    s->add_option( "--to", o.to_file, "Target base file" );
    s->add_option( "--to-fn", o.to_fns, "Inline target connective (repeatable)" );
    s->add_option( "--formula", o.formula )->required();
  }
  add( "canonical", "Canonical connective set for the clone of the base", cmd_canonical );
  add( "lattice", "Covering relation of the catalog as DOT", cmd_lattice )->add_option( "--max-degree", o.max_degree )->check( CLI::Range( 1, 4 ) );
  {
    auto* s = add( "verify", "Check two formulas for equivalence", cmd_verify );
    s->add_option( "--formula", o.formula )->required();
    s->add_option( "--formula2", o.formula2 )->required();
  }

  const std::set<std::string> needs_base{ "id", "closure", "represent", "member", "classify-sat", "reduce", "canonical" };

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( const CLI::CallForHelp& )
  {
    out << app.help();
    return 0;
  }
  catch ( const CLI::CallForAllHelp& )
  {
    out << app.help( "", CLI::AppFormatMode::All );
    return 0;
  }
  catch ( const CLI::ParseError& e )
  {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  for ( const auto& [sub, h] : commands )
  {
    if ( !sub->parsed() )
    {
      continue;
    }
    const std::string name = sub->get_name();
    const bool has_base = !o.base_file.empty() || !o.fns.empty() || !o.from_file.empty();
    if ( !has_base && needs_base.count( name ) )
    {
      err << "usage error: " << name << " needs a base (--base FILE or --fn)\n";
      return 2;
    }
    if ( name == "reduce" && o.to_file.empty() && o.to_fns.empty() )
    {
      err << "usage error: reduce needs a target base (--to FILE or --to-fn)\n";
      return 2;
    }
    try
    {
      const auto r = h( o );
      if ( o.json )
      {
        out << r.data.dump( 2 ) << "\n";
      }
      else
      {
        out << r.text;
      }
      return 0;
    }
    catch ( const error& e )
    {
      if ( o.json )
      {
        out << json{ { "error", { { "kind", std::string( to_string( e.kind() ) ) }, { "message", e.what() } } } }.dump( 2 ) << "\n";
      }
      else
      {
        err << "error: " << to_string( e.kind() ) << ": " << e.what() << "\n";
      }
      return 1;
    }
  }
  err << "usage error: no subcommand\n";
  return 2;
}

} // namespace postlat
