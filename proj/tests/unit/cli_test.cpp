#include "postlat/cli.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace
{

const std::string data_dir = POSTLAT_TEST_DATA_DIR;
const std::string golden_dir = POSTLAT_TEST_GOLDEN_DIR;

struct result
{
  int code;
  std::string out;
  std::string err;
};

result run( std::vector<std::string> args )
{
  std::ostringstream out, err;
  const int code = postlat::run( args, out, err );
  return { code, out.str(), err.str() };
}

std::string golden( const std::string& name )
{
  std::ifstream in( golden_dir + "/" + name + ".json", std::ios::binary );
  REQUIRE( in );
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct golden_case
{
  const char* name;
  std::vector<std::string> args;
  int code = 0;
};

} // namespace

TEST_SUITE( "cli" )
{

TEST_CASE( "json goldens" )
{
  const std::vector<golden_case> cases{
      { "parse", { "parse", "--formula", "x & (y | z)" } },
      { "eval", { "eval", "--formula", "x -/> y", "--assign", "x=1", "--assign", "y=0" } },
      { "table", { "table", "--formula", "x | y", "--vars", "y,x" } },
      { "id", { "id", "--base", data_dir + "/imp.base" } },
      { "closure", { "closure", "--fn", "g/3:00011111", "--arity", "2" } },
      { "represent", { "represent", "--fn", "g/3:00011111", "--target", "or/2:0111" } },
      { "represent_missing", { "represent", "--fn", "and/2:0001", "--fn", "or/2:0111", "--target", "nimp/2:0010" } },
      { "member", { "member", "--fn", "and/2:0001", "--fn", "not/1:10", "--target", "nimp/2:0010" } },
      { "classify_sat", { "classify-sat", "--fn", "nand/2:1110" } },
      { "depth_reduce", { "depth-reduce", "--formula", "x ^ y", "--mode", "full" } },
      { "depth_reduce_g", { "depth-reduce", "--formula", "x1 & (x2 & (x3 & x4))", "--mode", "g" } },
      { "reduce", { "reduce", "--from", data_dir + "/maj.base", "--to", data_dir + "/maj.base", "--formula", "maj(x, maj(y, z, w), v)" } },
      { "reduce_evl", { "reduce", "--fn", "xor/2:0110", "--to-fn", "iff/2:1001", "--to-fn", "not/1:10", "--formula", "x ^ y ^ z" } },
      { "canonical", { "canonical", "--fn", "nand/2:1110" } },
      { "lattice", { "lattice", "--max-degree", "1" } },
      { "verify", { "verify", "--formula", "x^y", "--formula2", "(x&!y)|(!x&y)" } },
      { "verify_not", { "verify", "--formula", "x -> y", "--formula2", "y -> x" } },
      { "error_precondition", { "reduce", "--fn", "imp/2:1101", "--to-fn", "and/2:0001", "--formula", "x -> y" }, 1 },
      { "error_syntax", { "parse", "--formula", "x &" }, 1 },
  };
  for ( const auto& c : cases )
  {
    CAPTURE( c.name );
    auto args = c.args;
    args.push_back( "--json" );
    const auto r = run( args );
    CHECK( r.code == c.code );
    CHECK( r.out == golden( c.name ) );
  }
}

TEST_CASE( "human readable output" )
{
  CHECK( run( { "id", "--fn", "imp/2:1101" } ).out == "S0\n" );
  CHECK( run( { "classify-sat", "--fn", "nand/2:1110" } ).out == "NP-complete\n" );
  CHECK( run( { "classify-sat", "--fn", "imp/2:1101" } ).out == "Logspace\n" );
  CHECK( run( { "verify", "--formula", "x^y", "--formula2", "(x&!y)|(!x&y)" } ).out == "equivalent\n" );
  CHECK( run( { "verify", "--formula", "x", "--formula2", "y" } ).out == "not equivalent\n" );

  const auto dot = run( { "lattice", "--max-degree", "2" } );
  CHECK( dot.code == 0 );
  CHECK( dot.out.starts_with( "digraph post_lattice {" ) );
  CHECK( dot.out.find( "\"S00^2\" -> \"S01^2\";" ) != std::string::npos );
}

TEST_CASE( "errors" )
{
  const auto domain = run( { "parse", "--formula", "x &" } );
  CHECK( domain.code == 1 );
  CHECK( domain.out.empty() );
  CHECK( domain.err.starts_with( "error: syntax: " ) );

  const auto missing = run( { "parse" } );
  CHECK( missing.code == 2 );
  CHECK( missing.out.empty() );
  CHECK( missing.err.starts_with( "usage error: " ) );

  CHECK( run( { "frobnicate" } ).code == 2 );
  CHECK( run( {} ).code == 2 );
  CHECK( run( { "id" } ).code == 2 );
  CHECK( run( { "lattice", "--max-degree", "5" } ).code == 2 );
  CHECK( run( { "id", "--base", data_dir + "/does-not-exist.base" } ).code == 1 );
  CHECK( run( { "id", "--fn", "and/2:001" } ).code == 1 );

  // a failing JSON run prints the error object and nothing else
  const auto json = run( { "reduce", "--fn", "imp/2:1101", "--to-fn", "and/2:0001", "--formula", "x -> y", "--json" } );
  CHECK( json.code == 1 );
  CHECK( json.out == golden( "error_precondition" ) );
}

TEST_CASE( "reduce across a base file with fresh propositions" )
{
  const auto r = run( { "reduce", "--fn", "d1/3:00101011", "--to", data_dir + "/nimp_iff.base", "--formula", "d1(x, d1(y, z, w), v)", "--json" } );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "\"equivalent\": true" ) != std::string::npos );
}

} // TEST_SUITE
