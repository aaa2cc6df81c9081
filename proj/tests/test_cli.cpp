/*
 *   Copyright 2026 The mllp-goi Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mllp/cli.hpp"
#include "test_util.hpp"

using namespace mllp;
using mllp::testing::sample_path;

namespace {

struct Outcome {
	int rc;
	std::string out, err;
};

Outcome invoke( std::vector< std::string > args ) {
	args.insert( args.begin(), "mllp-goi" );
	std::vector< const char * > argv;
	for( const auto &a : args ) {
		argv.push_back( a.c_str() );
	}
	std::ostringstream out, err;
	const int rc = cli::run( static_cast< int >( argv.size() ), argv.data(), out, err );
	return { rc, out.str(), err.str() };
}

std::string scratch( const std::string &name, const std::string &body ) {
	const std::string path = ::testing::TempDir() + name;
	std::ofstream( path ) << body;
	return path;
}

} // namespace

TEST( Cli, CheckPrintsSequent ) {
	const Outcome r = invoke( { "check", sample_path( "eta_axiom.mllp" ) } );
	EXPECT_EQ( r.rc, 0 ) << r.err;
	EXPECT_NE( r.out.find( "⊢" ), std::string::npos );
	EXPECT_NE( r.out.find( "focused" ), std::string::npos );
}

TEST( Cli, ExecJson ) {
	const Outcome r = invoke( { "exec", sample_path( "pair.mllp" ), "--json" } );
	ASSERT_EQ( r.rc, 0 ) << r.err;
	const auto j = nlohmann::json::parse( r.out );
	EXPECT_TRUE( j.contains( "ex" ) );
	EXPECT_TRUE( j.contains( "folded" ) );
	EXPECT_EQ( j.at( "u_labels" ).size(), 6u );
	EXPECT_EQ( j.at( "one_labels" ).size(), 3u );
}

TEST( Cli, NormalizeTrace ) {
	const Outcome r = invoke( { "normalize", sample_path( "chain_pi1.mllp" ), "--trace" } );
	ASSERT_EQ( r.rc, 0 ) << r.err;
	EXPECT_NE( r.out.find( "1. BoxExtrusion at /0" ), std::string::npos );
	EXPECT_NE( r.out.find( "2. BoxExtrusion at /" ), std::string::npos );
	EXPECT_NE( r.out.find( "normal form after 6 steps" ), std::string::npos );
}

TEST( Cli, EmptyFileIsUsageError ) {
	const Outcome r = invoke( { "check", scratch( "empty.mllp", "# nothing\n\n" ) } );
	EXPECT_EQ( r.rc, 2 );
	EXPECT_NE( r.err.find( "empty proof file" ), std::string::npos );
}

TEST( Cli, ParseErrorHasLineAndColumn ) {
	const std::string path = scratch( "bad.mllp", "# comment\n(ex (ax X^) [1 x])\n" );
	const Outcome r = invoke( { "check", path } );
	EXPECT_EQ( r.rc, 1 );
	EXPECT_NE( r.err.find( path + ":2:" ), std::string::npos ) << r.err;
	EXPECT_EQ( r.err.find( "offset" ), std::string::npos ) << r.err;
}

TEST( Cli, RuleViolation ) {
	const Outcome r = invoke( { "check", scratch( "viol.mllp", "(cut (ax X^) (ax Y^))\n" ) } );
	EXPECT_EQ( r.rc, 1 );
	EXPECT_NE( r.err.find( "rule violation" ), std::string::npos ) << r.err;
}

TEST( Cli, MissingFileAndBadFlags ) {
	EXPECT_EQ( invoke( { "check", "/nonexistent/x.mllp" } ).rc, 1 );
	EXPECT_EQ( invoke( { "check" } ).rc, 2 );
	EXPECT_EQ( invoke( { "frobnicate" } ).rc, 2 );
	EXPECT_EQ( invoke( { "laws", "--mode", "bogus" } ).rc, 2 );
	EXPECT_EQ( invoke( { "laws", "--window", "4", "--n-alpha", "4" } ).rc, 2 );
}

TEST( Cli, FocusOnNonFocusedProofFails ) {
	const Outcome r = invoke( { "verify", "focus", sample_path( "up_terminal.mllp" ) } );
	EXPECT_EQ( r.rc, 1 );
}

TEST( Cli, VerifySmallSuites ) {
	for( const char *kind : { "invariance", "focus", "converse", "closure", "codec" } ) {
		const Outcome r = invoke( { "verify", kind, "--max-size", "5", "--window", "4" } );
		EXPECT_EQ( r.rc, 0 ) << kind << "\n" << r.out << r.err;
	}
	const Outcome j = invoke( { "verify", "invariance", "--max-size", "4", "--json" } );
	ASSERT_EQ( j.rc, 0 );
	EXPECT_TRUE( nlohmann::json::accept( j.out ) );
}

TEST( Cli, IntrelDemo ) {
	const Outcome r = invoke( { "intrel-demo", sample_path( "intrel_demo.json" ) } );
	EXPECT_EQ( r.rc, 0 ) << r.err;
	EXPECT_NE( r.out.find( "bijection holds" ), std::string::npos );
	EXPECT_EQ( invoke( { "intrel-demo" } ).rc, 0 );
}

TEST( Config, Settings ) {
	cli::RunConfig c;
	cli::apply_setting( c, "mode", "pinj" );
	cli::apply_setting( c, "window", "8" );
	cli::apply_setting( c, "n_alpha", "3" );
	cli::apply_setting( c, "output", "json" );
	EXPECT_EQ( c.mode, Mode::PInjDegenerate );
	EXPECT_EQ( c.window.size, 8u );
	EXPECT_EQ( c.window.n_alpha, 3u );
	EXPECT_EQ( c.output, cli::Output::Json );
	EXPECT_THROW( cli::apply_setting( c, "colour", "red" ), cli::UsageError );
	EXPECT_THROW( cli::apply_setting( c, "window", "many" ), cli::UsageError );
	EXPECT_THROW( cli::apply_setting( c, "strategy", "outermost" ), cli::UsageError );
	c.window.n_alpha = 8;
	EXPECT_THROW( c.validate(), cli::UsageError );
}

TEST( Config, ParseLines ) {
	std::istringstream in( "# settings\nseed = 7  # trailing\n\nstrategy=innermost\n" );
	const cli::RunConfig c = cli::parse_config( in );
	EXPECT_EQ( c.seed, 7u );
	EXPECT_EQ( c.strategy, Strategy::Innermost );
	std::istringstream bad( "seed 7\n" );
	EXPECT_THROW( cli::parse_config( bad ), cli::UsageError );
}

TEST( Config, FromEnvironment ) {
	const std::string path = scratch( "mllp.conf", "output = json\n" );
	::setenv( "MLLP_GOI_CONFIG", path.c_str(), 1 );
	const Outcome r = invoke( { "check", sample_path( "eta_axiom.mllp" ) } );
	::setenv( "MLLP_GOI_CONFIG", scratch( "bad.conf", "nope = 1\n" ).c_str(), 1 );
	const Outcome bad = invoke( { "check", sample_path( "eta_axiom.mllp" ) } );
	::unsetenv( "MLLP_GOI_CONFIG" );
	ASSERT_EQ( r.rc, 0 ) << r.err;
	EXPECT_TRUE( nlohmann::json::parse( r.out ).contains( "sequent" ) );
	EXPECT_EQ( bad.rc, 2 );
}

TEST( Json, BlockRelRoundTrip ) {
	const BlockRel f = mllp::testing::rel( "U1U", "UU", "0p/p0/10" );
	EXPECT_EQ( blockrel_from_json( to_json( f ) ), f );
}

TEST( Json, IntMorRoundTrip ) {
	const auto j = nlohmann::json::parse( mllp::testing::sample( "intrel_demo.json" ) );
	const intrel::IntMor r = intrel::intmor_from_json( j );
	EXPECT_NO_THROW( r.validate() );
	EXPECT_EQ( intrel::intmor_from_json( intrel::to_json( r ) ), r );
	EXPECT_EQ( intrel::finrel_from_json( intrel::to_json( r.r12 ) ), r.r12 );
	EXPECT_EQ( r.source.mp_plus, ( intrel::Subset{ true, false } ) );
}
