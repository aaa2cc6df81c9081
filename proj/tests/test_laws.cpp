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

#include <gtest/gtest.h>

#include "mllp/laws.hpp"

using namespace mllp;
using namespace mllp::laws;

namespace {

void expect_all_ok( const std::vector< LawResult > &rs ) {
	ASSERT_FALSE( rs.empty() );
	for( const auto &r : rs ) {
		EXPECT_TRUE( r.ok() ) << r.name << ": " << r.failures << "/" << r.cases << " " << r.first_failure;
	}
}

Sample square_pair( Rng &rng ) {
	const Wires x = random_wires( rng, 1, 3 );
	return Sample{ { random_rel( rng, x, x, 0.5 ), random_rel( rng, x, x, 0.5 ) }, {}, {} };
}

} // namespace

TEST( RelcoreLaws, AllHoldOnDefaultWindow ) {
	expect_all_ok( relcore_laws( SuiteConfig{ 11, 150, Window{} } ) );
}

TEST( RelcoreLaws, AllHoldOnSmallWindow ) {
	expect_all_ok( relcore_laws( SuiteConfig{ 12, 100, Window{ 5, 2 } } ) );
}

TEST( RelcoreLaws, DeterministicPerSeed ) {
	const auto a = relcore_laws( SuiteConfig{ 1, 40, Window{} } );
	const auto b = relcore_laws( SuiteConfig{ 1, 40, Window{} } );
	ASSERT_EQ( a.size(), b.size() );
	for( std::size_t k = 0; k < a.size(); ++k ) {
		EXPECT_EQ( a[ k ].name, b[ k ].name );
		EXPECT_EQ( a[ k ].cases, b[ k ].cases );
	}
	EXPECT_TRUE( all_ok( relcore_laws( SuiteConfig{ 99, 40, Window{} } ) ) );
}

TEST( IntrelLaws, AllHold ) {
	expect_all_ok( intrel_laws( 3, 300 ) );
}

// The harness must notice a false law, not just run it.
TEST( Harness, DetectsCommutativityFailure ) {
	const LawResult r = run_law( "composition commutes", 200, 5, Window{}, square_pair,
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			const auto f = be.lift( s.rels[ 0 ] ), g = be.lift( s.rels[ 1 ] );
			return Sides< Be >{ { be.compose( g, f ), be.compose( f, g ) } };
		} );
	EXPECT_EQ( r.cases, 200u );
	EXPECT_GT( r.failures, 0u );
	EXPECT_FALSE( r.ok() );
	EXPECT_NE( r.first_failure.find( "sample" ), std::string::npos );
}

TEST( Harness, DetectsSingleWrongEntry ) {
	const Wires u{ WireType::U };
	BlockRel f = prim::id( u );
	BlockRel g = f;
	g.set( 0, 0, Entry::Zero );
	const Sample s{ { f, g }, {}, {} };
	const auto law = []( const auto &be, const Sample &smp ) {
		using Be = std::decay_t< decltype( be ) >;
		return Sides< Be >{ { be.lift( smp.rels[ 0 ] ), be.lift( smp.rels[ 1 ] ) } };
	};
	EXPECT_TRUE( check_sample( law, s, Window{} ) );
	const Sample same{ { f, f }, {}, {} };
	EXPECT_FALSE( check_sample( law, same, Window{} ) );
}

TEST( Harness, ExceptionsCountAsFailures ) {
	const LawResult r = run_law( "trace too wide", 10, 1, Window{}, square_pair,
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			const auto f = be.lift( s.rels[ 0 ] );
			return Sides< Be >{ { be.trace( f, 9 ), f } };
		} );
	EXPECT_EQ( r.failures, 10u );
}

TEST( Harness, EmptyResultIsNotOk ) {
	EXPECT_FALSE( LawResult( "nothing" ).ok() );
	EXPECT_FALSE( all_ok( {} ) );
}

TEST( PathSearch, IdentityAndEmpty ) {
	Rng rng( 4 );
	for( int n = 0; n < 100; ++n ) {
		const auto a = intrel::random_object( rng, 3 ), b = intrel::random_object( rng, 3 );
		const auto r = intrel::random_mor( rng, a, b );
		ASSERT_EQ( compose_by_paths( intrel::IntMor::identity( b ), r ), r );
		ASSERT_EQ( compose_by_paths( intrel::IntMor::empty( b, a ), intrel::IntMor::empty( a, b ) ),
			intrel::IntMor::empty( a, a ) );
	}
}
