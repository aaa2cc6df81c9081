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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "mllp/intrel.hpp"
#include "mllp/laws.hpp"

using namespace mllp::intrel;

namespace {

MPObj obj( Labels p, Labels m, Subset mpp = {}, Subset mpm = {} ) {
	MPObj o = MPObj::make( std::move( p ), std::move( m ) );
	if( !mpp.empty() ) {
		o.mp_plus = mpp;
	}
	if( !mpm.empty() ) {
		o.mp_minus = mpm;
	}
	return o;
}

FinRel rel( const Labels &d, const Labels &c, const std::vector< std::pair< std::size_t, std::size_t > > &ps ) {
	FinRel r( d, c );
	for( auto [ a, b ] : ps ) {
		r.add( a, b );
	}
	return r;
}

} // namespace

TEST( FinRel, Basics ) {
	const FinRel r = rel( { "a", "b" }, { "x" }, { { 1, 0 } } );
	EXPECT_TRUE( r.has( 1, 0 ) );
	EXPECT_FALSE( r.has( 0, 0 ) );
	EXPECT_EQ( r.pairs(), ( std::vector< std::pair< std::string, std::string > >{ { "b", "x" } } ) );
	EXPECT_EQ( compose( FinRel::identity( { "x" } ), r ), r );
	EXPECT_THROW( compose( r, r ), ShapeMismatch );
	const FinRel cyc = rel( { "a", "b", "c" }, { "a", "b", "c" }, { { 0, 1 }, { 1, 2 } } );
	EXPECT_TRUE( star( cyc ).has( 0, 2 ) );
	EXPECT_FALSE( star( cyc ).has( 2, 0 ) );
	EXPECT_TRUE( star( cyc ).has( 2, 2 ) );
}

TEST( IntCompose, IdentityIsNeutral ) {
	std::mt19937_64 rng( 1 );
	for( int n = 0; n < 200; ++n ) {
		const MPObj a = random_object( rng, 3 ), b = random_object( rng, 3 );
		const IntMor r = random_mor( rng, a, b );
		ASSERT_EQ( int_compose( IntMor::identity( b ), r ), r );
		ASSERT_EQ( int_compose( r, IntMor::identity( a ) ), r );
	}
}

TEST( IntCompose, OuterBlocksOnly ) {
	const MPObj a = obj( { "a" }, { "a'" } ), b = obj( { "b" }, { "b'" } ), c = obj( { "c" }, { "c'" } );
	IntMor r = IntMor::empty( a, b ), s = IntMor::empty( b, c );
	r.r11.add( 0, 0 );
	s.r22.add( 0, 0 );
	const IntMor sr = int_compose( s, r );
	EXPECT_EQ( sr.r11, r.r11 );
	EXPECT_EQ( sr.r22, s.r22 );
	EXPECT_TRUE( sr.r12.empty() );
	EXPECT_TRUE( sr.r21.empty() );
}

// a -> b0 -> m0 -> b1 -> m1 -> a', with b1 -> c: two trips round the feedback loop.
TEST( IntCompose, FeedbackLoop ) {
	const MPObj a = obj( { "a" }, { "a'" } ), b = obj( { "b0", "b1" }, { "m0", "m1" } ), c = obj( { "c" }, {} );
	IntMor r = IntMor::empty( a, b ), s = IntMor::empty( b, c );
	r.r12.add( 0, 0 );
	s.r11.add( 0, 0 );
	r.r22.add( 0, 1 );
	s.r11.add( 1, 1 );
	r.r22.add( 1, 0 );
	r.r21.add( 1, 0 );
	s.r12.add( 1, 0 );
	const IntMor sr = int_compose( s, r );
	EXPECT_TRUE( sr.r12.has( 0, 0 ) );
	EXPECT_TRUE( sr.r11.has( 0, 0 ) );
	EXPECT_EQ( sr, mllp::laws::compose_by_paths( s, r ) );
}

TEST( IntCompose, AgreesWithPathSearch ) {
	std::mt19937_64 rng( 2 );
	for( int n = 0; n < 1000; ++n ) {
		const MPObj a = random_object( rng, 2 ), b = random_object( rng, 3 ), c = random_object( rng, 2 );
		const IntMor r = random_mor( rng, a, b, 0.5 ), s = random_mor( rng, b, c, 0.5 );
		ASSERT_EQ( int_compose( s, r ), mllp::laws::compose_by_paths( s, r ) );
	}
}

// With empty negative carriers everything is ordinary relational composition.
TEST( IntCompose, PurePositiveIsRelational ) {
	std::mt19937_64 rng( 3 );
	for( int n = 0; n < 200; ++n ) {
		const MPObj a = obj( { "a0", "a1" }, {} ), b = obj( { "b0", "b1", "b2" }, {} ), c = obj( { "c0" }, {} );
		const IntMor r = random_mor( rng, a, b, 0.5 ), s = random_mor( rng, b, c, 0.5 );
		ASSERT_EQ( int_compose( s, r ).r12, compose( s.r12, r.r12 ) );
	}
}

TEST( IntCompose, ObjectMismatch ) {
	const MPObj a = obj( { "a" }, {} ), b = obj( { "b" }, {} );
	EXPECT_THROW( int_compose( IntMor::identity( a ), IntMor::identity( b ) ), ShapeMismatch );
}

TEST( Dual, Examples ) {
	std::mt19937_64 rng( 4 );
	const MPObj a = random_object( rng, 2 ), b = random_object( rng, 2 );
	const IntMor r = random_mor( rng, a, b, 0.5 );
	const IntMor d = dual( r );
	EXPECT_EQ( dual( d ), r );
	EXPECT_EQ( d.r11, r.r22 );
	EXPECT_EQ( d.r12, r.r21 );
	EXPECT_EQ( d.r21, r.r12 );
	EXPECT_EQ( d.r22, r.r11 );
	EXPECT_EQ( dual( IntMor::identity( a ) ), IntMor::identity( dual( a ) ) );
	EXPECT_NO_THROW( d.validate() );
}

TEST( Dual, ContravariantFunctor ) {
	std::mt19937_64 rng( 5 );
	for( int n = 0; n < 300; ++n ) {
		const MPObj a = random_object( rng, 2 ), b = random_object( rng, 2 ), c = random_object( rng, 2 );
		const IntMor r = random_mor( rng, a, b, 0.5 ), s = random_mor( rng, b, c, 0.5 );
		ASSERT_EQ( dual( int_compose( s, r ) ), int_compose( dual( r ), dual( s ) ) );
		ASSERT_EQ( is_pos( r ), is_neg( dual( r ) ) );
		ASSERT_EQ( is_neg( r ), is_pos( dual( r ) ) );
	}
}

TEST( Tensor, Blocks ) {
	const MPObj a = obj( { "a" }, { "a'" } ), b = obj( { "b" }, { "b'" } );
	EXPECT_EQ( tensor( IntMor::identity( a ), IntMor::identity( b ) ), IntMor::identity( tensor( a, b ) ) );
	IntMor r = IntMor::empty( a, a ), s = IntMor::empty( b, b );
	r.r12.add( 0, 0 );
	s.r21.add( 0, 0 );
	const IntMor t = tensor( r, s );
	EXPECT_EQ( t.source.plus, ( Labels{ "L.a", "R.b" } ) );
	EXPECT_TRUE( t.r12.has( 0, 0 ) );
	EXPECT_FALSE( t.r12.has( 1, 1 ) );
	EXPECT_TRUE( t.r21.has( 1, 1 ) );
	EXPECT_FALSE( t.r21.has( 0, 0 ) );
}

TEST( Positivity, Examples ) {
	const MPObj a = obj( { "a" }, { "a'" }, { true }, { true } );
	EXPECT_TRUE( is_pos( IntMor::identity( a ) ) );
	EXPECT_TRUE( is_neg( IntMor::identity( a ) ) );
	IntMor bad = IntMor::identity( a );
	bad.r22.add( 0, 0 );
	EXPECT_FALSE( is_pos( bad ) );
	IntMor bad11 = IntMor::identity( a );
	bad11.r11.add( 0, 0 );
	EXPECT_TRUE( is_pos( bad11 ) );
	EXPECT_FALSE( is_neg( bad11 ) );
}

TEST( Positivity, WitnessOnSingletons ) {
	const auto w = find_pos_not_neg( 1 );
	ASSERT_TRUE( w );
	EXPECT_TRUE( is_pos( *w ) );
	EXPECT_FALSE( is_neg( *w ) );
	EXPECT_LE( w->source.plus.size(), 1u );
	EXPECT_LE( w->target.plus.size(), 1u );
}

TEST( Positivity, ClosedUnderComposition ) {
	std::mt19937_64 rng( 6 );
	std::size_t tried = 0;
	while( tried < 500 ) {
		const MPObj a = random_object( rng, 2 ), b = random_object( rng, 2 ), c = random_object( rng, 2 );
		const auto r = random_pos( rng, a, b ), s = random_pos( rng, b, c );
		if( !r || !s ) {
			continue;
		}
		++tried;
		ASSERT_TRUE( is_pos( *r ) && is_pos( *s ) );
		ASSERT_TRUE( is_pos( int_compose( *s, *r ) ) );
		ASSERT_TRUE( is_neg( int_compose( dual( *r ), dual( *s ) ) ) );
	}
}

TEST( Shift, FunctorLaws ) {
	std::mt19937_64 rng( 7 );
	for( int n = 0; n < 300; ++n ) {
		const MPObj a = random_object( rng, 2 ), b = random_object( rng, 2 ), c = random_object( rng, 2 );
		const IntMor r = random_mor( rng, a, b ), s = random_mor( rng, b, c );
		ASSERT_EQ( down_functor( IntMor::identity( a ) ), IntMor::identity( down_obj( a ) ) );
		ASSERT_EQ( down_functor( int_compose( s, r ) ), int_compose( down_functor( s ), down_functor( r ) ) );
		ASSERT_TRUE( is_pos( down_functor( r ) ) );
		ASSERT_TRUE( is_neg( up_functor( r ) ) );
	}
}

TEST( Shift, FreshPointAvoidsExistingLabels ) {
	const MPObj a = obj( { "*" }, { "**" } );
	const MPObj d = down_obj( a );
	EXPECT_EQ( d.plus.back(), "***" );
	EXPECT_EQ( d.minus.back(), "***" );
}

TEST( Adjunction, RoundTripAndPositivity ) {
	std::mt19937_64 rng( 8 );
	for( int n = 0; n < 500; ++n ) {
		const MPObj a = random_object( rng, 3 ), b = random_object( rng, 3 );
		const IntMor r = random_mor( rng, a, b );
		const IntMor t = transpose_to_pos( r );
		ASSERT_TRUE( is_pos( t ) );
		ASSERT_EQ( transpose_from_pos( t, b ), r );
		ASSERT_TRUE( is_neg( transpose_to_neg( r ) ) );
	}
	const MPObj a = obj( { "a" }, {} );
	EXPECT_THROW( transpose_from_pos( IntMor::identity( a ), a ), ShapeMismatch );
}

TEST( Adjunction, BijectionOnSingletons ) {
	for( const MPObj &a : small_objects( 1 ) ) {
		for( const MPObj &b : small_objects( 1, false ) ) {
			std::size_t plain = 0, pos = 0;
			std::set< std::vector< std::pair< std::string, std::string > > > images;
			for_each_mor( a, b, [ & ]( const IntMor &r ) {
				++plain;
				const IntMor t = transpose_to_pos( r );
				auto key = t.r11.pairs();
				for( const FinRel *blk : { &t.r12, &t.r21, &t.r22 } ) {
					auto p = blk->pairs();
					key.push_back( { "|", "|" } );
					key.insert( key.end(), p.begin(), p.end() );
				}
				images.insert( key );
			} );
			for_each_mor( a, down_obj( b ), [ & ]( const IntMor &t ) { pos += is_pos( t ); } );
			ASSERT_EQ( images.size(), plain );
			ASSERT_EQ( pos, plain );
		}
	}
}

TEST( Validate, BlockShapes ) {
	const MPObj a = obj( { "a" }, { "a'" } );
	IntMor r = IntMor::identity( a );
	EXPECT_NO_THROW( r.validate() );
	r.r12 = FinRel( { "x" }, { "a" } );
	EXPECT_THROW( r.validate(), ShapeMismatch );
	MPObj bad = a;
	bad.mp_plus.push_back( true );
	EXPECT_THROW( bad.validate(), ShapeMismatch );
}
