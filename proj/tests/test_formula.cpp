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

#include "mllp/formula.hpp"
#include "mllp/laws.hpp"

using namespace mllp;

namespace {

Formula parse( const char *s ) { return parse_formula( s ); }

std::vector< Formula > random_formulas( std::uint64_t seed, std::size_t n ) {
	laws::Rng rng( seed );
	std::vector< Formula > out;
	for( std::size_t k = 0; k < n; ++k ) {
		out.push_back( laws::random_formula( rng, k % 2 ? Polarity::Positive : Polarity::Negative, 1 + k % 5 ) );
	}
	return out;
}

} // namespace

TEST( FormulaParse, Atom ) {
	const Formula f = parse( "X" );
	EXPECT_EQ( f.kind(), FormulaKind::Atom );
	EXPECT_EQ( f.name(), "X" );
	EXPECT_TRUE( f.positive() );
}

TEST( FormulaParse, DownOfNegAtom ) {
	const Formula f = parse( "dn (X^)" );
	ASSERT_EQ( f.kind(), FormulaKind::Down );
	EXPECT_EQ( f.body(), neg_atom( "X" ) );
}

TEST( FormulaParse, DownUpTensor ) {
	EXPECT_EQ( parse( "dn (up (X * Y))" ), down( up( tensor( atom( "X" ), atom( "Y" ) ) ) ) );
}

TEST( FormulaParse, Units ) {
	EXPECT_EQ( parse( "one" ).kind(), FormulaKind::One );
	EXPECT_EQ( parse( "bot" ).kind(), FormulaKind::Bot );
	EXPECT_TRUE( parse( "(one * X)" ).positive() );
	EXPECT_TRUE( parse( "(bot | X^)" ).negative() );
}

TEST( FormulaParse, SubscriptedAtomsAreDistinct ) {
	EXPECT_NE( parse( "X1" ), parse( "X2" ) );
	EXPECT_NE( parse( "X" ), parse( "X1" ) );
}

TEST( FormulaParse, WhitespaceAndComments ) {
	EXPECT_EQ( parse( "  ( X\n *\tY )  # trailing\n" ), tensor( atom( "X" ), atom( "Y" ) ) );
}

TEST( FormulaParse, PolarityViolationIsTyped ) {
	EXPECT_THROW( parse( "dn X" ), PolarityError );
	EXPECT_THROW( parse( "up X^" ), PolarityError );
	EXPECT_THROW( parse( "(X * Y^)" ), PolarityError );
	EXPECT_THROW( parse( "(X | Y^)" ), PolarityError );
}

TEST( FormulaParse, SyntaxErrorsCarryPosition ) {
	try {
		parse( "(X * Y" );
		FAIL() << "expected ParseError";
	} catch( const ParseError &e ) {
		EXPECT_EQ( e.position(), 6u );
	}
	EXPECT_THROW( parse( "" ), ParseError );
	EXPECT_THROW( parse( "X Y" ), ParseError );
	EXPECT_THROW( parse( "(X & Y)" ), ParseError );
}

TEST( FormulaFactories, RejectWrongPolarity ) {
	EXPECT_THROW( tensor( atom( "X" ), neg_atom( "Y" ) ), PolarityError );
	EXPECT_THROW( par( atom( "X" ), neg_atom( "Y" ) ), PolarityError );
	EXPECT_THROW( down( atom( "X" ) ), PolarityError );
	EXPECT_THROW( up( neg_atom( "X" ) ), PolarityError );
}

TEST( Polarity, Examples ) {
	EXPECT_EQ( atom( "X" ).polarity(), Polarity::Positive );
	EXPECT_EQ( down( neg_atom( "X" ) ).polarity(), Polarity::Positive );
	EXPECT_EQ( par( neg_atom( "X" ), neg_atom( "Y" ) ).polarity(), Polarity::Negative );
	EXPECT_EQ( one().polarity(), Polarity::Positive );
	EXPECT_EQ( bot().polarity(), Polarity::Negative );
}

TEST( Negate, Examples ) {
	EXPECT_EQ( negate( atom( "X" ) ), neg_atom( "X" ) );
	EXPECT_EQ( negate( one() ), bot() );
	// non-reversing: the left component stays on the left
	EXPECT_EQ( negate( down( par( neg_atom( "X" ), neg_atom( "Y" ) ) ) ), up( tensor( atom( "X" ), atom( "Y" ) ) ) );
	EXPECT_TRUE( is_dual( down( neg_atom( "X" ) ), up( atom( "X" ) ) ) );
	EXPECT_FALSE( is_dual( atom( "X" ), neg_atom( "Y" ) ) );
	EXPECT_FALSE( is_dual( atom( "X" ), atom( "X" ) ) );
}

TEST( FormulaProperty, NegationFlipsPolarityAndIsInvolutive ) {
	for( const Formula &f : random_formulas( 11, 2000 ) ) {
		const Formula g = negate( f );
		ASSERT_NE( g.polarity(), f.polarity() ) << to_string( f );
		ASSERT_EQ( negate( g ), f ) << to_string( f );
		ASSERT_EQ( g.size(), f.size() );
		ASSERT_TRUE( is_dual( f, g ) );
	}
}

TEST( FormulaProperty, PrintParseRoundTrip ) {
	for( const Formula &f : random_formulas( 12, 2000 ) ) {
		const std::string s = to_string( f );
		const Formula g = parse_formula( s );
		ASSERT_EQ( g, f ) << s;
		ASSERT_EQ( to_string( g ), s );
	}
}

TEST( FormulaProperty, EqualityAgreesWithPrinting ) {
	const auto fs = random_formulas( 13, 300 );
	for( const Formula &a : fs ) {
		for( const Formula &b : fs ) {
			ASSERT_EQ( a == b, to_string( a ) == to_string( b ) );
		}
	}
}

TEST( FormulaPrint, Unicode ) {
	EXPECT_EQ( to_unicode( parse( "dn (X^ | up Y)" ) ), "↓(X⊥ ⅋ ↑Y)" );
	EXPECT_EQ( to_unicode( parse( "(one * X)" ) ), "(1 ⊗ X)" );
}

TEST( FormulaShape, HasShiftAndAtoms ) {
	EXPECT_FALSE( parse( "(X * Y)" ).has_shift() );
	EXPECT_TRUE( parse( "(X * dn Y^)" ).has_shift() );
	std::vector< std::string > atoms;
	collect_atoms( parse( "(X * (Y * dn X^))" ), atoms );
	EXPECT_EQ( atoms, ( std::vector< std::string >{ "X", "Y" } ) );
}
