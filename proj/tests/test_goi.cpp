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

#include "goldens.hpp"
#include "mllp/goi.hpp"
#include "mllp/laws.hpp"
#include "mllp/window_oracle.hpp"
#include "test_util.hpp"

using namespace mllp;
using mllp::testing::rel;

namespace {

const Formula X = atom( "X" ), Xn = neg_atom( "X" ), Y = atom( "Y" ), Yn = neg_atom( "Y" );

std::vector< Formula > sample_formulas( std::uint64_t seed, std::size_t n ) {
	laws::Rng rng( seed );
	std::vector< Formula > out;
	for( std::size_t k = 0; k < n; ++k ) {
		out.push_back( laws::random_formula( rng, k % 2 ? Polarity::Positive : Polarity::Negative, 1 + k % 4 ) );
	}
	return out;
}

void expect_golden( const BlockRel &got, const std::vector< std::string > &labels, const goldens::Named &want ) {
	const auto why = goldens::compare( got, labels, want );
	EXPECT_FALSE( why ) << *why << "\n" << got.to_text();
}

} // namespace

TEST( Shape, UpAtom ) {
	const ShapeInfo s = shape( up( X ) );
	EXPECT_EQ( s.m(), 1u );
	ASSERT_EQ( s.u_count(), 2u );
	EXPECT_EQ( s.leaves[ 0 ].label, "U:X" );
	EXPECT_EQ( s.leaves[ 0 ].role, LeafRole::InAD );
	EXPECT_EQ( s.leaves[ 1 ].kind, LeafKind::ShiftUp );
	EXPECT_EQ( s.leaves[ 1 ].role, LeafRole::InAU );
	EXPECT_EQ( s.au_leaves(), std::vector< std::size_t >{ 1 } );
}

TEST( Shape, ParOfAtoms ) {
	const ShapeInfo s = shape( par( Yn, Xn ) );
	EXPECT_EQ( s.m(), 2u );
	EXPECT_EQ( s.u_count(), 2u );
	EXPECT_EQ( s.au_leaves(), ( std::vector< std::size_t >{ 0, 1 } ) );
	EXPECT_EQ( s.one_labels, ( std::vector< std::string >{ "1:Y^", "1:X^" } ) );
}

TEST( Shape, AtomAndDown ) {
	EXPECT_EQ( shape( X ).m(), 1u );
	EXPECT_EQ( shape( X ).u_count(), 1u );
	const ShapeInfo d = shape( down( par( Xn, up( Y ) ) ) );
	EXPECT_EQ( d.m(), 1u );
	EXPECT_EQ( d.leaves.front().kind, LeafKind::ShiftDown );
	EXPECT_EQ( d.u_count(), 4u );
}

TEST( Shape, UnitsAreRejected ) {
	EXPECT_THROW( shape( one() ), UnitUnsupported );
	EXPECT_THROW( shape( par( bot(), Xn ) ), UnitUnsupported );
	const Proof p = Proof::ax( bot() );
	EXPECT_NO_THROW( check( p ) );
	EXPECT_THROW( interp( p ), UnitUnsupported );
}

TEST( Shape, LeafCounts ) {
	for( const Formula &f : sample_formulas( 31, 500 ) ) {
		const ShapeInfo s = shape( f );
		ASSERT_EQ( s.au_leaves().size(), s.m() ) << to_string( f );
		ASSERT_EQ( s.one_labels.size(), s.m() );
		for( std::size_t k = 0; k < s.m(); ++k ) {
			ASSERT_EQ( s.leaves[ s.one_to_au[ k ] ].one, k );
		}
		const ShapeInfo n = shape( negate( f ) );
		ASSERT_EQ( n.u_count(), s.u_count() );
		ASSERT_EQ( n.m(), s.m() );
	}
}

TEST( Multipoint, Examples ) {
	EXPECT_EQ( mp( up( X ) ), rel( "UU", "1", "0/p" ) );
	EXPECT_EQ( mp( par( Yn, Xn ) ), rel( "UU", "11", "p0/0p" ) );
	EXPECT_EQ( mp( X ), prim::alpha() );
}

// mp(A) is alpha on each 1-leaf, injected into the InAU leaves, zero on the rest.
TEST( Multipoint, Factorization ) {
	for( const Formula &f : sample_formulas( 32, 500 ) ) {
		const ShapeInfo s = shape( f );
		BlockRel alphas( {}, {} );
		for( std::size_t k = 0; k < s.m(); ++k ) {
			alphas = tensor( alphas, prim::alpha() );
		}
		std::vector< std::size_t > span;
		for( std::size_t k = 0; k < s.m(); ++k ) {
			span.push_back( s.one_to_au[ k ] );
		}
		const BlockRel want = compose( prim::span_inj( Wires( s.u_count(), WireType::U ), span ), alphas );
		ASSERT_EQ( mp( f ), want ) << to_string( f );
	}
}

TEST( Retraction, LeftInverse ) {
	for( const Formula &f : sample_formulas( 33, 300 ) ) {
		const auto [ r, bang ] = retraction_rA( f );
		ASSERT_EQ( compose( bang, r ), BlockRel::identity( Wires( shape( f ).m(), WireType::U ) ) ) << to_string( f );
	}
	EXPECT_EQ( retraction_rA( X ).first, prim::r_alpha() );
}

TEST( Retraction, OneCopyIsPointwise ) {
	const Formula f = par( Yn, up( X ) );
	const auto [ r, bang ] = retraction_rA( f );
	const std::size_t m = shape( f ).m();
	const BlockRel proj = prim::quasi_proj( { Wires( m, WireType::U ), Wires( m, WireType::One ) }, 1 );
	const BlockRel got = compose( proj, r );
	EXPECT_EQ( got, rel( "11", "UU", "p0/0p" ) );
	// on the window: only n_alpha survives, landing on the single point of each 1
	const Window w{ 8, 2 };
	const auto o = oracle::materialize( got, w );
	EXPECT_EQ( o.pair_count(), 2u );
	EXPECT_TRUE( o.get( 0, 2 ) );
	EXPECT_TRUE( o.get( 1, 8 + 2 ) );
}

TEST( Interp, AtomicAxiom ) {
	const InterpPair ip = interp( Proof::ax( Xn ) );
	EXPECT_EQ( ip.upper, rel( "UU", "UU", "01/10" ) );
	EXPECT_EQ( ip.lower, rel( "11", "11", "01/10" ) );
}

TEST( Interp, EtaExpansionGolden ) {
	const InterpPair ip = interp( goldens::eta_proof() );
	EXPECT_EQ( ip.layout.u_labels(), ( std::vector< std::string >{ "g0/U:dn", "g0/U:X^", "g1/U:X", "g1/U:up" } ) );
	expect_golden( ip.upper, ip.layout.u_labels(), goldens::eta_upper() );
	expect_golden( ip.lower, ip.layout.one_labels(), goldens::eta_lower() );
}

TEST( Interp, ShiftedTensorGolden ) {
	const Proof p = goldens::pair_proof();
	EXPECT_EQ( to_unicode( check( p ) ), "⊢ ↓↑(X ⊗ Y), (Y⊥ ⅋ X⊥)" );
	const InterpPair ip = interp( p );
	expect_golden( ip.upper, ip.layout.u_labels(), goldens::pair_upper() );
	expect_golden( ip.lower, ip.layout.one_labels(), goldens::pair_lower() );
}

TEST( Interp, GoldenComparisonDetectsChanges ) {
	const InterpPair ip = interp( goldens::eta_proof() );
	BlockRel bad = ip.upper;
	bad.set( 0, 3, Entry::Id );
	EXPECT_TRUE( goldens::compare( bad, ip.layout.u_labels(), goldens::eta_upper() ) );
	EXPECT_TRUE( goldens::compare( interp( goldens::eta_proof(), Mode::PInjDegenerate ).upper, ip.layout.u_labels(),
		goldens::eta_upper() ) );
}

TEST( Interp, DegenerateModeAddsNoBoxEntries ) {
	const InterpPair ip = interp( goldens::eta_proof(), Mode::PInjDegenerate );
	EXPECT_EQ( ip.upper, rel( "UUUU", "UUUU", "0000/0010/0100/0000" ) );
	EXPECT_TRUE( ip.lower.is_zero() );
}

// An axiom on a shifted formula is not its eta-expansion.
TEST( Interp, AxiomIsNotEtaInvariant ) {
	const InterpPair ax = interp( Proof::exchange( Proof::ax( up( X ) ), { 1, 0 } ) );
	const InterpPair eta = interp( goldens::eta_proof() );
	EXPECT_EQ( ax.layout.u_labels(), eta.layout.u_labels() );
	EXPECT_EQ( ax.upper.at( 0, 3 ), Entry::Id );
	EXPECT_EQ( eta.upper.at( 0, 3 ), Entry::Point );
	EXPECT_NE( ax.upper, eta.upper );
}

TEST( Interp, LayoutFollowsConclusion ) {
	const Proof p = goldens::chain( 1 );
	const InterpPair ip = interp( p );
	std::vector< std::string > tags;
	for( const auto &o : ip.layout.occ ) {
		tags.push_back( o.tag() );
	}
	EXPECT_EQ( tags, ( std::vector< std::string >{ "g0", "g1", "d0a", "d0b", "d1a", "d1b" } ) );
	EXPECT_EQ( ip.layout.gamma_count, 2u );
	EXPECT_EQ( ip.layout.u_gamma, 4u );
	EXPECT_EQ( ip.layout.one_gamma, 2u );
}

TEST( GoiProperty, LayoutSymmetryAndTyping ) {
	for( const Proof &p : enumerate_proofs( 8, { "X", "Y" } ) ) {
		const Sequent &s = check( p );
		const InterpPair ip = interp( p );
		std::size_t u = 0, one = 0;
		for( const Formula &f : s.gamma ) {
			u += shape( f ).u_count();
			one += shape( f ).m();
		}
		ASSERT_EQ( ip.layout.u_gamma, u );
		ASSERT_EQ( ip.layout.one_gamma, one );
		for( const auto &[ a, b ] : s.delta ) {
			u += shape( a ).u_count() + shape( b ).u_count();
			one += shape( a ).m() + shape( b ).m();
		}
		ASSERT_EQ( ip.upper.rows(), u );
		ASSERT_EQ( ip.lower.rows(), one );
		ASSERT_EQ( ip.upper.dom(), Wires( u, WireType::U ) );
		ASSERT_EQ( ip.lower.dom(), Wires( one, WireType::One ) );
		ASSERT_EQ( converse( ip.upper ), ip.upper ) << to_string( p );
		ASSERT_EQ( converse( ip.lower ), ip.lower ) << to_string( p );
	}
}

// The folded denotation, evaluated token by token, agrees with the entries.
TEST( GoiProperty, FoldedAgreesWithUnfolded ) {
	const Window w{ 16, 0 };
	for( const Proof &p : enumerate_proofs( 5, { "X", "Y" } ) ) {
		const BlockRel up = interp( p ).upper;
		const auto o = oracle::materialize( up, w );
		for( std::uint64_t t = 0; t < w.size; ++t ) {
			const auto want = oracle::fold_eval( o, t );
			ASSERT_EQ( fold_eval( up, t, w ), std::set< std::uint64_t >( want.begin(), want.end() ) )
				<< to_string( p ) << " token " << t;
		}
	}
}
