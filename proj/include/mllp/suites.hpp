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

#ifndef MLLP_SUITES_HPP
#define MLLP_SUITES_HPP

/*
 * Enumeration-driven verification suites shared by the command-line tool
 * and the acceptance runner. Proofs are visited in enumeration order
 * (by rule count, then generation order), so reports are reproducible.
 */

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "exec.hpp"
#include "laws.hpp"
#include "window_oracle.hpp"

namespace mllp::suites {

using laws::LawResult;

inline const std::vector< std::string > kAtoms{ "X", "Y" };

template< typename F >
void for_each_proof( std::size_t max_rules, const std::vector< std::string > &atoms, F &&f ) {
	const ProofEnumerator en( max_rules, atoms );
	for( std::size_t n = 1; n <= max_rules; ++n ) {
		for( const Proof &p : en.of_size( n ) ) {
			f( p );
		}
	}
}

template< typename F >
void for_each_subproof( const Proof &p, F &&f ) {
	f( p );
	for( std::size_t k = 0; k < p.premise_count(); ++k ) {
		for_each_subproof( p.premise( k ), f );
	}
}

inline LawResult invariance( std::size_t max_rules, Strategy s = Strategy::Leftmost, Mode mode = Mode::Rel,
	const std::vector< std::string > &atoms = kAtoms ) {
	LawResult res( "invariance" );
	std::size_t steps = 0;
	for_each_proof( max_rules, atoms, [ & ]( const Proof &p ) {
		++res.cases;
		const InvarianceReport r = check_invariance( p, s, mode );
		steps += r.steps;
		if( !r.ok ) {
			std::string why = to_string( p );
			if( r.failed_step ) {
				why += " fails at step " + std::to_string( *r.failed_step );
			}
			if( r.mismatch ) {
				why += " (" + r.mismatch->layer + " " + std::to_string( r.mismatch->row ) + "," +
					std::to_string( r.mismatch->col ) + ")";
			}
			if( !r.error.empty() ) {
				why += ": " + r.error;
			}
			res.fail( why );
		}
	} );
	res.note = std::to_string( steps ) + " reduction steps";
	return res;
}

inline LawResult focus( std::size_t max_rules, Mode mode = Mode::Rel, const std::vector< std::string > &atoms = kAtoms ) {
	LawResult res( "focus" );
	std::size_t nontrivial = 0;
	for_each_proof( max_rules, atoms, [ & ]( const Proof &p ) {
		if( !is_focused( check( p ) ) ) {
			return;
		}
		++res.cases;
		const FocusReport r = check_focus( p, mode );
		nontrivial += r.nontrivial;
		if( !r.commutes ) {
			res.fail( to_string( p ) + ( r.range_ok ? " square does not commute" : " range condition fails" ) );
		}
	} );
	res.note = std::to_string( nontrivial ) + " nontrivial squares";
	return res;
}

inline LawResult converse( std::size_t max_rules, Mode mode = Mode::Rel,
	const std::vector< std::string > &atoms = kAtoms ) {
	const ConverseReport r = check_converse( max_rules, atoms, mode );
	LawResult res( "converse" );
	res.cases = r.squares_checked;
	res.failures = r.violations.size();
	if( !r.violations.empty() ) {
		res.first_failure = to_string( r.violations.front().proof ) + " commutes nontrivially at position " +
			std::to_string( r.violations.front().position );
	}
	res.note = std::to_string( r.proofs_scanned ) + " proofs, " + std::to_string( r.trivial ) + " trivial, " +
		std::to_string( r.non_commuting ) + " non-commuting";
	return res;
}

/// Executes one layer on the window with the set-level operations only.
inline oracle::SetRel oracle_execute( const BlockRel &m, const BlockRel &sigma, std::size_t kept, const Window &w ) {
	const WireType t = m.dom().empty() ? WireType::U : m.dom()[ 0 ];
	const oracle::SetRel fb = oracle::compose(
		oracle::tensor( oracle::materialize( BlockRel::identity( Wires( kept, t ) ), w ), oracle::materialize( sigma, w ) ),
		oracle::materialize( m, w ) );
	return oracle::trace( fb, sigma.rows() );
}

/*
 * Every subproof's two layers and their execution, recomputed as plain
 * relations on the window, must read back as entries and agree with the
 * entry-level result.
 */
inline LawResult closure( std::size_t max_rules, const Window &w, Mode mode = Mode::Rel,
	const std::vector< std::string > &atoms = kAtoms ) {
	LawResult res( "entry closure" );
	for_each_proof( max_rules, atoms, [ & ]( const Proof &p ) {
		for_each_subproof( p, [ & ]( const Proof &q ) {
			++res.cases;
			const InterpPair ip = interp( q, mode );
			const CutSymmetry sg = build_sigma( ip.layout );
			const ExPair e = ex( ip, sg );
			const BlockRel *layers[ 2 ] = { &ip.upper, &ip.lower };
			const BlockRel *sig[ 2 ] = { &sg.upper, &sg.lower };
			const BlockRel *want[ 2 ] = { &e.upper, &e.lower };
			const std::size_t kept[ 2 ] = { ip.layout.u_gamma, ip.layout.one_gamma };
			for( int l = 0; l < 2; ++l ) {
				if( !oracle::read_back( oracle::materialize( *layers[ l ], w ), w ) ) {
					res.fail( to_string( q ) + ": denotation escapes the entry algebra" );
					return;
				}
				const auto got = oracle::read_back( oracle_execute( *layers[ l ], *sig[ l ], kept[ l ], w ), w );
				if( !got ) {
					res.fail( to_string( q ) + ": execution escapes the entry algebra" );
					return;
				}
				if( *got != *want[ l ] ) {
					res.fail( to_string( q ) + ": set-level execution differs from the entry result" );
					return;
				}
			}
		} );
	} );
	return res;
}

/// Codec identities on the window, then folded evaluation against the oracle.
inline LawResult codec( std::size_t max_rules, const Window &w, Mode mode = Mode::Rel,
	const std::vector< std::string > &atoms = kAtoms ) {
	LawResult res( "codec" );
	auto expect = [ & ]( bool c, const std::string &why ) {
		++res.cases;
		if( !c ) {
			res.fail( why );
		}
	};
	for( std::uint64_t n = 0; n < w.size; ++n ) {
		expect( codec_j( 1, n ) == 2 * n && codec_j( 2, n ) == 2 * n + 1, "j mismatch at " + std::to_string( n ) );
		const auto [ b, v ] = codec_k( n );
		expect( codec_j( b, v ) == n, "j(k(t)) != t at " + std::to_string( n ) );
		for( int br = 1; br <= 2; ++br ) {
			const auto back = codec_k( codec_j( br, n ) );
			expect( back.first == br && back.second == n, "k(j(b,n)) != (b,n) at " + std::to_string( n ) );
		}
		for( std::size_t m = 1; m <= 6; ++m ) {
			const auto [ leaf, val ] = fold_decode( m, n );
			expect( fold_encode( m, leaf, val ) == n, "fold round trip fails at " + std::to_string( n ) );
		}
	}
	for_each_proof( max_rules, atoms, [ & ]( const Proof &p ) {
		const ExPair e = ex( interp( p, mode ) );
		if( e.upper.cols() == 0 ) {
			return;
		}
		const oracle::SetRel s = oracle::materialize( e.upper, w );
		for( std::uint64_t t = 0; t < w.size; ++t ) {
			const auto a = fold_eval( e.upper, t, w );
			const auto bv = oracle::fold_eval( s, t );
			expect( a == std::set< std::uint64_t >( bv.begin(), bv.end() ),
				to_string( p ) + ": folded evaluation differs at token " + std::to_string( t ) );
		}
	} );
	return res;
}

} // namespace mllp::suites

#endif // MLLP_SUITES_HPP
