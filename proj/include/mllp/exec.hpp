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

#ifndef MLLP_EXEC_HPP
#define MLLP_EXEC_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutelim.hpp"
#include "goi.hpp"
#include "relcore.hpp"

namespace mllp {

/// Swap blocks for the cut pairs, on the U and 1 layers of the delta part.
struct CutSymmetry {
	BlockRel upper;
	BlockRel lower;
};

inline CutSymmetry build_sigma( const Layout &l ) {
	const std::size_t nu = l.u_total - l.u_gamma, n1 = l.one_total - l.one_gamma;
	CutSymmetry s{ BlockRel( Wires( nu, WireType::U ), Wires( nu, WireType::U ) ),
		BlockRel( Wires( n1, WireType::One ), Wires( n1, WireType::One ) ) };
	for( std::size_t k = l.gamma_count; k < l.occ.size(); k += 2 ) {
		const Occurrence &a = l.occ[ k ], &b = l.occ[ k + 1 ];
		const DualPairing d = dual_pairing( a.formula );
		for( std::size_t i = 0; i < d.u.size(); ++i ) {
			const std::size_t x = a.u_begin + i - l.u_gamma, y = b.u_begin + d.u[ i ] - l.u_gamma;
			s.upper.set( x, y, Entry::Id );
			s.upper.set( y, x, Entry::Id );
		}
		for( std::size_t i = 0; i < d.one.size(); ++i ) {
			const std::size_t x = a.one_begin + i - l.one_gamma, y = b.one_begin + d.one[ i ] - l.one_gamma;
			s.lower.set( x, y, Entry::Id );
			s.lower.set( y, x, Entry::Id );
		}
	}
	return s;
}

inline CutSymmetry build_sigma( const Proof &p ) { return build_sigma( make_layout( check( p ) ) ); }

/// Execution result on the gamma wires only.
struct ExPair {
	BlockRel upper;
	BlockRel lower;

	friend bool operator==( const ExPair &a, const ExPair &b ) { return a.upper == b.upper && a.lower == b.lower; }
};

inline BlockRel execute_layer( const BlockRel &m, const BlockRel &sigma, std::size_t kept ) {
	const WireType t = m.dom().empty() ? WireType::U : m.dom()[ 0 ];
	const BlockRel fb = compose( tensor( BlockRel::identity( Wires( kept, t ) ), sigma ), m );
	return trace( fb, sigma.rows() );
}

/// Tr over the cut wires of (Id (x) sigma) o M, at both layers.
inline ExPair ex( const InterpPair &ip, const CutSymmetry &s ) {
	const Layout &l = ip.layout;
	if( s.upper.rows() != l.u_total - l.u_gamma || s.lower.rows() != l.one_total - l.one_gamma ) {
		throw InterfaceError( "ex: symmetry does not match the layout" );
	}
	return ExPair{ execute_layer( ip.upper, s.upper, l.u_gamma ), execute_layer( ip.lower, s.lower, l.one_gamma ) };
}

inline ExPair ex( const InterpPair &ip ) { return ex( ip, build_sigma( ip.layout ) ); }

/// Executes only the last `k` cut pairs; the result keeps the remaining ones.
inline InterpPair ex_last_pairs( const InterpPair &ip, std::size_t k ) {
	const Layout &l = ip.layout;
	const std::size_t pairs = ( l.occ.size() - l.gamma_count ) / 2;
	if( k > pairs ) {
		throw InterfaceError( "ex_last_pairs: not that many cuts" );
	}
	const std::size_t first = l.gamma_count + 2 * ( pairs - k );
	Layout kept;
	kept.gamma_count = l.gamma_count;
	kept.occ.assign( l.occ.begin(), l.occ.begin() + static_cast< std::ptrdiff_t >( first ) );
	const std::size_t ku = first < l.occ.size() ? l.occ[ first ].u_begin : l.u_total;
	const std::size_t k1 = first < l.occ.size() ? l.occ[ first ].one_begin : l.one_total;
	kept.u_total = ku;
	kept.one_total = k1;
	kept.u_gamma = l.u_gamma;
	kept.one_gamma = l.one_gamma;

	Layout tail = l;
	tail.gamma_count = first;
	tail.u_gamma = ku;
	tail.one_gamma = k1;
	const CutSymmetry s = build_sigma( tail );
	return InterpPair{ execute_layer( ip.upper, s.upper, ku ), execute_layer( ip.lower, s.lower, k1 ), kept };
}

// ---------------------------------------------------------------------------
// Invariance under cut elimination

struct Mismatch {
	std::string layer;
	std::size_t row = 0, col = 0;
	Entry expected = Entry::Zero, actual = Entry::Zero;
};

inline std::optional< Mismatch > first_mismatch( const ExPair &want, const ExPair &got ) {
	const BlockRel *w[ 2 ] = { &want.upper, &want.lower };
	const BlockRel *g[ 2 ] = { &got.upper, &got.lower };
	const char *names[ 2 ] = { "upper", "lower" };
	for( int l = 0; l < 2; ++l ) {
		if( w[ l ]->rows() != g[ l ]->rows() || w[ l ]->cols() != g[ l ]->cols() ) {
			return Mismatch{ names[ l ], w[ l ]->rows(), g[ l ]->rows(), Entry::Zero, Entry::Zero };
		}
		for( std::size_t i = 0; i < w[ l ]->rows(); ++i ) {
			for( std::size_t j = 0; j < w[ l ]->cols(); ++j ) {
				if( w[ l ]->at( i, j ) != g[ l ]->at( i, j ) ) {
					return Mismatch{ names[ l ], i, j, w[ l ]->at( i, j ), g[ l ]->at( i, j ) };
				}
			}
		}
	}
	return std::nullopt;
}

struct InvarianceReport {
	bool ok = true;
	std::size_t steps = 0;
	std::vector< std::string > redexes;
	std::optional< std::size_t > failed_step; // 1-based step index; steps+1 means the final comparison
	std::optional< Mismatch > mismatch;
	std::string error;
	Proof normal_form;
};

/// Normalises p and compares the execution formula after every step.
inline InvarianceReport check_invariance( const Proof &p, Strategy s = Strategy::Leftmost, Mode mode = Mode::Rel ) {
	InvarianceReport rep{ true, 0, {}, std::nullopt, std::nullopt, {}, p };
	const ExPair start = ex( interp( p, mode ) );
	ExPair prev = start;
	try {
		const NormalizeResult res = normalize( p, s, 0, [ & ]( const TraceEntry &e ) {
			++rep.steps;
			rep.redexes.push_back( e.redex.describe() );
			if( !rep.ok ) {
				return;
			}
			ExPair cur = ex( interp( e.after, mode ) );
			if( auto m = first_mismatch( prev, cur ) ) {
				rep.ok = false;
				rep.failed_step = rep.steps;
				rep.mismatch = m;
			}
			prev = std::move( cur );
		} );
		rep.normal_form = res.normal;
		if( rep.ok ) {
			const InterpPair nf = interp( res.normal, mode );
			if( auto m = first_mismatch( start, ExPair{ nf.upper, nf.lower } ) ) {
				rep.ok = false;
				rep.failed_step = rep.steps + 1;
				rep.mismatch = m;
			}
		}
	} catch( const std::exception &e ) {
		rep.ok = false;
		rep.error = e.what();
	}
	return rep;
}

// ---------------------------------------------------------------------------
// Multipoint squares

struct FocusReport {
	bool commutes = false;
	bool nontrivial = false;
	bool range_ok = false;
	BlockRel lhs;
	BlockRel rhs;
	std::vector< Mismatch > witnesses;
};

class NotFocused : public std::invalid_argument {
public:
	NotFocused() : std::invalid_argument( "conclusion is not focused" ) {}
};

/*
 * Compares Ex.upper o iota_A o mp(A) with iota_M o mp(M) o Ex.lower|_{1_A}
 * for the gamma occurrence `a`; M is the rest of gamma.
 */
inline FocusReport multipoint_square( const ExPair &e, const Layout &l, std::size_t a ) {
	FocusReport rep;
	const Occurrence &oa = l.occ.at( a );
	const Wires u_all( l.u_gamma, WireType::U ), one_all( l.one_gamma, WireType::One );

	BlockRel mpa( u_all, Wires( oa.shape.m(), WireType::One ) );
	for( std::size_t k = 0; k < oa.shape.m(); ++k ) {
		mpa.set( oa.u_begin + oa.shape.one_to_au[ k ], k, Entry::Point );
	}
	rep.lhs = compose( e.upper, mpa );

	std::vector< std::size_t > a_ones = l.one_span( a ), m_ones;
	BlockRel mp_m( u_all, one_all );
	for( std::size_t k = 0; k < l.gamma_count; ++k ) {
		if( k == a ) {
			continue;
		}
		const Occurrence &o = l.occ[ k ];
		for( std::size_t j = 0; j < o.shape.m(); ++j ) {
			mp_m.set( o.u_begin + o.shape.one_to_au[ j ], o.one_begin + j, Entry::Point );
			m_ones.push_back( o.one_begin + j );
		}
	}
	const BlockRel restricted = compose( e.lower, prim::span_inj( one_all, a_ones ) );
	rep.rhs = compose( mp_m, restricted );
	rep.range_ok = ranges_over( restricted, m_ones );
	for( std::size_t i = 0; i < rep.lhs.rows(); ++i ) {
		for( std::size_t j = 0; j < rep.lhs.cols(); ++j ) {
			if( rep.lhs.at( i, j ) != rep.rhs.at( i, j ) ) {
				rep.witnesses.push_back( Mismatch{ "square", i, j, rep.lhs.at( i, j ), rep.rhs.at( i, j ) } );
			}
		}
	}
	rep.commutes = rep.witnesses.empty() && rep.range_ok;
	rep.nontrivial = !rep.lhs.is_zero();
	return rep;
}

inline FocusReport check_focus( const Proof &p, Mode mode = Mode::Rel ) {
	const Sequent &s = check( p );
	const auto pos = s.positive_index();
	if( !is_focused( s ) || !pos ) {
		throw NotFocused();
	}
	const InterpPair ip = interp( p, mode );
	return multipoint_square( ex( ip ), ip.layout, *pos );
}

struct ConverseViolation {
	Proof proof;
	std::size_t position;
};

struct ConverseReport {
	std::size_t proofs_scanned = 0;
	std::size_t squares_checked = 0;
	std::size_t trivial = 0;
	std::size_t non_commuting = 0;
	std::vector< ConverseViolation > violations;
	bool ok() const { return violations.empty(); }
};

/// Squares for every negative, shift-containing formula of a non-focused conclusion.
inline void converse_scan_one( const Proof &p, ConverseReport &rep, Mode mode = Mode::Rel ) {
	const Sequent &s = check( p );
	if( s.positive_count() != 0 ) {
		return;
	}
	++rep.proofs_scanned;
	const InterpPair ip = interp( p, mode );
	const ExPair e = ex( ip );
	for( std::size_t k = 0; k < s.gamma.size(); ++k ) {
		if( !s.gamma[ k ].has_shift() ) {
			continue;
		}
		++rep.squares_checked;
		const FocusReport f = multipoint_square( e, ip.layout, k );
		if( !f.nontrivial ) {
			++rep.trivial;
		} else if( !f.commutes ) {
			++rep.non_commuting;
		} else {
			rep.violations.push_back( { p, k } );
		}
	}
}

inline ConverseReport check_converse( std::size_t budget, const std::vector< std::string > &atoms = { "X", "Y" },
	Mode mode = Mode::Rel ) {
	ConverseReport rep;
	ProofEnumerator en( budget, atoms );
	for( std::size_t n = 1; n <= budget; ++n ) {
		for( const Proof &p : en.of_size( n ) ) {
			converse_scan_one( p, rep, mode );
		}
	}
	return rep;
}

} // namespace mllp

#endif // MLLP_EXEC_HPP
