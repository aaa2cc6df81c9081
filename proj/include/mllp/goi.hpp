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

#ifndef MLLP_GOI_HPP
#define MLLP_GOI_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "proof.hpp"
#include "relcore.hpp"

namespace mllp {

class UnitUnsupported : public std::invalid_argument {
public:
	UnitUnsupported() : std::invalid_argument( "units have no interpretation" ) {}
};

enum class LeafRole : std::uint8_t { InAU, InAD };
enum class LeafKind : std::uint8_t { Literal, ShiftDown, ShiftUp };

struct ULeaf {
	LeafKind kind;
	LeafRole role;
	std::string label;
	std::optional< std::size_t > one; // paired 1-leaf, for InAU leaves
};

/*
 * Wire decomposition of a formula. `leaves` is the U-layer in syntax order
 * (down-shift wire leftmost, up-shift wire rightmost); `one_to_au[k]` is the
 * InAU leaf matched with the k-th 1-leaf.
 */
struct ShapeInfo {
	std::vector< ULeaf > leaves;
	std::vector< std::size_t > one_to_au;
	std::vector< std::string > one_labels;

	std::size_t m() const { return one_to_au.size(); }
	std::size_t u_count() const { return leaves.size(); }
	std::vector< std::size_t > au_leaves() const {
		std::vector< std::size_t > out;
		for( std::size_t k = 0; k < leaves.size(); ++k ) {
			if( leaves[ k ].role == LeafRole::InAU ) {
				out.push_back( k );
			}
		}
		return out;
	}
};

inline ShapeInfo shape( const Formula &a ) {
	ShapeInfo s;
	switch( a.kind() ) {
	case FormulaKind::One:
	case FormulaKind::Bot:
		throw UnitUnsupported();
	case FormulaKind::Atom:
	case FormulaKind::NegAtom: {
		const std::string name = a.kind() == FormulaKind::Atom ? a.name() : a.name() + "^";
		s.leaves.push_back( { LeafKind::Literal, LeafRole::InAU, "U:" + name, 0 } );
		s.one_to_au = { 0 };
		s.one_labels = { "1:" + name };
		return s;
	}
	case FormulaKind::Tensor:
	case FormulaKind::Par: {
		s = shape( a.left() );
		const ShapeInfo r = shape( a.right() );
		const std::size_t uo = s.leaves.size(), oo = s.one_to_au.size();
		for( ULeaf l : r.leaves ) {
			if( l.one ) {
				l.one = *l.one + oo;
			}
			s.leaves.push_back( l );
		}
		for( std::size_t k = 0; k < r.m(); ++k ) {
			s.one_to_au.push_back( r.one_to_au[ k ] + uo );
			s.one_labels.push_back( r.one_labels[ k ] );
		}
		return s;
	}
	case FormulaKind::Down: {
		s.leaves.push_back( { LeafKind::ShiftDown, LeafRole::InAU, "U:dn", 0 } );
		for( ULeaf l : shape( a.body() ).leaves ) {
			l.role = LeafRole::InAD;
			l.one.reset();
			s.leaves.push_back( l );
		}
		s.one_to_au = { 0 };
		s.one_labels = { "1:dn" };
		return s;
	}
	case FormulaKind::Up: {
		for( ULeaf l : shape( a.body() ).leaves ) {
			l.role = LeafRole::InAD;
			l.one.reset();
			s.leaves.push_back( l );
		}
		s.leaves.push_back( { LeafKind::ShiftUp, LeafRole::InAU, "U:up", 0 } );
		s.one_to_au = { s.leaves.size() - 1 };
		s.one_labels = { "1:up" };
		return s;
	}
	}
	throw std::logic_error( "unreachable" );
}

/// Structural matching of the leaves of A with those of negate(A).
struct DualPairing {
	std::vector< std::size_t > u;   // leaf k of A <-> leaf u[k] of A^
	std::vector< std::size_t > one; // 1-leaf k of A <-> 1-leaf one[k] of A^
};

inline DualPairing dual_pairing( const Formula &a ) {
	DualPairing p;
	switch( a.kind() ) {
	case FormulaKind::One:
	case FormulaKind::Bot:
		throw UnitUnsupported();
	case FormulaKind::Atom:
	case FormulaKind::NegAtom:
		p.u = { 0 };
		p.one = { 0 };
		return p;
	case FormulaKind::Tensor:
	case FormulaKind::Par: {
		const DualPairing l = dual_pairing( a.left() ), r = dual_pairing( a.right() );
		p = l;
		// negate keeps argument order, so the right halves start after the left ones.
		for( auto k : r.u ) {
			p.u.push_back( k + l.u.size() );
		}
		for( auto k : r.one ) {
			p.one.push_back( k + l.one.size() );
		}
		return p;
	}
	case FormulaKind::Down: {
		// dn N = [U_dn] ++ N   vs   up N^ = N^ ++ [U_up]
		const DualPairing b = dual_pairing( a.body() );
		p.u.push_back( b.u.size() );
		for( auto k : b.u ) {
			p.u.push_back( k );
		}
		p.one = { 0 };
		return p;
	}
	case FormulaKind::Up: {
		// up P = P ++ [U_up]   vs   dn P^ = [U_dn] ++ P^
		const DualPairing b = dual_pairing( a.body() );
		for( auto k : b.u ) {
			p.u.push_back( k + 1 );
		}
		p.u.push_back( 0 );
		p.one = { 0 };
		return p;
	}
	}
	throw std::logic_error( "unreachable" );
}

/// mp(A) : 1_A -> U_A, a Point from each 1-leaf into its InAU leaf.
inline BlockRel mp( const Formula &a ) {
	const ShapeInfo s = shape( a );
	BlockRel r( Wires( s.u_count(), WireType::U ), Wires( s.m(), WireType::One ) );
	for( std::size_t k = 0; k < s.m(); ++k ) {
		r.set( s.one_to_au[ k ], k, Entry::Point );
	}
	return r;
}

/// r_A : A^U -> A^U (x) 1_A and its left inverse, leafwise over the InAU leaves.
inline std::pair< BlockRel, BlockRel > retraction_rA( const Formula &a ) {
	const ShapeInfo s = shape( a );
	const auto au = s.au_leaves();
	const std::size_t m = au.size();
	Wires cod( m, WireType::U );
	cod.insert( cod.end(), m, WireType::One );
	BlockRel r( cod, Wires( m, WireType::U ) );
	for( std::size_t i = 0; i < m; ++i ) {
		r.set( i, i, Entry::Id );
		const std::size_t leaf = au[ i ];
		const std::size_t one = *s.leaves[ leaf ].one;
		r.set( m + one, i, Entry::Point );
	}
	return { r, converse( r ) };
}

// ---------------------------------------------------------------------------
// Layout

enum class OccRole : std::uint8_t { Gamma, CutLeft, CutRight };

struct Occurrence {
	Formula formula;
	OccRole role;
	std::size_t index; // gamma position or cut pair index
	ShapeInfo shape;
	std::size_t u_begin = 0, one_begin = 0;

	std::size_t u_end() const { return u_begin + shape.u_count(); }
	std::size_t one_end() const { return one_begin + shape.m(); }
	std::string tag() const {
		switch( role ) {
		case OccRole::Gamma: return "g" + std::to_string( index );
		case OccRole::CutLeft: return "d" + std::to_string( index ) + "a";
		case OccRole::CutRight: return "d" + std::to_string( index ) + "b";
		}
		return "?";
	}
};

/// Wire layout of a sequent: gamma in order, then each cut pair (A, A^).
struct Layout {
	std::vector< Occurrence > occ;
	std::size_t gamma_count = 0;
	std::size_t u_total = 0, one_total = 0;
	std::size_t u_gamma = 0, one_gamma = 0;

	std::vector< std::string > u_labels() const {
		std::vector< std::string > out;
		for( const auto &o : occ ) {
			for( const auto &l : o.shape.leaves ) {
				out.push_back( o.tag() + "/" + l.label );
			}
		}
		return out;
	}
	std::vector< std::string > one_labels() const {
		std::vector< std::string > out;
		for( const auto &o : occ ) {
			for( const auto &l : o.shape.one_labels ) {
				out.push_back( o.tag() + "/" + l );
			}
		}
		return out;
	}
	std::vector< std::size_t > u_span( std::size_t k ) const {
		std::vector< std::size_t > v;
		for( std::size_t w = occ[ k ].u_begin; w < occ[ k ].u_end(); ++w ) {
			v.push_back( w );
		}
		return v;
	}
	std::vector< std::size_t > one_span( std::size_t k ) const {
		std::vector< std::size_t > v;
		for( std::size_t w = occ[ k ].one_begin; w < occ[ k ].one_end(); ++w ) {
			v.push_back( w );
		}
		return v;
	}
};

inline Layout make_layout( const Sequent &s ) {
	Layout l;
	auto add = [ & ]( const Formula &f, OccRole r, std::size_t idx ) {
		Occurrence o{ f, r, idx, shape( f ) };
		o.u_begin = l.u_total;
		o.one_begin = l.one_total;
		l.u_total += o.shape.u_count();
		l.one_total += o.shape.m();
		l.occ.push_back( std::move( o ) );
	};
	for( std::size_t k = 0; k < s.gamma.size(); ++k ) {
		add( s.gamma[ k ], OccRole::Gamma, k );
	}
	l.gamma_count = s.gamma.size();
	l.u_gamma = l.u_total;
	l.one_gamma = l.one_total;
	for( std::size_t k = 0; k < s.delta.size(); ++k ) {
		add( s.delta[ k ].first, OccRole::CutLeft, k );
		add( s.delta[ k ].second, OccRole::CutRight, k );
	}
	return l;
}

// ---------------------------------------------------------------------------
// Interpretation

enum class Mode : std::uint8_t { Rel, PInjDegenerate };

/// Unfolded two-layer denotation: upper on the U leaves, lower on the 1 leaves.
struct InterpPair {
	BlockRel upper;
	BlockRel lower;
	Layout layout;
};

namespace detail {

/// New matrix whose wire k copies old wire src[k], or is a fresh zero wire.
inline BlockRel rewire( const BlockRel &old, WireType t, const std::vector< std::optional< std::size_t > > &src ) {
	const Wires w( src.size(), t );
	BlockRel out( w, w );
	for( std::size_t i = 0; i < src.size(); ++i ) {
		if( !src[ i ] ) {
			continue;
		}
		for( std::size_t j = 0; j < src.size(); ++j ) {
			if( src[ j ] ) {
				out.set( i, j, old.at( *src[ i ], *src[ j ] ) );
			}
		}
	}
	return out;
}

struct WirePlan {
	std::vector< std::optional< std::size_t > > u, one;

	void take( const Layout &l, std::size_t k, std::size_t u_off, std::size_t one_off, bool with_ones = true ) {
		for( std::size_t w = l.occ[ k ].u_begin; w < l.occ[ k ].u_end(); ++w ) {
			u.push_back( w + u_off );
		}
		if( with_ones ) {
			for( std::size_t w = l.occ[ k ].one_begin; w < l.occ[ k ].one_end(); ++w ) {
				one.push_back( w + one_off );
			}
		}
	}
	void take_delta( const Layout &l, std::size_t u_off, std::size_t one_off ) {
		for( std::size_t k = l.gamma_count; k < l.occ.size(); ++k ) {
			take( l, k, u_off, one_off );
		}
	}
};

inline InterpPair apply_plan( const BlockRel &upper, const BlockRel &lower, const WirePlan &plan, Layout nl ) {
	if( plan.u.size() != nl.u_total || plan.one.size() != nl.one_total ) {
		throw std::logic_error( "interp: internal layout mismatch" );
	}
	return InterpPair{ rewire( upper, WireType::U, plan.u ), rewire( lower, WireType::One, plan.one ), std::move( nl ) };
}

inline void set_sym( BlockRel &m, std::size_t a, std::size_t b, Entry e ) {
	m.set( a, b, e );
	m.set( b, a, e );
}

inline InterpPair interp( const Proof &p, Mode mode ) {
	const Sequent &seq = check( p );
	Layout nl = make_layout( seq );
	switch( p.kind() ) {
	case RuleKind::Ax: {
		BlockRel up( Wires( nl.u_total, WireType::U ), Wires( nl.u_total, WireType::U ) );
		BlockRel lo( Wires( nl.one_total, WireType::One ), Wires( nl.one_total, WireType::One ) );
		const DualPairing d = dual_pairing( seq.gamma[ 0 ] );
		const std::size_t uo = nl.occ[ 1 ].u_begin, oo = nl.occ[ 1 ].one_begin;
		for( std::size_t k = 0; k < d.u.size(); ++k ) {
			set_sym( up, k, uo + d.u[ k ], Entry::Id );
		}
		for( std::size_t k = 0; k < d.one.size(); ++k ) {
			set_sym( lo, k, oo + d.one[ k ], Entry::Id );
		}
		return InterpPair{ up, lo, std::move( nl ) };
	}
	case RuleKind::Exchange: {
		const InterpPair a = interp( p.premise(), mode );
		WirePlan plan;
		for( std::size_t k : p.perm() ) {
			plan.take( a.layout, k, 0, 0 );
		}
		plan.take_delta( a.layout, 0, 0 );
		return apply_plan( a.upper, a.lower, plan, std::move( nl ) );
	}
	case RuleKind::Par: {
		const InterpPair a = interp( p.premise(), mode );
		const std::size_t lo = std::min( p.i(), p.j() ), hi = std::max( p.i(), p.j() );
		WirePlan plan;
		for( std::size_t k = 0; k < a.layout.gamma_count; ++k ) {
			if( k == lo ) {
				plan.take( a.layout, p.i(), 0, 0 );
				plan.take( a.layout, p.j(), 0, 0 );
			} else if( k != hi ) {
				plan.take( a.layout, k, 0, 0 );
			}
		}
		plan.take_delta( a.layout, 0, 0 );
		return apply_plan( a.upper, a.lower, plan, std::move( nl ) );
	}
	case RuleKind::Tensor:
	case RuleKind::Cut: {
		const InterpPair a = interp( p.premise( 0 ), mode );
		const InterpPair b = interp( p.premise( 1 ), mode );
		const std::size_t bu = a.layout.u_total, bo = a.layout.one_total;
		const std::size_t la = a.layout.gamma_count - 1, lb = b.layout.gamma_count - 1;
		WirePlan plan;
		for( std::size_t k = 0; k < la; ++k ) {
			plan.take( a.layout, k, 0, 0 );
		}
		for( std::size_t k = 0; k < lb; ++k ) {
			plan.take( b.layout, k, bu, bo );
		}
		if( p.kind() == RuleKind::Tensor ) {
			plan.take( a.layout, la, 0, 0 );
			plan.take( b.layout, lb, bu, bo );
			plan.take_delta( a.layout, 0, 0 );
			plan.take_delta( b.layout, bu, bo );
		} else {
			plan.take_delta( a.layout, 0, 0 );
			plan.take_delta( b.layout, bu, bo );
			plan.take( a.layout, la, 0, 0 );
			plan.take( b.layout, lb, bu, bo );
		}
		return apply_plan( tensor( a.upper, b.upper ), tensor( a.lower, b.lower ), plan, std::move( nl ) );
	}
	case RuleKind::Up: {
		const InterpPair a = interp( p.premise(), mode );
		WirePlan plan;
		for( std::size_t k = 0; k < a.layout.gamma_count; ++k ) {
			if( k == p.i() ) {
				plan.take( a.layout, k, 0, 0, false );
				plan.u.push_back( std::nullopt );
				plan.one.push_back( std::nullopt );
			} else {
				plan.take( a.layout, k, 0, 0 );
			}
		}
		plan.take_delta( a.layout, 0, 0 );
		return apply_plan( a.upper, a.lower, plan, std::move( nl ) );
	}
	case RuleKind::Down: {
		const InterpPair a = interp( p.premise(), mode );
		WirePlan plan;
		for( std::size_t k = 0; k < a.layout.gamma_count; ++k ) {
			if( k == p.i() ) {
				plan.u.push_back( std::nullopt );
				plan.take( a.layout, k, 0, 0, false );
				plan.one.push_back( std::nullopt );
			} else {
				plan.take( a.layout, k, 0, 0 );
			}
		}
		plan.take_delta( a.layout, 0, 0 );
		InterpPair out = apply_plan( a.upper, a.lower, plan, std::move( nl ) );
		if( mode == Mode::Rel ) {
			const Occurrence &box = out.layout.occ[ p.i() ];
			for( std::size_t k = 0; k < out.layout.gamma_count; ++k ) {
				if( k == p.i() ) {
					continue;
				}
				const Occurrence &o = out.layout.occ[ k ];
				for( std::size_t leaf : o.shape.au_leaves() ) {
					set_sym( out.upper, box.u_begin, o.u_begin + leaf, Entry::Point );
				}
				for( std::size_t w = o.one_begin; w < o.one_end(); ++w ) {
					set_sym( out.lower, box.one_begin, w, Entry::Id );
				}
			}
		}
		return out;
	}
	}
	throw std::logic_error( "unreachable" );
}

} // namespace detail

/// Two-layer interpretation; the layout follows check(p).
inline InterpPair interp( const Proof &p, Mode mode = Mode::Rel ) { return detail::interp( p, mode ); }

} // namespace mllp

#endif // MLLP_GOI_HPP
