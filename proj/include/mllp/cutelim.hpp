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

#ifndef MLLP_CUTELIM_HPP
#define MLLP_CUTELIM_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "proof.hpp"

namespace mllp {

enum class RedexKind : std::uint8_t { AxCut, TensorPar, UpDown, BoxExtrusion, CommuteLeft, CommuteRight };

inline const char *redex_name( RedexKind k ) {
	switch( k ) {
	case RedexKind::AxCut: return "AxCut";
	case RedexKind::TensorPar: return "TensorPar";
	case RedexKind::UpDown: return "UpDown";
	case RedexKind::BoxExtrusion: return "BoxExtrusion";
	case RedexKind::CommuteLeft: return "CommuteLeft";
	case RedexKind::CommuteRight: return "CommuteRight";
	}
	return "?";
}

/// A reducible cut. For commutations `through` is the rule the cut moves past.
struct Redex {
	ProofPath path;
	RedexKind kind;
	RuleKind through = RuleKind::Cut;

	std::string describe() const {
		std::string s = redex_name( kind );
		if( kind == RedexKind::CommuteLeft || kind == RedexKind::CommuteRight ) {
			s += std::string( "(" ) + rule_name( through ) + ")";
		}
		return s + " at " + path_to_string( path );
	}
	bool is_cut_commutation() const {
		return ( kind == RedexKind::CommuteLeft || kind == RedexKind::CommuteRight ) && through == RuleKind::Cut;
	}
};

enum class Strategy : std::uint8_t { Leftmost, Innermost };

class StepLimitExceeded : public std::runtime_error {
public:
	explicit StepLimitExceeded( std::size_t limit ) :
		std::runtime_error( "cut elimination exceeded " + std::to_string( limit ) + " steps" ) {}
};

namespace detail {

/*
 * Proof whose gamma entries carry occurrence labels. Rewrites are built
 * from these, and the final exchange is found by matching labels, so equal
 * formulas are never confused with each other.
 */
struct Labeled {
	Proof p;
	std::vector< int > lab;

	std::size_t index_of( int l ) const {
		auto it = std::find( lab.begin(), lab.end(), l );
		if( it == lab.end() ) {
			throw std::logic_error( "label not found during rewrite" );
		}
		return static_cast< std::size_t >( it - lab.begin() );
	}
};

class Rewriter {
public:
	int fresh() { return next_++; }

	Labeled fresh_labels( const Proof &p ) {
		Labeled x{ p, {} };
		for( std::size_t k = 0; k < check( p ).gamma.size(); ++k ) {
			x.lab.push_back( fresh() );
		}
		return x;
	}

	static Labeled last( const Labeled &x, int l ) {
		const std::size_t k = x.index_of( l );
		const auto perm = move_to_end_perm( x.lab.size(), k );
		Labeled out{ exchange_fused( x.p, perm ), {} };
		for( std::size_t i : perm ) {
			out.lab.push_back( x.lab[ i ] );
		}
		return out;
	}

	static Labeled cut( const Labeled &x, const Labeled &y ) {
		Labeled out{ Proof::cut( x.p, y.p ), {} };
		out.lab.assign( x.lab.begin(), x.lab.end() - 1 );
		out.lab.insert( out.lab.end(), y.lab.begin(), y.lab.end() - 1 );
		return out;
	}

	/// Cut that keeps the original orientation: `side` is where `x` sat.
	static Labeled cut_sided( int side, const Labeled &x, const Labeled &y ) {
		return side == 0 ? cut( x, y ) : cut( y, x );
	}

	static Labeled tensor( const Labeled &x, const Labeled &y, int l ) {
		Labeled out{ Proof::tensor( x.p, y.p ), {} };
		out.lab.assign( x.lab.begin(), x.lab.end() - 1 );
		out.lab.insert( out.lab.end(), y.lab.begin(), y.lab.end() - 1 );
		out.lab.push_back( l );
		return out;
	}

	static Labeled par( const Labeled &x, int la, int lb, int l ) {
		const std::size_t i = x.index_of( la ), j = x.index_of( lb );
		Labeled out{ Proof::par( x.p, i, j ), x.lab };
		const std::size_t lo = std::min( i, j ), hi = std::max( i, j );
		out.lab[ lo ] = l;
		out.lab.erase( out.lab.begin() + static_cast< std::ptrdiff_t >( hi ) );
		return out;
	}

	static Labeled down( const Labeled &x, int la, int l ) {
		const std::size_t i = x.index_of( la );
		Labeled out{ Proof::down( x.p, i ), x.lab };
		out.lab[ i ] = l;
		return out;
	}

	static Labeled up( const Labeled &x, int la, int l ) {
		const std::size_t i = x.index_of( la );
		Labeled out{ Proof::up( x.p, i ), x.lab };
		out.lab[ i ] = l;
		return out;
	}

	static Proof arrange( const Labeled &x, const std::vector< int > &target ) {
		if( target.size() != x.lab.size() ) {
			throw std::logic_error( "rewrite changed the number of conclusions" );
		}
		std::vector< std::size_t > perm;
		for( int l : target ) {
			perm.push_back( x.index_of( l ) );
		}
		return exchange_fused( x.p, perm );
	}

private:
	int next_ = 0;
};

/// A cut premise seen through its Exchange chain, with labels on the core.
struct Side {
	Labeled whole;              // premise as it appears under the cut
	Proof core;                 // first non-Exchange node
	std::vector< int > core_lab; // labels of core gamma
	int cut_label = 0;          // label of the cut formula
	std::optional< std::size_t > principal; // principal position in core
	// Labelled premises of the core.
	std::vector< Labeled > kids;
	int core_new = -1; // label of the formula the core rule introduced
	int kid_a = -1, kid_b = -1; // labels of the active formulas in the kids
};

inline Side analyse_side( Rewriter &rw, const Proof &premise ) {
	Side s{ Labeled{ premise, {} }, premise, {}, 0, std::nullopt, {}, -1, -1, -1 };
	std::vector< std::size_t > sigma;
	Proof core = premise;
	sigma.resize( check( premise ).gamma.size() );
	for( std::size_t k = 0; k < sigma.size(); ++k ) {
		sigma[ k ] = k;
	}
	while( core.kind() == RuleKind::Exchange ) {
		for( auto &v : sigma ) {
			v = core.perm()[ v ];
		}
		core = core.premise();
	}
	s.core = core;
	const Sequent &cs = check( core );
	for( std::size_t k = 0; k < cs.gamma.size(); ++k ) {
		s.core_lab.push_back( rw.fresh() );
	}
	for( std::size_t k = 0; k < sigma.size(); ++k ) {
		s.whole.lab.push_back( s.core_lab[ sigma[ k ] ] );
	}
	s.cut_label = s.whole.lab.back();

	auto kid_with = [ & ]( const Proof &kid, const std::vector< std::optional< std::size_t > > &map ) {
		// map[k] = position in core gamma for kid position k, or nullopt for an active formula.
		Labeled x{ kid, {} };
		for( const auto &m : map ) {
			x.lab.push_back( m ? s.core_lab[ *m ] : rw.fresh() );
		}
		return x;
	};

	switch( core.kind() ) {
	case RuleKind::Ax:
		break;
	case RuleKind::Tensor: {
		const std::size_t na = check( core.premise( 0 ) ).gamma.size();
		const std::size_t nb = check( core.premise( 1 ) ).gamma.size();
		std::vector< std::optional< std::size_t > > ma, mb;
		for( std::size_t k = 0; k + 1 < na; ++k ) {
			ma.push_back( k );
		}
		ma.push_back( std::nullopt );
		for( std::size_t k = 0; k + 1 < nb; ++k ) {
			mb.push_back( na - 1 + k );
		}
		mb.push_back( std::nullopt );
		s.kids = { kid_with( core.premise( 0 ), ma ), kid_with( core.premise( 1 ), mb ) };
		s.principal = cs.gamma.size() - 1;
		s.kid_a = s.kids[ 0 ].lab.back();
		s.kid_b = s.kids[ 1 ].lab.back();
		break;
	}
	case RuleKind::Par: {
		const std::size_t n = check( core.premise() ).gamma.size();
		const std::size_t i = core.i(), j = core.j();
		const std::size_t hi = std::max( i, j );
		std::vector< std::optional< std::size_t > > m;
		for( std::size_t k = 0; k < n; ++k ) {
			if( k == i || k == j ) {
				m.push_back( std::nullopt );
			} else {
				m.push_back( k < hi ? k : k - 1 );
			}
		}
		s.kids = { kid_with( core.premise(), m ) };
		s.principal = std::min( i, j );
		s.kid_a = s.kids[ 0 ].lab[ i ];
		s.kid_b = s.kids[ 0 ].lab[ j ];
		break;
	}
	case RuleKind::Down:
	case RuleKind::Up: {
		const std::size_t n = check( core.premise() ).gamma.size();
		std::vector< std::optional< std::size_t > > m;
		for( std::size_t k = 0; k < n; ++k ) {
			m.push_back( k == core.i() ? std::nullopt : std::optional< std::size_t >( k ) );
		}
		s.kids = { kid_with( core.premise(), m ) };
		s.principal = core.i();
		s.kid_a = s.kids[ 0 ].lab[ core.i() ];
		break;
	}
	case RuleKind::Cut: {
		const std::size_t na = check( core.premise( 0 ) ).gamma.size();
		const std::size_t nb = check( core.premise( 1 ) ).gamma.size();
		std::vector< std::optional< std::size_t > > ma, mb;
		for( std::size_t k = 0; k + 1 < na; ++k ) {
			ma.push_back( k );
		}
		ma.push_back( std::nullopt );
		for( std::size_t k = 0; k + 1 < nb; ++k ) {
			mb.push_back( na - 1 + k );
		}
		mb.push_back( std::nullopt );
		s.kids = { kid_with( core.premise( 0 ), ma ), kid_with( core.premise( 1 ), mb ) };
		break;
	}
	case RuleKind::Exchange:
		throw std::logic_error( "exchange core" );
	}
	if( s.principal ) {
		s.core_new = s.core_lab[ *s.principal ];
	}
	return s;
}

inline bool holds( const Labeled &x, int l ) {
	return std::find( x.lab.begin(), x.lab.end(), l ) != x.lab.end();
}

struct Classified {
	RedexKind kind;
	RuleKind through = RuleKind::Cut;
	int side = 0; // premise whose core drives the step
};

inline Classified classify( const Side sides[ 2 ] ) {
	for( int s = 0; s < 2; ++s ) {
		if( sides[ s ].core.kind() == RuleKind::Ax ) {
			return { RedexKind::AxCut, RuleKind::Ax, s };
		}
	}
	for( int s = 0; s < 2; ++s ) {
		const Side &x = sides[ s ];
		if( x.core_new != x.cut_label ) {
			if( x.core.kind() == RuleKind::Down ) {
				return { RedexKind::BoxExtrusion, RuleKind::Down, s };
			}
			return { s == 0 ? RedexKind::CommuteLeft : RedexKind::CommuteRight, x.core.kind(), s };
		}
	}
	const RuleKind a = sides[ 0 ].core.kind(), b = sides[ 1 ].core.kind();
	if( ( a == RuleKind::Tensor && b == RuleKind::Par ) || ( a == RuleKind::Par && b == RuleKind::Tensor ) ) {
		return { RedexKind::TensorPar, RuleKind::Tensor, a == RuleKind::Tensor ? 0 : 1 };
	}
	if( ( a == RuleKind::Up && b == RuleKind::Down ) || ( a == RuleKind::Down && b == RuleKind::Up ) ) {
		return { RedexKind::UpDown, RuleKind::Up, a == RuleKind::Up ? 0 : 1 };
	}
	throw std::logic_error( "unclassifiable principal cut" );
}

inline Proof rewrite_cut( const Proof &cut_node, Classified *out_class = nullptr ) {
	if( cut_node.kind() != RuleKind::Cut ) {
		throw std::invalid_argument( "redex path does not address a cut" );
	}
	check( cut_node );
	Rewriter rw;
	Side sides[ 2 ] = { analyse_side( rw, cut_node.premise( 0 ) ), analyse_side( rw, cut_node.premise( 1 ) ) };
	std::vector< int > target( sides[ 0 ].whole.lab.begin(), sides[ 0 ].whole.lab.end() - 1 );
	target.insert( target.end(), sides[ 1 ].whole.lab.begin(), sides[ 1 ].whole.lab.end() - 1 );

	const Classified c = classify( sides );
	if( out_class ) {
		*out_class = c;
	}
	const Side &x = sides[ c.side ];
	const Side &y = sides[ 1 - c.side ];
	std::optional< Labeled > res;

	switch( c.kind ) {
	case RedexKind::AxCut: {
		// The axiom's other formula takes over the role of the partner's cut formula.
		const int other = x.core_lab[ 0 ] == x.cut_label ? x.core_lab[ 1 ] : x.core_lab[ 0 ];
		res = y.whole;
		res->lab.back() = other;
		break;
	}
	case RedexKind::BoxExtrusion:
	case RedexKind::CommuteLeft:
	case RedexKind::CommuteRight: {
		const int a = x.cut_label;
		switch( x.core.kind() ) {
		case RuleKind::Tensor: {
			const int k = holds( x.kids[ 0 ], a ) ? 0 : 1;
			Labeled moved = Rewriter::cut_sided( c.side, Rewriter::last( x.kids[ k ], a ), y.whole );
			Labeled parts[ 2 ] = { x.kids[ 0 ], x.kids[ 1 ] };
			parts[ k ] = Rewriter::last( moved, k == 0 ? x.kid_a : x.kid_b );
			res = Rewriter::tensor( parts[ 0 ], parts[ 1 ], x.core_new );
			break;
		}
		case RuleKind::Par: {
			Labeled moved = Rewriter::cut_sided( c.side, Rewriter::last( x.kids[ 0 ], a ), y.whole );
			res = Rewriter::par( moved, x.kid_a, x.kid_b, x.core_new );
			break;
		}
		case RuleKind::Up: {
			Labeled moved = Rewriter::cut_sided( c.side, Rewriter::last( x.kids[ 0 ], a ), y.whole );
			res = Rewriter::up( moved, x.kid_a, x.core_new );
			break;
		}
		case RuleKind::Down: {
			Labeled moved = Rewriter::cut_sided( c.side, Rewriter::last( x.kids[ 0 ], a ), y.whole );
			res = Rewriter::down( moved, x.kid_a, x.core_new );
			break;
		}
		case RuleKind::Cut: {
			const int k = holds( x.kids[ 0 ], a ) ? 0 : 1;
			Labeled moved = Rewriter::cut_sided( c.side, Rewriter::last( x.kids[ k ], a ), y.whole );
			if( k == 0 ) {
				res = Rewriter::cut( Rewriter::last( moved, x.kids[ 0 ].lab.back() ), x.kids[ 1 ] );
			} else {
				res = Rewriter::cut( x.kids[ 0 ], Rewriter::last( moved, x.kids[ 1 ].lab.back() ) );
			}
			break;
		}
		default:
			throw std::logic_error( "unexpected commutation" );
		}
		break;
	}
	case RedexKind::TensorPar: {
		// x is the tensor side, y the par side.
		const Labeled &a = x.kids[ 0 ], &b = x.kids[ 1 ];
		const Labeled &pc = y.kids[ 0 ];
		Labeled c1 = Rewriter::cut_sided( c.side, a, Rewriter::last( pc, y.kid_a ) );
		res = Rewriter::cut_sided( c.side, b, Rewriter::last( c1, y.kid_b ) );
		break;
	}
	case RedexKind::UpDown: {
		// x is the up side, y the down side.
		res = Rewriter::cut_sided( c.side, Rewriter::last( x.kids[ 0 ], x.kid_a ),
			Rewriter::last( y.kids[ 0 ], y.kid_a ) );
		break;
	}
	}
	return Rewriter::arrange( *res, target );
}

inline void collect_cuts( const Proof &p, ProofPath &path, std::vector< ProofPath > &out, bool post ) {
	if( !post && p.kind() == RuleKind::Cut ) {
		out.push_back( path );
	}
	for( std::size_t k = 0; k < p.premise_count(); ++k ) {
		path.push_back( k );
		collect_cuts( p.premise( k ), path, out, post );
		path.pop_back();
	}
	if( post && p.kind() == RuleKind::Cut ) {
		out.push_back( path );
	}
}

} // namespace detail

/// Classifies the cut at `path` without rewriting it.
inline Redex classify_cut( const Proof &p, const ProofPath &path ) {
	const Proof node = subproof( p, path );
	if( node.kind() != RuleKind::Cut ) {
		throw std::invalid_argument( "path does not address a cut" );
	}
	detail::Rewriter rw;
	detail::Side sides[ 2 ] = { detail::analyse_side( rw, node.premise( 0 ) ),
		detail::analyse_side( rw, node.premise( 1 ) ) };
	const auto c = detail::classify( sides );
	return Redex{ path, c.kind, c.through };
}

/// One redex per cut node, in pre-order (root first, left before right).
inline std::vector< Redex > reducible_cuts( const Proof &p ) {
	check( p );
	std::vector< ProofPath > paths;
	ProofPath path;
	detail::collect_cuts( p, path, paths, false );
	std::vector< Redex > out;
	for( const auto &q : paths ) {
		out.push_back( classify_cut( p, q ) );
	}
	return out;
}

/// Performs the rewrite at r.path. The conclusion gamma is preserved exactly.
inline Proof step( const Proof &p, const Redex &r ) {
	check( p );
	detail::Classified c{};
	Proof repl = detail::rewrite_cut( subproof( p, r.path ), &c );
	if( c.kind != r.kind ) {
		throw std::invalid_argument( "redex kind does not match the cut at " + path_to_string( r.path ) );
	}
	Proof out = replace_at( p, r.path, repl );
	check( out );
	return out;
}

/// Picks the next redex, or nullopt when p is cut-free.
inline std::optional< Redex > select_redex( const Proof &p, Strategy s ) {
	std::vector< ProofPath > paths;
	ProofPath path;
	detail::collect_cuts( p, path, paths, s == Strategy::Innermost );
	if( paths.empty() ) {
		return std::nullopt;
	}
	std::optional< Redex > fallback;
	for( const auto &q : paths ) {
		Redex r = classify_cut( p, q );
		if( !r.is_cut_commutation() ) {
			return r;
		}
		if( !fallback ) {
			fallback = r;
		}
	}
	return fallback;
}

struct TraceEntry {
	Redex redex;
	Proof before;
	Proof after;
};

struct NormalizeResult {
	Proof normal;
	std::vector< TraceEntry > trace;
};

inline std::size_t default_step_limit( const Proof &p ) {
	const std::size_t n = p.rule_count();
	return 4 * n * n;
}

/// Rewrites to cut-free form. `on_step` sees every intermediate proof.
inline NormalizeResult normalize( const Proof &p, Strategy s = Strategy::Leftmost, std::size_t max_steps = 0,
	const std::function< void( const TraceEntry & ) > &on_step = {} ) {
	check( p );
	if( max_steps == 0 ) {
		max_steps = default_step_limit( p );
	}
	NormalizeResult res{ p, {} };
	while( auto r = select_redex( res.normal, s ) ) {
		if( res.trace.size() >= max_steps ) {
			throw StepLimitExceeded( max_steps );
		}
		Proof next = step( res.normal, *r );
		TraceEntry e{ *r, res.normal, next };
		if( on_step ) {
			on_step( e );
		}
		res.trace.push_back( std::move( e ) );
		res.normal = next;
	}
	return res;
}

} // namespace mllp

#endif // MLLP_CUTELIM_HPP
