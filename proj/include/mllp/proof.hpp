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

#ifndef MLLP_PROOF_HPP
#define MLLP_PROOF_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "formula.hpp"

namespace mllp {

using CutPair = std::pair< Formula, Formula >;

/// Conclusion of a proof: the visible sequent plus the list of cut pairs.
struct Sequent {
	std::vector< Formula > gamma;
	std::vector< CutPair > delta;

	std::size_t positive_count() const {
		return static_cast< std::size_t >(
			std::count_if( gamma.begin(), gamma.end(), []( const Formula &f ) { return f.positive(); } ) );
	}
	std::optional< std::size_t > positive_index() const {
		for( std::size_t i = 0; i < gamma.size(); ++i ) {
			if( gamma[ i ].positive() ) {
				return i;
			}
		}
		return std::nullopt;
	}

	friend bool operator==( const Sequent &a, const Sequent &b ) {
		if( a.gamma.size() != b.gamma.size() || a.delta.size() != b.delta.size() ) {
			return false;
		}
		for( std::size_t i = 0; i < a.gamma.size(); ++i ) {
			if( a.gamma[ i ] != b.gamma[ i ] ) {
				return false;
			}
		}
		for( std::size_t i = 0; i < a.delta.size(); ++i ) {
			if( a.delta[ i ].first != b.delta[ i ].first || a.delta[ i ].second != b.delta[ i ].second ) {
				return false;
			}
		}
		return true;
	}
};

inline bool is_focused( const Sequent &s ) { return s.positive_count() == 1; }

inline std::string to_unicode( const Sequent &s ) {
	std::string out = "⊢ ";
	if( !s.delta.empty() ) {
		out += "[";
		for( std::size_t i = 0; i < s.delta.size(); ++i ) {
			out += ( i ? ", " : "" ) + to_unicode( s.delta[ i ].first ) + ", " + to_unicode( s.delta[ i ].second );
		}
		out += "]";
		if( !s.gamma.empty() ) {
			out += ", ";
		}
	}
	for( std::size_t i = 0; i < s.gamma.size(); ++i ) {
		out += ( i ? ", " : "" ) + to_unicode( s.gamma[ i ] );
	}
	return out;
}

enum class RuleKind : std::uint8_t { Ax, Tensor, Par, Down, Up, Cut, Exchange };

inline const char *rule_name( RuleKind k ) {
	switch( k ) {
	case RuleKind::Ax: return "ax";
	case RuleKind::Tensor: return "tensor";
	case RuleKind::Par: return "par";
	case RuleKind::Down: return "dn";
	case RuleKind::Up: return "up";
	case RuleKind::Cut: return "cut";
	case RuleKind::Exchange: return "ex";
	}
	return "?";
}

/// Address of a subproof: child indices from the root.
using ProofPath = std::vector< std::size_t >;

inline std::string path_to_string( const ProofPath &p ) {
	std::string s = "/";
	for( std::size_t i = 0; i < p.size(); ++i ) {
		s += ( i ? "." : "" ) + std::to_string( p[ i ] );
	}
	return s;
}

class ProofError : public std::runtime_error {
public:
	ProofError( RuleKind rule, ProofPath path, const std::string &msg ) :
		std::runtime_error( std::string( rule_name( rule ) ) + " at " + path_to_string( path ) + ": " + msg ),
		rule_( rule ), path_( std::move( path ) ) {}
	RuleKind rule() const noexcept { return rule_; }
	const ProofPath &path() const noexcept { return path_; }

private:
	RuleKind rule_;
	ProofPath path_;
};

/*
 * Immutable proof tree with positional rules. Indices refer to the premise
 * gamma (0-based). The checked conclusion is memoised on the node; this
 * memo is not synchronised, so share trees across threads only after
 * check() has run once.
 */
class Proof {
public:
	static Proof ax( const Formula &n ) { return make( RuleKind::Ax, { }, n ); }
	static Proof tensor( const Proof &p1, const Proof &p2 ) { return make( RuleKind::Tensor, { p1, p2 } ); }
	static Proof cut( const Proof &p1, const Proof &p2 ) { return make( RuleKind::Cut, { p1, p2 } ); }
	static Proof par( const Proof &p, std::size_t i, std::size_t j ) {
		Proof r = make( RuleKind::Par, { p } );
		r.mut().i = i;
		r.mut().j = j;
		return r;
	}
	static Proof down( const Proof &p, std::size_t i ) {
		Proof r = make( RuleKind::Down, { p } );
		r.mut().i = i;
		return r;
	}
	static Proof up( const Proof &p, std::size_t i ) {
		Proof r = make( RuleKind::Up, { p } );
		r.mut().i = i;
		return r;
	}
	/// new_gamma[k] = old_gamma[perm[k]].
	static Proof exchange( const Proof &p, std::vector< std::size_t > perm ) {
		Proof r = make( RuleKind::Exchange, { p } );
		r.mut().perm = std::move( perm );
		return r;
	}

	RuleKind kind() const { return node_->kind; }
	const Formula &ax_formula() const { return *node_->formula; }
	const Proof &premise( std::size_t k = 0 ) const { return node_->kids.at( k ); }
	std::size_t premise_count() const { return node_->kids.size(); }
	std::size_t i() const { return node_->i; }
	std::size_t j() const { return node_->j; }
	const std::vector< std::size_t > &perm() const { return node_->perm; }
	const void *id() const { return node_.get(); }

	/// Number of logical rules; Exchange nodes are structural and not counted.
	std::size_t rule_count() const {
		std::size_t n = kind() == RuleKind::Exchange ? 0 : 1;
		for( const auto &k : node_->kids ) {
			n += k.rule_count();
		}
		return n;
	}

	std::size_t node_count() const {
		std::size_t n = 1;
		for( const auto &k : node_->kids ) {
			n += k.node_count();
		}
		return n;
	}

	friend bool operator==( const Proof &a, const Proof &b ) {
		if( a.node_ == b.node_ ) {
			return true;
		}
		const Node &x = *a.node_, &y = *b.node_;
		if( x.kind != y.kind || x.i != y.i || x.j != y.j || x.perm != y.perm || x.kids.size() != y.kids.size() ) {
			return false;
		}
		if( x.kind == RuleKind::Ax && *x.formula != *y.formula ) {
			return false;
		}
		for( std::size_t k = 0; k < x.kids.size(); ++k ) {
			if( !( x.kids[ k ] == y.kids[ k ] ) ) {
				return false;
			}
		}
		return true;
	}
	friend bool operator!=( const Proof &a, const Proof &b ) { return !( a == b ); }

	friend const Sequent &check( const Proof &p );

private:
	struct Node {
		RuleKind kind;
		std::optional< Formula > formula;
		std::vector< Proof > kids;
		std::size_t i = 0, j = 0;
		std::vector< std::size_t > perm;
		mutable std::shared_ptr< const Sequent > memo;
	};

	explicit Proof( std::shared_ptr< Node > n ) : node_( std::move( n ) ) {}

	static Proof make( RuleKind k, std::vector< Proof > kids, std::optional< Formula > f = std::nullopt ) {
		auto n = std::make_shared< Node >();
		n->kind = k;
		n->kids = std::move( kids );
		n->formula = std::move( f );
		return Proof( std::move( n ) );
	}

	Node &mut() { return const_cast< Node & >( *node_ ); }

	static const Sequent &check_at( const Proof &p, ProofPath &path );

	std::shared_ptr< const Node > node_;
};

inline const Sequent &Proof::check_at( const Proof &p, ProofPath &path ) {
	const Node &n = *p.node_;
	if( n.memo ) {
		return *n.memo;
	}
	auto fail = [ & ]( const std::string &msg ) -> ProofError { return ProofError( n.kind, path, msg ); };
	auto sub = [ & ]( std::size_t k ) -> const Sequent & {
		path.push_back( k );
		const Sequent &s = check_at( n.kids[ k ], path );
		path.pop_back();
		return s;
	};

	Sequent out;
	switch( n.kind ) {
	case RuleKind::Ax: {
		if( !n.formula->negative() ) {
			throw fail( "axiom formula must be negative" );
		}
		out.gamma = { *n.formula, negate( *n.formula ) };
		break;
	}
	case RuleKind::Tensor: {
		const Sequent &a = sub( 0 );
		const Sequent &b = sub( 1 );
		for( const Sequent *s : { &a, &b } ) {
			if( s->gamma.empty() || !s->gamma.back().positive() ) {
				throw fail( "each premise must end with its positive formula" );
			}
			for( std::size_t k = 0; k + 1 < s->gamma.size(); ++k ) {
				if( !s->gamma[ k ].negative() ) {
					throw fail( "tensor context must be negative" );
				}
			}
		}
		out.gamma.assign( a.gamma.begin(), a.gamma.end() - 1 );
		out.gamma.insert( out.gamma.end(), b.gamma.begin(), b.gamma.end() - 1 );
		out.gamma.push_back( mllp::tensor( a.gamma.back(), b.gamma.back() ) );
		out.delta = a.delta;
		out.delta.insert( out.delta.end(), b.delta.begin(), b.delta.end() );
		break;
	}
	case RuleKind::Par: {
		const Sequent &a = sub( 0 );
		if( n.i == n.j || n.i >= a.gamma.size() || n.j >= a.gamma.size() ) {
			throw fail( "par indices out of range or equal" );
		}
		if( !a.gamma[ n.i ].negative() || !a.gamma[ n.j ].negative() ) {
			throw fail( "par needs two negative formulas" );
		}
		const Formula f = mllp::par( a.gamma[ n.i ], a.gamma[ n.j ] );
		const std::size_t lo = std::min( n.i, n.j ), hi = std::max( n.i, n.j );
		out.gamma = a.gamma;
		out.gamma[ lo ] = f;
		out.gamma.erase( out.gamma.begin() + static_cast< std::ptrdiff_t >( hi ) );
		out.delta = a.delta;
		break;
	}
	case RuleKind::Down: {
		const Sequent &a = sub( 0 );
		if( n.i >= a.gamma.size() ) {
			throw fail( "down index out of range" );
		}
		if( a.positive_count() != 0 ) {
			throw fail( "down premise must be entirely negative" );
		}
		out = a;
		out.gamma[ n.i ] = mllp::down( a.gamma[ n.i ] );
		break;
	}
	case RuleKind::Up: {
		const Sequent &a = sub( 0 );
		if( n.i >= a.gamma.size() ) {
			throw fail( "up index out of range" );
		}
		if( !a.gamma[ n.i ].positive() ) {
			throw fail( "up needs a positive formula" );
		}
		out = a;
		out.gamma[ n.i ] = mllp::up( a.gamma[ n.i ] );
		break;
	}
	case RuleKind::Cut: {
		const Sequent &a = sub( 0 );
		const Sequent &b = sub( 1 );
		if( a.gamma.empty() || b.gamma.empty() ) {
			throw fail( "cut premises must be non-empty" );
		}
		if( !is_dual( a.gamma.back(), b.gamma.back() ) ) {
			throw fail( "cut formulas are not dual: " + to_string( a.gamma.back() ) + " vs " +
				to_string( b.gamma.back() ) );
		}
		out.gamma.assign( a.gamma.begin(), a.gamma.end() - 1 );
		out.gamma.insert( out.gamma.end(), b.gamma.begin(), b.gamma.end() - 1 );
		out.delta = a.delta;
		out.delta.insert( out.delta.end(), b.delta.begin(), b.delta.end() );
		out.delta.emplace_back( a.gamma.back(), b.gamma.back() );
		break;
	}
	case RuleKind::Exchange: {
		const Sequent &a = sub( 0 );
		if( n.perm.size() != a.gamma.size() ) {
			throw fail( "exchange permutation has wrong length" );
		}
		std::vector< bool > seen( n.perm.size(), false );
		for( std::size_t k : n.perm ) {
			if( k >= seen.size() || seen[ k ] ) {
				throw fail( "exchange is not a permutation" );
			}
			seen[ k ] = true;
		}
		out.delta = a.delta;
		for( std::size_t k : n.perm ) {
			out.gamma.push_back( a.gamma[ k ] );
		}
		break;
	}
	}
	if( out.positive_count() > 1 ) {
		throw fail( "conclusion has more than one positive formula" );
	}
	n.memo = std::make_shared< const Sequent >( std::move( out ) );
	return *n.memo;
}

/// Validates the whole tree and returns the conclusion; throws ProofError.
inline const Sequent &check( const Proof &p ) {
	ProofPath path;
	return Proof::check_at( p, path );
}

inline const Sequent &conclusion( const Proof &p ) { return check( p ); }

inline Proof subproof( const Proof &p, const ProofPath &path ) {
	Proof cur = p;
	for( std::size_t k : path ) {
		cur = cur.premise( k );
	}
	return cur;
}

/// Rebuilds p with the node at `path` replaced by `repl`.
inline Proof replace_at( const Proof &p, const ProofPath &path, std::size_t depth, const Proof &repl ) {
	if( depth == path.size() ) {
		return repl;
	}
	const std::size_t k = path[ depth ];
	std::vector< Proof > kids;
	for( std::size_t c = 0; c < p.premise_count(); ++c ) {
		kids.push_back( c == k ? replace_at( p.premise( c ), path, depth + 1, repl ) : p.premise( c ) );
	}
	switch( p.kind() ) {
	case RuleKind::Ax: return p;
	case RuleKind::Tensor: return Proof::tensor( kids[ 0 ], kids[ 1 ] );
	case RuleKind::Cut: return Proof::cut( kids[ 0 ], kids[ 1 ] );
	case RuleKind::Par: return Proof::par( kids[ 0 ], p.i(), p.j() );
	case RuleKind::Down: return Proof::down( kids[ 0 ], p.i() );
	case RuleKind::Up: return Proof::up( kids[ 0 ], p.i() );
	case RuleKind::Exchange: return Proof::exchange( kids[ 0 ], p.perm() );
	}
	return p;
}

inline Proof replace_at( const Proof &p, const ProofPath &path, const Proof &repl ) {
	return replace_at( p, path, 0, repl );
}

inline bool is_cut_free( const Proof &p ) {
	if( p.kind() == RuleKind::Cut ) {
		return false;
	}
	for( std::size_t k = 0; k < p.premise_count(); ++k ) {
		if( !is_cut_free( p.premise( k ) ) ) {
			return false;
		}
	}
	return true;
}

inline std::size_t cut_count( const Proof &p ) {
	std::size_t n = p.kind() == RuleKind::Cut ? 1 : 0;
	for( std::size_t k = 0; k < p.premise_count(); ++k ) {
		n += cut_count( p.premise( k ) );
	}
	return n;
}

// ---------------------------------------------------------------------------
// Text format

inline std::string to_string( const Proof &p ) {
	switch( p.kind() ) {
	case RuleKind::Ax:
		return "(ax " + to_string( p.ax_formula() ) + ")";
	case RuleKind::Tensor:
	case RuleKind::Cut:
		return std::string( "(" ) + rule_name( p.kind() ) + " " + to_string( p.premise( 0 ) ) + " " +
			to_string( p.premise( 1 ) ) + ")";
	case RuleKind::Par:
		return "(par " + to_string( p.premise() ) + " " + std::to_string( p.i() ) + " " + std::to_string( p.j() ) + ")";
	case RuleKind::Down:
	case RuleKind::Up:
		return std::string( "(" ) + rule_name( p.kind() ) + " " + to_string( p.premise() ) + " " +
			std::to_string( p.i() ) + ")";
	case RuleKind::Exchange: {
		std::string s = "(ex " + to_string( p.premise() ) + " [";
		for( std::size_t k = 0; k < p.perm().size(); ++k ) {
			s += ( k ? " " : "" ) + std::to_string( p.perm()[ k ] );
		}
		return s + "])";
	}
	}
	return "?";
}

namespace detail {

inline Proof parse_proof( Lexer &lx ) {
	lx.expect( '(' );
	const std::size_t at = lx.pos();
	const std::string head = lx.ident();
	Proof out = [ & ]() {
		if( head == "ax" ) {
			return Proof::ax( parse_formula( lx ) );
		}
		if( head == "tensor" || head == "cut" ) {
			Proof a = parse_proof( lx );
			Proof b = parse_proof( lx );
			return head == "cut" ? Proof::cut( a, b ) : Proof::tensor( a, b );
		}
		if( head == "par" ) {
			Proof a = parse_proof( lx );
			const std::size_t i = lx.number();
			const std::size_t j = lx.number();
			return Proof::par( a, i, j );
		}
		if( head == "dn" || head == "up" ) {
			Proof a = parse_proof( lx );
			const std::size_t i = lx.number();
			return head == "dn" ? Proof::down( a, i ) : Proof::up( a, i );
		}
		if( head == "ex" ) {
			Proof a = parse_proof( lx );
			lx.expect( '[' );
			std::vector< std::size_t > perm;
			while( !lx.accept( ']' ) ) {
				perm.push_back( lx.number() );
				lx.accept( ',' );
			}
			return Proof::exchange( a, std::move( perm ) );
		}
		throw ParseError( "unknown rule '" + head + "'", at );
	}();
	lx.expect( ')' );
	return out;
}

} // namespace detail

/// Parses the s-expression proof format. Does not run check().
inline Proof parse_proof( std::string_view text ) {
	detail::Lexer lx( text );
	Proof p = detail::parse_proof( lx );
	if( !lx.at_end() ) {
		throw ParseError( "trailing input after proof", lx.pos() );
	}
	return p;
}

// ---------------------------------------------------------------------------
// Enumeration

/// Moves gamma[k] to the end, keeping the relative order of the rest.
inline std::vector< std::size_t > move_to_end_perm( std::size_t n, std::size_t k ) {
	std::vector< std::size_t > perm;
	for( std::size_t i = 0; i < n; ++i ) {
		if( i != k ) {
			perm.push_back( i );
		}
	}
	perm.push_back( k );
	return perm;
}

inline bool is_identity( const std::vector< std::size_t > &perm ) {
	for( std::size_t i = 0; i < perm.size(); ++i ) {
		if( perm[ i ] != i ) {
			return false;
		}
	}
	return true;
}

/// Exchange that fuses with an Exchange already on top and vanishes on identity.
inline Proof exchange_fused( const Proof &p, const std::vector< std::size_t > &perm ) {
	if( is_identity( perm ) ) {
		return p;
	}
	if( p.kind() == RuleKind::Exchange ) {
		std::vector< std::size_t > comp( perm.size() );
		for( std::size_t k = 0; k < perm.size(); ++k ) {
			comp[ k ] = p.perm()[ perm[ k ] ];
		}
		return exchange_fused( p.premise(), comp );
	}
	return Proof::exchange( p, perm );
}

inline Proof move_to_end( const Proof &p, std::size_t k ) {
	return exchange_fused( p, move_to_end_perm( check( p ).gamma.size(), k ) );
}

/*
 * Canonical enumeration of proofs by logical rule count. Axioms are atomic
 * (X^ for each atom), Exchange only appears directly above Tensor and Cut
 * premises to bring the chosen formula last, and the left cut formula is
 * always the negative one. Every emitted proof passes check().
 */
class ProofEnumerator {
public:
	ProofEnumerator( std::size_t max_rules, std::vector< std::string > atoms ) : atoms_( std::move( atoms ) ) {
		by_size_.resize( max_rules + 1 );
		for( std::size_t n = 1; n <= max_rules; ++n ) {
			fill( n );
		}
	}

	const std::vector< Proof > &of_size( std::size_t n ) const { return by_size_.at( n ); }
	std::size_t max_rules() const { return by_size_.size() - 1; }

	std::vector< Proof > all() const {
		std::vector< Proof > out;
		for( const auto &v : by_size_ ) {
			out.insert( out.end(), v.begin(), v.end() );
		}
		return out;
	}

	std::size_t count() const {
		std::size_t c = 0;
		for( const auto &v : by_size_ ) {
			c += v.size();
		}
		return c;
	}

private:
	void fill( std::size_t n ) {
		auto &out = by_size_[ n ];
		if( n == 1 ) {
			for( const auto &a : atoms_ ) {
				out.push_back( Proof::ax( neg_atom( a ) ) );
			}
			return;
		}
		for( const Proof &p : by_size_[ n - 1 ] ) {
			const Sequent &s = check( p );
			const auto pos = s.positive_index();
			if( pos ) {
				out.push_back( Proof::up( p, *pos ) );
			} else {
				for( std::size_t i = 0; i < s.gamma.size(); ++i ) {
					out.push_back( Proof::down( p, i ) );
				}
			}
			for( std::size_t i = 0; i < s.gamma.size(); ++i ) {
				for( std::size_t j = 0; j < s.gamma.size(); ++j ) {
					if( i != j && s.gamma[ i ].negative() && s.gamma[ j ].negative() ) {
						out.push_back( Proof::par( p, i, j ) );
					}
				}
			}
		}
		for( std::size_t a = 1; a + 1 < n; ++a ) {
			const std::size_t b = n - 1 - a;
			for( const Proof &p : by_size_[ a ] ) {
				const Sequent &sp = check( p );
				const auto pp = sp.positive_index();
				for( const Proof &q : by_size_[ b ] ) {
					const Sequent &sq = check( q );
					const auto qp = sq.positive_index();
					if( pp && qp ) {
						out.push_back( Proof::tensor( move_to_end( p, *pp ), move_to_end( q, *qp ) ) );
					}
					// Cut: negative formula of p against its positive dual in q.
					if( !qp ) {
						continue;
					}
					for( std::size_t i = 0; i < sp.gamma.size(); ++i ) {
						if( sp.gamma[ i ].negative() && is_dual( sp.gamma[ i ], sq.gamma[ *qp ] ) ) {
							out.push_back( Proof::cut( move_to_end( p, i ), move_to_end( q, *qp ) ) );
						}
					}
				}
			}
		}
	}

	std::vector< std::string > atoms_;
	std::vector< std::vector< Proof > > by_size_;
};

inline std::vector< Proof > enumerate_proofs( std::size_t max_rules, const std::vector< std::string > &atoms ) {
	return ProofEnumerator( max_rules, atoms ).all();
}

} // namespace mllp

#endif // MLLP_PROOF_HPP
