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

#ifndef MLLP_RELCORE_HPP
#define MLLP_RELCORE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mllp {

enum class WireType : std::uint8_t { U, One };

/// Zero < Point < Id is the join order used for union.
enum class Entry : std::uint8_t { Zero = 0, Point = 1, Id = 2 };

using Wires = std::vector< WireType >;

class InterfaceError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

inline const char *wire_name( WireType w ) { return w == WireType::U ? "U" : "1"; }

inline char entry_char( Entry e ) {
	switch( e ) {
	case Entry::Zero: return '0';
	case Entry::Point: return 'p';
	case Entry::Id: return '1';
	}
	return '?';
}

/// Canonical form of an entry on a (cod <- dom) edge; throws on ill-typed Id.
inline Entry normalize_entry( Entry e, WireType cod, WireType dom ) {
	if( e == Entry::Id && cod != dom ) {
		throw InterfaceError( "Id entry between different wire types" );
	}
	if( e == Entry::Point && cod == WireType::One && dom == WireType::One ) {
		return Entry::Id;
	}
	return e;
}

inline Entry entry_join( Entry a, Entry b ) { return std::max( a, b ); }

/// Product of g (cod <- mid) after f (mid <- dom).
inline Entry entry_mul( Entry g, Entry f, WireType cod, WireType dom ) {
	if( g == Entry::Zero || f == Entry::Zero ) {
		return Entry::Zero;
	}
	if( g == Entry::Id ) {
		return f;
	}
	if( f == Entry::Id ) {
		return g;
	}
	return normalize_entry( Entry::Point, cod, dom );
}

/*
 * Morphism between tensor products of U and 1, stored as a cod x dom
 * matrix of entries (row-major). Value type; all operations return fresh
 * matrices.
 */
class BlockRel {
public:
	BlockRel() = default;
	BlockRel( Wires cod, Wires dom ) :
		cod_( std::move( cod ) ), dom_( std::move( dom ) ), e_( cod_.size() * dom_.size(), Entry::Zero ) {}

	static BlockRel zero( const Wires &cod, const Wires &dom ) { return BlockRel( cod, dom ); }

	static BlockRel identity( const Wires &w ) {
		BlockRel r( w, w );
		for( std::size_t k = 0; k < w.size(); ++k ) {
			r.set( k, k, Entry::Id );
		}
		return r;
	}

	const Wires &cod() const { return cod_; }
	const Wires &dom() const { return dom_; }
	std::size_t rows() const { return cod_.size(); }
	std::size_t cols() const { return dom_.size(); }

	Entry at( std::size_t row, std::size_t col ) const { return e_[ row * dom_.size() + col ]; }

	void set( std::size_t row, std::size_t col, Entry e ) {
		if( row >= rows() || col >= cols() ) {
			throw InterfaceError( "entry index out of range" );
		}
		e_[ row * dom_.size() + col ] = normalize_entry( e, cod_[ row ], dom_[ col ] );
	}

	void join_at( std::size_t row, std::size_t col, Entry e ) { set( row, col, entry_join( at( row, col ), e ) ); }

	bool is_zero() const {
		return std::all_of( e_.begin(), e_.end(), []( Entry e ) { return e == Entry::Zero; } );
	}

	friend bool operator==( const BlockRel &a, const BlockRel &b ) {
		return a.cod_ == b.cod_ && a.dom_ == b.dom_ && a.e_ == b.e_;
	}
	friend bool operator!=( const BlockRel &a, const BlockRel &b ) { return !( a == b ); }

	/// Rows `rs` and columns `cs` of this matrix, in the given order.
	BlockRel select( const std::vector< std::size_t > &rs, const std::vector< std::size_t > &cs ) const {
		Wires c, d;
		for( auto r : rs ) {
			c.push_back( cod_.at( r ) );
		}
		for( auto k : cs ) {
			d.push_back( dom_.at( k ) );
		}
		BlockRel out( c, d );
		for( std::size_t i = 0; i < rs.size(); ++i ) {
			for( std::size_t j = 0; j < cs.size(); ++j ) {
				out.e_[ i * cs.size() + j ] = at( rs[ i ], cs[ j ] );
			}
		}
		return out;
	}

	std::string to_text() const {
		std::string s;
		for( std::size_t i = 0; i < rows(); ++i ) {
			for( std::size_t j = 0; j < cols(); ++j ) {
				s += entry_char( at( i, j ) );
				s += j + 1 < cols() ? " " : "";
			}
			s += "\n";
		}
		return s;
	}

private:
	Wires cod_, dom_;
	std::vector< Entry > e_;
};

/// g after f.
inline BlockRel compose( const BlockRel &g, const BlockRel &f ) {
	if( g.dom() != f.cod() ) {
		throw InterfaceError( "compose: interface mismatch" );
	}
	BlockRel out( g.cod(), f.dom() );
	for( std::size_t i = 0; i < g.rows(); ++i ) {
		for( std::size_t j = 0; j < g.cols(); ++j ) {
			const Entry a = g.at( i, j );
			if( a == Entry::Zero ) {
				continue;
			}
			for( std::size_t k = 0; k < f.cols(); ++k ) {
				const Entry b = f.at( j, k );
				if( b != Entry::Zero ) {
					out.join_at( i, k, entry_mul( a, b, g.cod()[ i ], f.dom()[ k ] ) );
				}
			}
		}
	}
	return out;
}

inline BlockRel tensor( const BlockRel &a, const BlockRel &b ) {
	Wires cod = a.cod(), dom = a.dom();
	cod.insert( cod.end(), b.cod().begin(), b.cod().end() );
	dom.insert( dom.end(), b.dom().begin(), b.dom().end() );
	BlockRel out( cod, dom );
	for( std::size_t i = 0; i < a.rows(); ++i ) {
		for( std::size_t j = 0; j < a.cols(); ++j ) {
			out.set( i, j, a.at( i, j ) );
		}
	}
	for( std::size_t i = 0; i < b.rows(); ++i ) {
		for( std::size_t j = 0; j < b.cols(); ++j ) {
			out.set( a.rows() + i, a.cols() + j, b.at( i, j ) );
		}
	}
	return out;
}

inline BlockRel join( const BlockRel &a, const BlockRel &b ) {
	if( a.cod() != b.cod() || a.dom() != b.dom() ) {
		throw InterfaceError( "join: interface mismatch" );
	}
	BlockRel out = a;
	for( std::size_t i = 0; i < a.rows(); ++i ) {
		for( std::size_t j = 0; j < a.cols(); ++j ) {
			out.join_at( i, j, b.at( i, j ) );
		}
	}
	return out;
}

/// Least fixpoint of x = Id u f.x, by repeated squaring of Id u f.
inline BlockRel star( const BlockRel &f ) {
	if( f.cod() != f.dom() ) {
		throw InterfaceError( "star: not an endomorphism" );
	}
	BlockRel x = join( BlockRel::identity( f.dom() ), f );
	for( ;; ) {
		BlockRel next = join( x, compose( x, x ) );
		if( next == x ) {
			return x;
		}
		x = std::move( next );
	}
}

/// Traces out the last `k` wires of dom and cod.
inline BlockRel trace( const BlockRel &f, std::size_t k ) {
	if( k > f.rows() || k > f.cols() ) {
		throw InterfaceError( "trace: suffix longer than interface" );
	}
	const std::size_t nr = f.rows() - k, nc = f.cols() - k;
	for( std::size_t t = 0; t < k; ++t ) {
		if( f.cod()[ nr + t ] != f.dom()[ nc + t ] ) {
			throw InterfaceError( "trace: traced wire types differ" );
		}
	}
	if( k == 0 ) {
		return f;
	}
	std::vector< std::size_t > keep_r, keep_c, tr_r, tr_c;
	for( std::size_t i = 0; i < nr; ++i ) {
		keep_r.push_back( i );
	}
	for( std::size_t j = 0; j < nc; ++j ) {
		keep_c.push_back( j );
	}
	for( std::size_t t = 0; t < k; ++t ) {
		tr_r.push_back( nr + t );
		tr_c.push_back( nc + t );
	}
	const BlockRel f11 = f.select( keep_r, keep_c );
	const BlockRel f12 = f.select( keep_r, tr_c );
	const BlockRel f21 = f.select( tr_r, keep_c );
	const BlockRel f22 = f.select( tr_r, tr_c );
	return join( f11, compose( f12, compose( star( f22 ), f21 ) ) );
}

/// Permutation matrix sending input wire k to output wire perm[k].
inline BlockRel perm_matrix( const Wires &dom, const std::vector< std::size_t > &perm ) {
	if( perm.size() != dom.size() ) {
		throw InterfaceError( "perm: wrong length" );
	}
	Wires cod( dom.size() );
	for( std::size_t k = 0; k < perm.size(); ++k ) {
		cod.at( perm[ k ] ) = dom[ k ];
	}
	BlockRel out( cod, dom );
	for( std::size_t k = 0; k < perm.size(); ++k ) {
		out.set( perm[ k ], k, Entry::Id );
	}
	return out;
}

/// Symmetry a(x)b -> b(x)a.
inline BlockRel symmetry( const Wires &a, const Wires &b ) {
	Wires dom = a;
	dom.insert( dom.end(), b.begin(), b.end() );
	std::vector< std::size_t > perm;
	for( std::size_t k = 0; k < a.size(); ++k ) {
		perm.push_back( b.size() + k );
	}
	for( std::size_t k = 0; k < b.size(); ++k ) {
		perm.push_back( k );
	}
	return perm_matrix( dom, perm );
}

/// Conjugation p^T f p with the same wire relabelling on both sides.
inline BlockRel conjugate( const BlockRel &f, const std::vector< std::size_t > &new_of_old ) {
	const std::size_t n = new_of_old.size();
	if( f.rows() != n || f.cols() != n ) {
		throw InterfaceError( "conjugate: size mismatch" );
	}
	Wires w( n );
	for( std::size_t k = 0; k < n; ++k ) {
		w.at( new_of_old[ k ] ) = f.dom()[ k ];
	}
	BlockRel out( w, w );
	for( std::size_t i = 0; i < n; ++i ) {
		for( std::size_t j = 0; j < n; ++j ) {
			out.set( new_of_old[ i ], new_of_old[ j ], f.at( i, j ) );
		}
	}
	return out;
}

inline BlockRel converse( const BlockRel &f ) {
	BlockRel out( f.dom(), f.cod() );
	for( std::size_t i = 0; i < f.rows(); ++i ) {
		for( std::size_t j = 0; j < f.cols(); ++j ) {
			out.set( j, i, f.at( i, j ) );
		}
	}
	return out;
}

// ---------------------------------------------------------------------------
// Primitive morphisms

namespace prim {

inline const Wires kU{ WireType::U };
inline const Wires kOne{ WireType::One };

/// alpha : 1 -> U, the distinguished point.
inline BlockRel alpha() {
	BlockRel r( kU, kOne );
	r.set( 0, 0, Entry::Point );
	return r;
}

inline BlockRel alpha_star() { return converse( alpha() ); }

inline BlockRel id( const Wires &w ) { return BlockRel::identity( w ); }

inline BlockRel zero( const Wires &cod, const Wires &dom ) { return BlockRel::zero( cod, dom ); }

/// r_alpha : U -> U (x) 1.
inline BlockRel r_alpha() {
	BlockRel r( { WireType::U, WireType::One }, kU );
	r.set( 0, 0, Entry::Id );
	r.set( 1, 0, Entry::Point );
	return r;
}

inline BlockRel bang_alpha() { return converse( r_alpha() ); }

/// r : 1 -> 1 (x) 1, the maximal relation.
inline BlockRel r_one() {
	BlockRel r( { WireType::One, WireType::One }, kOne );
	r.set( 0, 0, Entry::Id );
	r.set( 1, 0, Entry::Id );
	return r;
}

inline BlockRel bang_one() { return converse( r_one() ); }

/// g_m : 1^m -> 1 (maximal). For m = 0 the result is the zero map I -> 1.
inline BlockRel g( std::size_t m ) {
	BlockRel r( kOne, Wires( m, WireType::One ) );
	for( std::size_t k = 0; k < m; ++k ) {
		r.set( 0, k, Entry::Id );
	}
	return r;
}

inline BlockRel h( std::size_t m ) { return converse( g( m ) ); }

/// iota_j : X_j -> X_0 (x) ... (x) X_{n-1}.
inline BlockRel quasi_inj( const std::vector< Wires > &parts, std::size_t j ) {
	Wires all;
	std::size_t off = 0;
	for( std::size_t k = 0; k < parts.size(); ++k ) {
		if( k == j ) {
			off = all.size();
		}
		all.insert( all.end(), parts[ k ].begin(), parts[ k ].end() );
	}
	BlockRel r( all, parts.at( j ) );
	for( std::size_t k = 0; k < parts[ j ].size(); ++k ) {
		r.set( off + k, k, Entry::Id );
	}
	return r;
}

inline BlockRel quasi_proj( const std::vector< Wires > &parts, std::size_t j ) {
	return converse( quasi_inj( parts, j ) );
}

/// Injection of the wire subset `span` (indices into `all`).
inline BlockRel span_inj( const Wires &all, const std::vector< std::size_t > &span ) {
	Wires sub;
	for( auto k : span ) {
		sub.push_back( all.at( k ) );
	}
	BlockRel r( all, sub );
	for( std::size_t k = 0; k < span.size(); ++k ) {
		r.set( span[ k ], k, Entry::Id );
	}
	return r;
}

} // namespace prim

/// True iff every row outside `span` is entirely Zero.
inline bool ranges_over( const BlockRel &f, const std::vector< std::size_t > &span ) {
	std::vector< bool > in( f.rows(), false );
	for( auto k : span ) {
		in.at( k ) = true;
	}
	for( std::size_t i = 0; i < f.rows(); ++i ) {
		if( in[ i ] ) {
			continue;
		}
		for( std::size_t j = 0; j < f.cols(); ++j ) {
			if( f.at( i, j ) != Entry::Zero ) {
				return false;
			}
		}
	}
	return true;
}

// ---------------------------------------------------------------------------
// Window and folding codec

struct Window {
	std::uint64_t size = 16;
	std::uint64_t n_alpha = 0;

	void validate() const {
		if( size < 1 || n_alpha >= size ) {
			throw std::invalid_argument( "window: n_alpha must be below the window size" );
		}
	}
};

class WindowError : public std::out_of_range {
public:
	using std::out_of_range::out_of_range;
};

/// j(1, n) = 2n and j(2, n) = 2n + 1 (branches numbered 1 and 2).
inline std::uint64_t codec_j( int branch, std::uint64_t n ) {
	if( n > ( UINT64_MAX - 1 ) / 2 ) {
		throw WindowError( "codec overflow" );
	}
	return branch == 1 ? 2 * n : 2 * n + 1;
}

inline std::pair< int, std::uint64_t > codec_k( std::uint64_t t ) {
	return t % 2 == 0 ? std::pair< int, std::uint64_t >{ 1, t / 2 } : std::pair< int, std::uint64_t >{ 2, t / 2 };
}

/*
 * Left-nested folding of m leaves: j_m = j o (j_{m-1} (x) U). Leaves are
 * 0-based; the last leaf is the right branch at the top.
 */
inline std::uint64_t fold_encode( std::size_t m, std::size_t leaf, std::uint64_t n ) {
	if( leaf >= m ) {
		throw std::out_of_range( "fold_encode: leaf index" );
	}
	if( m == 1 ) {
		return n;
	}
	if( leaf == m - 1 ) {
		return codec_j( 2, n );
	}
	return codec_j( 1, fold_encode( m - 1, leaf, n ) );
}

inline std::pair< std::size_t, std::uint64_t > fold_decode( std::size_t m, std::uint64_t t ) {
	if( m == 0 ) {
		throw std::out_of_range( "fold_decode: empty interface" );
	}
	if( m == 1 ) {
		return { 0, t };
	}
	const auto [ branch, rest ] = codec_k( t );
	if( branch == 2 ) {
		return { m - 1, rest };
	}
	return fold_decode( m - 1, rest );
}

/// Pointwise image of `token` under j_m o f o k_m (f on U wires only).
inline std::set< std::uint64_t > fold_eval( const BlockRel &f, std::uint64_t token, const Window &w ) {
	w.validate();
	if( token >= w.size ) {
		throw WindowError( "fold_eval: token " + std::to_string( token ) + " outside window of size " +
			std::to_string( w.size ) );
	}
	for( auto t : f.dom() ) {
		if( t != WireType::U ) {
			throw InterfaceError( "fold_eval: interface must be all U wires" );
		}
	}
	for( auto t : f.cod() ) {
		if( t != WireType::U ) {
			throw InterfaceError( "fold_eval: interface must be all U wires" );
		}
	}
	std::set< std::uint64_t > out;
	if( f.cols() == 0 ) {
		return out;
	}
	const auto [ leaf, v ] = fold_decode( f.cols(), token );
	for( std::size_t r = 0; r < f.rows(); ++r ) {
		switch( f.at( r, leaf ) ) {
		case Entry::Zero:
			break;
		case Entry::Id:
			out.insert( fold_encode( f.rows(), r, v ) );
			break;
		case Entry::Point:
			if( v == w.n_alpha ) {
				out.insert( fold_encode( f.rows(), r, w.n_alpha ) );
			}
			break;
		}
	}
	return out;
}

} // namespace mllp

#endif // MLLP_RELCORE_HPP
