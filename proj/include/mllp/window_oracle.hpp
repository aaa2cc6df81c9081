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

#ifndef MLLP_WINDOW_ORACLE_HPP
#define MLLP_WINDOW_ORACLE_HPP

/*
 * Set-level reference model. Every wire is materialised as a finite
 * carrier (U as {0..N-1}, 1 as a single element) and relations are plain
 * boolean matrices. Composition, trace and closure are computed by direct
 * path search; nothing here calls the entry-level operations, so the two
 * can be compared against each other.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "relcore.hpp"

namespace mllp::oracle {

struct Carrier {
	Wires wires;
	std::vector< std::size_t > offset;
	std::size_t total = 0;
	std::uint64_t n = 0;

	Carrier( const Wires &w, std::uint64_t window ) : wires( w ), n( window ) {
		for( auto t : w ) {
			offset.push_back( total );
			total += t == WireType::U ? window : 1;
		}
	}
	std::size_t width( std::size_t wire ) const { return wires[ wire ] == WireType::U ? n : 1; }
};

class SetRel {
public:
	SetRel( Carrier cod, Carrier dom ) :
		cod_( std::move( cod ) ), dom_( std::move( dom ) ), bits_( cod_.total * dom_.total, false ) {}

	const Carrier &cod() const { return cod_; }
	const Carrier &dom() const { return dom_; }

	bool get( std::size_t y, std::size_t x ) const { return bits_[ y * dom_.total + x ]; }
	void put( std::size_t y, std::size_t x ) { bits_[ y * dom_.total + x ] = true; }

	friend bool operator==( const SetRel &a, const SetRel &b ) {
		return a.cod_.wires == b.cod_.wires && a.dom_.wires == b.dom_.wires && a.bits_ == b.bits_;
	}

	std::size_t pair_count() const {
		std::size_t c = 0;
		for( bool b : bits_ ) {
			c += b;
		}
		return c;
	}

private:
	Carrier cod_, dom_;
	std::vector< bool > bits_;
};

/// Interprets each entry by its set semantics on the window.
inline SetRel materialize( const BlockRel &f, const Window &w ) {
	SetRel r( Carrier( f.cod(), w.size ), Carrier( f.dom(), w.size ) );
	for( std::size_t i = 0; i < f.rows(); ++i ) {
		for( std::size_t j = 0; j < f.cols(); ++j ) {
			const std::size_t oy = r.cod().offset[ i ], ox = r.dom().offset[ j ];
			const bool uy = f.cod()[ i ] == WireType::U, ux = f.dom()[ j ] == WireType::U;
			switch( f.at( i, j ) ) {
			case Entry::Zero:
				break;
			case Entry::Point:
				r.put( oy + ( uy ? w.n_alpha : 0 ), ox + ( ux ? w.n_alpha : 0 ) );
				break;
			case Entry::Id:
				for( std::size_t v = 0; v < r.dom().width( j ); ++v ) {
					r.put( oy + v, ox + v );
				}
				break;
			}
		}
	}
	return r;
}

inline SetRel compose( const SetRel &g, const SetRel &f ) {
	if( g.dom().wires != f.cod().wires ) {
		throw InterfaceError( "oracle compose: mismatch" );
	}
	SetRel out( g.cod(), f.dom() );
	for( std::size_t x = 0; x < f.dom().total; ++x ) {
		for( std::size_t m = 0; m < f.cod().total; ++m ) {
			if( !f.get( m, x ) ) {
				continue;
			}
			for( std::size_t y = 0; y < g.cod().total; ++y ) {
				if( g.get( y, m ) ) {
					out.put( y, x );
				}
			}
		}
	}
	return out;
}

inline SetRel join( const SetRel &a, const SetRel &b ) {
	SetRel out = a;
	for( std::size_t y = 0; y < a.cod().total; ++y ) {
		for( std::size_t x = 0; x < a.dom().total; ++x ) {
			if( b.get( y, x ) ) {
				out.put( y, x );
			}
		}
	}
	return out;
}

inline SetRel tensor( const SetRel &a, const SetRel &b ) {
	Wires cw = a.cod().wires, dw = a.dom().wires;
	cw.insert( cw.end(), b.cod().wires.begin(), b.cod().wires.end() );
	dw.insert( dw.end(), b.dom().wires.begin(), b.dom().wires.end() );
	SetRel out( Carrier( cw, a.cod().n ), Carrier( dw, a.dom().n ) );
	for( std::size_t y = 0; y < a.cod().total; ++y ) {
		for( std::size_t x = 0; x < a.dom().total; ++x ) {
			if( a.get( y, x ) ) {
				out.put( y, x );
			}
		}
	}
	for( std::size_t y = 0; y < b.cod().total; ++y ) {
		for( std::size_t x = 0; x < b.dom().total; ++x ) {
			if( b.get( y, x ) ) {
				out.put( a.cod().total + y, a.dom().total + x );
			}
		}
	}
	return out;
}

/// Reflexive-transitive closure by breadth-first reachability.
inline SetRel star( const SetRel &f ) {
	SetRel out( f.cod(), f.dom() );
	const std::size_t n = f.dom().total;
	for( std::size_t x = 0; x < n; ++x ) {
		std::vector< bool > seen( n, false );
		std::vector< std::size_t > todo{ x };
		seen[ x ] = true;
		while( !todo.empty() ) {
			const std::size_t v = todo.back();
			todo.pop_back();
			out.put( v, x );
			for( std::size_t y = 0; y < n; ++y ) {
				if( f.get( y, v ) && !seen[ y ] ) {
					seen[ y ] = true;
					todo.push_back( y );
				}
			}
		}
	}
	return out;
}

/*
 * Trace over the last k wires by following each input through the
 * feedback loop until it exits on a kept output.
 */
inline SetRel trace( const SetRel &f, std::size_t k ) {
	const Wires &cw = f.cod().wires, &dw = f.dom().wires;
	if( k > cw.size() || k > dw.size() ) {
		throw InterfaceError( "oracle trace: suffix too long" );
	}
	const Wires keep_c( cw.begin(), cw.end() - static_cast< std::ptrdiff_t >( k ) );
	const Wires keep_d( dw.begin(), dw.end() - static_cast< std::ptrdiff_t >( k ) );
	SetRel out( Carrier( keep_c, f.cod().n ), Carrier( keep_d, f.dom().n ) );
	const std::size_t kept_out = out.cod().total, kept_in = out.dom().total;
	const std::size_t loop = f.cod().total - kept_out;
	if( loop != f.dom().total - kept_in ) {
		throw InterfaceError( "oracle trace: traced carriers differ" );
	}
	for( std::size_t x = 0; x < kept_in; ++x ) {
		std::vector< bool > seen( loop, false );
		std::vector< std::size_t > todo;
		auto emit = [ & ]( std::size_t src ) {
			for( std::size_t y = 0; y < f.cod().total; ++y ) {
				if( !f.get( y, src ) ) {
					continue;
				}
				if( y < kept_out ) {
					out.put( y, x );
				} else if( !seen[ y - kept_out ] ) {
					seen[ y - kept_out ] = true;
					todo.push_back( y - kept_out );
				}
			}
		};
		emit( x );
		while( !todo.empty() ) {
			const std::size_t l = todo.back();
			todo.pop_back();
			emit( kept_in + l );
		}
	}
	return out;
}

/*
 * Reads back the (row, col) block of a materialised relation as an entry,
 * or nullopt when the block is none of empty / distinguished point /
 * identity.
 */
inline std::optional< Entry > classify_block( const SetRel &r, std::size_t row, std::size_t col,
	const Window &w ) {
	const std::size_t oy = r.cod().offset[ row ], ox = r.dom().offset[ col ];
	const std::size_t ny = r.cod().width( row ), nx = r.dom().width( col );
	const bool uy = r.cod().wires[ row ] == WireType::U, ux = r.dom().wires[ col ] == WireType::U;
	std::size_t count = 0;
	bool diag = nx == ny;
	for( std::size_t a = 0; a < ny; ++a ) {
		for( std::size_t b = 0; b < nx; ++b ) {
			const bool on = r.get( oy + a, ox + b );
			count += on;
			if( diag && ( on != ( a == b ) ) ) {
				diag = false;
			}
		}
	}
	if( count == 0 ) {
		return Entry::Zero;
	}
	if( diag && uy == ux ) {
		return Entry::Id;
	}
	if( count == 1 && r.get( oy + ( uy ? w.n_alpha : 0 ), ox + ( ux ? w.n_alpha : 0 ) ) ) {
		return Entry::Point;
	}
	return std::nullopt;
}

/// Reads a whole relation back into entry form; nullopt if any block escapes the algebra.
inline std::optional< BlockRel > read_back( const SetRel &r, const Window &w ) {
	BlockRel out( r.cod().wires, r.dom().wires );
	for( std::size_t i = 0; i < r.cod().wires.size(); ++i ) {
		for( std::size_t j = 0; j < r.dom().wires.size(); ++j ) {
			const auto e = classify_block( r, i, j, w );
			if( !e ) {
				return std::nullopt;
			}
			out.set( i, j, *e );
		}
	}
	return out;
}

/// Pointwise folded evaluation computed from the materialised relation.
inline std::vector< std::uint64_t > fold_eval( const SetRel &r, std::uint64_t token ) {
	const std::size_t m = r.dom().wires.size();
	const auto [ leaf, v ] = fold_decode( m, token );
	std::vector< std::uint64_t > out;
	if( v >= r.dom().n ) {
		throw WindowError( "oracle fold_eval: decoded value outside window" );
	}
	const std::size_t x = r.dom().offset[ leaf ] + v;
	for( std::size_t wire = 0; wire < r.cod().wires.size(); ++wire ) {
		for( std::size_t a = 0; a < r.cod().width( wire ); ++a ) {
			if( r.get( r.cod().offset[ wire ] + a, x ) ) {
				out.push_back( fold_encode( r.cod().wires.size(), wire, a ) );
			}
		}
	}
	return out;
}

} // namespace mllp::oracle

#endif // MLLP_WINDOW_ORACLE_HPP
