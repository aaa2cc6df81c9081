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

#ifndef MLLP_INTREL_HPP
#define MLLP_INTREL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mllp::intrel {

using Labels = std::vector< std::string >;
using Subset = std::vector< bool >;

class ShapeMismatch : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Relation between two finite sets of labelled elements.
class FinRel {
public:
	FinRel() = default;
	FinRel( Labels dom, Labels cod ) :
		dom_( std::move( dom ) ), cod_( std::move( cod ) ), bits_( dom_.size() * cod_.size(), false ) {}

	static FinRel identity( const Labels &a ) {
		FinRel r( a, a );
		for( std::size_t k = 0; k < a.size(); ++k ) {
			r.add( k, k );
		}
		return r;
	}

	const Labels &dom() const { return dom_; }
	const Labels &cod() const { return cod_; }
	bool has( std::size_t d, std::size_t c ) const { return bits_[ d * cod_.size() + c ]; }
	void add( std::size_t d, std::size_t c ) { bits_.at( d * cod_.size() + c ) = true; }
	void remove( std::size_t d, std::size_t c ) { bits_.at( d * cod_.size() + c ) = false; }
	std::size_t bit_count() const { return bits_.size(); }
	void set_bit( std::size_t k, bool v ) { bits_.at( k ) = v; }
	bool empty() const { return std::none_of( bits_.begin(), bits_.end(), []( bool b ) { return b; } ); }

	std::vector< std::pair< std::string, std::string > > pairs() const {
		std::vector< std::pair< std::string, std::string > > out;
		for( std::size_t d = 0; d < dom_.size(); ++d ) {
			for( std::size_t c = 0; c < cod_.size(); ++c ) {
				if( has( d, c ) ) {
					out.emplace_back( dom_[ d ], cod_[ c ] );
				}
			}
		}
		return out;
	}

	friend bool operator==( const FinRel &a, const FinRel &b ) {
		return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.bits_ == b.bits_;
	}
	friend bool operator!=( const FinRel &a, const FinRel &b ) { return !( a == b ); }

private:
	Labels dom_, cod_;
	std::vector< bool > bits_;
};

/// s after r (right-to-left, as in relational notation "s r").
inline FinRel compose( const FinRel &s, const FinRel &r ) {
	if( r.cod() != s.dom() ) {
		throw ShapeMismatch( "FinRel compose: carriers differ" );
	}
	FinRel out( r.dom(), s.cod() );
	for( std::size_t a = 0; a < r.dom().size(); ++a ) {
		for( std::size_t b = 0; b < r.cod().size(); ++b ) {
			if( !r.has( a, b ) ) {
				continue;
			}
			for( std::size_t c = 0; c < s.cod().size(); ++c ) {
				if( s.has( b, c ) ) {
					out.add( a, c );
				}
			}
		}
	}
	return out;
}

inline FinRel unite( const FinRel &a, const FinRel &b ) {
	if( a.dom() != b.dom() || a.cod() != b.cod() ) {
		throw ShapeMismatch( "FinRel union: carriers differ" );
	}
	FinRel out = a;
	for( std::size_t d = 0; d < a.dom().size(); ++d ) {
		for( std::size_t c = 0; c < a.cod().size(); ++c ) {
			if( b.has( d, c ) ) {
				out.add( d, c );
			}
		}
	}
	return out;
}

/// Reflexive-transitive closure by squaring to a fixpoint.
inline FinRel star( const FinRel &r ) {
	if( r.dom() != r.cod() ) {
		throw ShapeMismatch( "FinRel star: not an endorelation" );
	}
	FinRel x = unite( FinRel::identity( r.dom() ), r );
	for( ;; ) {
		FinRel next = unite( x, compose( x, x ) );
		if( next == x ) {
			return x;
		}
		x = std::move( next );
	}
}

inline FinRel converse( const FinRel &r ) {
	FinRel out( r.cod(), r.dom() );
	for( std::size_t d = 0; d < r.dom().size(); ++d ) {
		for( std::size_t c = 0; c < r.cod().size(); ++c ) {
			if( r.has( d, c ) ) {
				out.add( c, d );
			}
		}
	}
	return out;
}

/// R[X]
inline Subset image( const FinRel &r, const Subset &x ) {
	Subset out( r.cod().size(), false );
	for( std::size_t d = 0; d < r.dom().size(); ++d ) {
		if( !x[ d ] ) {
			continue;
		}
		for( std::size_t c = 0; c < r.cod().size(); ++c ) {
			if( r.has( d, c ) ) {
				out[ c ] = true;
			}
		}
	}
	return out;
}

/// [Y]R
inline Subset preimage( const FinRel &r, const Subset &y ) {
	Subset out( r.dom().size(), false );
	for( std::size_t d = 0; d < r.dom().size(); ++d ) {
		for( std::size_t c = 0; c < r.cod().size(); ++c ) {
			if( y[ c ] && r.has( d, c ) ) {
				out[ d ] = true;
			}
		}
	}
	return out;
}

inline bool is_empty( const Subset &s ) { return std::none_of( s.begin(), s.end(), []( bool b ) { return b; } ); }

/// Object (A+, A-) with multipoints mp(A+) and mp(A-) as subsets.
struct MPObj {
	Labels plus, minus;
	Subset mp_plus, mp_minus;

	static MPObj make( Labels p, Labels m ) {
		MPObj o{ std::move( p ), std::move( m ), {}, {} };
		o.mp_plus.assign( o.plus.size(), false );
		o.mp_minus.assign( o.minus.size(), false );
		return o;
	}

	void validate() const {
		if( mp_plus.size() != plus.size() || mp_minus.size() != minus.size() ) {
			throw ShapeMismatch( "multipoint is not a subset of its carrier" );
		}
	}

	bool same_carriers( const MPObj &o ) const { return plus == o.plus && minus == o.minus; }
	friend bool operator==( const MPObj &a, const MPObj &b ) {
		return a.plus == b.plus && a.minus == b.minus && a.mp_plus == b.mp_plus && a.mp_minus == b.mp_minus;
	}
};

/*
 * Morphism (A+, A-) -> (B+, B-) as four relations:
 * R11 : A+ -> A-, R12 : A+ -> B+, R21 : B- -> A-, R22 : B- -> B+.
 */
struct IntMor {
	MPObj source, target;
	FinRel r11, r12, r21, r22;

	static IntMor empty( const MPObj &a, const MPObj &b ) {
		return IntMor{ a, b, FinRel( a.plus, a.minus ), FinRel( a.plus, b.plus ), FinRel( b.minus, a.minus ),
			FinRel( b.minus, b.plus ) };
	}

	static IntMor identity( const MPObj &a ) {
		IntMor r = empty( a, a );
		r.r12 = FinRel::identity( a.plus );
		r.r21 = FinRel::identity( a.minus );
		return r;
	}

	void validate() const {
		source.validate();
		target.validate();
		if( r11.dom() != source.plus || r11.cod() != source.minus || r12.dom() != source.plus ||
			r12.cod() != target.plus || r21.dom() != target.minus || r21.cod() != source.minus ||
			r22.dom() != target.minus || r22.cod() != target.plus ) {
			throw ShapeMismatch( "IntMor blocks do not match the objects" );
		}
	}

	friend bool operator==( const IntMor &a, const IntMor &b ) {
		return a.source == b.source && a.target == b.target && a.r11 == b.r11 && a.r12 == b.r12 &&
			a.r21 == b.r21 && a.r22 == b.r22;
	}
	friend bool operator!=( const IntMor &a, const IntMor &b ) { return !( a == b ); }
};

/// s after r.
inline IntMor int_compose( const IntMor &s, const IntMor &r ) {
	if( !r.target.same_carriers( s.source ) ) {
		throw ShapeMismatch( "int_compose: object mismatch" );
	}
	const FinRel loop_p = star( compose( r.r22, s.r11 ) ); // on B+
	const FinRel loop_m = star( compose( s.r11, r.r22 ) ); // on B-
	IntMor out{ r.source, s.target, {}, {}, {}, {} };
	out.r11 = unite( r.r11, compose( r.r21, compose( s.r11, compose( loop_p, r.r12 ) ) ) );
	out.r12 = compose( s.r12, compose( loop_p, r.r12 ) );
	out.r21 = compose( r.r21, compose( loop_m, s.r21 ) );
	out.r22 = unite( s.r22, compose( s.r12, compose( r.r22, compose( loop_m, s.r21 ) ) ) );
	return out;
}

inline MPObj dual( const MPObj &a ) { return MPObj{ a.minus, a.plus, a.mp_minus, a.mp_plus }; }

/// R^ : (B-, B+) -> (A-, A+).
inline IntMor dual( const IntMor &r ) {
	return IntMor{ dual( r.target ), dual( r.source ), r.r22, r.r21, r.r12, r.r11 };
}

inline bool is_pos( const IntMor &r ) {
	return preimage( r.r12, r.target.mp_plus ) == r.source.mp_plus &&
		image( r.r21, r.target.mp_minus ) == r.source.mp_minus && is_empty( preimage( r.r22, r.target.mp_plus ) ) &&
		is_empty( image( r.r22, r.target.mp_minus ) );
}

inline bool is_neg( const IntMor &r ) {
	return image( r.r12, r.source.mp_plus ) == r.target.mp_plus &&
		preimage( r.r21, r.source.mp_minus ) == r.target.mp_minus &&
		is_empty( preimage( r.r11, r.source.mp_minus ) ) && is_empty( image( r.r11, r.source.mp_plus ) );
}

namespace detail {

inline Labels tagged( const Labels &a, const Labels &b ) {
	Labels out;
	for( const auto &x : a ) {
		out.push_back( "L." + x );
	}
	for( const auto &x : b ) {
		out.push_back( "R." + x );
	}
	return out;
}

inline Subset concat( const Subset &a, const Subset &b ) {
	Subset out = a;
	out.insert( out.end(), b.begin(), b.end() );
	return out;
}

/// Block-diagonal sum of two relations on tagged carriers.
inline FinRel sum( const FinRel &a, const FinRel &b ) {
	FinRel out( tagged( a.dom(), b.dom() ), tagged( a.cod(), b.cod() ) );
	for( std::size_t d = 0; d < a.dom().size(); ++d ) {
		for( std::size_t c = 0; c < a.cod().size(); ++c ) {
			if( a.has( d, c ) ) {
				out.add( d, c );
			}
		}
	}
	for( std::size_t d = 0; d < b.dom().size(); ++d ) {
		for( std::size_t c = 0; c < b.cod().size(); ++c ) {
			if( b.has( d, c ) ) {
				out.add( a.dom().size() + d, a.cod().size() + c );
			}
		}
	}
	return out;
}

inline std::string fresh_star( const Labels &a, const Labels &b ) {
	std::string s = "*";
	while( std::find( a.begin(), a.end(), s ) != a.end() || std::find( b.begin(), b.end(), s ) != b.end() ) {
		s += "*";
	}
	return s;
}

/// Copy of r with one extra element appended to dom and/or cod.
inline FinRel extend( const FinRel &r, const std::optional< std::string > &dom_extra,
	const std::optional< std::string > &cod_extra ) {
	Labels d = r.dom(), c = r.cod();
	if( dom_extra ) {
		d.push_back( *dom_extra );
	}
	if( cod_extra ) {
		c.push_back( *cod_extra );
	}
	FinRel out( d, c );
	for( std::size_t i = 0; i < r.dom().size(); ++i ) {
		for( std::size_t j = 0; j < r.cod().size(); ++j ) {
			if( r.has( i, j ) ) {
				out.add( i, j );
			}
		}
	}
	return out;
}

} // namespace detail

inline MPObj tensor( const MPObj &a, const MPObj &b ) {
	return MPObj{ detail::tagged( a.plus, b.plus ), detail::tagged( a.minus, b.minus ),
		detail::concat( a.mp_plus, b.mp_plus ), detail::concat( a.mp_minus, b.mp_minus ) };
}

inline IntMor tensor( const IntMor &r, const IntMor &s ) {
	return IntMor{ tensor( r.source, s.source ), tensor( r.target, s.target ), detail::sum( r.r11, s.r11 ),
		detail::sum( r.r12, s.r12 ), detail::sum( r.r21, s.r21 ), detail::sum( r.r22, s.r22 ) };
}

/// Adjoins a fresh point to both carriers; it becomes the only multipoint.
inline MPObj shift_obj( const MPObj &a ) {
	const std::string s = detail::fresh_star( a.plus, a.minus );
	MPObj o{ a.plus, a.minus, {}, {} };
	o.plus.push_back( s );
	o.minus.push_back( s );
	o.mp_plus.assign( o.plus.size(), false );
	o.mp_minus.assign( o.minus.size(), false );
	o.mp_plus.back() = true;
	o.mp_minus.back() = true;
	return o;
}

inline MPObj down_obj( const MPObj &a ) { return shift_obj( a ); }
inline MPObj up_obj( const MPObj &a ) { return shift_obj( a ); }

/// Pads R with (*,*) in the 12 and 21 blocks. Down and up agree on maps.
inline IntMor shift_mor( const IntMor &r ) {
	const MPObj a = shift_obj( r.source ), b = shift_obj( r.target );
	const std::string sa = a.plus.back(), sb = b.plus.back();
	IntMor out{ a, b, detail::extend( r.r11, sa, sa ), detail::extend( r.r12, sa, sb ),
		detail::extend( r.r21, sb, sa ), detail::extend( r.r22, sb, sb ) };
	out.r12.add( a.plus.size() - 1, b.plus.size() - 1 );
	out.r21.add( b.minus.size() - 1, a.minus.size() - 1 );
	return out;
}

inline IntMor down_functor( const IntMor &r ) { return shift_mor( r ); }
inline IntMor up_functor( const IntMor &r ) { return shift_mor( r ); }

/*
 * Pos(A_mp, down B) from Int(Rel)(|A|, B): adds mp(A+) x {*} to the 12
 * block and {*} x mp(A-) to the 21 block.
 */
inline IntMor transpose_to_pos( const IntMor &r ) {
	const MPObj b = down_obj( r.target );
	const std::string s = b.plus.back();
	IntMor out{ r.source, b, r.r11, detail::extend( r.r12, std::nullopt, s ), detail::extend( r.r21, s, std::nullopt ),
		detail::extend( r.r22, s, s ) };
	for( std::size_t a = 0; a < r.source.plus.size(); ++a ) {
		if( r.source.mp_plus[ a ] ) {
			out.r12.add( a, b.plus.size() - 1 );
		}
	}
	for( std::size_t a = 0; a < r.source.minus.size(); ++a ) {
		if( r.source.mp_minus[ a ] ) {
			out.r21.add( b.minus.size() - 1, a );
		}
	}
	return out;
}

/// Inverse of transpose_to_pos: drops every pair touching the adjoined point.
inline IntMor transpose_from_pos( const IntMor &r, const MPObj &plain_target ) {
	const MPObj &b = r.target;
	if( b.plus.size() != plain_target.plus.size() + 1 || b.minus.size() != plain_target.minus.size() + 1 ) {
		throw ShapeMismatch( "transpose_from_pos: target is not a shifted object" );
	}
	IntMor out = IntMor::empty( r.source, plain_target );
	out.r11 = r.r11;
	for( std::size_t a = 0; a < r.source.plus.size(); ++a ) {
		for( std::size_t c = 0; c < plain_target.plus.size(); ++c ) {
			if( r.r12.has( a, c ) ) {
				out.r12.add( a, c );
			}
		}
	}
	for( std::size_t c = 0; c < plain_target.minus.size(); ++c ) {
		for( std::size_t a = 0; a < r.source.minus.size(); ++a ) {
			if( r.r21.has( c, a ) ) {
				out.r21.add( c, a );
			}
		}
		for( std::size_t d = 0; d < plain_target.plus.size(); ++d ) {
			if( r.r22.has( c, d ) ) {
				out.r22.add( c, d );
			}
		}
	}
	return out;
}

/// Neg(up A, B_mp) from Int(Rel)(A, |B|): adds {*} x mp(B+) and mp(B-) x {*}.
inline IntMor transpose_to_neg( const IntMor &r ) {
	const MPObj a = up_obj( r.source );
	const std::string s = a.plus.back();
	IntMor out{ a, r.target, detail::extend( r.r11, s, s ), detail::extend( r.r12, s, std::nullopt ),
		detail::extend( r.r21, std::nullopt, s ), r.r22 };
	for( std::size_t b = 0; b < r.target.plus.size(); ++b ) {
		if( r.target.mp_plus[ b ] ) {
			out.r12.add( a.plus.size() - 1, b );
		}
	}
	for( std::size_t b = 0; b < r.target.minus.size(); ++b ) {
		if( r.target.mp_minus[ b ] ) {
			out.r21.add( b, a.minus.size() - 1 );
		}
	}
	return out;
}

// ---------------------------------------------------------------------------
// Enumeration and sampling

inline std::size_t mor_bits( const MPObj &a, const MPObj &b ) {
	return a.plus.size() * a.minus.size() + a.plus.size() * b.plus.size() + b.minus.size() * a.minus.size() +
		b.minus.size() * b.plus.size();
}

/// The morphism whose block bits (R11, R12, R21, R22 in order) are the bits of `code`.
inline IntMor mor_from_code( const MPObj &a, const MPObj &b, std::uint64_t code ) {
	IntMor r = IntMor::empty( a, b );
	std::size_t bit = 0;
	for( FinRel *blk : { &r.r11, &r.r12, &r.r21, &r.r22 } ) {
		for( std::size_t k = 0; k < blk->bit_count(); ++k, ++bit ) {
			blk->set_bit( k, ( code >> bit ) & 1u );
		}
	}
	return r;
}

template< typename F >
void for_each_mor( const MPObj &a, const MPObj &b, F &&f ) {
	const std::size_t n = mor_bits( a, b );
	if( n > 24 ) {
		throw std::length_error( "for_each_mor: hom-set too large to enumerate" );
	}
	for( std::uint64_t code = 0; code < ( std::uint64_t{ 1 } << n ); ++code ) {
		f( mor_from_code( a, b, code ) );
	}
}

/// All objects whose carriers have at most `max` elements, with every multipoint choice.
inline std::vector< MPObj > small_objects( std::size_t max, bool all_multipoints = true ) {
	std::vector< MPObj > out;
	for( std::size_t p = 0; p <= max; ++p ) {
		for( std::size_t m = 0; m <= max; ++m ) {
			Labels pl, ml;
			for( std::size_t k = 0; k < p; ++k ) {
				pl.push_back( "p" + std::to_string( k ) );
			}
			for( std::size_t k = 0; k < m; ++k ) {
				ml.push_back( "m" + std::to_string( k ) );
			}
			const std::size_t masks = all_multipoints ? ( std::size_t{ 1 } << ( p + m ) ) : 1;
			for( std::size_t mask = 0; mask < masks; ++mask ) {
				MPObj o = MPObj::make( pl, ml );
				for( std::size_t k = 0; k < p; ++k ) {
					o.mp_plus[ k ] = ( mask >> k ) & 1u;
				}
				for( std::size_t k = 0; k < m; ++k ) {
					o.mp_minus[ k ] = ( mask >> ( p + k ) ) & 1u;
				}
				out.push_back( std::move( o ) );
			}
		}
	}
	return out;
}

inline MPObj random_object( std::mt19937_64 &rng, std::size_t max ) {
	std::uniform_int_distribution< std::size_t > sz( 0, max );
	std::bernoulli_distribution coin( 0.5 );
	Labels pl, ml;
	const std::size_t p = sz( rng ), m = sz( rng );
	for( std::size_t k = 0; k < p; ++k ) {
		pl.push_back( "p" + std::to_string( k ) );
	}
	for( std::size_t k = 0; k < m; ++k ) {
		ml.push_back( "m" + std::to_string( k ) );
	}
	MPObj o = MPObj::make( pl, ml );
	for( std::size_t k = 0; k < p; ++k ) {
		o.mp_plus[ k ] = coin( rng );
	}
	for( std::size_t k = 0; k < m; ++k ) {
		o.mp_minus[ k ] = coin( rng );
	}
	return o;
}

inline IntMor random_mor( std::mt19937_64 &rng, const MPObj &a, const MPObj &b, double density = 0.35 ) {
	std::bernoulli_distribution coin( density );
	IntMor r = IntMor::empty( a, b );
	for( FinRel *blk : { &r.r11, &r.r12, &r.r21, &r.r22 } ) {
		for( std::size_t k = 0; k < blk->bit_count(); ++k ) {
			blk->set_bit( k, coin( rng ) );
		}
	}
	return r;
}

/*
 * Random positive map, built by repairing a random map against the three
 * positivity conditions. Returns nullopt when no positive map exists
 * between the two objects.
 */
inline std::optional< IntMor > random_pos( std::mt19937_64 &rng, const MPObj &a, const MPObj &b ) {
	IntMor r = random_mor( rng, a, b );
	const bool bp = !is_empty( b.mp_plus ), bm = !is_empty( b.mp_minus );
	if( ( !is_empty( a.mp_plus ) && !bp ) || ( !is_empty( a.mp_minus ) && !bm ) ) {
		return std::nullopt;
	}
	std::vector< std::size_t > mpb_plus, mpb_minus;
	for( std::size_t k = 0; k < b.plus.size(); ++k ) {
		if( b.mp_plus[ k ] ) {
			mpb_plus.push_back( k );
		}
	}
	for( std::size_t k = 0; k < b.minus.size(); ++k ) {
		if( b.mp_minus[ k ] ) {
			mpb_minus.push_back( k );
		}
	}
	// 1) preimage of mp(B+) under R12 is exactly mp(A+)
	for( std::size_t x = 0; x < a.plus.size(); ++x ) {
		if( a.mp_plus[ x ] ) {
			r.r12.add( x, mpb_plus[ rng() % mpb_plus.size() ] );
		} else {
			for( auto y : mpb_plus ) {
				r.r12.remove( x, y );
			}
		}
	}
	// 2) image of mp(B-) under R21 is exactly mp(A-)
	for( auto y : mpb_minus ) {
		for( std::size_t x = 0; x < a.minus.size(); ++x ) {
			if( !a.mp_minus[ x ] ) {
				r.r21.remove( y, x );
			}
		}
	}
	for( std::size_t x = 0; x < a.minus.size(); ++x ) {
		if( a.mp_minus[ x ] ) {
			r.r21.add( mpb_minus[ rng() % mpb_minus.size() ], x );
		}
	}
	// 3) R22 avoids mp(B-) as source and mp(B+) as target
	for( std::size_t y = 0; y < b.minus.size(); ++y ) {
		for( std::size_t z = 0; z < b.plus.size(); ++z ) {
			if( b.mp_minus[ y ] || b.mp_plus[ z ] ) {
				r.r22.remove( y, z );
			}
		}
	}
	return r;
}

/// A map that is positive but not negative, found by search over tiny objects.
inline std::optional< IntMor > find_pos_not_neg( std::size_t max_carrier = 1 ) {
	for( const auto &a : small_objects( max_carrier ) ) {
		for( const auto &b : small_objects( max_carrier ) ) {
			std::optional< IntMor > hit;
			for_each_mor( a, b, [ & ]( const IntMor &r ) {
				if( !hit && is_pos( r ) && !is_neg( r ) ) {
					hit = r;
				}
			} );
			if( hit ) {
				return hit;
			}
		}
	}
	return std::nullopt;
}

} // namespace mllp::intrel

#endif // MLLP_INTREL_HPP
