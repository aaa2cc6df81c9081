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

#ifndef MLLP_LAWS_HPP
#define MLLP_LAWS_HPP

/*
 * Seeded law suites. Each relcore law is evaluated twice, once with the
 * entry algebra and once with the set-level oracle; a sample passes when
 * both sides agree in each backend and the entry result materialises to
 * the oracle result.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "formula.hpp"
#include "goi.hpp"
#include "intrel.hpp"
#include "relcore.hpp"
#include "window_oracle.hpp"

namespace mllp::laws {

struct LawResult {
	std::string name;
	std::size_t cases = 0;
	std::size_t failures = 0;
	std::string first_failure;
	std::string note;

	LawResult() = default;
	explicit LawResult( std::string n ) : name( std::move( n ) ) {}

	bool ok() const { return failures == 0 && cases > 0; }

	void fail( const std::string &why ) {
		if( failures++ == 0 ) {
			first_failure = why;
		}
	}
};

inline bool all_ok( const std::vector< LawResult > &rs ) {
	for( const auto &r : rs ) {
		if( !r.ok() ) {
			return false;
		}
	}
	return !rs.empty();
}

// ---------------------------------------------------------------------------
// Generators

using Rng = std::mt19937_64;

inline Wires random_wires( Rng &rng, std::size_t lo, std::size_t hi ) {
	std::uniform_int_distribution< std::size_t > n( lo, hi );
	std::bernoulli_distribution u( 0.6 );
	Wires w( n( rng ) );
	for( auto &t : w ) {
		t = u( rng ) ? WireType::U : WireType::One;
	}
	return w;
}

inline BlockRel random_rel( Rng &rng, const Wires &cod, const Wires &dom, double density = 0.35 ) {
	std::bernoulli_distribution on( density ), pick_id( 0.5 );
	BlockRel r( cod, dom );
	for( std::size_t i = 0; i < cod.size(); ++i ) {
		for( std::size_t j = 0; j < dom.size(); ++j ) {
			if( !on( rng ) ) {
				continue;
			}
			r.set( i, j, cod[ i ] == dom[ j ] && pick_id( rng ) ? Entry::Id : Entry::Point );
		}
	}
	return r;
}

inline Wires cat( Wires a, const Wires &b ) {
	a.insert( a.end(), b.begin(), b.end() );
	return a;
}

/// Random unit-free polarized formula of the given polarity.
inline Formula random_formula( Rng &rng, Polarity pol, std::size_t depth ) {
	std::uniform_int_distribution< int > pick( 0, 3 );
	const std::string name = rng() % 2 ? "X" : "Y";
	const int c = depth == 0 ? 0 : pick( rng );
	if( pol == Polarity::Positive ) {
		if( c == 0 ) {
			return atom( name );
		}
		if( c == 1 || c == 2 ) {
			return tensor( random_formula( rng, pol, depth - 1 ), random_formula( rng, pol, depth - 1 ) );
		}
		return down( random_formula( rng, Polarity::Negative, depth - 1 ) );
	}
	if( c == 0 ) {
		return neg_atom( name );
	}
	if( c == 1 || c == 2 ) {
		return par( random_formula( rng, pol, depth - 1 ), random_formula( rng, pol, depth - 1 ) );
	}
	return up( random_formula( rng, Polarity::Positive, depth - 1 ) );
}

// ---------------------------------------------------------------------------
// Backends

struct EntryBackend {
	using Rel = BlockRel;
	Rel lift( const BlockRel &f ) const { return f; }
	Rel compose( const Rel &g, const Rel &f ) const { return mllp::compose( g, f ); }
	Rel tensor( const Rel &a, const Rel &b ) const { return mllp::tensor( a, b ); }
	Rel join( const Rel &a, const Rel &b ) const { return mllp::join( a, b ); }
	Rel star( const Rel &f ) const { return mllp::star( f ); }
	Rel trace( const Rel &f, std::size_t k ) const { return mllp::trace( f, k ); }
};

struct OracleBackend {
	using Rel = oracle::SetRel;
	Window w;
	Rel lift( const BlockRel &f ) const { return oracle::materialize( f, w ); }
	Rel compose( const Rel &g, const Rel &f ) const { return oracle::compose( g, f ); }
	Rel tensor( const Rel &a, const Rel &b ) const { return oracle::tensor( a, b ); }
	Rel join( const Rel &a, const Rel &b ) const { return oracle::join( a, b ); }
	Rel star( const Rel &f ) const { return oracle::star( f ); }
	Rel trace( const Rel &f, std::size_t k ) const { return oracle::trace( f, k ); }
};

/// Inputs of one law instance; `window` overrides the suite window when set.
struct Sample {
	std::vector< BlockRel > rels;
	std::vector< std::size_t > ints;
	std::optional< Window > window;
};

template< typename Be >
using Sides = std::vector< std::pair< typename Be::Rel, typename Be::Rel > >;

/*
 * A law maps a backend and a sample to a list of (lhs, rhs) pairs. It is
 * written once as a generic lambda and instantiated for both backends.
 */
template< typename Law >
std::optional< std::string > check_sample( const Law &law, const Sample &s, const Window &suite_window ) {
	const Window w = s.window.value_or( suite_window );
	const EntryBackend eb;
	const OracleBackend ob{ w };
	const auto es = law( eb, s );
	const auto os = law( ob, s );
	for( std::size_t k = 0; k < es.size(); ++k ) {
		const auto &[ el, er ] = es[ k ];
		const auto &[ ol, orr ] = os[ k ];
		if( el != er ) {
			return "entry sides differ (equation " + std::to_string( k ) + "):\n" + el.to_text() + "vs\n" +
				er.to_text();
		}
		if( !( ol == orr ) ) {
			return "oracle sides differ (equation " + std::to_string( k ) + ")";
		}
		if( !( oracle::materialize( el, w ) == ol ) ) {
			return "entry result disagrees with the oracle (equation " + std::to_string( k ) + "):\n" + el.to_text();
		}
	}
	return std::nullopt;
}

template< typename Gen, typename Law >
LawResult run_law( const std::string &name, std::size_t samples, std::uint64_t seed, const Window &w, Gen gen,
	const Law &law ) {
	LawResult res( name );
	Rng rng( seed ^ std::hash< std::string >{}( name ) );
	for( std::size_t n = 0; n < samples; ++n ) {
		const Sample s = gen( rng );
		++res.cases;
		try {
			if( auto why = check_sample( law, s, w ) ) {
				res.fail( "sample " + std::to_string( n ) + ": " + *why );
			}
		} catch( const std::exception &e ) {
			res.fail( "sample " + std::to_string( n ) + ": " + e.what() );
		}
	}
	return res;
}

// ---------------------------------------------------------------------------
// relcore laws

struct SuiteConfig {
	std::uint64_t seed = 1;
	std::size_t samples = 1000;
	Window window{};
};

/// Permutation matrix from `order`: output position k carries input wire order[k].
inline BlockRel gather( const Wires &dom, const std::vector< std::size_t > &order ) {
	std::vector< std::size_t > perm( order.size() );
	for( std::size_t k = 0; k < order.size(); ++k ) {
		perm[ order[ k ] ] = k;
	}
	return perm_matrix( dom, perm );
}

inline std::vector< std::size_t > iota( std::size_t from, std::size_t n ) {
	std::vector< std::size_t > v( n );
	for( std::size_t k = 0; k < n; ++k ) {
		v[ k ] = from + k;
	}
	return v;
}

inline std::vector< LawResult > relcore_laws( const SuiteConfig &cfg ) {
	std::vector< LawResult > out;
	const auto n = cfg.samples;
	const auto seed = cfg.seed;
	const auto &w = cfg.window;

	// Tr^X(s_{X,X}) = Id_X
	out.push_back( run_law(
		"yanking", n, seed, w,
		[]( Rng &rng ) {
			const Wires x = random_wires( rng, 1, 3 );
			return Sample{ { symmetry( x, x ), prim::id( x ) }, { x.size() }, {} };
		},
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			return Sides< Be >{ { be.trace( be.lift( s.rels[ 0 ] ), s.ints[ 0 ] ), be.lift( s.rels[ 1 ] ) } };
		} ) );

	// Tr^B(s_{B,C} (f (x) g)) = g f, for f : A -> B, g : B -> C
	out.push_back( run_law(
		"generalized yanking", n, seed, w,
		[]( Rng &rng ) {
			const Wires a = random_wires( rng, 1, 2 ), b = random_wires( rng, 1, 3 ), c = random_wires( rng, 1, 2 );
			return Sample{ { random_rel( rng, b, a ), random_rel( rng, c, b ), symmetry( b, c ) }, { b.size() }, {} };
		},
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			const auto f = be.lift( s.rels[ 0 ] ), g = be.lift( s.rels[ 1 ] );
			const auto lhs = be.trace( be.compose( be.lift( s.rels[ 2 ] ), be.tensor( f, g ) ), s.ints[ 0 ] );
			return Sides< Be >{ { lhs, be.compose( g, f ) } };
		} ) );

	/*
	 * Iterated generalized yanking, f : X -> U, g : U -> V, h : V -> Y.
	 * The traced map X (x) V (x) U -> Y (x) V (x) U feeds X to f, U to g
	 * and V to h, and returns g's output on V and f's output on U.
	 */
	out.push_back( run_law(
		"iterated generalized yanking", n, seed, w,
		[]( Rng &rng ) {
			const Wires x = random_wires( rng, 1, 2 ), u = random_wires( rng, 1, 2 ), v = random_wires( rng, 1, 2 ),
						y = random_wires( rng, 1, 2 );
			const BlockRel f = random_rel( rng, u, x ), g = random_rel( rng, v, u ), h = random_rel( rng, y, v );
			// X V U -> V X U
			const Wires in = cat( cat( x, v ), u );
			std::vector< std::size_t > order = iota( x.size(), v.size() );
			for( auto k : iota( 0, x.size() ) ) {
				order.push_back( k );
			}
			for( auto k : iota( x.size() + v.size(), u.size() ) ) {
				order.push_back( k );
			}
			const BlockRel pre = gather( in, order );
			// Y U V -> Y V U
			const BlockRel post = tensor( prim::id( y ), symmetry( u, v ) );
			return Sample{ { f, g, h, pre, post }, { u.size() + v.size() }, {} };
		},
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			const auto f = be.lift( s.rels[ 0 ] ), g = be.lift( s.rels[ 1 ] ), h = be.lift( s.rels[ 2 ] );
			const auto body = be.compose(
				be.lift( s.rels[ 4 ] ), be.compose( be.tensor( h, be.tensor( f, g ) ), be.lift( s.rels[ 3 ] ) ) );
			return Sides< Be >{ { be.trace( body, s.ints[ 0 ] ), be.compose( h, be.compose( g, f ) ) } };
		} ) );

	// Tr^0 f = f and Tr^{X (x) Y} f = Tr^X Tr^Y f
	out.push_back( run_law(
		"vanishing", n, seed, w,
		[]( Rng &rng ) {
			const Wires a = random_wires( rng, 1, 2 ), b = random_wires( rng, 1, 2 ), x = random_wires( rng, 1, 2 ),
						y = random_wires( rng, 1, 2 );
			return Sample{ { random_rel( rng, cat( cat( b, x ), y ), cat( cat( a, x ), y ) ) }, { x.size(), y.size() },
				{} };
		},
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			const auto f = be.lift( s.rels[ 0 ] );
			return Sides< Be >{ { be.trace( f, 0 ), f },
				{ be.trace( f, s.ints[ 0 ] + s.ints[ 1 ] ), be.trace( be.trace( f, s.ints[ 1 ] ), s.ints[ 0 ] ) } };
		} ) );

	// g Tr(f) = Tr((g (x) U) f) and Tr(f) h = Tr(f (h (x) U))
	out.push_back( run_law(
		"naturality", n, seed, w,
		[]( Rng &rng ) {
			const Wires a = random_wires( rng, 1, 2 ), b = random_wires( rng, 1, 2 ), c = random_wires( rng, 1, 2 ),
						d = random_wires( rng, 1, 2 ), u = random_wires( rng, 1, 2 );
			return Sample{ { random_rel( rng, cat( b, u ), cat( a, u ) ), random_rel( rng, c, b ),
							   random_rel( rng, a, d ), prim::id( u ) },
				{ u.size() }, {} };
		},
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			const auto f = be.lift( s.rels[ 0 ] ), g = be.lift( s.rels[ 1 ] ), h = be.lift( s.rels[ 2 ] ),
					   iu = be.lift( s.rels[ 3 ] );
			const std::size_t k = s.ints[ 0 ];
			return Sides< Be >{ { be.compose( g, be.trace( f, k ) ), be.trace( be.compose( be.tensor( g, iu ), f ), k ) },
				{ be.compose( be.trace( f, k ), h ), be.trace( be.compose( f, be.tensor( h, iu ) ), k ) } };
		} ) );

	// Tr^U((B (x) u) f) = Tr^V(f (A (x) u)), f : A (x) V -> B (x) U, u : U -> V
	out.push_back( run_law(
		"dinaturality", n, seed, w,
		[]( Rng &rng ) {
			const Wires a = random_wires( rng, 1, 2 ), b = random_wires( rng, 1, 2 ), u = random_wires( rng, 1, 2 ),
						v = random_wires( rng, 1, 2 );
			return Sample{ { random_rel( rng, cat( b, u ), cat( a, v ) ), random_rel( rng, v, u ), prim::id( a ),
							   prim::id( b ) },
				{ u.size(), v.size() }, {} };
		},
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			const auto f = be.lift( s.rels[ 0 ] ), u = be.lift( s.rels[ 1 ] ), ia = be.lift( s.rels[ 2 ] ),
					   ib = be.lift( s.rels[ 3 ] );
			return Sides< Be >{ { be.trace( be.compose( be.tensor( ib, u ), f ), s.ints[ 1 ] ),
				be.trace( be.compose( f, be.tensor( ia, u ) ), s.ints[ 0 ] ) } };
		} ) );

	// Tr^U(g (x) f) = g (x) Tr^U(f)
	out.push_back( run_law(
		"superposing", n, seed, w,
		[]( Rng &rng ) {
			const Wires a = random_wires( rng, 1, 2 ), b = random_wires( rng, 1, 2 ), c = random_wires( rng, 1, 2 ),
						d = random_wires( rng, 1, 2 ), u = random_wires( rng, 1, 2 );
			return Sample{ { random_rel( rng, d, c ), random_rel( rng, cat( b, u ), cat( a, u ) ) }, { u.size() }, {} };
		},
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			const auto g = be.lift( s.rels[ 0 ] ), f = be.lift( s.rels[ 1 ] );
			const std::size_t k = s.ints[ 0 ];
			return Sides< Be >{ { be.trace( be.tensor( g, f ), k ), be.tensor( g, be.trace( f, k ) ) } };
		} ) );

	// (W (x) !) (f (x) 0) (V (x) r) = f, for (r_alpha, !_alpha) on U and (r, !) on 1
	for( const bool on_u : { true, false } ) {
		out.push_back( run_law(
			on_u ? "retraction axiom (r_alpha, !_alpha)" : "retraction axiom (r, !)", n, seed, w,
			[ on_u ]( Rng &rng ) {
				const Wires v = random_wires( rng, 0, 2 ), wv = random_wires( rng, 0, 2 );
				const Wires x{ on_u ? WireType::U : WireType::One };
				const BlockRel r = on_u ? prim::r_alpha() : prim::r_one();
				const BlockRel b = on_u ? prim::bang_alpha() : prim::bang_one();
				return Sample{ { random_rel( rng, cat( wv, x ), cat( v, x ) ),
								   tensor( prim::id( v ), r ), tensor( prim::id( wv ), b ),
								   prim::zero( prim::kOne, prim::kOne ) },
					{}, {} };
			},
			[]( const auto &be, const Sample &s ) {
				using Be = std::decay_t< decltype( be ) >;
				const auto f = be.lift( s.rels[ 0 ] );
				const auto lhs = be.compose(
					be.lift( s.rels[ 2 ] ), be.compose( be.tensor( f, be.lift( s.rels[ 3 ] ) ), be.lift( s.rels[ 1 ] ) ) );
				return Sides< Be >{ { lhs, f } };
			} ) );
	}

	// Retraction axiom along the leafwise retraction of a random formula shape.
	out.push_back( run_law(
		"retraction axiom (r_A, !_A)", n, seed, w,
		[]( Rng &rng ) {
			const Formula a = random_formula( rng, rng() % 2 ? Polarity::Positive : Polarity::Negative, 3 );
			const auto [ r, b ] = retraction_rA( a );
			const std::size_t m = r.cols();
			const Wires v = random_wires( rng, 0, 2 ), wv = random_wires( rng, 0, 2 ), um( m, WireType::U );
			return Sample{ { random_rel( rng, cat( wv, um ), cat( v, um ) ), tensor( prim::id( v ), r ),
							   tensor( prim::id( wv ), b ), prim::zero( Wires( m, WireType::One ), Wires( m, WireType::One ) ) },
				{}, {} };
		},
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			const auto f = be.lift( s.rels[ 0 ] );
			const auto lhs = be.compose(
				be.lift( s.rels[ 2 ] ), be.compose( be.tensor( f, be.lift( s.rels[ 3 ] ) ), be.lift( s.rels[ 1 ] ) ) );
			return Sides< Be >{ { lhs, f } };
		} ) );

	/*
	 * Lifting square for r_A / !_A over random formula shapes, with p the
	 * multipoint restricted to the InAU leaves and (r^m, !^m) the m-fold
	 * copy/merge on 1^m.
	 */
	out.push_back( run_law(
		"lifting", n, seed, w,
		[]( Rng &rng ) {
			const Formula a = random_formula( rng, rng() % 2 ? Polarity::Positive : Polarity::Negative, 3 );
			const ShapeInfo sh = shape( a );
			const auto [ r, b ] = retraction_rA( a );
			const auto au = sh.au_leaves();
			const std::size_t m = au.size();
			const Wires um( m, WireType::U ), om( m, WireType::One );
			BlockRel p( um, om );
			for( std::size_t i = 0; i < m; ++i ) {
				p.set( i, *sh.leaves[ au[ i ] ].one, Entry::Point );
			}
			BlockRel rm( cat( om, om ), om );
			for( std::size_t k = 0; k < m; ++k ) {
				rm.set( k, k, Entry::Id );
				rm.set( m + k, k, Entry::Id );
			}
			return Sample{ { p, r, b, rm, converse( rm ), prim::id( um ), prim::id( om ) }, {}, {} };
		},
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			const auto p = be.lift( s.rels[ 0 ] ), r = be.lift( s.rels[ 1 ] ), b = be.lift( s.rels[ 2 ] ),
					   rm = be.lift( s.rels[ 3 ] ), bm = be.lift( s.rels[ 4 ] ), iu = be.lift( s.rels[ 5 ] ),
					   io = be.lift( s.rels[ 6 ] );
			const auto p1 = be.tensor( p, io );
			return Sides< Be >{ { be.compose( b, r ), iu }, { be.compose( bm, rm ), io },
				{ be.compose( r, p ), be.compose( p1, rm ) }, { be.compose( b, p1 ), be.compose( p, bm ) } };
		} ) );

	// Tr(f (X (x) 0)) = rho_1 f iota_1 = Tr((X (x) 0) f), f : X (x) U -> X (x) U
	out.push_back( run_law(
		"zero trace", n, seed, w,
		[]( Rng &rng ) {
			const Wires x = random_wires( rng, 1, 3 );
			const Wires xu = cat( x, prim::kU );
			const std::vector< Wires > parts{ x, prim::kU };
			return Sample{ { random_rel( rng, xu, xu ), tensor( prim::id( x ), prim::zero( prim::kU, prim::kU ) ),
							   prim::quasi_inj( parts, 0 ), prim::quasi_proj( parts, 0 ) },
				{}, {} };
		},
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			const auto f = be.lift( s.rels[ 0 ] ), x0 = be.lift( s.rels[ 1 ] ), inj = be.lift( s.rels[ 2 ] ),
					   proj = be.lift( s.rels[ 3 ] );
			const auto mid = be.compose( proj, be.compose( f, inj ) );
			return Sides< Be >{ { be.trace( be.compose( f, x0 ), 1 ), mid },
				{ be.trace( be.compose( x0, f ), 1 ), mid } };
		} ) );

	out.push_back( run_law(
		"star is closure", n, seed, w,
		[]( Rng &rng ) {
			const Wires x = random_wires( rng, 1, 5 );
			return Sample{ { random_rel( rng, x, x, 0.3 ) }, {}, {} };
		},
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			const auto f = be.star( be.lift( s.rels[ 0 ] ) );
			return Sides< Be >{ { f, f } };
		} ) );

	// One random operation on a random window of size >= 2.
	out.push_back( run_law(
		"algebra soundness", n, seed, w,
		[]( Rng &rng ) {
			std::uniform_int_distribution< std::uint64_t > size( 2, 16 );
			Window win;
			win.size = size( rng );
			win.n_alpha = rng() % win.size;
			const std::size_t op = rng() % 5;
			const Wires a = random_wires( rng, 1, 3 ), b = random_wires( rng, 1, 3 ), c = random_wires( rng, 1, 3 );
			Sample s{ {}, { op }, win };
			switch( op ) {
			case 0: s.rels = { random_rel( rng, b, a ), random_rel( rng, c, b ) }; break;
			case 1: s.rels = { random_rel( rng, b, a ), random_rel( rng, c, a ) }; break;
			case 2: s.rels = { random_rel( rng, b, a ), random_rel( rng, b, a ) }; break;
			case 3: s.rels = { random_rel( rng, a, a ) }; break;
			default:
				s.rels = { random_rel( rng, cat( b, c ), cat( a, c ) ) };
				s.ints.push_back( c.size() );
				break;
			}
			return s;
		},
		[]( const auto &be, const Sample &s ) {
			using Be = std::decay_t< decltype( be ) >;
			typename Be::Rel r = be.lift( s.rels[ 0 ] );
			switch( s.ints[ 0 ] ) {
			case 0: r = be.compose( be.lift( s.rels[ 1 ] ), r ); break;
			case 1: r = be.tensor( r, be.lift( s.rels[ 1 ] ) ); break;
			case 2: r = be.join( r, be.lift( s.rels[ 1 ] ) ); break;
			case 3: r = be.star( r ); break;
			default: r = be.trace( r, s.ints[ 1 ] ); break;
			}
			return Sides< Be >{ { r, r } };
		} ) );

	return out;
}

// ---------------------------------------------------------------------------
// Int(Rel) laws

namespace ir = mllp::intrel;

/// Token-path reference for int_compose: BFS through the glued graph.
inline ir::IntMor compose_by_paths( const ir::IntMor &s, const ir::IntMor &r ) {
	// node ids: A+ | A- | B+ | B- | C+ | C-
	const std::size_t ap = r.source.plus.size(), am = r.source.minus.size(), bp = r.target.plus.size(),
					  bm = r.target.minus.size(), cp = s.target.plus.size(), cm = s.target.minus.size();
	const std::size_t o_am = ap, o_bp = o_am + am, o_bm = o_bp + bp, o_cp = o_bm + bm, o_cm = o_cp + cp,
					  total = o_cm + cm;
	std::vector< std::vector< std::size_t > > adj( total );
	auto edges = [ & ]( const ir::FinRel &f, std::size_t od, std::size_t oc ) {
		for( std::size_t d = 0; d < f.dom().size(); ++d ) {
			for( std::size_t c = 0; c < f.cod().size(); ++c ) {
				if( f.has( d, c ) ) {
					adj[ od + d ].push_back( oc + c );
				}
			}
		}
	};
	edges( r.r11, 0, o_am );
	edges( r.r12, 0, o_bp );
	edges( r.r21, o_bm, o_am );
	edges( r.r22, o_bm, o_bp );
	edges( s.r11, o_bp, o_bm );
	edges( s.r12, o_bp, o_cp );
	edges( s.r21, o_cm, o_bm );
	edges( s.r22, o_cm, o_cp );
	ir::IntMor out = ir::IntMor::empty( r.source, s.target );
	auto reach = [ & ]( std::size_t from, std::size_t row, bool from_a ) {
		std::vector< bool > seen( total, false );
		std::vector< std::size_t > todo{ from };
		seen[ from ] = true;
		while( !todo.empty() ) {
			const std::size_t v = todo.back();
			todo.pop_back();
			for( auto y : adj[ v ] ) {
				if( !seen[ y ] ) {
					seen[ y ] = true;
					todo.push_back( y );
				}
			}
		}
		for( std::size_t k = 0; k < am; ++k ) {
			if( seen[ o_am + k ] ) {
				( from_a ? out.r11 : out.r21 ).add( row, k );
			}
		}
		for( std::size_t k = 0; k < cp; ++k ) {
			if( seen[ o_cp + k ] ) {
				( from_a ? out.r12 : out.r22 ).add( row, k );
			}
		}
	};
	for( std::size_t k = 0; k < ap; ++k ) {
		reach( k, k, true );
	}
	for( std::size_t k = 0; k < cm; ++k ) {
		reach( o_cm + k, k, false );
	}
	return out;
}

inline ir::IntMor random_neg( Rng &rng, const ir::MPObj &a, const ir::MPObj &b, bool &ok ) {
	auto p = ir::random_pos( rng, ir::dual( b ), ir::dual( a ) );
	ok = p.has_value();
	return ok ? ir::dual( *p ) : ir::IntMor::empty( a, b );
}

inline void expect( LawResult &res, bool cond, const std::string &why ) {
	++res.cases;
	if( !cond ) {
		res.fail( why );
	}
}

inline std::vector< LawResult > intrel_laws( std::uint64_t seed, std::size_t samples = 500 ) {
	std::vector< LawResult > out;
	Rng rng( seed );
	const auto plain2 = ir::small_objects( 2, false );
	const auto plain1 = ir::small_objects( 1, false );
	const auto mp1 = ir::small_objects( 1, true );

	{
		LawResult res( "identity laws (carriers <= 2, exhaustive)" );
		for( const auto &a : plain2 ) {
			for( const auto &b : plain2 ) {
				const auto ia = ir::IntMor::identity( a ), ib = ir::IntMor::identity( b );
				ir::for_each_mor( a, b, [ & ]( const ir::IntMor &r ) {
					expect( res, ir::int_compose( r, ia ) == r && ir::int_compose( ib, r ) == r, "identity not neutral" );
				} );
			}
		}
		out.push_back( res );
	}
	{
		LawResult res( "associativity" );
		// every triple on carriers <= 1
		for( const auto &a : plain1 ) {
			for( const auto &b : plain1 ) {
				for( const auto &c : plain1 ) {
					for( const auto &d : plain1 ) {
						std::vector< ir::IntMor > rs, ss, ts;
						ir::for_each_mor( a, b, [ & ]( const ir::IntMor &x ) { rs.push_back( x ); } );
						ir::for_each_mor( b, c, [ & ]( const ir::IntMor &x ) { ss.push_back( x ); } );
						ir::for_each_mor( c, d, [ & ]( const ir::IntMor &x ) { ts.push_back( x ); } );
						for( const auto &r : rs ) {
							for( const auto &s : ss ) {
								const auto sr = ir::int_compose( s, r );
								for( const auto &t : ts ) {
									expect( res,
										ir::int_compose( t, sr ) == ir::int_compose( ir::int_compose( t, s ), r ),
										"associativity fails on singleton carriers" );
								}
							}
						}
					}
				}
			}
		}
		// every middle map on carriers <= 2, random outer maps
		for( const auto &b : plain2 ) {
			for( const auto &c : plain2 ) {
				ir::for_each_mor( b, c, [ & ]( const ir::IntMor &s ) {
					if( rng() % 16 != 0 ) {
						return;
					}
					const auto a = ir::random_object( rng, 2 ), d = ir::random_object( rng, 2 );
					const auto r = ir::random_mor( rng, a, b ), t = ir::random_mor( rng, c, d );
					expect( res, ir::int_compose( t, ir::int_compose( s, r ) ) ==
							ir::int_compose( ir::int_compose( t, s ), r ),
						"associativity fails on two-element carriers" );
				} );
			}
		}
		for( std::size_t n = 0; n < samples; ++n ) {
			const auto a = ir::random_object( rng, 3 ), b = ir::random_object( rng, 3 ), c = ir::random_object( rng, 3 ),
					   d = ir::random_object( rng, 3 );
			const auto r = ir::random_mor( rng, a, b ), s = ir::random_mor( rng, b, c ), t = ir::random_mor( rng, c, d );
			expect( res, ir::int_compose( t, ir::int_compose( s, r ) ) == ir::int_compose( ir::int_compose( t, s ), r ),
				"associativity fails on sampled maps" );
		}
		out.push_back( res );
	}
	{
		LawResult res( "composition equals token paths" );
		for( std::size_t n = 0; n < samples; ++n ) {
			const auto a = ir::random_object( rng, 3 ), b = ir::random_object( rng, 3 ), c = ir::random_object( rng, 3 );
			const auto r = ir::random_mor( rng, a, b, 0.5 ), s = ir::random_mor( rng, b, c, 0.5 );
			expect( res, ir::int_compose( s, r ) == compose_by_paths( s, r ), "closure differs from path search" );
		}
		out.push_back( res );
	}
	{
		LawResult res( "duality" );
		for( const auto &a : mp1 ) {
			for( const auto &b : mp1 ) {
				ir::for_each_mor( a, b, [ & ]( const ir::IntMor &r ) {
					const auto d = ir::dual( r );
					expect( res, ir::dual( d ) == r, "dual is not involutive" );
					expect( res, ir::is_pos( r ) == ir::is_neg( d ), "Pos/Neg not swapped by dual" );
					expect( res, ir::is_neg( r ) == ir::is_pos( d ), "Neg/Pos not swapped by dual" );
				} );
			}
		}
		for( const auto &a0 : plain2 ) {
			for( const auto &b0 : plain2 ) {
				ir::for_each_mor( a0, b0, [ & ]( ir::IntMor r ) {
					if( rng() % 4 != 0 ) {
						return;
					}
					for( auto *sub : { &r.source.mp_plus, &r.source.mp_minus, &r.target.mp_plus, &r.target.mp_minus } ) {
						for( std::size_t k = 0; k < sub->size(); ++k ) {
							( *sub )[ k ] = rng() % 2;
						}
					}
					expect( res, ir::is_pos( r ) == ir::is_neg( ir::dual( r ) ), "Pos/Neg not swapped by dual" );
				} );
			}
		}
		for( std::size_t n = 0; n < samples; ++n ) {
			const auto a = ir::random_object( rng, 3 ), b = ir::random_object( rng, 3 ), c = ir::random_object( rng, 3 );
			const auto r = ir::random_mor( rng, a, b ), s = ir::random_mor( rng, b, c );
			expect( res, ir::dual( ir::int_compose( s, r ) ) == ir::int_compose( ir::dual( r ), ir::dual( s ) ),
				"dual is not contravariant" );
			expect( res, ir::dual( ir::IntMor::identity( a ) ) == ir::IntMor::identity( ir::dual( a ) ),
				"dual does not preserve identities" );
		}
		out.push_back( res );
	}
	{
		LawResult pos( "Pos closed under composition" ), neg( "Neg closed under composition" );
		while( pos.cases < samples ) {
			const auto a = ir::random_object( rng, 3 ), b = ir::random_object( rng, 3 ), c = ir::random_object( rng, 3 );
			const auto r = ir::random_pos( rng, a, b ), s = ir::random_pos( rng, b, c );
			if( !r || !s ) {
				continue;
			}
			expect( pos, ir::is_pos( *r ) && ir::is_pos( *s ) && ir::is_pos( ir::int_compose( *s, *r ) ),
				"composite of positive maps is not positive" );
		}
		while( neg.cases < samples ) {
			const auto a = ir::random_object( rng, 3 ), b = ir::random_object( rng, 3 ), c = ir::random_object( rng, 3 );
			bool ok1 = false, ok2 = false;
			const auto r = random_neg( rng, a, b, ok1 ), s = random_neg( rng, b, c, ok2 );
			if( !ok1 || !ok2 ) {
				continue;
			}
			expect( neg, ir::is_neg( r ) && ir::is_neg( s ) && ir::is_neg( ir::int_compose( s, r ) ),
				"composite of negative maps is not negative" );
		}
		out.push_back( pos );
		out.push_back( neg );
	}
	{
		LawResult res( "tensor preserves positivity" );
		while( res.cases < samples ) {
			const auto a = ir::random_object( rng, 2 ), b = ir::random_object( rng, 2 ), c = ir::random_object( rng, 2 ),
					   d = ir::random_object( rng, 2 );
			const auto r = ir::random_pos( rng, a, b ), s = ir::random_pos( rng, c, d );
			if( !r || !s ) {
				continue;
			}
			expect( res, ir::is_pos( ir::tensor( *r, *s ) ), "tensor of positive maps is not positive" );
		}
		out.push_back( res );
	}
	{
		LawResult res( "shift functors" );
		for( std::size_t n = 0; n < samples; ++n ) {
			const auto a = ir::random_object( rng, 3 ), b = ir::random_object( rng, 3 ), c = ir::random_object( rng, 3 );
			const auto r = ir::random_mor( rng, a, b ), s = ir::random_mor( rng, b, c );
			expect( res, ir::down_functor( ir::IntMor::identity( a ) ) == ir::IntMor::identity( ir::down_obj( a ) ),
				"down does not preserve identities" );
			expect( res,
				ir::down_functor( ir::int_compose( s, r ) ) ==
					ir::int_compose( ir::down_functor( s ), ir::down_functor( r ) ),
				"down does not preserve composition" );
			expect( res, ir::is_pos( ir::down_functor( r ) ), "down R is not positive" );
			expect( res, ir::is_neg( ir::up_functor( r ) ), "up R is not negative" );
		}
		out.push_back( res );
	}
	{
		LawResult res( "adjunction bijection (singleton carriers, exhaustive)" );
		for( const auto &a : mp1 ) {
			for( const auto &b : plain1 ) {
				std::set< std::vector< std::pair< std::string, std::string > > > images;
				std::size_t count = 0;
				ir::for_each_mor( a, b, [ & ]( const ir::IntMor &r ) {
					const auto t = ir::transpose_to_pos( r );
					++count;
					auto key = t.r11.pairs();
					for( const auto *blk : { &t.r12, &t.r21, &t.r22 } ) {
						for( auto &p : blk->pairs() ) {
							key.push_back( p );
						}
						key.emplace_back( "|", "|" );
					}
					images.insert( key );
					expect( res, ir::is_pos( t ), "transpose is not positive" );
					expect( res, ir::transpose_from_pos( t, b ) == r, "transpose does not round-trip" );
				} );
				std::size_t positives = 0;
				ir::for_each_mor( a, ir::down_obj( b ), [ & ]( const ir::IntMor &r ) {
					if( ir::is_pos( r ) ) {
						++positives;
						expect( res, ir::transpose_to_pos( ir::transpose_from_pos( r, b ) ) == r,
							"positive map is not a transpose" );
					}
				} );
				expect( res, images.size() == count && count == positives, "hom-set sizes differ" );
			}
		}
		out.push_back( res );
	}
	{
		LawResult res( "adjunction round trip and naturality" );
		for( std::size_t n = 0; n < samples; ++n ) {
			const auto a = ir::random_object( rng, 3 ), b = ir::random_object( rng, 3 ), c = ir::random_object( rng, 3 );
			const auto r = ir::random_mor( rng, a, b ), t = ir::random_mor( rng, b, c );
			const auto add = ir::transpose_to_pos( r );
			expect( res, ir::is_pos( add ), "transpose is not positive" );
			expect( res, ir::transpose_from_pos( add, b ) == r, "strip(add(R)) != R" );
			if( const auto q = ir::random_pos( rng, a, ir::down_obj( b ) ) ) {
				expect( res, ir::transpose_to_pos( ir::transpose_from_pos( *q, b ) ) == *q, "add(strip(R')) != R'" );
			}
			expect( res, ir::transpose_to_pos( ir::int_compose( t, r ) ) == ir::int_compose( ir::down_functor( t ), add ),
				"transpose is not natural in the target" );
			const auto a0 = ir::random_object( rng, 3 );
			if( const auto p = ir::random_pos( rng, a0, a ) ) {
				expect( res, ir::transpose_to_pos( ir::int_compose( r, *p ) ) == ir::int_compose( add, *p ),
					"transpose is not natural in the source" );
			}
			const auto neg = ir::transpose_to_neg( r );
			expect( res, ir::is_neg( neg ), "neg transpose is not negative" );
		}
		out.push_back( res );
	}
	{
		LawResult res( "positive but not negative witness" );
		const auto w = ir::find_pos_not_neg( 1 );
		expect( res, w && ir::is_pos( *w ) && !ir::is_neg( *w ), "no witness found" );
		out.push_back( res );
	}
	return out;
}

} // namespace mllp::laws

#endif // MLLP_LAWS_HPP
