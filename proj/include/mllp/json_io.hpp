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

#ifndef MLLP_JSON_IO_HPP
#define MLLP_JSON_IO_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutelim.hpp"
#include "exec.hpp"
#include "goi.hpp"
#include "intrel.hpp"
#include "laws.hpp"
#include "relcore.hpp"

namespace mllp {

using json = nlohmann::json;

class SchemaError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// BlockRel: {"dom":["U","1"],"cod":[...],"entries":[["0","p","1"],...]}

inline json wires_json( const Wires &w ) {
	json a = json::array();
	for( auto t : w ) {
		a.push_back( wire_name( t ) );
	}
	return a;
}

inline Wires wires_from_json( const json &j ) {
	Wires w;
	for( const auto &x : j ) {
		const std::string s = x.get< std::string >();
		if( s == "U" ) {
			w.push_back( WireType::U );
		} else if( s == "1" ) {
			w.push_back( WireType::One );
		} else {
			throw SchemaError( "unknown wire type '" + s + "'" );
		}
	}
	return w;
}

inline json to_json( const BlockRel &f ) {
	json rows = json::array();
	for( std::size_t i = 0; i < f.rows(); ++i ) {
		json row = json::array();
		for( std::size_t j = 0; j < f.cols(); ++j ) {
			row.push_back( std::string( 1, entry_char( f.at( i, j ) ) ) );
		}
		rows.push_back( row );
	}
	return json{ { "dom", wires_json( f.dom() ) }, { "cod", wires_json( f.cod() ) }, { "entries", rows } };
}

inline BlockRel blockrel_from_json( const json &j ) {
	try {
		BlockRel f( wires_from_json( j.at( "cod" ) ), wires_from_json( j.at( "dom" ) ) );
		const json &rows = j.at( "entries" );
		if( rows.size() != f.rows() ) {
			throw SchemaError( "entries: wrong number of rows" );
		}
		for( std::size_t i = 0; i < f.rows(); ++i ) {
			if( rows[ i ].size() != f.cols() ) {
				throw SchemaError( "entries: wrong row length" );
			}
			for( std::size_t k = 0; k < f.cols(); ++k ) {
				const std::string s = rows[ i ][ k ].get< std::string >();
				if( s == "0" ) {
					f.set( i, k, Entry::Zero );
				} else if( s == "p" ) {
					f.set( i, k, Entry::Point );
				} else if( s == "1" ) {
					f.set( i, k, Entry::Id );
				} else {
					throw SchemaError( "unknown entry '" + s + "'" );
				}
			}
		}
		return f;
	} catch( const json::exception &e ) {
		throw SchemaError( std::string( "BlockRel: " ) + e.what() );
	}
}

// ---------------------------------------------------------------------------
// Two-layer denotations and reports

inline json to_json( const Layout &l ) {
	json occ = json::array();
	for( const auto &o : l.occ ) {
		occ.push_back( json{ { "tag", o.tag() }, { "formula", to_string( o.formula ) },
			{ "u", { o.u_begin, o.u_end() } }, { "one", { o.one_begin, o.one_end() } } } );
	}
	return json{ { "occurrences", occ }, { "u_labels", l.u_labels() }, { "one_labels", l.one_labels() },
		{ "gamma_count", l.gamma_count } };
}

inline json to_json( const InterpPair &ip ) {
	return json{ { "upper", to_json( ip.upper ) }, { "lower", to_json( ip.lower ) }, { "layout", to_json( ip.layout ) } };
}

inline json to_json( const ExPair &e ) {
	return json{ { "upper", to_json( e.upper ) }, { "lower", to_json( e.lower ) } };
}

inline json to_json( const Mismatch &m ) {
	return json{ { "layer", m.layer }, { "row", m.row }, { "col", m.col },
		{ "expected", std::string( 1, entry_char( m.expected ) ) },
		{ "actual", std::string( 1, entry_char( m.actual ) ) } };
}

inline json to_json( const InvarianceReport &r ) {
	json j{ { "ok", r.ok }, { "steps", r.steps }, { "redexes", r.redexes }, { "normal_form", to_string( r.normal_form ) } };
	if( r.failed_step ) {
		j[ "failed_step" ] = *r.failed_step;
	}
	if( r.mismatch ) {
		j[ "mismatch" ] = to_json( *r.mismatch );
	}
	if( !r.error.empty() ) {
		j[ "error" ] = r.error;
	}
	return j;
}

inline json to_json( const FocusReport &r ) {
	json w = json::array();
	for( const auto &m : r.witnesses ) {
		w.push_back( to_json( m ) );
	}
	return json{ { "commutes", r.commutes }, { "nontrivial", r.nontrivial }, { "range_ok", r.range_ok },
		{ "lhs", to_json( r.lhs ) }, { "rhs", to_json( r.rhs ) }, { "witnesses", w } };
}

inline json to_json( const ConverseReport &r ) {
	json v = json::array();
	for( const auto &x : r.violations ) {
		v.push_back( json{ { "proof", to_string( x.proof ) }, { "position", x.position } } );
	}
	return json{ { "ok", r.ok() }, { "proofs_scanned", r.proofs_scanned }, { "squares_checked", r.squares_checked },
		{ "trivial", r.trivial }, { "non_commuting", r.non_commuting }, { "violations", v } };
}

inline json to_json( const laws::LawResult &r ) {
	json j{ { "name", r.name }, { "ok", r.ok() }, { "cases", r.cases }, { "failures", r.failures } };
	if( !r.first_failure.empty() ) {
		j[ "first_failure" ] = r.first_failure;
	}
	if( !r.note.empty() ) {
		j[ "note" ] = r.note;
	}
	return j;
}

inline json to_json( const TraceEntry &t, std::size_t step ) {
	return json{ { "step", step }, { "redex", redex_name( t.redex.kind ) }, { "at", path_to_string( t.redex.path ) },
		{ "describe", t.redex.describe() }, { "proof", to_string( t.after ) } };
}

// ---------------------------------------------------------------------------
// Int(Rel): {"dom":[labels],"cod":[labels],"pairs":[[d,c],...]} and
// {"source":obj,"target":obj,"R11":rel,"R12":rel,"R21":rel,"R22":rel}

namespace intrel {

inline json to_json( const FinRel &r ) {
	json pairs = json::array();
	for( const auto &[ d, c ] : r.pairs() ) {
		pairs.push_back( { d, c } );
	}
	return json{ { "dom", r.dom() }, { "cod", r.cod() }, { "pairs", pairs } };
}

inline std::size_t index_of( const Labels &ls, const std::string &x ) {
	const auto it = std::find( ls.begin(), ls.end(), x );
	if( it == ls.end() ) {
		throw SchemaError( "unknown element '" + x + "'" );
	}
	return static_cast< std::size_t >( it - ls.begin() );
}

inline FinRel finrel_from_json( const json &j ) {
	try {
		FinRel r( j.at( "dom" ).get< Labels >(), j.at( "cod" ).get< Labels >() );
		for( const auto &p : j.at( "pairs" ) ) {
			r.add( index_of( r.dom(), p.at( 0 ).get< std::string >() ), index_of( r.cod(), p.at( 1 ).get< std::string >() ) );
		}
		return r;
	} catch( const json::exception &e ) {
		throw SchemaError( std::string( "FinRel: " ) + e.what() );
	}
}

inline Labels subset_labels( const Labels &ls, const Subset &s ) {
	Labels out;
	for( std::size_t k = 0; k < ls.size(); ++k ) {
		if( s[ k ] ) {
			out.push_back( ls[ k ] );
		}
	}
	return out;
}

inline json to_json( const MPObj &o ) {
	return json{ { "plus", o.plus }, { "minus", o.minus }, { "mp_plus", subset_labels( o.plus, o.mp_plus ) },
		{ "mp_minus", subset_labels( o.minus, o.mp_minus ) } };
}

inline MPObj mpobj_from_json( const json &j ) {
	try {
		MPObj o = MPObj::make( j.at( "plus" ).get< Labels >(), j.at( "minus" ).get< Labels >() );
		for( const auto &x : j.value( "mp_plus", json::array() ) ) {
			o.mp_plus[ index_of( o.plus, x.get< std::string >() ) ] = true;
		}
		for( const auto &x : j.value( "mp_minus", json::array() ) ) {
			o.mp_minus[ index_of( o.minus, x.get< std::string >() ) ] = true;
		}
		return o;
	} catch( const json::exception &e ) {
		throw SchemaError( std::string( "MPObj: " ) + e.what() );
	}
}

inline json to_json( const IntMor &r ) {
	return json{ { "source", to_json( r.source ) }, { "target", to_json( r.target ) }, { "R11", to_json( r.r11 ) },
		{ "R12", to_json( r.r12 ) }, { "R21", to_json( r.r21 ) }, { "R22", to_json( r.r22 ) } };
}

/// Blocks may be given as bare pair lists; carriers then come from the objects.
inline IntMor intmor_from_json( const json &j ) {
	try {
		IntMor r = IntMor::empty( mpobj_from_json( j.at( "source" ) ), mpobj_from_json( j.at( "target" ) ) );
		auto fill = [ & ]( FinRel &blk, const char *name ) {
			if( !j.contains( name ) ) {
				return;
			}
			const json &b = j.at( name );
			const json &pairs = b.is_array() ? b : b.at( "pairs" );
			for( const auto &p : pairs ) {
				blk.add( index_of( blk.dom(), p.at( 0 ).get< std::string >() ),
					index_of( blk.cod(), p.at( 1 ).get< std::string >() ) );
			}
		};
		fill( r.r11, "R11" );
		fill( r.r12, "R12" );
		fill( r.r21, "R21" );
		fill( r.r22, "R22" );
		return r;
	} catch( const json::exception &e ) {
		throw SchemaError( std::string( "IntMor: " ) + e.what() );
	}
}

} // namespace intrel

} // namespace mllp

#endif // MLLP_JSON_IO_HPP
