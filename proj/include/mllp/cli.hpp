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

#ifndef MLLP_CLI_HPP
#define MLLP_CLI_HPP

/*
 * Command-line front end. Kept in a header so the tests can drive it
 * in-process with string streams.
 */

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutelim.hpp"
#include "exec.hpp"
#include "intrel.hpp"
#include "json_io.hpp"
#include "laws.hpp"
#include "proof.hpp"
#include "suites.hpp"

namespace mllp::cli {

enum class Output { Pretty, Json };

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Parse failure located as file:line:col.
class FileParseError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

struct RunConfig {
	Mode mode = Mode::Rel;
	Window window{};
	std::size_t max_size = 6;
	std::uint64_t seed = 1;
	std::size_t samples = 1000;
	Strategy strategy = Strategy::Leftmost;
	Output output = Output::Pretty;

	void validate() const {
		if( window.size < 2 || window.n_alpha >= window.size ) {
			throw UsageError( "n_alpha must be below the window size (and the window at least 2)" );
		}
	}
};

inline const std::map< std::string, Mode > kModes{ { "rel", Mode::Rel }, { "pinj", Mode::PInjDegenerate } };
inline const std::map< std::string, Strategy > kStrategies{ { "leftmost", Strategy::Leftmost },
	{ "innermost", Strategy::Innermost } };

inline std::string trim( const std::string &s ) {
	const auto b = s.find_first_not_of( " \t\r\n" );
	if( b == std::string::npos ) {
		return "";
	}
	return s.substr( b, s.find_last_not_of( " \t\r\n" ) - b + 1 );
}

/// Applies one key=value setting; unknown keys are an error.
inline void apply_setting( RunConfig &c, const std::string &key, const std::string &value ) {
	try {
		if( key == "mode" ) {
			c.mode = kModes.at( value );
		} else if( key == "window" ) {
			c.window.size = std::stoull( value );
		} else if( key == "n_alpha" ) {
			c.window.n_alpha = std::stoull( value );
		} else if( key == "max_size" ) {
			c.max_size = std::stoul( value );
		} else if( key == "seed" ) {
			c.seed = std::stoull( value );
		} else if( key == "samples" ) {
			c.samples = std::stoul( value );
		} else if( key == "strategy" ) {
			c.strategy = kStrategies.at( value );
		} else if( key == "output" ) {
			if( value != "json" && value != "pretty" ) {
				throw std::out_of_range( value );
			}
			c.output = value == "json" ? Output::Json : Output::Pretty;
		} else {
			throw UsageError( "unknown config key '" + key + "'" );
		}
	} catch( const std::logic_error &e ) {
		if( dynamic_cast< const UsageError * >( &e ) ) {
			throw;
		}
		throw UsageError( "bad value '" + value + "' for config key '" + key + "'" );
	}
}

/// key=value lines; '#' starts a comment.
inline RunConfig parse_config( std::istream &in, RunConfig c = {} ) {
	std::string line;
	std::size_t lineno = 0;
	while( std::getline( in, line ) ) {
		++lineno;
		line = trim( line.substr( 0, line.find( '#' ) ) );
		if( line.empty() ) {
			continue;
		}
		const auto eq = line.find( '=' );
		if( eq == std::string::npos ) {
			throw UsageError( "config line " + std::to_string( lineno ) + ": expected key=value" );
		}
		apply_setting( c, trim( line.substr( 0, eq ) ), trim( line.substr( eq + 1 ) ) );
	}
	return c;
}

inline RunConfig config_from_env() {
	const char *path = std::getenv( "MLLP_GOI_CONFIG" );
	if( !path || !*path ) {
		return {};
	}
	std::ifstream in( path );
	if( !in ) {
		throw UsageError( std::string( "cannot read config file " ) + path );
	}
	return parse_config( in );
}

inline std::string read_file( const std::string &path ) {
	std::ifstream in( path, std::ios::binary );
	if( !in ) {
		throw std::runtime_error( "cannot open " + path );
	}
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

/// "line:col" of a byte offset.
inline std::string line_col( const std::string &text, std::size_t pos ) {
	std::size_t line = 1, col = 1;
	for( std::size_t k = 0; k < pos && k < text.size(); ++k ) {
		if( text[ k ] == '\n' ) {
			++line;
			col = 1;
		} else {
			++col;
		}
	}
	return std::to_string( line ) + ":" + std::to_string( col );
}

inline bool blank_source( const std::string &text ) {
	std::istringstream in( text );
	std::string line;
	while( std::getline( in, line ) ) {
		if( !trim( line.substr( 0, line.find( '#' ) ) ).empty() ) {
			return false;
		}
	}
	return true;
}

/// Reads, parses and checks a proof file. Parse errors carry line:col.
inline Proof load_proof( const std::string &path ) {
	const std::string text = read_file( path );
	if( blank_source( text ) ) {
		throw UsageError( path + ": empty proof file" );
	}
	try {
		Proof p = parse_proof( text );
		check( p );
		return p;
	} catch( const ParseError &e ) {
		std::string msg = e.what();
		msg = msg.substr( 0, msg.find( " at offset " ) );
		throw FileParseError( path + ":" + line_col( text, e.position() ) + ": " + msg );
	}
}

// ---------------------------------------------------------------------------
// Pretty printing

/// Rows carry "[i] label"; columns are headed by index only, in the same order.
inline void print_matrix( std::ostream &os, const BlockRel &m, const std::vector< std::string > &rows,
	const std::vector< std::string > &cols ) {
	std::size_t w = 1;
	for( const auto &s : rows ) {
		w = std::max( w, s.size() );
	}
	const int cw = static_cast< int >( std::to_string( std::max< std::size_t >( cols.size(), 1 ) - 1 ).size() );
	const int iw = static_cast< int >( std::to_string( std::max< std::size_t >( m.rows(), 1 ) - 1 ).size() );
	const std::size_t lead = static_cast< std::size_t >( iw ) + 3 + w;
	os << std::string( lead, ' ' );
	for( std::size_t j = 0; j < m.cols(); ++j ) {
		os << " " << std::setw( cw ) << j;
	}
	os << "\n";
	for( std::size_t i = 0; i < m.rows(); ++i ) {
		os << "[" << std::setw( iw ) << i << "] " << std::left << std::setw( static_cast< int >( w ) )
		   << ( i < rows.size() ? rows[ i ] : "?" ) << std::right;
		for( std::size_t j = 0; j < m.cols(); ++j ) {
			os << " " << std::setw( cw ) << entry_char( m.at( i, j ) );
		}
		os << "\n";
	}
}

inline std::vector< std::string > head( const std::vector< std::string > &v, std::size_t n ) {
	return std::vector< std::string >( v.begin(), v.begin() + static_cast< std::ptrdiff_t >( std::min( n, v.size() ) ) );
}

inline void print_result( std::ostream &os, const laws::LawResult &r ) {
	os << ( r.ok() ? "ok   " : "FAIL " ) << r.name << ": " << r.cases << " cases, " << r.failures << " failures";
	if( !r.note.empty() ) {
		os << " (" << r.note << ")";
	}
	os << "\n";
	if( !r.first_failure.empty() ) {
		os << "     first failure: " << r.first_failure << "\n";
	}
}

inline json folded_table( const BlockRel &upper, const Window &w ) {
	json t = json::object();
	if( upper.cols() == 0 ) {
		return t;
	}
	for( std::uint64_t tok = 0; tok < w.size; ++tok ) {
		t[ std::to_string( tok ) ] = fold_eval( upper, tok, w );
	}
	return t;
}

// ---------------------------------------------------------------------------
// Commands

struct Ctx {
	RunConfig cfg;
	std::ostream &out;
	std::ostream &err;
	bool json() const { return cfg.output == Output::Json; }
};

inline int cmd_check( Ctx &c, const std::string &file ) {
	const Proof p = load_proof( file );
	const Sequent &s = check( p );
	if( c.json() ) {
		c.out << json{ { "sequent", to_unicode( s ) }, { "rules", p.rule_count() }, { "cuts", cut_count( p ) },
						 { "focused", is_focused( s ) }, { "proof", to_string( p ) } }
					 .dump( 2 )
			  << "\n";
	} else {
		c.out << to_unicode( s ) << "\n";
		c.out << p.rule_count() << " rules, " << cut_count( p ) << " cuts" << ( is_focused( s ) ? ", focused" : "" )
			  << "\n";
	}
	return kOk;
}

inline int cmd_interp( Ctx &c, const std::string &file ) {
	const Proof p = load_proof( file );
	const InterpPair ip = interp( p, c.cfg.mode );
	if( c.json() ) {
		c.out << to_json( ip ).dump( 2 ) << "\n";
		return kOk;
	}
	c.out << to_unicode( check( p ) ) << "\nupper:\n";
	print_matrix( c.out, ip.upper, ip.layout.u_labels(), ip.layout.u_labels() );
	c.out << "lower:\n";
	print_matrix( c.out, ip.lower, ip.layout.one_labels(), ip.layout.one_labels() );
	return kOk;
}

inline int cmd_exec( Ctx &c, const std::string &file ) {
	const Proof p = load_proof( file );
	const InterpPair ip = interp( p, c.cfg.mode );
	const ExPair e = ex( ip );
	const auto ul = head( ip.layout.u_labels(), ip.layout.u_gamma );
	const auto ol = head( ip.layout.one_labels(), ip.layout.one_gamma );
	if( c.json() ) {
		c.out << json{ { "interp", to_json( ip ) }, { "ex", to_json( e ) }, { "u_labels", ul }, { "one_labels", ol },
						 { "folded", folded_table( e.upper, c.cfg.window ) } }
					 .dump( 2 )
			  << "\n";
		return kOk;
	}
	c.out << to_unicode( check( p ) ) << "\nEx upper:\n";
	print_matrix( c.out, e.upper, ul, ul );
	c.out << "Ex lower:\n";
	print_matrix( c.out, e.lower, ol, ol );
	if( e.upper.cols() != 0 ) {
		c.out << "folded (window " << c.cfg.window.size << ", n_alpha " << c.cfg.window.n_alpha << "):\n";
		for( std::uint64_t t = 0; t < c.cfg.window.size; ++t ) {
			c.out << "  " << t << " ->";
			for( auto v : fold_eval( e.upper, t, c.cfg.window ) ) {
				c.out << " " << v;
			}
			c.out << "\n";
		}
	}
	return kOk;
}

inline int cmd_normalize( Ctx &c, const std::string &file, bool trace ) {
	const Proof p = load_proof( file );
	std::size_t step = 0;
	const NormalizeResult r = normalize( p, c.cfg.strategy, 0, [ & ]( const TraceEntry &t ) {
		++step;
		if( !trace ) {
			return;
		}
		if( c.json() ) {
			c.out << to_json( t, step ).dump() << "\n";
		} else {
			c.out << step << ". " << t.redex.describe() << "\n   " << to_string( t.after ) << "\n";
		}
	} );
	if( c.json() ) {
		c.out << json{ { "normal_form", to_string( r.normal ) }, { "steps", step },
						 { "sequent", to_unicode( check( r.normal ) ) } }
					 .dump()
			  << "\n";
	} else {
		c.out << "normal form after " << step << " steps:\n" << to_string( r.normal ) << "\n"
			  << to_unicode( check( r.normal ) ) << "\n";
	}
	return kOk;
}

inline int report( Ctx &c, const std::vector< laws::LawResult > &rs ) {
	if( c.json() ) {
		json a = json::array();
		for( const auto &r : rs ) {
			a.push_back( to_json( r ) );
		}
		c.out << json{ { "ok", laws::all_ok( rs ) }, { "results", a } }.dump( 2 ) << "\n";
	} else {
		for( const auto &r : rs ) {
			print_result( c.out, r );
		}
	}
	return laws::all_ok( rs ) ? kOk : kFailed;
}

inline int verify_one( Ctx &c, const std::string &kind, const std::string &file ) {
	const Proof p = load_proof( file );
	if( kind == "invariance" ) {
		const InvarianceReport r = check_invariance( p, c.cfg.strategy, c.cfg.mode );
		if( c.json() ) {
			c.out << to_json( r ).dump( 2 ) << "\n";
		} else {
			c.out << ( r.ok ? "ok" : "FAIL" ) << ": " << r.steps << " steps";
			for( const auto &d : r.redexes ) {
				c.out << "\n  " << d;
			}
			c.out << "\nnormal form " << to_string( r.normal_form ) << "\n";
			if( !r.error.empty() ) {
				c.out << "error: " << r.error << "\n";
			}
		}
		return r.ok ? kOk : kFailed;
	}
	if( kind == "focus" ) {
		const FocusReport r = check_focus( p, c.cfg.mode );
		if( c.json() ) {
			c.out << to_json( r ).dump( 2 ) << "\n";
		} else {
			c.out << ( r.commutes ? "commutes" : "does not commute" ) << ( r.nontrivial ? " (nontrivial)" : " (trivial)" )
				  << ", range " << ( r.range_ok ? "ok" : "violated" ) << "\nlhs:\n"
				  << r.lhs.to_text() << "rhs:\n"
				  << r.rhs.to_text();
		}
		return r.commutes ? kOk : kFailed;
	}
	if( kind == "converse" ) {
		ConverseReport r;
		converse_scan_one( p, r, c.cfg.mode );
		if( c.json() ) {
			c.out << to_json( r ).dump( 2 ) << "\n";
		} else {
			c.out << r.squares_checked << " squares, " << r.trivial << " trivial, " << r.non_commuting
				  << " non-commuting, " << r.violations.size() << " violations\n";
		}
		return r.ok() ? kOk : kFailed;
	}
	throw UsageError( "verify kind '" + kind + "' takes no proof file" );
}

inline int cmd_verify( Ctx &c, const std::string &kind, const std::optional< std::string > &file ) {
	if( file ) {
		return verify_one( c, kind, *file );
	}
	const std::size_t n = c.cfg.max_size;
	if( kind == "invariance" ) {
		return report( c, { suites::invariance( n, c.cfg.strategy, c.cfg.mode ) } );
	}
	if( kind == "focus" ) {
		return report( c, { suites::focus( n, c.cfg.mode ) } );
	}
	if( kind == "converse" ) {
		return report( c, { suites::converse( n, c.cfg.mode ) } );
	}
	if( kind == "closure" ) {
		return report( c, { suites::closure( n, c.cfg.window, c.cfg.mode ) } );
	}
	if( kind == "codec" ) {
		return report( c, { suites::codec( n, c.cfg.window, c.cfg.mode ) } );
	}
	throw UsageError( "unknown verify kind '" + kind + "'" );
}

inline int cmd_laws( Ctx &c ) {
	auto rs = laws::relcore_laws( laws::SuiteConfig{ c.cfg.seed, c.cfg.samples, c.cfg.window } );
	for( auto &r : laws::intrel_laws( c.cfg.seed, std::max< std::size_t >( 1, c.cfg.samples / 2 ) ) ) {
		r.name = "intrel: " + r.name;
		rs.push_back( std::move( r ) );
	}
	return report( c, rs );
}

/// Small default demo: a multipointed source and a plain target.
inline const char *kDemoObject = R"({
  "source": {"plus": ["a"], "minus": ["b"], "mp_plus": ["a"], "mp_minus": ["b"]},
  "target": {"plus": ["c"], "minus": ["d"]},
  "R12": [["a", "c"]],
  "R21": [["d", "b"]]
})";

inline int cmd_intrel_demo( Ctx &c, const std::optional< std::string > &file ) {
	namespace ir = mllp::intrel;
	const json doc = json::parse( file ? read_file( *file ) : std::string( kDemoObject ) );
	const ir::IntMor r = ir::intmor_from_json( doc );
	const ir::MPObj &a = r.source;
	const ir::MPObj b = ir::MPObj::make( r.target.plus, r.target.minus );
	const ir::MPObj db = ir::down_obj( b );

	std::size_t homs = 0, positives = 0, round_trips = 0;
	bool injective = true;
	std::vector< ir::IntMor > images;
	ir::for_each_mor( a, b, [ & ]( const ir::IntMor &m ) {
		++homs;
		const ir::IntMor t = ir::transpose_to_pos( m );
		if( ir::is_pos( t ) && ir::transpose_from_pos( t, b ) == m ) {
			++round_trips;
		}
		if( std::find( images.begin(), images.end(), t ) != images.end() ) {
			injective = false;
		}
		images.push_back( t );
	} );
	ir::for_each_mor( a, db, [ & ]( const ir::IntMor &m ) { positives += ir::is_pos( m ); } );
	const bool ok = injective && round_trips == homs && homs == positives;
	const ir::IntMor t = ir::transpose_to_pos( ir::IntMor{ a, b, r.r11, r.r12, r.r21, r.r22 } );
	const auto witness = ir::find_pos_not_neg( 1 );

	if( c.json() ) {
		json j{ { "ok", ok }, { "int_homs", homs }, { "pos_homs", positives }, { "round_trips", round_trips },
			{ "injective", injective }, { "map", ir::to_json( r ) }, { "transpose", ir::to_json( t ) },
			{ "transpose_is_pos", ir::is_pos( t ) } };
		if( witness ) {
			j[ "pos_not_neg" ] = ir::to_json( *witness );
		}
		c.out << j.dump( 2 ) << "\n";
	} else {
		c.out << "Int(Rel)(A, B): " << homs << " maps\n"
			  << "Pos(A_mp, down B): " << positives << " maps\n"
			  << "transpose: " << round_trips << " round trips, " << ( injective ? "injective" : "NOT injective" )
			  << "\n"
			  << "bijection " << ( ok ? "holds" : "FAILS" ) << "\n"
			  << "transpose of the given map:\n"
			  << ir::to_json( t ).dump( 2 ) << "\n"
			  << "positive: " << ( ir::is_pos( t ) ? "yes" : "no" ) << "\n";
		if( witness ) {
			c.out << "positive, not negative:\n" << ir::to_json( *witness ).dump( 2 ) << "\n";
		}
	}
	return ok && ir::is_pos( t ) ? kOk : kFailed;
}

// ---------------------------------------------------------------------------

inline int run( int argc, const char *const *argv, std::ostream &out, std::ostream &err ) {
	CLI::App app{ "Geometry of interaction for multiplicative polarized linear logic" };
	app.require_subcommand( 1 );

	RunConfig cfg;
	try {
		cfg = config_from_env();
	} catch( const UsageError &e ) {
		err << "error: " << e.what() << "\n";
		return kUsage;
	}

	std::string mode, strategy;
	bool as_json = false, trace = false;
	std::uint64_t window = cfg.window.size, n_alpha = cfg.window.n_alpha;

	auto common = [ & ]( CLI::App *sub ) {
		sub->add_option( "--mode", mode, "rel | pinj" )->check( CLI::IsMember( { "rel", "pinj" } ) );
		sub->add_option( "--window", window, "window size N for the oracle and folded tokens" );
		sub->add_option( "--n-alpha", n_alpha, "distinguished point n_alpha" );
		sub->add_option( "--max-size", cfg.max_size, "largest enumerated proof (rule count)" );
		sub->add_option( "--seed", cfg.seed, "seed for sampled suites" );
		sub->add_option( "--strategy", strategy, "leftmost | innermost" )
			->check( CLI::IsMember( { "leftmost", "innermost" } ) );
		sub->add_flag( "--json", as_json, "emit JSON" );
	};

	std::string file, kind;
	std::optional< std::string > opt_file;

	auto *c_check = app.add_subcommand( "check", "check a proof file and print its sequent" );
	c_check->add_option( "file", file )->required();
	auto *c_interp = app.add_subcommand( "interp", "two-layer interpretation of a proof" );
	c_interp->add_option( "file", file )->required();
	auto *c_exec = app.add_subcommand( "exec", "execution formula of a proof" );
	c_exec->add_option( "file", file )->required();
	auto *c_norm = app.add_subcommand( "normalize", "cut elimination" );
	c_norm->add_option( "file", file )->required();
	c_norm->add_flag( "--trace", trace, "print every reduction step" );
	auto *c_verify = app.add_subcommand( "verify", "verification suites: invariance, focus, converse, closure, codec" );
	c_verify->add_option( "kind", kind )
		->required()
		->check( CLI::IsMember( { "invariance", "focus", "converse", "closure", "codec" } ) );
	c_verify->add_option( "file", opt_file, "check a single proof instead of the enumeration" );
	auto *c_laws = app.add_subcommand( "laws", "model law suites" );
	c_laws->add_option( "--samples", cfg.samples, "samples per law" );
	auto *c_demo = app.add_subcommand( "intrel-demo", "adjunction bijection on a small object" );
	c_demo->add_option( "file", opt_file, "JSON map (source, target, R11..R22)" );
	for( auto *s : { c_check, c_interp, c_exec, c_norm, c_verify, c_laws, c_demo } ) {
		common( s );
	}

	try {
		app.parse( argc, argv );
	} catch( const CLI::CallForHelp &e ) {
		out << app.help();
		return kOk;
	} catch( const CLI::ParseError &e ) {
		err << "error: " << e.what() << "\n" << app.help();
		return kUsage;
	}

	try {
		if( !mode.empty() ) {
			cfg.mode = kModes.at( mode );
		}
		if( !strategy.empty() ) {
			cfg.strategy = kStrategies.at( strategy );
		}
		if( as_json ) {
			cfg.output = Output::Json;
		}
		cfg.window.size = window;
		cfg.window.n_alpha = n_alpha;
		cfg.validate();
		Ctx c{ cfg, out, err };
		if( c_check->parsed() ) {
			return cmd_check( c, file );
		}
		if( c_interp->parsed() ) {
			return cmd_interp( c, file );
		}
		if( c_exec->parsed() ) {
			return cmd_exec( c, file );
		}
		if( c_norm->parsed() ) {
			return cmd_normalize( c, file, trace );
		}
		if( c_verify->parsed() ) {
			return cmd_verify( c, kind, opt_file );
		}
		if( c_laws->parsed() ) {
			return cmd_laws( c );
		}
		return cmd_intrel_demo( c, opt_file );
	} catch( const UsageError &e ) {
		err << "usage error: " << e.what() << "\n";
		return kUsage;
	} catch( const FileParseError &e ) {
		err << "parse error: " << e.what() << "\n";
		return kFailed;
	} catch( const ParseError &e ) {
		err << "parse error: " << e.what() << "\n";
		return kFailed;
	} catch( const ProofError &e ) {
		err << "rule violation: " << e.what() << "\n";
		return kFailed;
	} catch( const std::exception &e ) {
		err << "error: " << e.what() << "\n";
		return kFailed;
	}
}

} // namespace mllp::cli

#endif // MLLP_CLI_HPP
