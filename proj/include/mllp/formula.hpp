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

#ifndef MLLP_FORMULA_HPP
#define MLLP_FORMULA_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mllp {

enum class Polarity : std::uint8_t { Positive, Negative };

enum class FormulaKind : std::uint8_t { Atom, NegAtom, One, Bot, Tensor, Par, Down, Up };

/// Raised when a connective is applied to a subformula of the wrong polarity.
class PolarityError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Raised by the text parsers; `position()` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
	ParseError( const std::string &msg, std::size_t pos ) :
		std::runtime_error( msg + " at offset " + std::to_string( pos ) ), pos_( pos ) {}
	std::size_t position() const noexcept { return pos_; }

private:
	std::size_t pos_;
};

/*
 * Immutable polarised MLL formula. Instances are cheap to copy (shared
 * node) and can only be built through the polarity-checking factories, so
 * every live Formula is well formed.
 */
class Formula {
public:
	FormulaKind kind() const { return node_->kind; }
	const std::string &name() const { return node_->name; }
	const Formula &left() const { return node_->kids[ 0 ]; }
	const Formula &right() const { return node_->kids[ 1 ]; }
	const Formula &body() const { return node_->kids[ 0 ]; }
	std::size_t hash() const { return node_->hash; }
	std::size_t size() const { return node_->size; }

	Polarity polarity() const {
		switch( kind() ) {
		case FormulaKind::Atom:
		case FormulaKind::One:
		case FormulaKind::Tensor:
		case FormulaKind::Down:
			return Polarity::Positive;
		default:
			return Polarity::Negative;
		}
	}
	bool positive() const { return polarity() == Polarity::Positive; }
	bool negative() const { return polarity() == Polarity::Negative; }

	bool has_shift() const {
		switch( kind() ) {
		case FormulaKind::Down:
		case FormulaKind::Up:
			return true;
		case FormulaKind::Tensor:
		case FormulaKind::Par:
			return left().has_shift() || right().has_shift();
		default:
			return false;
		}
	}

	friend bool operator==( const Formula &a, const Formula &b ) {
		if( a.node_ == b.node_ ) {
			return true;
		}
		if( a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size() ) {
			return false;
		}
		switch( a.kind() ) {
		case FormulaKind::Atom:
		case FormulaKind::NegAtom:
			return a.name() == b.name();
		case FormulaKind::One:
		case FormulaKind::Bot:
			return true;
		case FormulaKind::Tensor:
		case FormulaKind::Par:
			return a.left() == b.left() && a.right() == b.right();
		default:
			return a.body() == b.body();
		}
	}
	friend bool operator!=( const Formula &a, const Formula &b ) { return !( a == b ); }

	friend Formula atom( std::string name );
	friend Formula neg_atom( std::string name );
	friend Formula one();
	friend Formula bot();
	friend Formula tensor( const Formula &a, const Formula &b );
	friend Formula par( const Formula &a, const Formula &b );
	friend Formula down( const Formula &n );
	friend Formula up( const Formula &p );

private:
	struct Node {
		FormulaKind kind;
		std::string name;
		std::vector< Formula > kids;
		std::size_t hash = 0;
		std::size_t size = 1;
	};

	explicit Formula( std::shared_ptr< const Node > n ) : node_( std::move( n ) ) {}

	static Formula make( FormulaKind k, std::string name, std::vector< Formula > kids ) {
		auto n = std::make_shared< Node >();
		n->kind = k;
		n->name = std::move( name );
		std::size_t h = std::hash< std::string >{}( n->name ) * 31u + static_cast< std::size_t >( k );
		for( const auto &c : kids ) {
			h = h * 1000003u ^ c.hash();
			n->size += c.size();
		}
		n->hash = h;
		n->kids = std::move( kids );
		return Formula( std::move( n ) );
	}

	std::shared_ptr< const Node > node_;
};

inline Formula atom( std::string name ) {
	if( name.empty() ) {
		throw std::invalid_argument( "atom name must be non-empty" );
	}
	return Formula::make( FormulaKind::Atom, std::move( name ), {} );
}

inline Formula neg_atom( std::string name ) {
	if( name.empty() ) {
		throw std::invalid_argument( "atom name must be non-empty" );
	}
	return Formula::make( FormulaKind::NegAtom, std::move( name ), {} );
}

inline Formula one() { return Formula::make( FormulaKind::One, "", {} ); }
inline Formula bot() { return Formula::make( FormulaKind::Bot, "", {} ); }

inline Formula tensor( const Formula &a, const Formula &b ) {
	if( !a.positive() || !b.positive() ) {
		throw PolarityError( "tensor expects two positive formulas" );
	}
	return Formula::make( FormulaKind::Tensor, "", { a, b } );
}

inline Formula par( const Formula &a, const Formula &b ) {
	if( !a.negative() || !b.negative() ) {
		throw PolarityError( "par expects two negative formulas" );
	}
	return Formula::make( FormulaKind::Par, "", { a, b } );
}

inline Formula down( const Formula &n ) {
	if( !n.negative() ) {
		throw PolarityError( "down-shift expects a negative formula" );
	}
	return Formula::make( FormulaKind::Down, "", { n } );
}

inline Formula up( const Formula &p ) {
	if( !p.positive() ) {
		throw PolarityError( "up-shift expects a positive formula" );
	}
	return Formula::make( FormulaKind::Up, "", { p } );
}

/// Linear negation. Binary connectives keep their argument order.
inline Formula negate( const Formula &f ) {
	switch( f.kind() ) {
	case FormulaKind::Atom:
		return neg_atom( f.name() );
	case FormulaKind::NegAtom:
		return atom( f.name() );
	case FormulaKind::One:
		return bot();
	case FormulaKind::Bot:
		return one();
	case FormulaKind::Tensor:
		return par( negate( f.left() ), negate( f.right() ) );
	case FormulaKind::Par:
		return tensor( negate( f.left() ), negate( f.right() ) );
	case FormulaKind::Down:
		return up( negate( f.body() ) );
	case FormulaKind::Up:
		return down( negate( f.body() ) );
	}
	throw std::logic_error( "unreachable formula kind" );
}

inline bool is_dual( const Formula &a, const Formula &b ) {
	if( a.polarity() == b.polarity() || a.size() != b.size() ) {
		return false;
	}
	return negate( a ) == b;
}

/// ASCII rendering accepted back by parse_formula.
inline std::string to_string( const Formula &f ) {
	switch( f.kind() ) {
	case FormulaKind::Atom:
		return f.name();
	case FormulaKind::NegAtom:
		return f.name() + "^";
	case FormulaKind::One:
		return "one";
	case FormulaKind::Bot:
		return "bot";
	case FormulaKind::Tensor:
		return "(" + to_string( f.left() ) + " * " + to_string( f.right() ) + ")";
	case FormulaKind::Par:
		return "(" + to_string( f.left() ) + " | " + to_string( f.right() ) + ")";
	case FormulaKind::Down:
		return "dn " + to_string( f.body() );
	case FormulaKind::Up:
		return "up " + to_string( f.body() );
	}
	return "?";
}

inline std::string to_unicode( const Formula &f ) {
	switch( f.kind() ) {
	case FormulaKind::Atom:
		return f.name();
	case FormulaKind::NegAtom:
		return f.name() + "⊥";
	case FormulaKind::One:
		return "1";
	case FormulaKind::Bot:
		return "⊥";
	case FormulaKind::Tensor:
		return "(" + to_unicode( f.left() ) + " ⊗ " + to_unicode( f.right() ) + ")";
	case FormulaKind::Par:
		return "(" + to_unicode( f.left() ) + " ⅋ " + to_unicode( f.right() ) + ")";
	case FormulaKind::Down:
		return "↓" + to_unicode( f.body() );
	case FormulaKind::Up:
		return "↑" + to_unicode( f.body() );
	}
	return "?";
}

inline void collect_atoms( const Formula &f, std::vector< std::string > &out ) {
	switch( f.kind() ) {
	case FormulaKind::Atom:
	case FormulaKind::NegAtom:
		for( const auto &a : out ) {
			if( a == f.name() ) {
				return;
			}
		}
		out.push_back( f.name() );
		return;
	case FormulaKind::Tensor:
	case FormulaKind::Par:
		collect_atoms( f.left(), out );
		collect_atoms( f.right(), out );
		return;
	case FormulaKind::Down:
	case FormulaKind::Up:
		collect_atoms( f.body(), out );
		return;
	default:
		return;
	}
}

namespace detail {

/// Hand-written scanner shared by the formula and proof parsers.
class Lexer {
public:
	explicit Lexer( std::string_view src ) : src_( src ) {}

	void skip_ws() {
		while( pos_ < src_.size() ) {
			const char c = src_[ pos_ ];
			if( c == '#' ) {
				while( pos_ < src_.size() && src_[ pos_ ] != '\n' ) {
					++pos_;
				}
			} else if( std::isspace( static_cast< unsigned char >( c ) ) ) {
				++pos_;
			} else {
				break;
			}
		}
	}

	bool at_end() {
		skip_ws();
		return pos_ >= src_.size();
	}

	char peek() {
		skip_ws();
		return pos_ < src_.size() ? src_[ pos_ ] : '\0';
	}

	/// Character right after the next token start, used for "(" lookahead.
	char peek_after_paren() {
		skip_ws();
		std::size_t p = pos_ + 1;
		while( p < src_.size() && std::isspace( static_cast< unsigned char >( src_[ p ] ) ) ) {
			++p;
		}
		return p < src_.size() ? src_[ p ] : '\0';
	}

	std::string peek_word_after_paren() {
		skip_ws();
		std::size_t p = pos_ + 1;
		while( p < src_.size() && std::isspace( static_cast< unsigned char >( src_[ p ] ) ) ) {
			++p;
		}
		std::size_t q = p;
		while( q < src_.size() && is_ident_char( src_[ q ] ) ) {
			++q;
		}
		return std::string( src_.substr( p, q - p ) );
	}

	void expect( char c ) {
		skip_ws();
		if( pos_ >= src_.size() || src_[ pos_ ] != c ) {
			throw ParseError( std::string( "expected '" ) + c + "'", pos_ );
		}
		++pos_;
	}

	bool accept( char c ) {
		skip_ws();
		if( pos_ < src_.size() && src_[ pos_ ] == c ) {
			++pos_;
			return true;
		}
		return false;
	}

	std::string ident() {
		skip_ws();
		const std::size_t start = pos_;
		while( pos_ < src_.size() && is_ident_char( src_[ pos_ ] ) ) {
			++pos_;
		}
		if( start == pos_ ) {
			throw ParseError( "expected identifier", pos_ );
		}
		return std::string( src_.substr( start, pos_ - start ) );
	}

	std::size_t number() {
		skip_ws();
		const std::size_t start = pos_;
		std::size_t v = 0;
		while( pos_ < src_.size() && std::isdigit( static_cast< unsigned char >( src_[ pos_ ] ) ) ) {
			v = v * 10 + static_cast< std::size_t >( src_[ pos_ ] - '0' );
			++pos_;
		}
		if( start == pos_ ) {
			throw ParseError( "expected number", pos_ );
		}
		return v;
	}

	std::size_t pos() {
		skip_ws();
		return pos_;
	}

	static bool is_ident_char( char c ) {
		return std::isalnum( static_cast< unsigned char >( c ) ) || c == '_' || c == '\'';
	}

private:
	std::string_view src_;
	std::size_t pos_ = 0;
};

inline Formula parse_formula( Lexer &lx ) {
	const std::size_t at = lx.pos();
	try {
		if( lx.accept( '(' ) ) {
			Formula a = parse_formula( lx );
			if( lx.accept( ')' ) ) {
				return a;
			}
			const std::size_t op_at = lx.pos();
			if( lx.accept( '*' ) ) {
				Formula b = parse_formula( lx );
				lx.expect( ')' );
				return tensor( a, b );
			}
			if( lx.accept( '|' ) ) {
				Formula b = parse_formula( lx );
				lx.expect( ')' );
				return par( a, b );
			}
			throw ParseError( "expected '*', '|' or ')'", op_at );
		}
		const std::string w = lx.ident();
		if( w == "one" ) {
			return one();
		}
		if( w == "bot" ) {
			return bot();
		}
		if( w == "dn" ) {
			return down( parse_formula( lx ) );
		}
		if( w == "up" ) {
			return up( parse_formula( lx ) );
		}
		if( lx.accept( '^' ) ) {
			return neg_atom( w );
		}
		return atom( w );
	} catch( const PolarityError &e ) {
		throw PolarityError( std::string( e.what() ) + " (formula at offset " + std::to_string( at ) + ")" );
	}
}

} // namespace detail

/// Parses the ASCII grammar; throws ParseError or PolarityError.
inline Formula parse_formula( std::string_view text ) {
	detail::Lexer lx( text );
	Formula f = detail::parse_formula( lx );
	if( !lx.at_end() ) {
		throw ParseError( "trailing input after formula", lx.pos() );
	}
	return f;
}

struct FormulaHash {
	std::size_t operator()( const Formula &f ) const { return f.hash(); }
};

} // namespace mllp

#endif // MLLP_FORMULA_HPP
