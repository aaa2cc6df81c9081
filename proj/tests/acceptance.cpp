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

/*
 * Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
 * criterion fails. Sizes are fixed here rather than taken from flags so a
 * green run always means the same thing.
 */

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "goldens.hpp"
#include "mllp/cutelim.hpp"
#include "mllp/exec.hpp"
#include "mllp/laws.hpp"
#include "mllp/suites.hpp"

using namespace mllp;

namespace {

struct Verdict {
	bool ok = true;
	std::string detail;

	void require( bool cond, const std::string &why ) {
		if( !cond && ok ) {
			ok = false;
			detail = why;
		}
	}

	void golden( const BlockRel &got, const std::vector< std::string > &labels, const goldens::Named &want,
		const std::string &what ) {
		if( const auto why = goldens::compare( got, labels, want ) ) {
			require( false, what + ": " + *why );
		}
	}

	void law( const laws::LawResult &r ) {
		require( r.ok(), r.name + ": " + std::to_string( r.failures ) + "/" + std::to_string( r.cases ) + " failed, " +
				r.first_failure );
		if( ok ) {
			if( !detail.empty() ) {
				detail += "; ";
			}
			detail += r.name + " " + std::to_string( r.cases ) + " cases";
			if( !r.note.empty() ) {
				detail += " (" + r.note + ")";
			}
		}
	}
};

const BlockRel kAntidiag = testing::rel( "11", "11", "01/10" );

Verdict eta_goldens() {
	Verdict v;
	const Proof p = goldens::eta_proof();
	const InterpPair ip = interp( p );
	v.golden( ip.upper, ip.layout.u_labels(), goldens::eta_upper(), "upper" );
	v.golden( ip.lower, ip.layout.one_labels(), goldens::eta_lower(), "lower" );
	v.require( ip.lower == kAntidiag, "lower layer is not the antidiagonal" );
	return v;
}

Verdict pair_goldens() {
	Verdict v;
	const Proof p = goldens::pair_proof();
	const InterpPair ip = interp( p );
	v.golden( ip.upper, ip.layout.u_labels(), goldens::pair_upper(), "upper (both tensor factors)" );
	v.golden( ip.lower, ip.layout.one_labels(), goldens::pair_lower(), "lower" );
	return v;
}

Verdict chain() {
	Verdict v;
	const Proof p1 = goldens::chain( 1 ), p2 = goldens::chain( 2 ), p3 = goldens::chain( 3 );
	const auto r1 = select_redex( p1, Strategy::Leftmost );
	v.require( r1 && r1->kind == RedexKind::BoxExtrusion && step( p1, *r1 ) == p2, "first step is not pi1 -> pi2" );
	const auto r2 = select_redex( p2, Strategy::Leftmost );
	v.require( r2 && r2->kind == RedexKind::BoxExtrusion && step( p2, *r2 ) == p3, "second step is not pi2 -> pi3" );
	const InterpPair nf = interp( goldens::eta_proof() );
	for( int i = 1; i <= 3; ++i ) {
		const std::string tag = "pi" + std::to_string( i );
		const Proof &p = i == 1 ? p1 : i == 2 ? p2 : p3;
		const InterpPair ip = interp( p );
		v.golden( ip.lower, ip.layout.one_labels(), goldens::chain_lower( i ), tag + " lower" );
		const ExPair e = ex( ip );
		v.require( e.lower == kAntidiag && e.lower == nf.lower, tag + ": Ex lower is not the antidiagonal" );
		v.require( e.upper == nf.upper, tag + ": Ex upper differs from the normal form" );
	}
	return v;
}

Verdict focus() {
	Verdict v;
	v.law( suites::focus( 10 ) );
	const FocusReport eta = check_focus( goldens::eta_proof() );
	v.require( eta.commutes && eta.lhs == testing::rel( "UUUU", "1", "0/0/0/p" ), "eta square is not the single point" );
	const FocusReport pair = check_focus( goldens::pair_proof() );
	v.require( pair.commutes && pair.lhs == testing::rel( "UUUUUU", "1", "0/0/0/0/p/p" ),
		"pair square is not the sum of two points" );
	return v;
}

Verdict relcore() {
	Verdict v;
	for( const auto &r : laws::relcore_laws( laws::SuiteConfig{ 1, 1000, Window{ 16, 0 } } ) ) {
		v.law( r );
	}
	return v;
}

Verdict int_rel() {
	Verdict v;
	for( const auto &r : laws::intrel_laws( 1, 500 ) ) {
		v.law( r );
	}
	return v;
}

struct Criterion {
	const char *name;
	std::function< Verdict() > run;
};

} // namespace

int main() {
	const std::vector< Criterion > criteria{
		{ "eta-expansion goldens", eta_goldens },
		{ "shifted tensor goldens", pair_goldens },
		{ "box extrusion chain", chain },
		{ "Ex invariance, <= 10 rules", [] {
			 Verdict v;
			 v.law( suites::invariance( 10 ) );
			 return v;
		 } },
		{ "focusing square, <= 10 rules", focus },
		{ "converse, <= 8 rules", [] {
			 Verdict v;
			 v.law( suites::converse( 8 ) );
			 return v;
		 } },
		{ "relcore laws, 1000 samples, N=16", relcore },
		{ "entry closure, <= 8 rules", [] {
			 Verdict v;
			 v.law( suites::closure( 8, Window{ 16, 0 } ) );
			 return v;
		 } },
		{ "Int(Rel) suite", int_rel },
		{ "codec, <= 6 rules", [] {
			 Verdict v;
			 v.law( suites::codec( 6, Window{ 16, 0 } ) );
			 return v;
		 } },
	};

	int failed = 0;
	for( std::size_t k = 0; k < criteria.size(); ++k ) {
		const auto t0 = std::chrono::steady_clock::now();
		Verdict v;
		try {
			v = criteria[ k ].run();
		} catch( const std::exception &e ) {
			v.ok = false;
			v.detail = std::string( "exception: " ) + e.what();
		}
		const double secs = std::chrono::duration< double >( std::chrono::steady_clock::now() - t0 ).count();
		failed += !v.ok;
		std::printf( "%s %2zu %s [%.1fs] %s\n", v.ok ? "PASS" : "FAIL", k + 1, criteria[ k ].name, secs,
			v.detail.c_str() );
		std::fflush( stdout );
	}
	return failed == 0 ? 0 : 1;
}
