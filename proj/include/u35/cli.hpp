#pragma once

#include <string>

#include "u35/report.hpp"
#include "u35/session.hpp"

namespace u35 {

// Builds the graph and the two groups, certifies them, writes the caches and
// returns the manifest. Throws CacheError on IO problems.
RunManifest cmd_build(Session& session);

// Runs one named verification suite. Valid targets: norton-sakuma, shape,
// gram525, gram-full, a7, lemma15, lemma16, lemma17, resurrection, all.
// Throws std::invalid_argument on an unknown target.
RunManifest cmd_verify(Session& session, const std::string& target);

// Individual check groups, reused by cmd_verify and the test suites. Each
// appends named checks to the manifest.
void append_group_checks(Session& s, RunManifest& m);       // graph, orders, petersen
void append_suborbit_checks(Session& s, RunManifest& m);    // suborbits, D6 count
void append_norton_sakuma_checks(Session& s, RunManifest& m);
void append_shape_checks(Session& s, RunManifest& m);       // solver + censuses
void append_gram525_checks(Session& s, RunManifest& m);
void append_gram_full_checks(Session& s, RunManifest& m);   // pasechnik, x, rank 798
void append_a7_checks(Session& s, RunManifest& m);
void append_lemma15_checks(Session& s, RunManifest& m);
void append_lemma16_checks(Session& s, RunManifest& m);
void append_lemma17_checks(Session& s, RunManifest& m);     // V+ rank, pairing search
void append_resurrection_checks(Session& s, RunManifest& m);

}  // namespace u35
