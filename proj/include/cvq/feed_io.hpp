#pragma once

#include <string>

#include "cvq/feed.hpp"

namespace cvq {

/// Seed <-> JSON. The object layout is
///   {"n": 2, "epsilon": [0,2,-1,0], "d": [1,2], "kind": "X", "labels": [...]}
/// with "epsilon" row-major. "kind" defaults to "X" and "labels" to the
/// standard names when missing. "d" defaults to all ones.
std::string seed_to_json(const Seed& s);
Seed seed_from_json(const std::string& text);

/// Accepts either a path to a JSON file, an inline JSON object, or one of the
/// builtin names (a2, b2, g2, a1xa1, markov, a2x3, b2x3, g2x3, a2x5, b2x5, g2x5).
Seed load_seed(const std::string& spec);

}  // namespace cvq
