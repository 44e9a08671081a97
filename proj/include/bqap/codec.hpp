#ifndef BQAP_CODEC_HPP
#define BQAP_CODEC_HPP

#include <string>

#include "bqap/model.hpp"

namespace bqap {

/// JSON codec for instances and solutions.
///
/// File formats are 0-based (internal representation is 1-based; the codec
/// translates). Instance files are a single JSON object
///   {"variant": 1|2, "m": int, "n": int, "q": nested [i][j][k][l], "c": [[..]], "d": [[..]]}
/// and solution files are
///   {"variant": 1|2, "sigma": [int...], "tau": [int...]}.

std::string encode_instance(const Instance& inst);

/// Parses and validates; throws ParseError on malformed input and
/// ValidationError on invariant violations.
Instance decode_instance(const std::string& text);

std::string encode_solution(const Instance& inst, const Solution& sol);

/// Parses a solution file and checks it against inst (variant and ranges).
Solution decode_solution(const std::string& text, const Instance& inst);

}  // namespace bqap

#endif  // BQAP_CODEC_HPP
