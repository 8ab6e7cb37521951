// JSON, JSON-lines, CSV and LaTeX serialization for every artifact the
// command-line harness emits.  All formats are deterministic: map keys are
// emitted in ascending order and words in (length, ShortLex) order, so the
// same data always produces the same bytes.

#pragma once

#include "gtl/hecke.hpp"
#include "gtl/ic_solver.hpp"
#include "gtl/polyvec.hpp"
#include "gtl/tl_algebra.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace gtl {

using Json = nlohmann::ordered_json;

// {"-1":1,"1":1} for v + v^-1; exponent keys ascending, coefficients as
// JSON integers when they fit in 64 bits and as decimal strings otherwise.
Json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const Json& j);

// Canonical word as a 1-based array of generator numbers.
Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

// Compact human-readable word: "e" or "1.2.1".
std::string word_text(const Word& w);

// {"coeffs":[{"word":[...],"poly":{...}}, ...]}
Json polyvec_to_json(const PolyVec& vec);
PolyVec polyvec_from_json(const Json& j);

// Array of rows {"w":[...],"coeffs":[{"x":[...],"h":{...}}]}.
Json ic_table_to_json(const ICTable& table);
ICTable ic_table_from_json(const Json& j);

Json kernel_report_to_json(const KernelReport& report);

// One JSON line {"word":[...],"length":n,"in_wc":bool} per element.
std::string enumeration_jsonl(const std::vector<std::pair<Word, bool>>& elements);

// One "w,x,entry" line per nonzero entry, columns in table order.
std::string matrix_csv(const std::map<Word, PolyVec, LenLex>& columns);

// LaTeX tabular, one row per basis element, coefficients with exponents
// ascending.
std::string ic_table_latex(const ICTable& table);

}  // namespace gtl
