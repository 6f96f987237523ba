#pragma once

#include <map>
#include <string>
#include <vector>

#include "peps/expansion.hpp"
#include "peps/reduced_words.hpp"

namespace peps {

/// {"max_size": n, "terms": [{"pattern": "...", "coeff": "..."}, ...]},
/// terms in graded-lex order, coefficients as exact decimal strings
/// ("a/b" for non-integers). max_size -1 marks a complete expansion.
std::string expansion_to_json(const PatternExpansion& e);

/// One "pattern,coeff" line per term, same order as the JSON.
std::string expansion_to_csv(const PatternExpansion& e);

std::string basis_matrix_to_json(const BasisMatrix& m);
std::string basis_matrix_to_csv(const BasisMatrix& m);

std::string ie_report_to_json(const IeReport& report);
std::string ie_reports_to_json(const std::vector<IeReport>& reports);

std::string partition_to_json(const Permutation& w,
                              const std::map<IndexSet, std::vector<ReducedWord>>& blocks);

std::string essential_to_json(const Permutation& w, const std::vector<ReducedWord>& words);

}  // namespace peps
