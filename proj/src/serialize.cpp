#include "peps/serialize.hpp"

#include <json.hpp>

namespace peps {

namespace {

using json = nlohmann::ordered_json;

json index_set_to_json(const IndexSet& I) {
  json out = json::array();
  for (int i : I) out.push_back(i);
  return out;
}

}  // namespace

std::string expansion_to_json(const PatternExpansion& e) {
  json out;
  out["max_size"] = e.max_size();
  json terms = json::array();
  for (const auto& [p, c] : e.terms()) {
    terms.push_back(json{{"pattern", p.str()}, {"coeff", to_decimal(c)}});
  }
  out["terms"] = std::move(terms);
  return out.dump(2);
}

std::string expansion_to_csv(const PatternExpansion& e) {
  std::string out;
  for (const auto& [p, c] : e.terms()) {
    out += p.str();
    out.push_back(',');
    out += to_decimal(c);
    out.push_back('\n');
  }
  return out;
}

std::string basis_matrix_to_json(const BasisMatrix& m) {
  json out;
  json patterns = json::array();
  for (const Permutation& p : m.patterns) patterns.push_back(p.str());
  out["patterns"] = std::move(patterns);
  auto rows_to_json = [](const std::vector<std::vector<ExactInt>>& rows) {
    json out_rows = json::array();
    for (const auto& row : rows) {
      json cells = json::array();
      for (const ExactInt& v : row) cells.push_back(to_decimal(v));
      out_rows.push_back(std::move(cells));
    }
    return out_rows;
  };
  out["matrix"] = rows_to_json(m.counts);
  if (m.inverse) out["inverse"] = rows_to_json(*m.inverse);
  return out.dump(2);
}

std::string basis_matrix_to_csv(const BasisMatrix& m) {
  std::string out = "w";
  for (const Permutation& p : m.patterns) {
    out.push_back(',');
    out += p.str();
  }
  out.push_back('\n');
  for (size_t row = 0; row < m.counts.size(); ++row) {
    out += m.patterns[row].str();
    for (const ExactInt& v : m.counts[row]) {
      out.push_back(',');
      out += to_decimal(v);
    }
    out.push_back('\n');
  }
  return out;
}

namespace {

json ie_report_json(const IeReport& report) {
  json out;
  out["w"] = report.perm;
  out["pairs_checked"] = report.pairs_checked;
  out["violations"] = report.violations;
  return out;
}

}  // namespace

std::string ie_report_to_json(const IeReport& report) { return ie_report_json(report).dump(2); }

std::string ie_reports_to_json(const std::vector<IeReport>& reports) {
  json out = json::array();
  for (const IeReport& r : reports) out.push_back(ie_report_json(r));
  return out.dump(2);
}

std::string partition_to_json(const Permutation& w,
                              const std::map<IndexSet, std::vector<ReducedWord>>& blocks) {
  json out;
  out["perm"] = w.str();
  ExactInt total = 0;
  json block_list = json::array();
  for (const auto& [I, words] : blocks) {
    json block;
    block["indices"] = index_set_to_json(I);
    block["size"] = words.size();
    json word_list = json::array();
    for (const ReducedWord& x : words) word_list.push_back(x.str());
    block["words"] = std::move(word_list);
    block_list.push_back(std::move(block));
    total += static_cast<long long>(words.size());
  }
  out["rw_count"] = to_decimal(total);
  out["blocks"] = std::move(block_list);
  return out.dump(2);
}

std::string essential_to_json(const Permutation& w, const std::vector<ReducedWord>& words) {
  json out;
  out["perm"] = w.str();
  out["essential_count"] = std::to_string(words.size());
  json word_list = json::array();
  for (const ReducedWord& x : words) word_list.push_back(x.str());
  out["words"] = std::move(word_list);
  return out.dump(2);
}

}  // namespace peps
