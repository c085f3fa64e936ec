#include <cstdio>

#include <json.hpp>

#include "mols/report.hpp"

namespace mols {

std::string stopping_report_json(const SparseMatrix& h, const StoppingReport& report) {
  nlohmann::ordered_json doc;
  const CodeMeta& meta = h.meta();
  if (meta.order == ColumnOrder::external) {
    doc["q"] = nullptr;
    doc["m"] = nullptr;
    doc["pairs"] = nlohmann::ordered_json::array();
  } else {
    doc["q"] = meta.q;
    doc["m"] = meta.m;
    auto pairs = nlohmann::ordered_json::array();
    for (const ScalePair& p : meta.pairs) pairs.push_back({p.alpha, p.beta});
    doc["pairs"] = pairs;
  }
  doc["rows"] = h.rows();
  doc["cols"] = h.cols();
  doc["cap"] = report.cap;

  auto hist = nlohmann::ordered_json::object();
  for (const auto& [size, count] : report.histogram) hist[std::to_string(size)] = count;
  doc["histogram"] = hist;

  auto minimal = nlohmann::ordered_json::object();
  for (const auto& [size, count] : report.minimal_histogram) minimal[std::to_string(size)] = count;
  doc["minimal_histogram"] = minimal;

  if (report.stopping_distance) doc["stopping_distance"] = *report.stopping_distance;
  else doc["stopping_distance"] = "greater than cap";

  auto witnesses = nlohmann::ordered_json::object();
  for (const auto& [size, sets] : report.witnesses) witnesses[std::to_string(size)] = sets;
  doc["witnesses"] = witnesses;

  doc["search_nodes"] = report.search_nodes;
  doc["used_symmetry"] = report.used_symmetry;
  return doc.dump(2) + "\n";
}

std::string sim_result_csv(const SimResult& result) {
  std::string out = "epsilon,trials,bit_errors,ber,word_failures";
  for (int s = 1; s <= result.detection_cap; ++s) out += ",det_" + std::to_string(s);
  out += ",det_overflow\n";

  char buf[64];
  for (const EpsilonStats& st : result.per_epsilon) {
    std::snprintf(buf, sizeof buf, "%.10g", st.epsilon);
    out += buf;
    out += ',' + std::to_string(st.trials);
    out += ',' + std::to_string(st.bit_errors);
    std::snprintf(buf, sizeof buf, "%.10e", st.ber());
    out += ',';
    out += buf;
    out += ',' + std::to_string(st.word_failures);
    for (int s = 1; s <= result.detection_cap; ++s) {
      const long long v = s < static_cast<int>(st.detections.size()) ? st.detections[s] : 0;
      out += ',' + std::to_string(v);
    }
    out += ',' + std::to_string(st.overflow);
    out += '\n';
  }
  return out;
}

} // namespace mols
