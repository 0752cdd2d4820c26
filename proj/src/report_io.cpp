#include "qwt/report_io.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

namespace qwt {

namespace {

std::string fixed12(Real x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12f", x);
  return buf;
}

nlohmann::json model_json(const WalkModel& m) {
  return {{"family", std::string(family_name(m.family))},
          {"n", m.n},
          {"sender", m.sender},
          {"receiver", m.receiver}};
}

}  // namespace

void write_csv(std::ostream& os, const TransferReport& report) {
  os << "t,fidelity_full,fidelity_reduced,fidelity_analytic\n";
  for (int t = 0; t <= report.steps; ++t) {
    os << t << ',';
    if (!report.fidelity_full.empty()) os << fixed12(report.fidelity_full[t]);
    os << ',';
    if (!report.fidelity_reduced.empty())
      os << fixed12(report.fidelity_reduced[t]);
    os << ',';
    if (!report.fidelity_analytic.empty())
      os << fixed12(report.fidelity_analytic[t]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const TransferReport& report) {
  nlohmann::json j;
  j["model"] = model_json(report.model);
  j["steps"] = report.steps;
  j["predicted_T"] = report.predicted_T;
  j["peak_step"] = report.peak_step;
  j["peak_fidelity"] = report.peak_fidelity;
  nlohmann::json series;
  series["t"] = nlohmann::json::array();
  for (int t = 0; t <= report.steps; ++t) series["t"].push_back(t);
  if (!report.fidelity_full.empty()) {
    series["fidelity_full"] = report.fidelity_full;
  }
  if (!report.fidelity_reduced.empty()) {
    series["fidelity_reduced"] = report.fidelity_reduced;
  }
  if (!report.fidelity_analytic.empty()) {
    series["fidelity_analytic"] = report.fidelity_analytic;
  }
  j["series"] = std::move(series);
  os << j.dump(2) << '\n';
}

void write_csv(std::ostream& os, const SweepReport& report) {
  os << "n,predicted_T,peak_step,peak_fidelity\n";
  for (const auto& p : report.points) {
    os << p.n << ',' << p.predicted_T << ',' << p.peak_step << ','
       << fixed12(p.peak_fidelity) << '\n';
  }
}

void write_json(std::ostream& os, const SweepReport& report) {
  nlohmann::json j;
  j["family"] = std::string(family_name(report.family));
  j["sender"] = report.sender;
  j["receiver"] = report.receiver;
  j["points"] = nlohmann::json::array();
  for (const auto& p : report.points) {
    j["points"].push_back({{"n", p.n},
                           {"predicted_T", p.predicted_T},
                           {"peak_step", p.peak_step},
                           {"peak_fidelity", p.peak_fidelity}});
  }
  os << j.dump(2) << '\n';
}

}  // namespace qwt
