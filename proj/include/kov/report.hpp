#pragma once

#include <string>

#include "json.hpp"
#include "kov/classify.hpp"
#include "kov/degenerate.hpp"
#include "kov/reduction.hpp"

namespace kov {

using nlohmann::json;

inline constexpr const char* kReportSchema = "kov-report/1";

// Serializers. Rationals and polynomials are written as strings; object keys
// are sorted, so equal inputs give byte-identical output.
json report_json(const Rational& r);
json report_json(const QMatrix& m);
json report_json(const MatPoly& m);
json report_json(const ResiduePair& r);
json report_json(const std::vector<SpectrumEntry>& spectrum);
json report_json(const MaximalityVerdict& v);
json report_json(const Obstruction& o);
json report_json(const std::vector<Obstruction>& obs);
json report_json(const SeriesSolution& s);
json report_json(const CandidateReport& c);
json report_json(const ClassificationResult& c);
json report_json(const DeformationReport& d);
json report_json(const JetReport& j);
json report_json(const ReductionReport& r);
json report_json(const DegenerationResult& d);

/// {"schema": ..., "command": ..., "config": ..., "result": ...}
json make_report(const std::string& command, json config, json result);
/// Pretty-printed with a trailing newline.
std::string dump_report(const json& report);

}  // namespace kov
