#ifndef QNG_REPORT_HPP
#define QNG_REPORT_HPP

#include <string>

#include <json.hpp>

#include "qng/scan.hpp"
#include "qng/spectra.hpp"
#include "qng/theorems.hpp"

namespace qng {

/// Shortest decimal text that reads back as the same double.
std::string format_double(double x);

nlohmann::ordered_json to_json(const BoundReport& r);
/// Members and violations with their reports; other reports are summarised
/// by the verdict counts.
nlohmann::ordered_json to_json(const ScanResult& s);
nlohmann::ordered_json to_json(const ProofCheck& p);
/// Float eigenvalues plus, when `exact` is set, the characteristic
/// polynomial and isolating intervals of its distinct roots.
nlohmann::ordered_json spectrum_json(const Graph& g, MatrixKind kind, bool exact);

/// Columns: graph6, bound, lhs, rhs, verdict, family.
std::string csv_header();
std::string csv_row(const BoundReport& r);
std::string text_line(const BoundReport& r);

}  // namespace qng

#endif  // QNG_REPORT_HPP
