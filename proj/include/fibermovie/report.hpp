#pragma once

#include <string>

#include <json.hpp>

#include "fibermovie/fiber.hpp"

namespace fibermovie {

inline constexpr int kReportSchemaVersion = 1;

struct ReportDocument {
  const Movie& movie;
  const FiberReport& fibers;
  const MovieValidation& validation;
};

/// Keys appear in schema order.
nlohmann::ordered_json report_json(const ReportDocument& doc);
std::string report_text(const ReportDocument& doc);

/// True when every check in the report holds.
bool report_checks_pass(const ReportDocument& doc);

}  // namespace fibermovie
