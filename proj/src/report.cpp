#include "fibermovie/report.hpp"

#include <sstream>

namespace fibermovie {

namespace {

using json = nlohmann::ordered_json;

std::string record_summary(const MoveRecord& r) {
  std::ostringstream out;
  switch (r.kind) {
    case MoveKind::RotationIsotopy: out << "row " << r.index << " turns " << (r.sign > 0 ? "+" : "-"); break;
    case MoveKind::MinMovie: out << "minimum opens row " << r.index; break;
    case MoveKind::MaxMovie: out << "maximum closes row " << r.index; break;
    case MoveKind::CrossingMove:
      out << "sigma_" << r.index << (r.sign > 0 ? "" : "^-1") << (r.first_occurrence ? " first" : " repeat");
      break;
    case MoveKind::BandMovie: out << "band"; break;
    case MoveKind::MeridionalStart: out << "annulus appears"; break;
    case MoveKind::CapOff: out << "annulus closes"; break;
  }
  if (r.eta) out << ", singularity " << r.eta->singularity << " winds " << r.eta->winding();
  return out.str();
}

struct Checks {
  bool homogeneous, movie_valid, morse_profile, chi_match, components_match, saddle_count;
};

Checks checks_of(const ReportDocument& doc) {
  const auto& f = doc.fibers;
  bool chi = !f.samples.empty(), comps = !f.samples.empty();
  for (const auto& s : f.samples) {
    chi = chi && s.chi == f.oracle.chi;
    comps = comps && s.boundary == f.oracle.components;
  }
  return {true, doc.validation.pass(), f.morse_statement && f.consistent, chi, comps, f.saddle_count};
}

}  // namespace

json report_json(const ReportDocument& doc) {
  const Movie& m = doc.movie;
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["braid"] = {{"word", format_braid_word(m.braid)}, {"strands", m.braid.strands}, {"signature", m.signature.signs}};

  json timeline = json::array();
  for (const auto& t : m.timeline.boundaries()) timeline.push_back(t.str());
  j["timeline"] = timeline;

  json records = json::array();
  for (const auto& r : m.records) {
    records.push_back({{"kind", to_string(r.kind)},
                       {"interval", {r.t_begin.str(), r.t_end.str()}},
                       {"summary", record_summary(r)}});
  }
  j["records"] = records;

  json samples = json::array();
  for (const auto& s : doc.fibers.samples) {
    const auto& p = s.profile;
    samples.push_back({{"theta", s.theta.str()},
                       {"chi", s.chi},
                       {"boundary_components", s.boundary},
                       {"genus", s.genus ? json(*s.genus) : json(nullptr)},
                       {"profile",
                        {{"interior_min", p.interior_min},
                         {"interior_saddle", p.interior_saddle},
                         {"interior_max", p.interior_max},
                         {"boundary_min", p.boundary_min},
                         {"boundary_max", p.boundary_max}}}});
  }
  j["fibers"] = {{"samples", samples},
                 {"consistent", doc.fibers.consistent},
                 {"saddles_equal_b_plus_c", doc.fibers.saddle_count}};

  const auto& o = doc.fibers.oracle;
  j["oracle"] = {{"chi", o.chi}, {"components", o.components}, {"genus", o.genus ? json(*o.genus) : json(nullptr)}};

  const Checks c = checks_of(doc);
  j["checks"] = {{"homogeneous", c.homogeneous},
                 {"movie_valid", c.movie_valid},
                 {"morse_profile", c.morse_profile},
                 {"chi_match", c.chi_match},
                 {"components_match", c.components_match}};
  return j;
}

std::string report_text(const ReportDocument& doc) {
  const Movie& m = doc.movie;
  std::ostringstream out;
  out << "braid: " << format_braid_word(m.braid) << " (" << m.braid.strands << " strands)\n";
  out << "records: " << m.records.size() << "\n";
  for (std::size_t k = 0; k < m.records.size(); ++k) {
    const auto& r = m.records[k];
    out << "  " << k << "  [" << r.t_begin << ", " << r.t_end << "]  " << to_string(r.kind) << "  "
        << record_summary(r) << "\n";
  }
  const auto& o = doc.fibers.oracle;
  out << "oracle: chi " << o.chi << ", components " << o.components;
  if (o.genus) out << ", genus " << *o.genus;
  out << "\n";
  for (const auto& s : doc.fibers.samples) {
    out << "  theta " << s.theta << ": chi " << s.chi << ", boundary " << s.boundary << ", saddles "
        << s.profile.interior_saddle << ", boundary min/max " << s.profile.boundary_min << "/"
        << s.profile.boundary_max << "\n";
  }
  const Checks c = checks_of(doc);
  auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
  out << "movie_valid " << mark(c.movie_valid) << ", morse_profile " << mark(c.morse_profile) << ", chi_match "
      << mark(c.chi_match) << ", components_match " << mark(c.components_match) << ", saddle_count "
      << mark(c.saddle_count) << "\n";
  return out.str();
}

bool report_checks_pass(const ReportDocument& doc) {
  const Checks c = checks_of(doc);
  return c.homogeneous && c.movie_valid && c.morse_profile && c.chi_match && c.components_match;
}

}  // namespace fibermovie
