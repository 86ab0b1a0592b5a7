#include <algorithm>

#include "fibermovie/construction.hpp"
#include "fibermovie/error.hpp"

namespace fibermovie {

namespace {

bool surface_event(MoveKind kind) {
  return kind == MoveKind::MeridionalStart || kind == MoveKind::MinMovie || kind == MoveKind::MaxMovie ||
         kind == MoveKind::CapOff;
}

bool differs_only_in_decorations(SliceFibration a, SliceFibration b) {
  if (a == b || a.xsings.size() != b.xsings.size()) return false;
  for (std::size_t i = 0; i < a.xsings.size(); ++i) a.xsings[i].outward_axis = b.xsings[i].outward_axis;
  return a == b;
}

bool same_move(const MoveRecord& declared, const MoveRecord& replayed) {
  return declared.kind == replayed.kind && declared.index == replayed.index && declared.sign == replayed.sign &&
         declared.first_occurrence == replayed.first_occurrence && declared.eta == replayed.eta &&
         declared.effects == replayed.effects;
}

bool arrow_error(ErrorCode code) {
  return code == ErrorCode::WrongRegions || code == ErrorCode::UnbalancedWinding ||
         code == ErrorCode::EndpointAngleMismatch || code == ErrorCode::LeafNotInward;
}

}  // namespace

MovieValidation validate_movie(const Movie& m) {
  MovieValidation v;
  auto fail = [&v](bool& flag, const std::string& msg) {
    flag = false;
    v.problems.push_back(msg);
  };

  if (m.slices.size() != m.records.size() + 1) {
    fail(v.arrows_consistent, "movie has " + std::to_string(m.slices.size()) + " slices for " +
                                  std::to_string(m.records.size()) + " records");
  }
  if (m.slices.empty() || m.slices.front().rows != 0 || m.records.empty() ||
      m.records.front().kind != MoveKind::MeridionalStart) {
    fail(v.ends_capped, "movie does not open with a meridional cap");
  }
  if (m.slices.empty() || m.slices.back().rows != 0 || m.records.empty() ||
      m.records.back().kind != MoveKind::CapOff) {
    fail(v.ends_capped, "movie does not close with a cap");
  }

  for (std::size_t k = 0; k < m.records.size(); ++k) {
    const MoveRecord& rec = m.records[k];
    RecordCheck rc;
    rc.index = static_cast<int>(k);
    rc.models = classify_event(rec);
    auto bad = [&](bool arrow, const std::string& msg) {
      (arrow ? rc.arrow_ok : rc.model_ok) = false;
      if (rc.message.empty()) rc.message = msg;
    };

    if (std::find(rc.models.begin(), rc.models.end(), LocalModelId::Unmatched) != rc.models.end()) {
      bad(false, "event matches no local model");
    }
    if (!(rec.t_begin < rec.t_end)) bad(true, "record time interval is empty");
    if (k > 0 && rec.t_begin < m.records[k - 1].t_end) bad(true, "record overlaps its predecessor in time");
    if (rec.before != rc.index || rec.after != rc.index + 1) bad(true, "record slice ids out of sequence");

    if (k + 1 < m.slices.size()) {
      const SliceFibration& before = m.slices[k];
      const SliceFibration& after = m.slices[k + 1];
      const ValidationReport report = validate_slice(before);
      if (!report.valid()) bad(true, "slice " + std::to_string(k) + " invalid: " + report.summary());
      try {
        const auto [replayed, rr] = replay(before, rec);
        if (!same_move(rec, rr)) {
          bad(!surface_event(rec.kind), "declared move data disagrees with the replayed move");
        }
        if (replayed != after) {
          const bool decorations = differs_only_in_decorations(replayed, after);
          bad(decorations || !surface_event(rec.kind),
              decorations ? "outward decorations disagree with the replayed move"
                          : "after-slice disagrees with the replayed move");
        }
      } catch (const Error& e) {
        bad(arrow_error(e.code()) || !surface_event(rec.kind), e.what());
      }
    }

    if (!rc.arrow_ok) fail(v.arrows_consistent, "record " + std::to_string(k) + ": " + rc.message);
    if (!rc.model_ok) fail(v.events_modeled, "record " + std::to_string(k) + ": " + rc.message);
    v.records.push_back(std::move(rc));
  }
  return v;
}

}  // namespace fibermovie
