#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aecc/graph.hpp"
#include "aecc/planar.hpp"

namespace aecc {

/// Charges are counted in quarter units.
using Quarters = long long;

std::string format_quarters(Quarters q);  // "p/4"

/// A connected plane graph H together with the original degrees d(v) of its
/// vertices in the graph it was cut from.
struct AnnotatedPlane {
  Graph h;
  std::vector<int> d;                // indexed by H vertex
  std::vector<Vertex> to_original;   // H vertex -> vertex of the source graph
  RotationSystem rot;
  std::vector<Face> faces;
  FaceIncidence incidence;

  int d_h(Vertex x) const { return h.degree(x); }
};

/// Embeds h (connected, planar); d defaults to the degrees of h itself.
AnnotatedPlane annotate_plane(const Graph& h, std::vector<int> d = {}, std::vector<Vertex> to_original = {});

/// One plane per component of the graph left after deleting the 2-vertices of g.
std::vector<AnnotatedPlane> annotate(const Graph& g);

struct Transfer {
  Vertex vertex = 0;
  int slot = 0;
  int face = 0;
  Quarters amount = 0;
  std::string rule;
};

struct ChargeLedger {
  std::vector<Quarters> vertex_charge;
  std::vector<Quarters> face_charge;
  std::vector<Transfer> transfers;

  Quarters total() const;
};

class RuleGap : public std::runtime_error {
 public:
  RuleGap(Vertex vertex, int face, int slot, const std::string& what)
      : std::runtime_error(what), vertex_(vertex), face_(face), slot_(slot) {}
  Vertex vertex() const { return vertex_; }
  int face() const { return face_; }
  int slot() const { return slot_; }

 private:
  Vertex vertex_;
  int face_;
  int slot_;
};

struct GapRecord {
  Vertex vertex = 0;
  int face = 0;
  int slot = 0;
  std::string reason;
};

/// 2 d_H(u) - 6 per vertex, d(f) - 6 per face.
ChargeLedger initial_charges(const AnnotatedPlane& ap);

/// Applies R1-R4 slot by slot; throws RuleGap on the first unmatched
/// (vertex, 5^- face slot) pair.
ChargeLedger apply_rules(const AnnotatedPlane& ap, const ChargeLedger& initial);

/// Same pass, but unmatched slots are collected instead of thrown and
/// transfer nothing.
ChargeLedger apply_rules_collecting(const AnnotatedPlane& ap, const ChargeLedger& initial,
                                    std::vector<GapRecord>& gaps);

struct AuditEntry {
  std::string element;  // "v<id>" or "f<id>"
  Quarters charge = 0;
};

struct AuditReport {
  Quarters initial_total = 0;
  Quarters total = 0;
  bool conserved = false;
  std::vector<AuditEntry> negatives;
  std::vector<Transfer> transfers;
};

AuditReport audit(const AnnotatedPlane& ap, const ChargeLedger& final_ledger);

nlohmann::json to_json(const AuditReport& r, bool with_transfers = true);

}  // namespace aecc
