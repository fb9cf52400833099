#include "aecc/discharge.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace aecc {

std::string format_quarters(Quarters q) { return std::to_string(q) + "/4"; }

Quarters ChargeLedger::total() const {
  return std::accumulate(vertex_charge.begin(), vertex_charge.end(), Quarters{0}) +
         std::accumulate(face_charge.begin(), face_charge.end(), Quarters{0});
}

AnnotatedPlane annotate_plane(const Graph& h, std::vector<int> d, std::vector<Vertex> to_original) {
  if (connected_components(h, true).size() != 1) {
    throw GraphError(GraphError::Kind::Disconnected, "plane graph must be connected");
  }
  AnnotatedPlane ap;
  ap.h = h;
  if (d.empty()) {
    for (Vertex x = 0; x < h.num_vertices(); ++x) d.push_back(h.degree(x));
  }
  if (to_original.empty()) {
    to_original.resize(static_cast<size_t>(h.num_vertices()));
    std::iota(to_original.begin(), to_original.end(), 0);
  }
  ap.d = std::move(d);
  ap.to_original = std::move(to_original);
  ap.rot = planar_embedding(h);
  ap.faces = faces(h, ap.rot);
  ap.incidence = face_incidence(h, ap.rot, ap.faces);
  return ap;
}

std::vector<AnnotatedPlane> annotate(const Graph& g) {
  const InducedSubgraph h = delete_two_vertices(g);
  std::vector<AnnotatedPlane> out;
  for (const auto& comp : connected_components(h.graph, true)) {
    const InducedSubgraph part = induced_subgraph(h.graph, comp);
    std::vector<int> d;
    std::vector<Vertex> orig;
    for (Vertex x : part.to_original) {
      const Vertex o = h.to_original[static_cast<size_t>(x)];
      orig.push_back(o);
      d.push_back(g.degree(o));
    }
    out.push_back(annotate_plane(part.graph, std::move(d), std::move(orig)));
  }
  return out;
}

ChargeLedger initial_charges(const AnnotatedPlane& ap) {
  ChargeLedger l;
  for (Vertex x = 0; x < ap.h.num_vertices(); ++x) l.vertex_charge.push_back(4 * (2 * ap.d_h(x) - 6));
  for (const Face& f : ap.faces) l.face_charge.push_back(4 * (f.degree() - 6));
  return l;
}

namespace {

struct Match {
  Quarters amount = 0;
  std::string rule;
  std::string gap;  // non-empty when no clause matches
};

int n3_h(const AnnotatedPlane& ap, Vertex x) { return ap.h.count_neighbors_of_degree(x, 3); }

Match three_face(const AnnotatedPlane& ap, Vertex u, Vertex a, Vertex b) {
  const int k = ap.d_h(u);
  const int delta = std::min({k, ap.d_h(a), ap.d_h(b)});
  if (delta == 3) return {6, "R2.1", ""};
  if (delta >= 5) return {4, "R2.3", ""};
  if (delta != 4) return {0, "", "3-face with minimum H-degree " + std::to_string(delta)};
  // v is the 4-vertex on the face next to u, w the other one.
  const Vertex v = ap.d_h(a) == 4 ? a : b;
  const Vertex w = v == a ? b : a;
  const int n3 = n3_h(ap, u);
  if (k >= 7) return {8, "R2.2.1", ""};
  if (k == 6) {
    if (n3 >= 4) return {6, "R2.2.2", ""};
    int six_plus = 0;
    for (Vertex x : {u, a, b}) six_plus += ap.d_h(x) >= 6 ? 1 : 0;
    if (n3 == 3 && six_plus == 2) return {5, "R2.2.2", ""};
    if (n3 == 3 && ap.d_h(w) == 5 && n3_h(ap, w) <= 1) return {5, "R2.2.2", ""};
    return {8, "R2.2.2", ""};
  }
  if (n3 == 0) return {8, "R2.2.3", ""};
  if (n3 == 1) return {5, "R2.2.3", ""};
  return {4, "R2.2.3", ""};
}

// f = [v u y x]; v is taken to be a face-neighbor of u with d = 3 when there is one.
Match four_face(const AnnotatedPlane& ap, Vertex a, Vertex b, Vertex x) {
  const Vertex v = ap.d[static_cast<size_t>(a)] == 3 || ap.d[static_cast<size_t>(b)] != 3 ? a : b;
  const Vertex y = v == a ? b : a;
  const auto d = [&](Vertex z) { return ap.d[static_cast<size_t>(z)]; };
  if (d(v) == 3 && (d(y) == 3 || ap.d_h(x) == 4)) return {4, "R3", ""};
  if (d(v) == 3 && ap.d_h(y) >= 4 && ap.d_h(x) >= 5) return {3, "R3", ""};
  if (ap.d_h(v) >= 4 && ap.d_h(y) >= 4) return {2, "R3", ""};
  return {0, "", "4-face neighbors d=(" + std::to_string(d(v)) + "," + std::to_string(d(y)) + ") d_H=(" +
                     std::to_string(ap.d_h(v)) + "," + std::to_string(ap.d_h(y)) + "), opposite d_H=" +
                     std::to_string(ap.d_h(x))};
}

Match five_face(const AnnotatedPlane& ap, Vertex x, Vertex y) {
  const auto d = [&](Vertex z) { return ap.d[static_cast<size_t>(z)]; };
  if (d(x) == 3 && d(y) == 3) return {2, "R4", ""};
  if (std::max(ap.d_h(x), ap.d_h(y)) >= 4) return {1, "R4", ""};
  return {0, "", "5-face neighbors d=(" + std::to_string(d(x)) + "," + std::to_string(d(y)) + ") d_H=(" +
                     std::to_string(ap.d_h(x)) + "," + std::to_string(ap.d_h(y)) + ")"};
}

ChargeLedger run_rules(const AnnotatedPlane& ap, const ChargeLedger& initial,
                       const std::function<void(const GapRecord&)>& on_gap) {
  ChargeLedger l = initial;
  for (Vertex u = 0; u < ap.h.num_vertices(); ++u) {
    const int k = ap.d_h(u);
    if (k < 4) continue;
    const auto& slots = ap.incidence.slots[static_cast<size_t>(u)];
    for (int s = 0; s < k; ++s) {
      const auto [fi, pos] = slots[static_cast<size_t>(s)];
      const Face& f = ap.faces[static_cast<size_t>(fi)];
      const int df = f.degree();
      if (df > 5) continue;
      const auto walk = f.walk();
      auto at = [&](int off) { return walk[static_cast<size_t>(((pos + off) % df + df) % df)]; };
      Match m;
      if (k == 4) {
        m = {2, "R1", ""};
      } else if (df == 3) {
        m = three_face(ap, u, at(-1), at(1));
      } else if (df == 4) {
        m = four_face(ap, at(-1), at(1), at(2));
      } else if (df == 5) {
        m = five_face(ap, at(-1), at(1));
      } else {
        m = {0, "", "face of degree " + std::to_string(df)};
      }
      if (!m.gap.empty()) {
        on_gap({u, fi, s, m.gap});
        continue;
      }
      l.vertex_charge[static_cast<size_t>(u)] -= m.amount;
      l.face_charge[static_cast<size_t>(fi)] += m.amount;
      l.transfers.push_back({u, s, fi, m.amount, m.rule});
    }
  }
  return l;
}

}  // namespace

ChargeLedger apply_rules(const AnnotatedPlane& ap, const ChargeLedger& initial) {
  return run_rules(ap, initial, [&](const GapRecord& g) {
    throw RuleGap(g.vertex, g.face, g.slot,
                  "no rule for vertex " + std::to_string(ap.to_original[static_cast<size_t>(g.vertex)]) +
                      " (H id " + std::to_string(g.vertex) + ") slot " + std::to_string(g.slot) + " face " +
                      std::to_string(g.face) + ": " + g.reason);
  });
}

ChargeLedger apply_rules_collecting(const AnnotatedPlane& ap, const ChargeLedger& initial,
                                    std::vector<GapRecord>& gaps) {
  return run_rules(ap, initial, [&](const GapRecord& g) { gaps.push_back(g); });
}

AuditReport audit(const AnnotatedPlane& ap, const ChargeLedger& final_ledger) {
  AuditReport r;
  r.initial_total = initial_charges(ap).total();
  r.total = final_ledger.total();
  r.conserved = r.total == r.initial_total && r.total == -48;
  for (size_t v = 0; v < final_ledger.vertex_charge.size(); ++v) {
    if (final_ledger.vertex_charge[v] < 0) {
      r.negatives.push_back({"v" + std::to_string(ap.to_original[v]), final_ledger.vertex_charge[v]});
    }
  }
  for (size_t f = 0; f < final_ledger.face_charge.size(); ++f) {
    if (final_ledger.face_charge[f] < 0) r.negatives.push_back({"f" + std::to_string(f), final_ledger.face_charge[f]});
  }
  // Reported with the source graph's vertex ids, like the negatives.
  r.transfers = final_ledger.transfers;
  for (auto& t : r.transfers) t.vertex = ap.to_original[static_cast<size_t>(t.vertex)];
  return r;
}

nlohmann::json to_json(const AuditReport& r, bool with_transfers) {
  nlohmann::json neg = nlohmann::json::array();
  for (const auto& e : r.negatives) neg.push_back({{"element", e.element}, {"charge", format_quarters(e.charge)}});
  nlohmann::json j = {{"total", format_quarters(r.total)}, {"conserved", r.conserved}, {"negatives", neg}};
  if (with_transfers) {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : r.transfers) {
      ts.push_back({{"vertex", t.vertex}, {"slot", t.slot}, {"face", t.face}, {"amount", format_quarters(t.amount)},
                    {"rule", t.rule}});
    }
    j["transfers"] = ts;
  }
  return j;
}

}  // namespace aecc
