// SPDX-License-Identifier: MIT

#include "legaug/plat.hpp"

#include <algorithm>
#include <sstream>

namespace legaug {

// ---------------------------------------------------------------------------
// Parsing

PlatDiagram parse_plat(const std::string& text) {
  PlatDiagram d;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool have_strands = false;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;  // blank
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (word == "strands") {
      int n;
      if (!(ls >> n)) throw Error("parse_plat: missing strand count" + where());
      if (n <= 0 || n % 2 != 0)
        throw Error("parse_plat: strand count must be positive and even" +
                    where());
      if (have_strands)
        throw Error("parse_plat: duplicate strands line" + where());
      d.n = n;
      have_strands = true;
    } else if (word == "cross") {
      int k;
      if (!(ls >> k)) throw Error("parse_plat: missing crossing index" + where());
      if (!have_strands)
        throw Error("parse_plat: cross before strands" + where());
      if (k < 1 || k >= d.n)
        throw Error("parse_plat: crossing index out of range 1.." +
                    std::to_string(d.n - 1) + where());
      d.crossings.push_back(k);
    } else {
      throw Error("parse_plat: unknown token \"" + word + "\"" + where());
    }
    std::string extra;
    if (ls >> extra)
      throw Error("parse_plat: trailing token \"" + extra + "\"" + where());
  }
  if (!have_strands) throw Error("parse_plat: missing strands line");
  return d;
}

std::string plat_str(const PlatDiagram& d) {
  std::ostringstream os;
  os << "strands " << d.n << "\n";
  for (int k : d.crossings) os << "cross " << k << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Strand bookkeeping

namespace {

/// path_at[region][pos0]: index (0-based left position) of the strand path
/// occupying each position in each region.
std::vector<std::vector<int>> occupancy(const PlatDiagram& d) {
  std::vector<std::vector<int>> path_at;
  std::vector<int> cur(d.n);
  for (int p = 0; p < d.n; ++p) cur[p] = p;
  path_at.push_back(cur);
  for (int k : d.crossings) {
    std::swap(cur[k - 1], cur[k]);
    path_at.push_back(cur);
  }
  return path_at;
}

struct Step {
  int path;  ///< 0-based left position of the path
  int dir;   ///< +1 rightward, -1 leftward
  bool operator==(const Step& o) const = default;
};

struct Cycle {
  std::vector<Step> steps;
  /// events[i] happens after steps[i] (cyclically): a cusp index. Right cusps
  /// are encoded as k (0-based), left cusps as -1-k.
  std::vector<int> events;
};

/// Walk the closed curve containing `start`, recording steps and cusp events.
Cycle walk(const std::vector<std::vector<int>>& path_at, Step start) {
  const auto& final_pos_of = path_at.back();
  int n = static_cast<int>(final_pos_of.size());
  std::vector<int> final_pos(n);
  for (int pos = 0; pos < n; ++pos) final_pos[final_pos_of[pos]] = pos;

  Cycle cycle;
  Step cur = start;
  do {
    cycle.steps.push_back(cur);
    if (cur.dir == +1) {
      int q = final_pos[cur.path];          // arrival position at right edge
      int cusp = q / 2;                     // right cusp index (0-based)
      cycle.events.push_back(cusp);
      int partner_pos = q ^ 1;
      cur = Step{path_at.back()[partner_pos] == cur.path
                     ? cur.path  // unreachable; partner differs
                     : [&] {
                         for (int p = 0; p < n; ++p)
                           if (final_pos[p] == partner_pos) return p;
                         return -1;
                       }(),
                 -1};
    } else {
      int p = cur.path;                     // arrival position at left edge
      int cusp = p / 2;                     // left cusp index (0-based)
      cycle.events.push_back(-1 - cusp);
      cur = Step{p ^ 1, +1};
    }
  } while (!(cur == start));
  return cycle;
}

}  // namespace

// ---------------------------------------------------------------------------
// Maslov potentials

MaslovAssignment solve_maslov(const PlatDiagram& d) {
  auto path_at = occupancy(d);
  const int n = d.n;
  // Difference constraints mu[a] - mu[b] = 1 for each cusp (a upper, b lower).
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other, mu_other - mu_this)
  auto add = [&](int a, int b) {  // mu[a] = mu[b] + 1
    adj[a].push_back({b, -1});
    adj[b].push_back({a, +1});
  };
  for (int k = 0; k < n / 2; ++k) {
    add(2 * k, 2 * k + 1);  // left cusp k
    add(path_at.back()[2 * k], path_at.back()[2 * k + 1]);  // right cusp k
  }
  std::vector<bool> seen(n, false);
  std::vector<int> mu(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // BFS over one component of the constraint graph.
    std::vector<int> queue{start}, members;
    seen[start] = true;
    mu[start] = 0;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      members.push_back(v);
      for (auto [w, off] : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          mu[w] = mu[v] + off;
          queue.push_back(w);
        } else if (mu[w] != mu[v] + off) {
          throw Error(
              "solve_maslov: inconsistent cusp constraints (a component has "
              "nonzero rotation number)");
        }
      }
    }
    // Normalize: largest-numbered left position in the component gets 0.
    int anchor = *std::max_element(members.begin(), members.end());
    int shift = mu[anchor];
    for (int v : members) mu[v] -= shift;
  }
  MaslovAssignment out;
  for (const auto& region : path_at) {
    std::vector<int> row(n);
    for (int pos = 0; pos < n; ++pos) row[pos] = mu[region[pos]];
    out.mu.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tracing

TraceResult trace_knot(const PlatDiagram& d,
                       const std::vector<int>& flip_components) {
  auto path_at = occupancy(d);
  const int n = d.n;
  const int cusps = n / 2;
  TraceResult out;
  out.path_component.assign(n, 0);
  out.path_direction.assign(n, 0);
  out.sigma.assign(cusps, 0);
  out.prev_arc.assign(cusps, 0);
  out.cusp_component.assign(cusps, 0);
  out.cusp_rc.assign(cusps, {0, 0});
  out.t_rc.assign(cusps, {0, 0});

  std::vector<int> arc_of_path(n, 0);

  int component = 0;
  for (int start_path = 0; start_path < n; ++start_path) {
    if (out.path_component[start_path] != 0) continue;
    ++component;
    bool flipped = std::find(flip_components.begin(), flip_components.end(),
                             component) != flip_components.end();
    Cycle cycle = walk(path_at, Step{start_path, flipped ? -1 : +1});
    const auto& steps = cycle.steps;
    const auto& events = cycle.events;
    const int N = static_cast<int>(steps.size());
    for (const Step& s : steps) {
      out.path_component[s.path] = component;
      out.path_direction[s.path] = s.dir;
    }
    // Arc assignment: after passing right cusp k (base point *_k) the
    // traversal is on arc k+1 until the next base point.
    int current_arc = 0;
    for (int i = 0; i < N; ++i)
      if (events[i] >= 0) current_arc = events[i] + 1;
    if (current_arc == 0)
      throw Error("trace_knot: component without a right cusp");
    // `current_arc` is now the arc of steps[0] (the last base point passed
    // before the cycle start). Sweep once more, assigning as we go.
    for (int i = 0; i < N; ++i) {
      arc_of_path[steps[i].path] = current_arc;
      if (events[i] >= 0) {
        int k = events[i];
        out.prev_arc[k] = current_arc;
        out.cusp_component[k] = component;
        // steps[i] arrives at the right edge (dir == +1 by construction);
        // recover its arrival position to read the entering strand.
        const auto& last = path_at.back();
        int q = -1;
        for (int pos = 0; pos < n; ++pos)
          if (last[pos] == steps[i].path) q = pos;
        bool enters_upper = (q == 2 * k);
        out.sigma[k] = enters_upper ? -1 : +1;
        int uk = k + 1;
        // Chord grading: r = arc at the upper endpoint, c = arc at the lower
        // endpoint. When the traversal enters the cusp on the upper strand,
        // the upper strand carries the arc ending at *_k.
        out.cusp_rc[k] = enters_upper ? std::make_pair(current_arc, uk)
                                      : std::make_pair(uk, current_arc);
        out.t_rc[k] = {uk, current_arc};
        current_arc = uk;
      }
    }
  }
  out.components = component;

  // Arc table per (region, position).
  for (const auto& region : path_at) {
    std::vector<int> row(n);
    for (int pos = 0; pos < n; ++pos) row[pos] = arc_of_path[region[pos]];
    out.arc.push_back(std::move(row));
  }

  // Crossings: (r, c) arcs and oriented signs. In every crossing the strand
  // entering at the upper-left position passes in front under the resolution,
  // so it carries the chord's upper endpoint: r = its arc, c = the other
  // strand's arc. The sign is +1 exactly when the two strands are traversed
  // in the same direction.
  for (int j = 0; j < d.num_crossings(); ++j) {
    int k0 = d.crossings[j] - 1;
    int upper_path = path_at[j][k0], lower_path = path_at[j][k0 + 1];
    out.crossing_rc.push_back(
        {arc_of_path[upper_path], arc_of_path[lower_path]});
    out.crossing_sign.push_back(
        out.path_direction[upper_path] == out.path_direction[lower_path] ? +1
                                                                         : -1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classical invariants

ClassicalInvariants classical_invariants(const PlatDiagram& d,
                                         const TraceResult& trace) {
  ClassicalInvariants out;
  out.tb_component.assign(trace.components, 0);
  out.rotation.assign(trace.components, 0);
  auto path_at = occupancy(d);
  int writhe = 0;
  for (int j = 0; j < d.num_crossings(); ++j) {
    int k0 = d.crossings[j] - 1;
    int cu = trace.path_component[path_at[j][k0]];
    int cl = trace.path_component[path_at[j][k0 + 1]];
    writhe += trace.crossing_sign[j];
    if (cu == cl) out.tb_component[cu - 1] += trace.crossing_sign[j];
  }
  // Down-minus-up cusp counts give twice the rotation number.
  std::vector<int> down_minus_up(trace.components, 0);
  for (int k = 0; k < d.num_cusps(); ++k) {
    // Right cusp k: entering on the upper strand means the orientation turns
    // downward through the cusp.
    int comp = trace.cusp_component[k];
    down_minus_up[comp - 1] += (trace.sigma[k] == -1) ? +1 : -1;
    out.tb_component[comp - 1] -= 1;
    // Left cusp k joins paths 2k and 2k+1 (0-based); downward iff the upper
    // path arrives at the left edge (is traversed leftward).
    int upper_path = 2 * k;
    int lcomp = trace.path_component[upper_path];
    down_minus_up[lcomp - 1] +=
        (trace.path_direction[upper_path] == -1) ? +1 : -1;
  }
  for (int c = 0; c < trace.components; ++c)
    out.rotation[c] = down_minus_up[c] / 2;
  out.tb_total = writhe - d.num_cusps();
  return out;
}

}  // namespace legaug
