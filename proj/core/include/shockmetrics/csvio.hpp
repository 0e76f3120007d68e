#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "shockmetrics/graph.hpp"
#include "shockmetrics/sim.hpp"
#include "shockmetrics/steady.hpp"
#include "shockmetrics/ttc.hpp"

namespace shockmetrics {

// Shortest round-trippable decimal ("%.12g"); infinities print as "inf"/"-inf".
std::string format_number(double x);

// RFC-4180 quoting: returns the field quoted iff it contains ',', '"' or a
// newline.
std::string csv_field(const std::string& raw);

// Header "t,q,q_upper,q_asymptotic", one row per grid point.  Absent optional
// columns leave their cells empty.  The crude large-t column is clamped to
// [0, 1] on output (the in-memory value is the raw approximation).
void write_ttc_csv(std::ostream& os, const TtcResult& r);

// Sidecar "metric,value" rows: expected_ttc, expected_ttc_lower.
void write_ttc_scalars_csv(std::ostream& os, const TtcResult& r);

// "node,p,p_lower,p_upper,converged" —— with a trailing "bounds_unverified"
// flag column (0/1) when bounds were computed; bound cells stay empty when
// bounds is null.
void write_steady_csv(std::ostream& os, const AttackDefenseGraph& g,
                      const SteadyStateResult& r, const SteadyStateBounds* bounds);

// "c,k,p,p_lower,p_upper" rows for homogeneous regular-graph sweeps.
void write_regular_cells_csv(std::ostream& os,
                             const std::vector<std::tuple<double, int, RegularCell>>& rows);

// Node modes: "replication,T" with "#"-comment metadata (seed, reps, mode).
void write_sim_sample_csv(std::ostream& os, const SimResult& r);

// Network mode: "node,occupancy" with metadata comments.
void write_sim_occupancy_csv(std::ostream& os, const AttackDefenseGraph& g,
                             const SimResult& r);

// Network mode trajectory: "time,fraction" with metadata comments.
void write_sim_fraction_csv(std::ostream& os, const SimResult& r);

// Path overloads open the file for writing (io_error on failure) and forward
// to the stream overloads.
void write_ttc_csv(const std::string& path, const TtcResult& r);
void write_ttc_scalars_csv(const std::string& path, const TtcResult& r);
void write_steady_csv(const std::string& path, const AttackDefenseGraph& g,
                      const SteadyStateResult& r, const SteadyStateBounds* bounds);
void write_regular_cells_csv(const std::string& path,
                             const std::vector<std::tuple<double, int, RegularCell>>& rows);
void write_sim_sample_csv(const std::string& path, const SimResult& r);
void write_sim_occupancy_csv(const std::string& path, const AttackDefenseGraph& g,
                             const SimResult& r);
void write_sim_fraction_csv(const std::string& path, const SimResult& r);

}  // namespace shockmetrics
