#include "shockmetrics/csvio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "shockmetrics/errors.hpp"

namespace shockmetrics {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

const char* mode_name(SimMode m) {
    switch (m) {
        case SimMode::NodeFrozenEnv: return "node-frozen";
        case SimMode::NodeMixedEnv: return "node-mixed";
        case SimMode::Network: return "network";
    }
    return "?";
}

void sim_metadata(std::ostream& os, const SimResult& r) {
    os << "# seed=" << r.seed << "\n";
    os << "# replications=" << r.replications << "\n";
    os << "# mode=" << mode_name(r.mode) << "\n";
}

template <class Fn>
void to_file(const std::string& path, Fn&& fn) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open '" + path + "' for writing");
    fn(os);
    os.flush();
    if (!os) throw io_error("write to '" + path + "' failed");
}

}  // namespace

void write_ttc_csv(std::ostream& os, const TtcResult& r) {
    os << "t,q,q_upper,q_asymptotic\n";
    for (std::size_t i = 0; i < r.t_grid.size(); ++i) {
        os << format_number(r.t_grid[i]) << ',' << format_number(r.q[i]) << ',';
        if (i < r.q_upper.size()) os << format_number(r.q_upper[i]);
        os << ',';
        if (i < r.q_asymptotic.size())
            os << format_number(std::clamp(r.q_asymptotic[i], 0.0, 1.0));
        os << '\n';
    }
}

void write_ttc_scalars_csv(std::ostream& os, const TtcResult& r) {
    os << "metric,value\n";
    os << "expected_ttc," << format_number(r.expected_ttc) << '\n';
    os << "expected_ttc_lower," << format_number(r.expected_ttc_lower) << '\n';
}

void write_steady_csv(std::ostream& os, const AttackDefenseGraph& g,
                      const SteadyStateResult& r, const SteadyStateBounds* bounds) {
    os << "node,p,p_lower,p_upper,converged";
    if (bounds) os << ",bounds_unverified";
    os << '\n';
    const bool unverified = bounds && !bounds->a4_ok;
    for (int v = 0; v < g.size(); ++v) {
        os << csv_field(g.nodes[v]) << ',' << format_number(r.p[v]) << ',';
        if (bounds) os << format_number(bounds->lower[v]);
        os << ',';
        if (bounds) os << format_number(bounds->upper[v]);
        os << ',' << (r.converged ? 1 : 0);
        if (bounds) os << ',' << (unverified ? 1 : 0);
        os << '\n';
    }
}

void write_regular_cells_csv(std::ostream& os,
                             const std::vector<std::tuple<double, int, RegularCell>>& rows) {
    os << "c,k,p,p_lower,p_upper\n";
    for (const auto& [c, k, cell] : rows) {
        os << format_number(c) << ',' << k << ',' << format_number(cell.p) << ','
           << format_number(cell.p_lower) << ',' << format_number(cell.p_upper) << '\n';
    }
}

void write_sim_sample_csv(std::ostream& os, const SimResult& r) {
    sim_metadata(os, r);
    os << "replication,T\n";
    for (std::size_t i = 0; i < r.empirical_cdf.size(); ++i)
        os << i << ',' << format_number(r.empirical_cdf[i]) << '\n';
}

void write_sim_occupancy_csv(std::ostream& os, const AttackDefenseGraph& g,
                             const SimResult& r) {
    sim_metadata(os, r);
    os << "node,occupancy\n";
    for (int v = 0; v < g.size(); ++v)
        os << csv_field(g.nodes[v]) << ',' << format_number(r.occupancy[v]) << '\n';
}

void write_sim_fraction_csv(std::ostream& os, const SimResult& r) {
    sim_metadata(os, r);
    os << "time,fraction\n";
    for (const auto& [t, f] : r.fraction_series)
        os << format_number(t) << ',' << format_number(f) << '\n';
}

void write_ttc_csv(const std::string& path, const TtcResult& r) {
    to_file(path, [&](std::ostream& os) { write_ttc_csv(os, r); });
}
void write_ttc_scalars_csv(const std::string& path, const TtcResult& r) {
    to_file(path, [&](std::ostream& os) { write_ttc_scalars_csv(os, r); });
}
void write_steady_csv(const std::string& path, const AttackDefenseGraph& g,
                      const SteadyStateResult& r, const SteadyStateBounds* bounds) {
    to_file(path, [&](std::ostream& os) { write_steady_csv(os, g, r, bounds); });
}
void write_regular_cells_csv(const std::string& path,
                             const std::vector<std::tuple<double, int, RegularCell>>& rows) {
    to_file(path, [&](std::ostream& os) { write_regular_cells_csv(os, rows); });
}
void write_sim_sample_csv(const std::string& path, const SimResult& r) {
    to_file(path, [&](std::ostream& os) { write_sim_sample_csv(os, r); });
}
void write_sim_occupancy_csv(const std::string& path, const AttackDefenseGraph& g,
                             const SimResult& r) {
    to_file(path, [&](std::ostream& os) { write_sim_occupancy_csv(os, g, r); });
}
void write_sim_fraction_csv(const std::string& path, const SimResult& r) {
    to_file(path, [&](std::ostream& os) { write_sim_fraction_csv(os, r); });
}

}  // namespace shockmetrics
