// CSV / JSON export of reports, trajectories and series.
//
// CSV uses '.' decimals, newline-terminated rows and %.17g formatting so that
// identical runs produce byte-identical files and every value round-trips.
#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "warpsol/ode.hpp"
#include "warpsol/series.hpp"
#include "warpsol/synthesis.hpp"

namespace warpsol {

inline std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline void open_out(std::ofstream& out, const std::string& path) {
    out.open(path, std::ios::binary); // no platform newline translation
    if (!out) throw DomainError("cannot open output file: " + path);
}

template <class Real>
void write_csv_table(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<const std::vector<Real>*>& columns) {
    std::ofstream out;
    open_out(out, path);
    for (std::size_t i = 0; i < header.size(); ++i)
        out << header[i] << (i + 1 == header.size() ? "\n" : ",");
    const std::size_t rows = columns.empty() ? 0 : columns.front()->size();
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << format_real(static_cast<double>((*columns[c])[r]))
                << (c + 1 == columns.size() ? "\n" : ",");
}

} // namespace detail

template <class Real>
void write_residual_csv(const std::string& path, const ResidualReport<Real>& rep) {
    detail::write_csv_table<Real>(path, {"t", "res_tangential", "res_orthogonal", "res_master", "c"},
                                  {&rep.grid, &rep.res_tangential, &rep.res_orthogonal,
                                   &rep.res_master, &rep.c_values});
}

template <class Real>
nlohmann::json residual_summary_json(const ResidualReport<Real>& rep) {
    nlohmann::json j;
    j["grid_points"] = rep.grid.size();
    j["max_abs"]["tangential"] = static_cast<double>(rep.max_abs.tangential);
    j["max_abs"]["orthogonal"] = static_cast<double>(rep.max_abs.orthogonal);
    j["max_abs"]["master"] = static_cast<double>(rep.max_abs.master);
    j["singularities"] = nlohmann::json::array();
    for (Real s : rep.singularities) j["singularities"].push_back(static_cast<double>(s));
    return j;
}

template <class Real>
void write_trajectory_csv(const std::string& path, const Trajectory<Real>& traj) {
    detail::write_csv_table<Real>(path, {"t", "u"}, {&traj.t, &traj.u});
}

template <class Real>
void write_series_csv(const std::string& path, const SeriesState<Real>& st) {
    std::ofstream out;
    detail::open_out(out, path);
    out << "order,a,b\n";
    const std::size_t rows = std::max(st.coeffs_a.size(), st.coeffs_b.size());
    for (std::size_t i = 0; i < rows; ++i) {
        const double a = i < st.coeffs_a.size() ? static_cast<double>(st.coeffs_a[i]) : 0.0;
        const double b = i < st.coeffs_b.size() ? static_cast<double>(st.coeffs_b[i]) : 0.0;
        out << i << "," << format_real(a) << "," << format_real(b) << "\n";
    }
}

inline void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out;
    detail::open_out(out, path);
    out << j.dump(2) << "\n";
}

} // namespace warpsol
