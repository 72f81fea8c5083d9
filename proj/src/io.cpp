#include "nilfold/io.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace nilfold {
namespace io {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_surface_csv(std::ostream& os, const std::vector<grid::SurfaceRow>& rows) {
    os << "mu,nu,q0,kappa,Q,P,config,on_fold,on_hopf\n";
    for (const auto& r : rows)
        os << fmt17(r.mu) << ',' << fmt17(r.nu) << ',' << fmt17(r.q0) << ',' << fmt17(r.kappa)
           << ',' << fmt17(r.Q) << ',' << fmt17(r.P) << ',' << config_name(r.config) << ','
           << (r.on_fold ? 1 : 0) << ',' << (r.on_hopf ? 1 : 0) << '\n';
}

void write_surface_json(std::ostream& os, const std::vector<grid::SurfaceRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"mu", r.mu},
                       {"nu", r.nu},
                       {"q0", r.q0},
                       {"kappa", r.kappa},
                       {"Q", r.Q},
                       {"P", r.P},
                       {"config", config_name(r.config)},
                       {"on_fold", r.on_fold},
                       {"on_hopf", r.on_hopf}});
    os << out.dump(2) << '\n';
}

void write_eigengrid_csv(std::ostream& os, const std::vector<grid::EigenGridRow>& rows) {
    os << "mu,nu,tag\n";
    for (const auto& r : rows)
        os << fmt17(r.mu0) << ',' << fmt17(r.nu0) << ',' << config_name(r.config) << '\n';
}

void write_eigengrid_json(std::ostream& os, const std::vector<grid::EigenGridRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"mu", r.mu0}, {"nu", r.nu0}, {"tag", config_name(r.config)}});
    os << out.dump(2) << '\n';
}

void write_reduced_grid_csv(std::ostream& os, const std::vector<grid::ReducedGridRow>& rows) {
    os << "beta,q0,r,config\n";
    for (const auto& r : rows)
        os << fmt17(r.beta) << ',' << fmt17(r.q0) << ',' << fmt17(r.r) << ','
           << config_name(r.config) << '\n';
}

void write_reduced_grid_json(std::ostream& os, const std::vector<grid::ReducedGridRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"beta", r.beta}, {"q0", r.q0}, {"r", r.r}, {"config", config_name(r.config)}});
    os << out.dump(2) << '\n';
}

void write_reduced_curves_csv(std::ostream& os, const std::vector<grid::ReducedCurveRow>& rows) {
    os << "beta,alpha_fold,alpha_hopf,r\n";
    for (const auto& r : rows)
        os << fmt17(r.beta) << ',' << fmt17(r.alpha_fold) << ',' << fmt17(r.alpha_hopf) << ','
           << fmt17(r.r) << '\n';
}

void write_reduced_curves_json(std::ostream& os, const std::vector<grid::ReducedCurveRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"beta", r.beta},
                       {"alpha_fold", r.alpha_fold},
                       {"alpha_hopf", r.alpha_hopf},
                       {"r", r.r}});
    os << out.dump(2) << '\n';
}

void write_trajectory_csv(std::ostream& os, const dynamics::Trajectory& t) {
    os << "t,q1,q2,p1,p2,H\n";
    for (std::size_t i = 0; i < t.times.size(); ++i) {
        const auto& x = t.states[i];
        os << fmt17(t.times[i]) << ',' << fmt17(x[0]) << ',' << fmt17(x[1]) << ',' << fmt17(x[2])
           << ',' << fmt17(x[3]) << ',' << fmt17(t.energies[i]) << '\n';
    }
}

void write_trajectory_json(std::ostream& os, const dynamics::Trajectory& t) {
    json out;
    out["escaped"] = t.escaped;
    out["method"] = t.method_used == dynamics::Method::Rk4 ? "rk4" : "leapfrog-split";
    out["fell_back_to_rk4"] = t.fell_back_to_rk4;
    json rows = json::array();
    for (std::size_t i = 0; i < t.times.size(); ++i) {
        const auto& x = t.states[i];
        rows.push_back({{"t", t.times[i]},
                        {"q1", x[0]},
                        {"q2", x[1]},
                        {"p1", x[2]},
                        {"p2", x[3]},
                        {"H", t.energies[i]}});
    }
    out["samples"] = rows;
    os << out.dump(2) << '\n';
}

json matrix_json(const Mat4Q& m) {
    json out = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(rat_to_string(m(r, c)));
        out.push_back(row);
    }
    return out;
}

json matrix_json(const Mat4D& m) {
    json out = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(m(r, c));
        out.push_back(row);
    }
    return out;
}

Mat4Q matrix_from_json_exact(const json& j) {
    Mat4Q m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = rat_parse(j.at(r).at(c).get<std::string>());
    return m;
}

}  // namespace io
}  // namespace nilfold
