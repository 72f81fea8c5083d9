#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "nilfold/dynamics.hpp"
#include "nilfold/grid.hpp"
#include "nilfold/mat4.hpp"

#include <nlohmann/json_fwd.hpp>

namespace nilfold {
namespace io {

// 17 significant digits: round-trips doubles exactly, no timestamps anywhere.
std::string fmt17(double v);

void write_surface_csv(std::ostream& os, const std::vector<grid::SurfaceRow>& rows);
void write_surface_json(std::ostream& os, const std::vector<grid::SurfaceRow>& rows);
void write_eigengrid_csv(std::ostream& os, const std::vector<grid::EigenGridRow>& rows);
void write_eigengrid_json(std::ostream& os, const std::vector<grid::EigenGridRow>& rows);
void write_reduced_grid_csv(std::ostream& os, const std::vector<grid::ReducedGridRow>& rows);
void write_reduced_grid_json(std::ostream& os, const std::vector<grid::ReducedGridRow>& rows);
void write_reduced_curves_csv(std::ostream& os, const std::vector<grid::ReducedCurveRow>& rows);
void write_reduced_curves_json(std::ostream& os, const std::vector<grid::ReducedCurveRow>& rows);
void write_trajectory_csv(std::ostream& os, const dynamics::Trajectory& t);
void write_trajectory_json(std::ostream& os, const dynamics::Trajectory& t);

// Matrix golden files: JSON array of rows; rationals as "num/den" strings,
// doubles as numbers.
nlohmann::json matrix_json(const Mat4Q& m);
nlohmann::json matrix_json(const Mat4D& m);
Mat4Q matrix_from_json_exact(const nlohmann::json& j);

}  // namespace io
}  // namespace nilfold
