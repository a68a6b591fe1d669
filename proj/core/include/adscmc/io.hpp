#ifndef ADSCMC_IO_HPP
#define ADSCMC_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "adscmc/e42.hpp"
#include "adscmc/geometry.hpp"
#include "adscmc/grid.hpp"
#include "adscmc/tolerances.hpp"
#include "adscmc/weierstrass.hpp"

namespace adscmc {

// plus: (x1, x2, x3) / (1 + x0), minus: (x1, x2, x3) / (1 - x0).
// Throws HyperquadricError when |det p - 1| > tol.hyperquadric and PoleError
// when the denominator is within tol.chart_pole of zero.
Vec3 project_h31(const Mat2& p, Pole pole, const Tolerances& tol = {});

// -y1^2 + y2^2 + y3^2 < 1
bool inside_s21(const Vec3& y);

enum class Format { Obj, Json, Csv };
Format parse_format(std::string_view s);
// From the file extension; throws FormatError.
Format format_for_path(const std::string& path);

// JSON text with sorted keys, two-space indent, %.17g floats, NaN as null.
std::string dump_json(const nlohmann::json& j);

// OBJ: nu*nv vertices in row-major order, two triangles per quad. Faces touching
// a masked or unprojectable vertex are dropped; such vertices are written as 0 0 0.
std::string obj_text(const SurfaceGridH31& s, Pole pole, const Tolerances& tol = {});
std::string obj_text(const SurfaceGridE31& s);

// H31 vertices are the matrix entries [a, b, c, d]; E31 vertices are [x1, x2, x3].
nlohmann::json surface_json(const SurfaceGridH31& s);
nlohmann::json surface_json(const SurfaceGridE31& s);
nlohmann::json report_json(const GeometryReport& r);

// One row per point with fundamental data.
std::string csv_text(const FundamentalData& fd);

using AnySurface = std::variant<SurfaceGridH31, SurfaceGridE31>;

// Throws FormatError on schema violations.
AnySurface surface_from_json(const nlohmann::json& j);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

// Dispatches on format; the report is attached to JSON output and required for CSV.
void export_surface(const AnySurface& s, Format format, const std::string& path, Pole pole = Pole::Plus,
                    const GeometryReport* report = nullptr, const Tolerances& tol = {});
AnySurface import_surface(const std::string& path);

}  // namespace adscmc

#endif
