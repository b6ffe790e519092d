#ifndef ZOLO_CLI_OUTPUT_HPP
#define ZOLO_CLI_OUTPUT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zolo/fieldmap.hpp"
#include "zolo/zolotarev.hpp"

namespace zolo::cli {

// 17 significant digits with trailing zeros dropped, locale independent.
std::string format_double(double x);

// Pretty JSON with every double written by format_double and non-finite doubles as null.
std::string dump_json(const nlohmann::json &doc);

std::string sweep_csv(const std::vector<SweepEntry> &entries, std::optional<double> capacity);
nlohmann::json sweep_json(const std::vector<SweepEntry> &entries, std::optional<double> capacity);

// One CSV block per grid: '#' metadata lines, then one line per y value (ascending) holding
// the nx values for ascending x.
std::string field_csv(const std::vector<std::pair<std::string, FieldGrid>> &grids);

struct SvgScene {
    std::vector<std::pair<std::string, FieldGrid>> grids; // one contour colour per grid
    std::vector<double> levels;
    std::vector<Complex> points_E;
    std::vector<Complex> points_F;
    std::vector<Complex> poles;
    std::vector<Complex> zeros;
};
std::string field_svg(const SvgScene &scene);

} // namespace zolo::cli

#endif // ZOLO_CLI_OUTPUT_HPP
