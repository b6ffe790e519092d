#ifndef ZOLO_PRESETS_HPP
#define ZOLO_PRESETS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zolo/geometry.hpp"

namespace zolo {

// A named example geometry together with the solver settings it is normally run with.
struct Preset {
    std::string name;
    std::string description;
    std::vector<ShapeSpec> shapes_E;
    std::vector<ShapeSpec> shapes_F;
    int degree = 12;
    int lawson_steps = 200;
    double damping = 0.95;
    std::optional<double> capacity{};

    SampleSet samples() const { return build_sample_set(shapes_E, shapes_F); }
};

// fig1a..fig1f, fig2a..fig2d, fig3a..fig3d, fig5, fig6, fig7.
// Throws ValidationError(kConfig) for an unknown name.
const Preset &preset(std::string_view name);

const std::vector<std::string> &preset_names();

} // namespace zolo

#endif // ZOLO_PRESETS_HPP
