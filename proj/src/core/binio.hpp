#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/grid.hpp"

namespace iscat {

// On-disk artifact container: fixed little-endian layout, magic "ISCT",
// format version, a kind tag, the grid spec, model scalars, an auxiliary
// float block (e.g. Radon radii), then row-major float64 planes.  A JSON
// sidecar `<path>.json` carries the same header fields plus the SHA-256 of
// the binary payload for manifest provenance.
enum class ArtifactKind : std::uint32_t {
    field_realization = 1,
    strength = 2,    // planes are angle samples
    anisotropy = 3,  // planes a1, a2, a3
    radon = 4,       // planes indexed by radius, aux holds radii
};

struct Container {
    ArtifactKind kind{};
    GridSpec2D grid;
    double eps = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> aux;
    std::vector<std::vector<double>> planes;
};

// Writes binary + sidecar; `extra_json` (may be "{}") is merged into the
// sidecar under "meta".  Returns the SHA-256 of the binary file.
std::string write_container(const std::string& path, const Container& c,
                            const std::string& extra_json = "{}");
Container read_container(const std::string& path);

}  // namespace iscat
