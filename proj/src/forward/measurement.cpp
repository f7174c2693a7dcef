#include "forward/measurement.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace iscat {

void MeasurementConfig::validate(const DiskSupport& support) const {
    if (!(band_K > 1.0))
        throw std::invalid_argument("measurement band must satisfy K > 1");
    if (band_nodes == 0)
        throw std::invalid_argument("band_nodes must be positive");
    if (!(eps > 0.0))
        throw std::invalid_argument("field order eps must be positive");
    if (!(p > eps + 0.5))
        throw std::invalid_argument("(A4) violated: p <= eps + 1/2");
    for (const auto& x : points) {
        if (!(x[2] > 0.0))
            throw std::invalid_argument(
                "measurement points must satisfy x3 > 0");
        if (support.dist(x[0], x[1]) <= 0.0)
            throw std::invalid_argument(
                "(A3) violated: measurement projection meets the support "
                "disk");
    }
}

bool segment_clears_support(const DiskSupport& support, const Point3& x,
                            const Point3& y) {
    // Distance from the disk center to the planar segment [x', y'].
    const double ax = x[0] - support.center[0], ay = x[1] - support.center[1];
    const double bx = y[0] - support.center[0], by = y[1] - support.center[1];
    const double dx = bx - ax, dy = by - ay;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) {
        t = -(ax * dx + ay * dy) / len2;
        t = std::max(0.0, std::min(1.0, t));
    }
    const double cx = ax + t * dx, cy = ay + t * dy;
    return std::hypot(cx, cy) > support.radius;
}

void save_dataset(const std::string& csv_path, const BackscatterDataset& ds) {
    std::ofstream out(csv_path);
    if (!out)
        throw std::runtime_error("save_dataset: cannot open " + csv_path);
    out << "x1,x2,x3,n0,stderr\n";
    out.precision(17);
    for (std::size_t i = 0; i < ds.config.points.size(); ++i) {
        const auto& x = ds.config.points[i];
        out << x[0] << ',' << x[1] << ',' << x[2] << ',' << ds.n0[i] << ','
            << (i < ds.std_err.size() ? ds.std_err[i] : 0.0) << '\n';
    }
    nlohmann::json meta;
    meta["band"] = {1.0, ds.config.band_K};
    meta["band_nodes"] = ds.config.band_nodes;
    meta["p"] = ds.config.p;
    meta["eps"] = ds.config.eps;
    meta["solver"] = ds.solver;
    meta["seed"] = ds.seed;
    meta["short_band_warning"] = ds.short_band_warning;
    std::ofstream js(csv_path + ".json");
    js << meta.dump(2) << '\n';
}

BackscatterDataset load_dataset(const std::string& csv_path) {
    std::ifstream in(csv_path);
    if (!in)
        throw std::runtime_error("load_dataset: cannot open " + csv_path);
    BackscatterDataset ds;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        double v[5];
        char comma;
        for (int c = 0; c < 5; ++c) {
            ss >> v[c];
            if (c < 4) ss >> comma;
        }
        ds.config.points.push_back({v[0], v[1], v[2]});
        ds.n0.push_back(v[3]);
        ds.std_err.push_back(v[4]);
    }
    std::ifstream js(csv_path + ".json");
    if (js) {
        nlohmann::json meta;
        js >> meta;
        ds.config.band_K = meta.value("band", std::vector<double>{1.0, 200.0})[1];
        ds.config.band_nodes = meta.value("band_nodes", 1592u);
        ds.config.p = meta.value("p", 1.5);
        ds.config.eps = meta.value("eps", 0.5);
        ds.solver = meta.value("solver", std::string("born"));
        ds.seed = meta.value("seed", std::uint64_t(0));
        ds.short_band_warning = meta.value("short_band_warning", false);
    }
    return ds;
}

}  // namespace iscat
