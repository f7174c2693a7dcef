#include "core/binio.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

#include "core/hash.hpp"
#include "json.hpp"

static_assert(std::endian::native == std::endian::little,
              "container format is little-endian");

namespace iscat {

namespace {

constexpr char kMagic[4] = {'I', 'S', 'C', 'T'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ofstream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw std::runtime_error("container truncated");
    return v;
}

}  // namespace

std::string write_container(const std::string& path, const Container& c,
                            const std::string& extra_json) {
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + path);
        out.write(kMagic, 4);
        put(out, kVersion);
        put(out, static_cast<std::uint32_t>(c.kind));
        put(out, c.grid.nx);
        put(out, c.grid.ny);
        put(out, c.grid.origin[0]);
        put(out, c.grid.origin[1]);
        put(out, c.grid.extent[0]);
        put(out, c.grid.extent[1]);
        put(out, c.eps);
        put(out, c.seed);
        put(out, std::uint32_t(c.aux.size()));
        put(out, std::uint32_t(c.planes.size()));
        for (double a : c.aux) put(out, a);
        for (const auto& p : c.planes) {
            if (p.size() != c.grid.size())
                throw std::runtime_error("plane size mismatch in " + path);
            out.write(reinterpret_cast<const char*>(p.data()),
                      std::streamsize(p.size() * sizeof(double)));
        }
    }
    const std::string digest = sha256_file_hex(path);
    nlohmann::json side;
    side["format"] = "ISCT";
    side["version"] = kVersion;
    side["kind"] = static_cast<std::uint32_t>(c.kind);
    side["grid"] = {{"nx", c.grid.nx},
                    {"ny", c.grid.ny},
                    {"origin", c.grid.origin},
                    {"extent", c.grid.extent}};
    side["eps"] = c.eps;
    side["seed"] = c.seed;
    side["planes"] = c.planes.size();
    side["sha256"] = digest;
    side["meta"] = nlohmann::json::parse(extra_json);
    std::ofstream js(path + ".json", std::ios::trunc);
    js << side.dump(2) << "\n";
    return digest;
}

Container read_container(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != std::string(kMagic, 4))
        throw std::runtime_error("bad magic in " + path);
    const auto version = get<std::uint32_t>(in);
    if (version != kVersion)
        throw std::runtime_error("unsupported container version in " + path);
    Container c;
    c.kind = static_cast<ArtifactKind>(get<std::uint32_t>(in));
    c.grid.nx = get<std::uint32_t>(in);
    c.grid.ny = get<std::uint32_t>(in);
    c.grid.origin[0] = get<double>(in);
    c.grid.origin[1] = get<double>(in);
    c.grid.extent[0] = get<double>(in);
    c.grid.extent[1] = get<double>(in);
    c.eps = get<double>(in);
    c.seed = get<std::uint64_t>(in);
    const auto naux = get<std::uint32_t>(in);
    const auto nplanes = get<std::uint32_t>(in);
    c.aux.resize(naux);
    for (auto& a : c.aux) a = get<double>(in);
    c.planes.assign(nplanes, std::vector<double>(c.grid.size()));
    for (auto& p : c.planes) {
        in.read(reinterpret_cast<char*>(p.data()),
                std::streamsize(p.size() * sizeof(double)));
        if (!in) throw std::runtime_error("container truncated: " + path);
    }
    return c;
}

}  // namespace iscat
