// Writes the NEDC, PowerNEDC and SineNEDC speed-nox fixtures: 1180 speed
// samples in km/h followed by the measured NOx in mg/km.

#include "dopetest/cycles.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

void write_cycle(const std::filesystem::path& path, const std::vector<dopetest::decimal>& speeds, int nox)
{
    std::ofstream out{path};
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    for (const auto& v : speeds)
        out << v.to_string() << '\n';
    out << nox << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: make_cycle_fixtures <output-dir>\n";
        return 2;
    }
    const std::filesystem::path dir{argv[1]};
    try {
        std::filesystem::create_directories(dir);
        write_cycle(dir / "NEDC.txt", dopetest::cycles::nedc(), 180);
        write_cycle(dir / "PowerNEDC.txt", dopetest::cycles::power_nedc(), 204);
        write_cycle(dir / "SineNEDC.txt", dopetest::cycles::sine_nedc(), 584);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
