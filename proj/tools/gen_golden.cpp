// Writes the Hochschild golden tables, computed with the bar complex only.
#include "entriv/hochschild/hochschild.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: entriv_gen_golden <output-dir>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    for (const char* ring : {"Z", "F2", "F3", "Q"})
        for (int n = 1; n <= 4; ++n) {
            const auto r = entriv::BaseRing::parse(ring);
            const auto hh = entriv::bar_hochschild(entriv::square_zero_extension(r, n), 6);
            const auto path = dir / ("hh_" + std::string(ring) + "_n" + std::to_string(n) + ".json");
            std::ofstream(path) << entriv::to_json_value(hh).dump(2) << "\n";
            std::cout << path.string() << "\n";
        }
    return 0;
}
