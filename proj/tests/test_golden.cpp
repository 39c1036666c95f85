// Golden outputs for the figure- and table-producing commands. Pass
// --regenerate to rewrite the files after an intended format change.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "weightgeom/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Golden {
    std::string file;
    std::vector<std::string> args;
    bool transcribed = false;  // typed in from the reference, never regenerated
};

const std::vector<Golden> kGolden = {
    {"dims_e6.txt", {"dims", "E6", "--beta", "1"}},
    {"dims_e7.txt", {"dims", "E7", "--beta", "7"}},
    {"dims_f4.txt", {"dims", "F4", "--beta", "4"}},
    {"dims_g2.txt", {"dims", "G2", "--beta", "1"}},
    {"dims_a5.txt", {"dims", "A5"}},
    {"dims_d6.txt", {"dims", "D6"}},
    {"dims_d5_halfspin.txt", {"dims", "D5", "--beta", "5"}},
    {"dims_e6.json", {"dims", "E6", "--format", "json"}},
    {"hasse_e6.dot", {"hasse", "E6", "1", "--format", "dot"}},
    {"hasse_d4.txt", {"hasse", "D4", "1"}},
    {"orbit_d4.txt", {"orbit", "D4", "1,0,0,0"}},
    {"invariants_e6.txt", {"invariants", "E6", "0,0,0,0,0,1", "--degree", "3"}},
    {"branch_e6_d5.txt", {"branch", "e6-d5", "1,0,0,0,0,0"}},
    {"branch_e6_f4.txt", {"branch", "e6-f4", "1,0,0,0,0,0"}},
    {"branch_e7_e6.txt", {"branch", "e7-e6", "0,0,0,0,0,0,1"}},
    {"incidence_e6.txt", {"incidence", "E6"}},
    {"incidence_d4.txt", {"incidence", "D4"}},
    {"triality_table.txt", {"triality", "table"}, true},
    {"triality_psi.txt", {"triality", "psi"}},
    {"duality_e6_chamber.txt", {"duality", "e6-chamber"}},
    {"duality_e6_chamber.json", {"duality", "e6-chamber", "--format", "json"}},
    {"duality_e6_extra.txt", {"duality", "e6-extra"}},
    {"duality_e6_brace.txt", {"duality", "e6-brace"}},
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    bool regenerate = argc > 1 && std::string(argv[1]) == "--regenerate";
    const fs::path dir = WG_GOLDEN_DIR;
    int failed = 0;
    for (const auto& g : kGolden) {
        std::ostringstream out, err;
        int code = wg::run(g.args, out, err);
        const fs::path file = dir / g.file;
        if (code != 0) {
            std::cout << "FAIL " << g.file << ": exit " << code << ": " << err.str();
            ++failed;
            continue;
        }
        if (regenerate && !g.transcribed) {
            fs::create_directories(dir);
            std::ofstream(file, std::ios::binary) << out.str();
            std::cout << "wrote " << file.string() << '\n';
            continue;
        }
        if (regenerate) continue;
        if (!fs::exists(file)) {
            std::cout << "FAIL " << g.file << ": missing (run with --regenerate)\n";
            ++failed;
        } else if (slurp(file) != out.str()) {
            std::cout << "FAIL " << g.file << ": output differs\n";
            ++failed;
        } else {
            std::cout << "ok   " << g.file << '\n';
        }
    }
    return failed ? 1 : 0;
}
