// Rewrites tests/golden/<name>.out from the current CLI. Review the diff before
// committing: golden files are the byte-level contract checked by ctest.

#include "../tests/golden_cases.hpp"

#include <iostream>

int main() {
    int changed = 0;
    for (const auto& c : golden::cases()) {
        auto o = golden::run(c);
        if (!o.exit_ok) std::cerr << c.name << ": unexpected exit code\n";
        if (o.actual == o.expected) continue;
        std::ofstream(golden::root() + "/tests/golden/" + c.name + ".out", std::ios::binary) << o.actual;
        std::cout << "wrote " << c.name << "\n";
        ++changed;
    }
    std::cout << changed << " golden files updated\n";
}
