// Check the hook character sum at n=6, k=2, l=1 with the brute-force tensor
// trace attached to every conjugacy class, and print the report.

#include <hookchar/hookchar.hpp>

#include <iostream>

int main() {
    hookchar::verify_context ctx;
    const auto report = hookchar::verify_main_identity(ctx, 6, 2, 1, hookchar::oracle_mode::automatic);
    std::cout << hookchar::report_to_plain(report);

    // the same data, machine-readable
    std::cout << '\n' << hookchar::report_to_json(report).dump(2) << '\n';
    return report.all_pass ? 0 : 1;
}
