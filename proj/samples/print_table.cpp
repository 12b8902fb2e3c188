// Build the character table of S_4 and print it as CSV.

#include <hookchar/hookchar.hpp>

#include <iostream>

int main() {
    const auto table = hookchar::make_character_table(4);
    std::cout << table.to_csv();

    // single values are also available without building a table
    const hookchar::partition la({2, 2});
    const hookchar::partition mu({2, 1, 1});
    std::cout << "\nchi^" << la.str() << mu.str() << " = " << hookchar::character(la, mu).str() << '\n';
    std::cout << "dim " << la.str() << " = " << hookchar::dimension(la).str() << '\n';
    return 0;
}
