// Writes the built-in fixture corpus as JSON files; used to (re)generate
// the fixtures/ directory shipped with the repository.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "coringlab/fixture.hpp"

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);
  for (const auto& name : coringlab::builtin_fixture_names()) {
    coringlab::FixtureFile fx = coringlab::builtin_fixture(name);
    std::string path = dir + "/" + name + ".json";
    std::ofstream out(path);
    out << coringlab::serialize_fixture(fx);
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}
