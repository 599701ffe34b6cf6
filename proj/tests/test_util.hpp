#ifndef NETRANS_TESTS_TEST_UTIL_HPP
#define NETRANS_TESTS_TEST_UTIL_HPP

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace testutil {

inline std::string data_dir() {
  const char* dir = std::getenv("NETRANS_DATA_DIR");
  return dir ? dir : "data";
}

inline std::string data_path(const std::string& name) {
  return data_dir() + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace testutil

#endif
