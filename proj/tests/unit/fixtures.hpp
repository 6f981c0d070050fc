#pragma once

#include <fstream>
#include <sstream>
#include <string>

inline std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(TW_FIXTURES) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}
