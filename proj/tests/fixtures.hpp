#ifndef AOP_TESTS_FIXTURES_HPP
#define AOP_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "aop/io.hpp"

namespace fixtures {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string source_path(const std::string& relative) { return std::string(AOP_SOURCE_DIR) + "/" + relative; }

inline aop::planar_formula sample5() { return aop::read_formula(read_file(source_path("data/sample5.cnf"))).planar(); }

inline aop::literal lit(int x) { return {static_cast<std::uint32_t>((x < 0 ? -x : x) - 1), x > 0}; }

inline aop::clause cl(int a, int b, int c) { return {lit(a), lit(b), lit(c)}; }

}  // namespace fixtures

#endif  // AOP_TESTS_FIXTURES_HPP
