#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hpa/io.hpp"

namespace hpa::cli {

// Exit codes: 0 success, 1 mathematical failure, 2 input error.
enum ExitCode { ok = 0, math_failure = 1, input_error = 2 };

struct ExampleOptions {
    Field field = Field::rationals();
    std::string alpha = "1/2";  // sweedler-on-k
    std::size_t dim = 2;        // trivial
};

struct ExampleInfo {
    std::string name;
    std::string kind;  // presentation or map kind
    std::string description;
};

const std::vector<ExampleInfo>& examples();
// The example as a file document, built from the library constructors.
io::json example_document(const std::string& name, const ExampleOptions& opts);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hpa::cli
