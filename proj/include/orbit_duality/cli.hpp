#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orbit_duality/duality.hpp"
#include "orbit_duality/exceptional.hpp"

namespace orbit_duality::cli {

/// "C2@n=3" or "E7@n=5".
struct GroupSpec {
    std::variant<ExceptionalGroup, TypeLetter> family;
    int rank = 0;  // classical only
    int n = 1;

    bool classical() const { return std::holds_alternative<TypeLetter>(family); }
    ClassicalContext context() const;  // classical only
    /// Size of the partitions labelling orbits of the dual group.
    int input_size() const;
};

/// Throws DomainError on malformed text.
GroupSpec parse_group_spec(std::string_view text);
std::string to_string(const GroupSpec& g);

struct Outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs one invocation; args exclude the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace orbit_duality::cli
