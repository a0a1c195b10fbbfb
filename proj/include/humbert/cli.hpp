#pragma once

#include "humbert/humbert.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace humbert::cli {

using json = nlohmann::json;

enum class Status { ok, not_geometric, search_exhausted, invalid_input, verification_failed, internal_error };

std::string status_name(Status s);
int exit_code(Status s);

struct CommandResult {
    Status status = Status::ok;
    json payload = json::object();
    std::vector<std::string> diagnostics;
    std::vector<std::string> text;  // human-readable lines
};

// "[a,b,c]" or "[a,b,c,r,s,t]"; throws Error(invalid_input, "parse-error") naming the offset.
std::vector<Int> parse_integers(const std::string& literal);
BinaryQF parse_binary(const std::string& literal);
TernaryQF parse_ternary(const std::string& literal);

json to_json(const Int& x);
json to_json(const BinaryQF& q);
json to_json(const TernaryQF& f);
json to_json(const PolarizationTriple& s);
json to_json(const SurfaceDescriptor& d);
SurfaceDescriptor descriptor_from_json(const json& j);

CommandResult cmd_classify(const std::string& literal, const Int& bound = 0);
CommandResult cmd_construct(const std::string& literal, Mode mode, unsigned long budget);
CommandResult cmd_verify(const std::string& literal, const std::optional<json>& descriptor, Mode mode,
                         unsigned long budget);
CommandResult cmd_reproduce(const std::string& target, unsigned long budget);
CommandResult cmd_report(const std::string& literal, const std::optional<Int>& subcovers, bool d6);

// Full front end; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace humbert::cli
