#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "advshare/pauli.hpp"

namespace advshare {

// Code file format:
//   p=<prime> n=<count>
//   x_1 ... x_n | z_1 ... z_n      (one row per generator, entries in [0, p))
// '#' starts a comment; blank lines are skipped.
struct CodeFile {
    int p = 2;
    std::size_t n = 0;
    FpMatrix check{2, 0, 0};
};

// Syntax only; throws ParseError with a 1-based line number. Row count is
// left to validate_stabilizer, which names the first non-commuting pair.
CodeFile parse_code_file(std::string_view text);
CodeFile read_code_file(const std::filesystem::path& path);

// Parses and validates (NotCommutative / DependentRows).
StabilizerCode load_stabilizer(std::string_view text);

std::string print_code_file(int p, std::size_t n, const FpMatrix& check);
std::string print_code_file(const StabilizerCode& code);

}  // namespace advshare
