#pragma once

#include <stdexcept>
#include <string>

#include "pcvp/deletion_set.hpp"
#include "pcvp/reduction.hpp"
#include "pcvp/treedepth.hpp"

namespace pcvp {

// Parse failure with a 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Instance files:
//   p vp <n> <m> <budget>
//   v <id> <role-tag> <params...>     (ascending id)
//   e <u> <v>                         (u < v, sorted)
//   # manifest
//   s <symbol> <id>
// Encoding is deterministic; decode(encode(x)) == x.
std::string encode_instance(const VPInstance& vp);
VPInstance decode_instance(const std::string& bytes);

// Grid instance files: "k <k>" then "pe <r1> <c1> <r2> <c2>" lines.
std::string encode_pc(const PCInstance& pc);
PCInstance decode_pc(const std::string& bytes);

// Witness files: "w <size>" then "x <id>" lines, ascending.
std::string encode_witness(const DeletionSet& x);
DeletionSet decode_witness(const std::string& bytes);

// Forest files: "d <depth>" then one "t <vertex-id> <parent-id|0>" line per
// vertex, ascending; parent 0 marks a root.
std::string encode_forest(const EliminationForest& ef);
EliminationForest decode_forest(const std::string& bytes);

}  // namespace pcvp
