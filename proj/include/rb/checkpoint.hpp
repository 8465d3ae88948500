#pragma once

#include <string>

#include "rb/solver.hpp"

namespace rb {

// Checkpoint file: one text header line holding a JSON object
// {version, L, n1, n2, t, nu, kappa, fields}, then for each of u1, u2, theta
// the complex coefficients as little-endian 64-bit floats, k1-major,
// k2-minor, re then im (n1*n2*2 doubles per field).
void write_checkpoint(const std::string& path, const State& s,
                      const PhysParams& p);

struct Checkpoint {
  State state;
  PhysParams params;
};
Checkpoint read_checkpoint(const std::string& path,
                           double dealias_fraction = 2.0 / 3.0);

}  // namespace rb
