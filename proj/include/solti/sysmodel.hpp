#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "solti/matcore.hpp"

namespace solti {

enum class TimeDomain { discrete, continuous };

std::string to_string(TimeDomain kind);

/// Second-order LTI system
///   discrete:    x[t+2] = a0 x[t] + a1 x[t+1] + b u[t],  y[t] = c x[t]
///   continuous:  x'' = a0 x + a1 x' + b u,               y = c x
/// Dimensions: a0, a1 are n x n, b is n x r (r = 0 allowed), c is p x n.
struct SecondOrderSystem {
    TimeDomain kind = TimeDomain::discrete;
    int n = 0;
    int r = 0;
    int p = 0;
    Matrix a0;
    Matrix a1;
    Matrix b;
    Matrix c;
};

/// Initial pair: positions x0 and the next sample / derivative x1.
struct StateSnapshot {
    Vector x0;
    Vector x1;
};

// Parses the JSON system document. Throws ParseError on malformed input,
// DimensionError / NonFiniteError when the content violates the schema.
SecondOrderSystem load_system(std::istream& in);
SecondOrderSystem load_system_from_string(const std::string& text);
SecondOrderSystem load_system_from_file(const std::string& path);

// Canonical JSON rendering; load_system(render_system(sys)) == sys.
std::string render_system(const SecondOrderSystem& sys);

// Dual system per the transposition rule (a0^T, -a1^T, c^T, b^T);
// input/output dimensions swap, n and kind are preserved.
SecondOrderSystem dual_system(const SecondOrderSystem& sys);

// Invariant check; returns one description per violation, empty when valid.
std::vector<std::string> validate(const SecondOrderSystem& sys);

// Throws on the first violation; used by operations that require validity.
void require_valid(const SecondOrderSystem& sys);

}  // namespace solti
