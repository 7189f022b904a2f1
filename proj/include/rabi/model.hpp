// model.hpp: parameters and shared value types for the qubit-oscillator spectrum.

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace rabi {

// Units: hbar = omega = 1, so every energy is in units of the oscillator frequency.
struct ModelParams {
    double delta{1.0};    // qubit tunneling matrix element
    double epsilon{0.0};  // static bias
    double g{0.0};        // qubit-oscillator coupling

    // Throws DomainError unless delta and g are finite and non-negative and epsilon is finite.
    void validate() const;
    bool unbiased() const { return epsilon == 0.0; }
};

enum class Parity { even, odd, none };

enum class Method { exact, zoa, dsc, vvp, grwa, brwa, variational };

std::string_view to_string(Parity p);
std::string_view to_string(Method m);
std::optional<Parity> parse_parity(std::string_view s);
std::optional<Method> parse_method(std::string_view s);

// One energy level produced by an approximation. level_index counts from the ground state (0).
struct Level {
    int level_index{0};
    double energy{0.0};
    Parity parity{Parity::none};
};

}  // namespace rabi
