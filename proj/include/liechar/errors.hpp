#pragma once

#include <stdexcept>
#include <string>

namespace liechar {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& msg = "no exact quotient exists") : Error(msg) {}
};

struct MissingVariable : Error {
    explicit MissingVariable(const std::string& msg) : Error(msg) {}
};

struct InvalidRank : Error {
    explicit InvalidRank(const std::string& msg) : Error(msg) {}
};

struct InvalidType : Error {
    explicit InvalidType(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct NotDominant : Error {
    explicit NotDominant(const std::string& msg) : Error(msg) {}
};

struct NotInWeightSystem : Error {
    explicit NotInWeightSystem(const std::string& msg) : Error(msg) {}
};

// thrown by reduce_symmetric; carries the violating transposition (i, i+1)
struct NotSymmetric : Error {
    int index;
    explicit NotSymmetric(int i)
        : Error("polynomial is not symmetric under the transposition ("
                + std::to_string(i) + " " + std::to_string(i + 1) + ")"),
          index(i) {}
};

struct NotInvariant : Error {
    explicit NotInvariant(const std::string& msg) : Error(msg) {}
};

struct MixedParity : Error {
    explicit MixedParity(const std::string& msg = "monomial mixes even and odd exponents") : Error(msg) {}
};

struct OddE3 : Error {
    explicit OddE3(const std::string& msg = "odd power of e3 survives; input is not even under the sign flip") : Error(msg) {}
};

struct InvalidPower : Error {
    explicit InvalidPower(const std::string& msg) : Error(msg) {}
};

} // namespace liechar
