#pragma once

#include <stdexcept>
#include <string>

namespace covtrans {

// Numeric or structural failure inside an engine (non-PD input, singular
// matrix, Neumann hypothesis violated, ...).
class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

// analyze_near_identity rejected the input (diagonal not unit, or the
// perturbation norm is not below one).
class NearIdentityError : public EngineError {
public:
    explicit NearIdentityError(const std::string& what) : EngineError(what) {}
};

// An operation backed by the odd-function closed form was handed a series
// that is not declared odd.
class OddParityError : public EngineError {
public:
    explicit OddParityError(const std::string& what) : EngineError(what) {}
};

}  // namespace covtrans
