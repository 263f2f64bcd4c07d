#pragma once

#include <stdexcept>
#include <string>

namespace supergraph {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// n below the family minimum, or an index outside the group.
class ParameterOutOfRange : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Number of composition parts differs from the outer graph's order.
class ArityMismatch : public Error {
public:
    using Error::Error;
};

// (graph kind, family) pair with no closed form / structure theorem.
class UnsupportedCombination : public Error {
public:
    using Error::Error;
};

} // namespace supergraph
