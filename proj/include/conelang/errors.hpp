// errors.hpp -- exception hierarchy shared by all conelang modules
#pragma once

#include <stdexcept>
#include <string>

namespace conelang {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Alphabet mismatch, unknown letter id, or broken inverse pairing.
class AlphabetError : public Error {
public:
    using Error::Error;
};

/// A word contains a symbol the machine's alphabet does not declare.
/// Distinct from a word that is merely not accepted.
class RejectedInputError : public AlphabetError {
public:
    using AlphabetError::AlphabetError;
};

/// A machine under construction violates one of its structural invariants.
class MachineError : public Error {
public:
    using Error::Error;
};

class GroupError : public Error {
public:
    using Error::Error;
};

/// A construction or audit parameter outside its documented range.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A cone construction failed one of its construction-time assertions.
class ConstructionError : public Error {
public:
    using Error::Error;
};

} // namespace conelang
