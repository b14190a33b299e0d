#pragma once

#include <stdexcept>
#include <string>

namespace polyflam {

// Exit-code contract used by the CLI front end:
//   2 = schema / config error, 3 = numerical failure, 4 = lookup failure.
// Library code only throws; tools/ maps exceptions to process exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual int exit_code() const noexcept { return 1; }
};

namespace detail {
template <int Code>
class CodedError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return Code; }
};
}  // namespace detail

// -- schema / configuration (exit 2) -----------------------------------------

class SchemaError : public detail::CodedError<2> { public: using CodedError::CodedError; };
class ConfigError : public detail::CodedError<2> { public: using CodedError::CodedError; };
class UnitError : public detail::CodedError<2> { public: using CodedError::CodedError; };
class EmptyFile : public detail::CodedError<2> { public: using CodedError::CodedError; };
class DuplicateId : public detail::CodedError<2> { public: using CodedError::CodedError; };
class FragmentError : public detail::CodedError<2> { public: using CodedError::CodedError; };
class MissingField : public detail::CodedError<2> { public: using CodedError::CodedError; };
class EmptyData : public detail::CodedError<2> { public: using CodedError::CodedError; };
class DimensionMismatch : public detail::CodedError<2> { public: using CodedError::CodedError; };
class InsufficientData : public detail::CodedError<2> { public: using CodedError::CodedError; };
class BadValence : public detail::CodedError<2> { public: using CodedError::CodedError; };
class SizeOverflow : public detail::CodedError<2> { public: using CodedError::CodedError; };

// SMILES parsing
class ParseError : public detail::CodedError<2> { public: using CodedError::CodedError; };
class UnbalancedBranch : public ParseError { public: using ParseError::ParseError; };
class UnclosedRing : public ParseError { public: using ParseError::ParseError; };
class UnknownAtom : public ParseError { public: using ParseError::ParseError; };
class ValenceViolation : public ParseError { public: using ParseError::ParseError; };

// -- numerical failures (exit 3) ----------------------------------------------

class DomainError : public detail::CodedError<3> { public: using CodedError::CodedError; };
class NumericalInstability : public detail::CodedError<3> { public: using CodedError::CodedError; };
class Divergence : public detail::CodedError<3> { public: using CodedError::CodedError; };
class ModelFailure : public detail::CodedError<3> { public: using CodedError::CodedError; };
class DegenerateTarget : public detail::CodedError<3> { public: using CodedError::CodedError; };
class ZeroTarget : public detail::CodedError<3> { public: using CodedError::CodedError; };

// -- lookup failures (exit 4) ---------------------------------------------------

class UnknownGroup : public detail::CodedError<4> { public: using CodedError::CodedError; };
class UnknownPolymer : public detail::CodedError<4> { public: using CodedError::CodedError; };

}  // namespace polyflam
