#pragma once

#include <stdexcept>
#include <string>

namespace seqlat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series-core
struct NonUnitConstantTerm : Error {
    NonUnitConstantTerm() : Error("reciprocal requires constant term +1 or -1") {}
};
struct InnerConstantTermNonzero : Error {
    InnerConstantTermNonzero() : Error("compose requires inner constant term 0") {}
};
struct InsufficientSourceOrder : Error {
    InsufficientSourceOrder() : Error("substitute_power: requested order exceeds m * source order") {}
};
struct OrderExceeded : Error {
    explicit OrderExceeded(const std::string& what) : Error(what) {}
};

// lattice / kernels
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// catalog
struct UnknownSequence : Error {
    explicit UnknownSequence(const std::string& id) : Error("unknown sequence id: " + id) {}
};
struct WrongKind : Error {
    explicit WrongKind(const std::string& what) : Error(what) {}
};

// oeis-sync
struct FetchFailed : Error {
    explicit FetchFailed(const std::string& what) : Error(what) {}
};
struct ParseFailed : Error {
    explicit ParseFailed(const std::string& what) : Error(what) {}
};
struct OffsetNotInBFile : Error {
    explicit OffsetNotInBFile(const std::string& what) : Error(what) {}
};

} // namespace seqlat
