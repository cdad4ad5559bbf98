#pragma once

#include <stdexcept>
#include <string>

namespace symcyc {

struct UnsupportedQ : std::invalid_argument {
    explicit UnsupportedQ(const std::string& what) : std::invalid_argument(what) {}
};

struct InexactDivision : std::domain_error {
    explicit InexactDivision(const std::string& what) : std::domain_error(what) {}
};

struct InvalidIndex : std::invalid_argument {
    explicit InvalidIndex(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownDivisor : std::invalid_argument {
    explicit UnknownDivisor(const std::string& what) : std::invalid_argument(what) {}
};

struct BadPrime : std::invalid_argument {
    explicit BadPrime(const std::string& what) : std::invalid_argument(what) {}
};

struct BadGenerator : std::invalid_argument {
    explicit BadGenerator(const std::string& what) : std::invalid_argument(what) {}
};

struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateLine : std::runtime_error {
    explicit DegenerateLine(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symcyc
