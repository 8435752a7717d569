#ifndef G2ZETA_ERRORS_HPP
#define G2ZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace g2zeta
{

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// An exact identity that must hold did not (cancellation, divisibility).
/// Seeing one means the transcribed data or an algorithm is wrong.
class ConsistencyError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation requested on a pole or singular hyperplane.
class SingularArgumentError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

} // namespace g2zeta

#endif
