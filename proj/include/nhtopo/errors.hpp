#ifndef NHTOPO_ERRORS_HPP
#define NHTOPO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nhtopo {

/// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A face refers to a vertex outside the declared ground set.
class GroundViolation : public Error {
public:
    explicit GroundViolation(const std::string& msg) : Error(msg) {}
};

/// Join of complexes with overlapping supports.
class JoinOverlap : public Error {
public:
    explicit JoinOverlap(const std::string& msg) : Error(msg) {}
};

/// A simplex argument is not a face of the complex.
class FaceNotPresent : public Error {
public:
    explicit FaceNotPresent(const std::string& msg) : Error(msg) {}
};

/// An operation that requires a pure complex received a non-pure one.
class NotPure : public Error {
public:
    explicit NotPure(const std::string& msg) : Error(msg) {}
};

/// An operation that requires a non-void complex received the void complex.
class VoidComplex : public Error {
public:
    explicit VoidComplex(const std::string& msg) : Error(msg) {}
};

/// Malformed argument (precondition failure not covered by a finer type).
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

/// Input exceeds a documented practical size cap.
class ResourceCap : public Error {
public:
    explicit ResourceCap(const std::string& msg) : Error(msg) {}
};

/// Malformed complex document; carries a 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0) : Error(render(msg, line)), line_(line) {}
    int line() const { return line_; }

private:
    static std::string render(const std::string& msg, int line) {
        if (line <= 0) return msg;
        return "line " + std::to_string(line) + ": " + msg;
    }
    int line_ = 0;
};

} // namespace nhtopo

#endif // NHTOPO_ERRORS_HPP
