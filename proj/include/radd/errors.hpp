#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radd {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Subdomain layout is not representable on the mesh (alignment, ordering).
class layout_error : public error {
public:
    explicit layout_error(const std::string& what) : error(what) {}
};

/// Diffusion coefficient dropped below its declared lower bound.
class coefficient_bound_error : public error {
public:
    explicit coefficient_bound_error(const std::string& what) : error(what) {}
};

/// Zero pivot in a tridiagonal elimination.
class singular_matrix_error : public error {
public:
    explicit singular_matrix_error(const std::string& what) : error(what) {}
};

/// A time-stepping run produced a non-finite value.
class divergence_error : public error {
public:
    divergence_error(const std::string& what, std::size_t step)
        : error(what), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

/// Not enough usable data points for a fit.
class insufficient_data_error : public error {
public:
    explicit insufficient_data_error(const std::string& what) : error(what) {}
};

}  // namespace radd
