#ifndef IDIG_ERRORS_HPP
#define IDIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idig {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class self_loop_error : public error {
public:
    explicit self_loop_error(int v)
        : error("self loop at vertex " + std::to_string(v)) {}
};

class duplicate_arc_error : public error {
public:
    duplicate_arc_error(int u, int v)
        : error("duplicate arc " + std::to_string(u) + "->" + std::to_string(v)) {}
};

class vertex_range_error : public error {
public:
    using error::error;
};

class too_large_error : public error {
public:
    using error::error;
};

class not_an_ids_error : public error {
public:
    using error::error;
};

class not_orientation_error : public error {
public:
    using error::error;
};

class not_undirected_ids_error : public error {
public:
    using error::error;
};

class trivial_graph_error : public error {
public:
    using error::error;
};

class too_many_edges_error : public error {
public:
    using error::error;
};

class bad_spec_error : public error {
public:
    using error::error;
};

class cap_exceeded_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(int line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace idig

#endif
