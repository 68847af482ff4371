#include "qlgraph/errors.hpp"

namespace qlgraph {

Error::Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

}  // namespace qlgraph
