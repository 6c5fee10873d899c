#ifndef CAPELLI_GMATRIX_IO_HPP
#define CAPELLI_GMATRIX_IO_HPP

#include <string>

#include "capelli/combinatorics.hpp"

namespace capelli {

/// Wire schema: {"n": int, "a": [int], "b": [int], "d": [int]} with the
/// c row implied. Parse errors (malformed JSON, wrong shapes) throw
/// std::domain_error; family constraints are not checked here.
GMatrix gmatrix_from_json(const std::string& text);
GMatrix gmatrix_from_file(const std::string& path);
std::string gmatrix_to_json(const GMatrix& g);

}  // namespace capelli

#endif
