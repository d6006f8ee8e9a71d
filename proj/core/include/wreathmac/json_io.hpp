#ifndef WREATHMAC_JSON_IO_HPP
#define WREATHMAC_JSON_IO_HPP

#include <string>

#include "wreathmac/eigen.hpp"
#include "wreathmac/symfunc.hpp"
#include "wreathmac/xpoly.hpp"

namespace wreathmac {

// Schemas are described in docs/json.md. Scalars are written in the text
// format accepted by QTScalar::parse; partitions as "3,1" and
// multipartitions as "2;;1". Readers throw ParseError.
std::string to_json(const TensorSymFunc& f);
std::string to_json(const XPoly& p);
std::string to_json(const VerificationReport& rep);  // one line

TensorSymFunc tensor_from_json(const std::string& text);
XPoly xpoly_from_json(const std::string& text);
VerificationReport report_from_json(const std::string& text);

}  // namespace wreathmac

#endif
