#ifndef PERFLAT_JSON_IO_HPP
#define PERFLAT_JSON_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "perflat/enumerate.hpp"
#include "perflat/family.hpp"
#include "perflat/reconstruct.hpp"

namespace perflat {

// Arbitrary-precision integers are rendered as decimal strings.
nlohmann::json to_json(const IMat& m);
nlohmann::json to_json(const LdLattice& lat);
nlohmann::json to_json(const PerfectLatticeRecord& rec);
nlohmann::json to_json(const RecoveryReport& rep);

// Gram file format: first line n, then n lines of n integers.
void write_gram_file(std::ostream& os, const IMat& gram);
IMat read_gram_file(std::istream& is);

}  // namespace perflat

#endif  // PERFLAT_JSON_IO_HPP
