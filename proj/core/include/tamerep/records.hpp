#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamerep/char_orbits.hpp"
#include "tamerep/tame_galois.hpp"
#include "tamerep/twisted_group.hpp"

namespace tamerep {

/// Flat, serialization-stable view of one classified representation.  Field
/// order here fixes the CSV column order and the JSON member set.
struct OutputRecord {
    std::int64_t p = 0;
    std::int64_t a = 0;
    std::int64_t e = 0;
    std::int64_t f = 0;
    std::int64_t char_rep = 0;      // canonical character residue
    std::int64_t s = 1;             // orbit size
    std::int64_t d = 1;             // character order
    std::int64_t r = 1;             // ord(p mod d)
    std::int64_t lambda_order = 1;
    std::int64_t lambda_log = 0;
    std::int64_t w = 1;
    std::int64_t degree = 1;
    std::int64_t defdeg = 1;
    bool unramified = false;        // galois mode only
    std::int64_t label_r = 0;       // galois mode only (0 when unramified)
    std::int64_t level = 0;         // galois mode only
};

/// One verification check line for reports.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Records of all Phi-orbits of G, sorted by
/// (degree, d, char_rep, lambda_order, lambda_log).
std::vector<OutputRecord> classify_group_records(const TwistedGroup& G);

/// Flattened Galois records for degrees <= N, same sort order.
std::vector<OutputRecord> classify_galois_records(const PFieldParams& K, std::int64_t N);

OutputRecord to_output_record(const TwistedGroup& G, const PhiOrbit& orbit);
OutputRecord to_output_record(const PFieldParams& K, const GaloisRepRecord& rec);

std::string csv_header();
std::string to_csv_row(const OutputRecord& rec);

/// Oracle suite for one group: Berman count, degree formula, exhaustive
/// irreducibility, pairwise non-isomorphism, counting identities, descent
/// identity, and (when census_m > 0) the submodule census.
std::vector<CheckResult> verify_group(const TwistedGroup& G, int census_m);

}  // namespace tamerep
