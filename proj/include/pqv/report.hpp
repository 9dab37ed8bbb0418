#pragma once

#include <string>

#include "pqv/classification.hpp"
#include "pqv/config.hpp"
#include "pqv/plurigenus.hpp"

namespace pqv {

/// Machine-readable report sections. Each function returns a JSON object;
/// the tool wraps them with the request echo and format_version.
Json ideal_report(const CyclicSingularityType& sing, int k);
Json invariants_report(const ProductQuotientModel& pq);
Json singular_locus_report(const ProductQuotientModel& pq, const SingularLocus& locus);
Json plurigenus_report(const ProductQuotientModel& pq, const PlurigenusReport& rep);
Json verdict_report(const ProductQuotientModel& pq, const CyVerdict& v);
Json surface_row_report(const SurfaceRow& row);
Json classify_report(const std::vector<TypeTuple>& tuples, const std::vector<CandidateRecord>* candidates);

/// Human-readable rendering of a report produced by the functions above
/// (dispatches on the "command" field).
std::string render_table(const Json& report);

std::string rational_string(const Rational& q);

}  // namespace pqv
