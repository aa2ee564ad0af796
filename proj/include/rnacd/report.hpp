#ifndef RNACD_REPORT_HPP
#define RNACD_REPORT_HPP

#include <json.hpp>

#include "rnacd/certify.hpp"
#include "rnacd/classify.hpp"
#include "rnacd/fold.hpp"

namespace rnacd {

// JSON views of the library results. Key order is fixed and no field depends
// on the clock, so equal inputs give byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const FoldReport& r);
Json to_json(const DesignOutcome& o, const DottedTree& t);
Json to_json(const CertificateTrace& trace);

} // namespace rnacd

#endif
