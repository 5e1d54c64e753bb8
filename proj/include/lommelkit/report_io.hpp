#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "lommelkit/continuation.hpp"
#include "lommelkit/function_id.hpp"
#include "lommelkit/interlace.hpp"
#include "lommelkit/lommel.hpp"

// JSON (nlohmann) and CSV forms of the report types. JSON numbers are written
// in shortest round-trip form, so parsing a dump gives back the same values;
// CSV cells use 15 significant digits. Non-finite doubles become null.

namespace lommelkit {

using json = nlohmann::ordered_json;

void to_json(json& j, const FunctionId& v);
void from_json(const json& j, FunctionId& v);
void to_json(json& j, const ZeroList& v);
void from_json(const json& j, ZeroList& v);
void to_json(json& j, const LommelCoefficients& v);
void from_json(const json& j, LommelCoefficients& v);
void to_json(json& j, const EtaRoot& v);
void from_json(const json& j, EtaRoot& v);
void to_json(json& j, const MergedEntry& v);
void from_json(const json& j, MergedEntry& v);
void to_json(json& j, const MergedZeros& v);
void from_json(const json& j, MergedZeros& v);
void to_json(json& j, const CommonZeroPoint& v);
void from_json(const json& j, CommonZeroPoint& v);
void to_json(json& j, const CommonZeroSet& v);
void from_json(const json& j, CommonZeroSet& v);
void to_json(json& j, const InterlaceReport& v);
void from_json(const json& j, InterlaceReport& v);
void to_json(json& j, const WronskianSample& v);
void from_json(const json& j, WronskianSample& v);
void to_json(json& j, const NuStarSolution& v);
void from_json(const json& j, NuStarSolution& v);
void to_json(json& j, const TrajectorySample& v);
void from_json(const json& j, TrajectorySample& v);
void to_json(json& j, const Trajectory& v);
void from_json(const json& j, Trajectory& v);

/// Two-space indented dump followed by a newline.
std::string dump(const json& j);

/// "%.15g", with nan/inf spelled out.
std::string format_g15(double v);

/// Writes one CSV table: header row then data rows, cells joined by commas.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

void write_csv(std::ostream& os, const ZeroList& v);                 // k,zero,residual
void write_csv(std::ostream& os, const LommelCoefficients& v);       // k,power,coeff
void write_csv(std::ostream& os, const EtaRoot& v);                  // l,eta,residual
void write_csv(std::ostream& os, const InterlaceReport& v);          // index,value,role
void write_csv(std::ostream& os, const CommonZeroSet& v);            // x,low_residual,high_residual
void write_csv(std::ostream& os, const std::vector<WronskianSample>& v);
void write_csv(std::ostream& os, const std::vector<NuStarSolution>& v);
void write_csv(std::ostream& os, const std::vector<Trajectory>& v);  // curve_id,nu,x

}  // namespace lommelkit
