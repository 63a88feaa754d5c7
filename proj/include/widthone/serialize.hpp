#ifndef WIDTHONE_SERIALIZE_HPP
#define WIDTHONE_SERIALIZE_HPP

#include "widthone/bigint.hpp"
#include "widthone/tensor.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace widthone {

/// Field order is part of the output contract (golden files byte-compare),
/// so every JSON document goes through the order-preserving variant.
using OrderedJson = nlohmann::ordered_json;

/// Decimal strings, low index to high. Integers never serialize as JSON
/// numbers: the values outgrow the 2^53 interoperable range quickly.
std::vector<std::string> decimal_list(const std::vector<BigInt>& values);

/// The pinned tensor document:
/// {"n":[...], "s":N, "method":"...",
///  "entries":[{"index":[1-based coords], "value":"decimal"}...],
///  "total":"decimal", "agreement":bool}
/// with entries listed for every cell in row-major order.
OrderedJson tensor_report(const DenseTensor& t, long long s,
                          const std::string& method, bool agreement);

/// The entries array restricted to the support, same element shape as in
/// tensor_report. Used for enumerated members, which are mostly zero.
OrderedJson support_entries(const DenseTensor& t);

/// One row per cell, row-major: x_1,...,x_d,value.
std::string tensor_csv(const DenseTensor& t);

/// One human-oriented line per cell plus a total line. Not contract-bound.
std::string tensor_plain(const DenseTensor& t);

/// FNV-1a, 64-bit, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view data);

/// Digest of the canonical serialization "n=2x2;s=2;v0,v1,...". Depends
/// only on shape, entry sum, and entries, so every method computing the
/// same tensor reports the same digest.
std::string tensor_digest(const DenseTensor& t, long long s);

} // namespace widthone

#endif
