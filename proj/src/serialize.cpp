#include "widthone/serialize.hpp"

#include <cstdint>

namespace widthone {

std::vector<std::string> decimal_list(const std::vector<BigInt>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const BigInt& v : values) out.push_back(to_decimal(v));
    return out;
}

namespace {

OrderedJson entry_object(const Shape& n, std::size_t off, const BigInt& value) {
    OrderedJson e;
    e["index"] = multi_index(n, off).coords();
    e["value"] = to_decimal(value);
    return e;
}

} // namespace

OrderedJson tensor_report(const DenseTensor& t, long long s,
                          const std::string& method, bool agreement) {
    OrderedJson doc;
    doc["n"] = t.shape().dims();
    doc["s"] = s;
    doc["method"] = method;
    OrderedJson entries = OrderedJson::array();
    for (std::size_t off = 0; off < t.size(); ++off)
        entries.push_back(entry_object(t.shape(), off, t[off]));
    doc["entries"] = std::move(entries);
    doc["total"] = to_decimal(t.total());
    doc["agreement"] = agreement;
    return doc;
}

OrderedJson support_entries(const DenseTensor& t) {
    OrderedJson entries = OrderedJson::array();
    for (std::size_t off = 0; off < t.size(); ++off)
        if (t[off] != 0) entries.push_back(entry_object(t.shape(), off, t[off]));
    return entries;
}

std::string tensor_csv(const DenseTensor& t) {
    std::string out;
    for (int i = 0; i < t.shape().rank(); ++i) out += "x_" + std::to_string(i + 1) + ",";
    out += "value\n";
    for (std::size_t off = 0; off < t.size(); ++off) {
        const MultiIndex x = multi_index(t.shape(), off);
        for (int i = 0; i < x.rank(); ++i) out += std::to_string(x[i]) + ",";
        out += to_decimal(t[off]) + "\n";
    }
    return out;
}

std::string tensor_plain(const DenseTensor& t) {
    std::string out;
    for (std::size_t off = 0; off < t.size(); ++off) {
        const MultiIndex x = multi_index(t.shape(), off);
        out += "(";
        for (int i = 0; i < x.rank(); ++i) {
            if (i) out += ",";
            out += std::to_string(x[i]);
        }
        out += ") " + to_decimal(t[off]) + "\n";
    }
    out += "total " + to_decimal(t.total()) + "\n";
    return out;
}

std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

std::string tensor_digest(const DenseTensor& t, long long s) {
    std::string canon = "n=";
    for (int i = 0; i < t.shape().rank(); ++i) {
        if (i) canon += "x";
        canon += std::to_string(t.shape().dim(i));
    }
    canon += ";s=" + std::to_string(s) + ";";
    for (std::size_t off = 0; off < t.size(); ++off) {
        if (off) canon += ",";
        canon += to_decimal(t[off]);
    }
    return fnv1a64_hex(canon);
}

} // namespace widthone
