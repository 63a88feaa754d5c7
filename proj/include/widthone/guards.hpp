#ifndef WIDTHONE_GUARDS_HPP
#define WIDTHONE_GUARDS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace widthone {

inline constexpr std::size_t kDefaultMaxTensorEntries = 10'000'000;
inline constexpr std::size_t kDefaultMaxEnumCount = 1'000'000;
inline constexpr int kDefaultMaxWordLen = 12;

/// Resource limits for dense allocation and combinatorial enumeration.
/// These are configuration, not constants: callers (and the CLI via
/// WIDTHONE_MAX_ENTRIES / WIDTHONE_MAX_ENUM) may raise or lower them.
struct Guards {
    std::size_t max_tensor_entries = kDefaultMaxTensorEntries;
    std::size_t max_enum = kDefaultMaxEnumCount;
    int max_word_len = kDefaultMaxWordLen;
};

/// Thrown when a requested computation exceeds a configured guard.
class GuardError : public std::runtime_error {
public:
    GuardError(const std::string& guard, const std::string& requested,
               const std::string& limit)
        : std::runtime_error("guard '" + guard + "' exceeded: requested " +
                             requested + ", limit " + limit),
          guard_(guard),
          requested_(requested),
          limit_(limit) {}

    const std::string& guard() const { return guard_; }
    const std::string& requested() const { return requested_; }
    const std::string& limit() const { return limit_; }

private:
    std::string guard_;
    std::string requested_;
    std::string limit_;
};

} // namespace widthone

#endif
