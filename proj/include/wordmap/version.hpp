#ifndef WORDMAP_VERSION_HPP
#define WORDMAP_VERSION_HPP

namespace wordmap {

inline constexpr const char* kToolName = "wordmap";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace wordmap

#endif  // WORDMAP_VERSION_HPP
