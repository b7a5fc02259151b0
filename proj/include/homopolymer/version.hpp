#ifndef HOMOPOLYMER_VERSION_HPP
#define HOMOPOLYMER_VERSION_HPP

namespace homopoly {

// Bumped together with any change to artifact layouts (CSV columns, JSON keys).
// Reports refuse to compare artifacts whose schema versions differ.
inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace homopoly

#endif
