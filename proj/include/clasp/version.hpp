#pragma once

namespace clasp {

/// Keys the table cache and is stamped into every certificate.
inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace clasp
