#pragma once

namespace sptri
{

inline constexpr char const *kToolVersion = "sptri 1.0.0";

} // namespace sptri
