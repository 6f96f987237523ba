#pragma once

namespace peps::guards {

/// Largest n for which routines may enumerate all of S_n (default 8).
/// The environment variable PEPS_MAX_N overrides the default.
int max_enum_n();

/// Longest reduced word that enumeration routines will materialize
/// (default 12; raised to n(n-1)/2 when PEPS_MAX_N is set above 8).
int max_rw_letters();

void require_enum_n(int n, const char* what);
void require_rw_letters(long long letters, const char* what);

}  // namespace peps::guards
