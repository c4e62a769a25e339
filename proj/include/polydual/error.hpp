#ifndef POLYDUAL_ERROR_HPP
#define POLYDUAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polydual {

enum class errc {
  degree_mismatch,
  rank_mismatch,
  cap_exceeded,
  not_involution,
  identity_generator,
  not_commuting,
  bad_parameter,
  not_in_group,
  degenerate_petrie,
  not_internally_self_dual,
  not_a_covering,
  not_polytopal,
  not_string_c_group,
  parse_error,
  overflow,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::degree_mismatch: return "degree_mismatch";
    case errc::rank_mismatch: return "rank_mismatch";
    case errc::cap_exceeded: return "cap_exceeded";
    case errc::not_involution: return "not_involution";
    case errc::identity_generator: return "identity_generator";
    case errc::not_commuting: return "not_commuting";
    case errc::bad_parameter: return "bad_parameter";
    case errc::not_in_group: return "not_in_group";
    case errc::degenerate_petrie: return "degenerate_petrie";
    case errc::not_internally_self_dual: return "not_internally_self_dual";
    case errc::not_a_covering: return "not_a_covering";
    case errc::not_polytopal: return "not_polytopal";
    case errc::not_string_c_group: return "not_string_c_group";
    case errc::parse_error: return "parse_error";
    case errc::overflow: return "overflow";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

// Library-wide exception type. `code()` is stable for dispatch (the CLI maps
// cap_exceeded to its own exit status); `what()` carries the detail text.
class error : public std::runtime_error {
 public:
  error(errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace polydual

#endif
