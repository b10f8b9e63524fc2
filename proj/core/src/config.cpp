#include "quiverlab/config.hpp"

#include <cstdlib>
#include <string>

#include "quiverlab/error.hpp"

namespace quiverlab {

std::uint64_t default_seed() {
  const char* env = std::getenv("QUIVERLAB_SEED");
  if (env == nullptr || *env == '\0') return 20240611;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, std::string("QUIVERLAB_SEED is not an integer: ") + env);
  }
}

Field default_field() {
  const char* env = std::getenv("QUIVERLAB_FIELD");
  if (env == nullptr || *env == '\0') return Field::rationals();
  std::string s = env;
  if (s == "Q" || s == "q") return Field::rationals();
  if (s.rfind("F", 0) == 0) s = s.substr(1);
  try {
    return Field::prime(static_cast<std::uint32_t>(std::stoul(s)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, std::string("QUIVERLAB_FIELD must be Q or a prime: ") + env);
  }
}

}  // namespace quiverlab
