#pragma once

#include <stdexcept>
#include <string>

namespace verdier {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed ring presentations, mixed-ring arithmetic, bad rewrite rules
struct RingError : Error {
  using Error::Error;
};

// invalid space constructions and pushforward/pullback misuse
struct SpaceError : Error {
  using Error::Error;
};

// unknown strata, malformed fibration tables
struct RegistryError : Error {
  using Error::Error;
};

// bad CLI / run configuration
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace verdier
