#include "crsphere/monte_carlo.hpp"

#include "crsphere/errors.hpp"
#include "crsphere/rng.hpp"

namespace crs {

void SampleSpec::validate() const {
  if (count < 1) throw DomainError("SampleSpec: count must be >= 1");
  if (streams < 1) throw DomainError("SampleSpec: streams must be >= 1");
}

SampleSpec SampleSpec::derive(std::uint64_t tag) const {
  SampleSpec s = *this;
  s.seed = rng::splitmix64(seed ^ rng::splitmix64(tag + 0x5851F42D4C957F2Dull));
  return s;
}

}  // namespace crs

