#ifndef MONTEBOUND_ERROR_HPP
#define MONTEBOUND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace montebound {

enum class Errc {
  parse_error,
  infinite_slope,
  integer_slope,
  too_few_tangles,
  unnormalizable,
  wrong_class,
  non_canonical_cf,
  not_reduced,
  not_applicable,
  overflow,
  internal,
};

// position >= 0 identifies the offending tangle index or input token, -1 otherwise.
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message, int position = -1)
      : std::runtime_error(std::move(message)), code_(code), position_(position) {}

  Errc code() const { return code_; }
  int position() const { return position_; }

private:
  Errc code_;
  int position_;
};

const char* errc_name(Errc code);

}  // namespace montebound

#endif
