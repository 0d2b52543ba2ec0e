#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sosperm {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class zero_denominator : public error {
 public:
  zero_denominator() : error("zero denominator") {}
};

class parse_error : public error {
 public:
  explicit parse_error(const std::string& input)
      : error("cannot parse: \"" + input + "\"") {}
};

/// A value that was required to lie strictly inside a Farey interval
/// reduced to a fraction of the sequence itself. Carries that fraction.
class on_boundary : public error {
 public:
  on_boundary(std::int64_t num, std::int64_t den)
      : error("value lies on Farey fraction " + std::to_string(num) + "/" +
              std::to_string(den)),
        num_(num),
        den_(den) {}

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

class at_end : public error {
 public:
  at_end() : error("1/1 has no successor in a Farey sequence") {}
};

class not_adjacent : public error {
 public:
  explicit not_adjacent(const std::string& what) : error(what) {}
};

class invalid_interval : public error {
 public:
  explicit invalid_interval(const std::string& what) : error(what) {}
};

class not_sos_permutation : public error {
 public:
  explicit not_sos_permutation(const std::string& what) : error(what) {}
};

class not_in_farey : public error {
 public:
  explicit not_in_farey(const std::string& what) : error(what) {}
};

class degenerate_n : public error {
 public:
  explicit degenerate_n(std::int64_t n)
      : error("area extremes need n >= 2, got n = " + std::to_string(n)) {}
};

}  // namespace sosperm
