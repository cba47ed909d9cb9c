#pragma once

#include <stdexcept>
#include <string>

namespace genassoc {

// 0 * inf requested from the extended-rational carrier.
struct indeterminate_product : std::domain_error {
  indeterminate_product() : std::domain_error("indeterminate product 0 * inf") {}
};

struct outside_valid_domain : std::domain_error {
  explicit outside_valid_domain(const std::string& what) : std::domain_error(what) {}
};

struct empty_set_error : std::domain_error {
  empty_set_error() : std::domain_error("extrema of empty set") {}
};

struct not_in_class_f : std::runtime_error {
  std::string witness;
  explicit not_in_class_f(std::string w)
      : std::runtime_error("generator is not in the admissible class, witness x=" + w),
        witness(std::move(w)) {}
};

struct not_in_m : std::domain_error {
  explicit not_in_m(const std::string& v) : std::domain_error("value " + v + " is not in M") {}
};

struct not_in_b : std::domain_error {
  explicit not_in_b(const std::string& v)
      : std::domain_error("point " + v + " is not a canonical representative") {}
};

// Malformed input document (bad JSON, bad rational literal).
struct parse_error : std::runtime_error {
  std::string path;
  parse_error(std::string p, const std::string& what)
      : std::runtime_error(p.empty() ? what : p + ": " + what), path(std::move(p)) {}
};

// Structurally valid input that violates a semantic invariant.
struct validation_error : std::runtime_error {
  std::string path;
  validation_error(std::string p, const std::string& what)
      : std::runtime_error(p.empty() ? what : p + ": " + what), path(std::move(p)) {}
};

// A violated internal invariant; maps to exit code 2 in the CLI.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace genassoc
