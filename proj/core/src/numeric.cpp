#include "toric/numeric.hpp"

namespace toric {

Int floor_of(const Rat& r) {
  Int q = numerator_of(r) / denominator_of(r);  // truncates toward zero
  if (r < 0 && q * denominator_of(r) != numerator_of(r)) --q;
  return q;
}

Int ceil_of(const Rat& r) { return -floor_of(-r); }

std::string rat_to_string(const Rat& r) {
  std::string s = numerator_of(r).str();
  if (denominator_of(r) != 1) s += "/" + denominator_of(r).str();
  return s;
}

std::string int_to_string(const Int& i) { return i.str(); }

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  const size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(s))
      throw ValidationError("not a rational literal: \"" + s + "\"");
    return Rat(Int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw ValidationError("not a rational literal: \"" + s + "\"");
  Int d(den);
  if (d == 0) throw ValidationError("zero denominator in \"" + s + "\"");
  return Rat(Int(num), d);
}

}  // namespace toric
