#ifndef WREATHMAC_DETAIL_FORMAT_HPP
#define WREATHMAC_DETAIL_FORMAT_HPP

#include <string>
#include <vector>

namespace wreathmac::detail {

// "q^2*t", "q^-1", "" for q^0 t^0
inline std::string qt_monomial_str(int qa, int tb) {
  std::string s;
  auto put = [&](const char* v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e != 1) s += "^" + std::to_string(e);
  };
  put("q", qa);
  put("t", tb);
  return s;
}

// |c| * q^qa t^tb * name, without the sign
inline std::string atom_body_str(long c, int qa, int tb, const std::string& name) {
  std::string s;
  long a = c < 0 ? -c : c;
  if (a != 1) s = std::to_string(a);
  std::string m = qt_monomial_str(qa, tb);
  if (!m.empty()) s += (s.empty() ? "" : "*") + m;
  if (!name.empty()) s += (s.empty() ? "" : "*") + name;
  return s.empty() ? "1" : s;
}

struct SignedPiece {
  bool negative;
  std::string body;
};

// "a - b + c"
inline std::string join_signed(const std::vector<SignedPiece>& parts) {
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k == 0)
      s += parts[k].negative ? "-" : "";
    else
      s += parts[k].negative ? " - " : " + ";
    s += parts[k].body;
  }
  return s;
}

}  // namespace wreathmac::detail

#endif
