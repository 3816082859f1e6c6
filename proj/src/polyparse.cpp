#include <cctype>
#include <map>
#include <string>

#include "nfmin/intpoly.hpp"

namespace nfmin {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  return s;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

IntPoly parse_coefficient_list(const std::string& s) {
  std::vector<mpz_class> coeffs;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::string_view digits = tok;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
    if (!is_digits(digits)) throw Error("malformed coefficient '" + tok + "'");
    if (tok[0] == '+') tok.erase(0, 1);
    coeffs.emplace_back(tok, 10);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

// Terms of the form [sign][integer][*]x[^k] or [sign]integer.
IntPoly parse_expression(const std::string& s) {
  std::map<int, mpz_class> terms;
  std::size_t i = 0;
  if (s.empty()) throw Error("empty polynomial");
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw Error("expected '+' or '-' in polynomial near position " + std::to_string(i));
    }
    std::size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    mpz_class coeff = 1;
    bool has_number = i > num_start;
    if (has_number) coeff = mpz_class(s.substr(num_start, i - num_start), 10);
    int power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_number) throw Error("dangling '*' in polynomial");
      ++i;
      if (i >= s.size() || s[i] != 'x') throw Error("expected x after '*'");
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t exp_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == exp_start) throw Error("missing exponent after '^'");
        power = std::stoi(s.substr(exp_start, i - exp_start));
      }
    } else if (!has_number) {
      throw Error("malformed term in polynomial near position " + std::to_string(i));
    }
    terms[power] += sign * coeff;
  }
  int deg = terms.empty() ? -1 : terms.rbegin()->first;
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(deg + 1), 0);
  for (const auto& [p, c] : terms) coeffs[static_cast<std::size_t>(p)] = c;
  return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw Error("empty polynomial");
  if (s.find('x') != std::string::npos || s.find('X') != std::string::npos) {
    for (char& ch : s)
      if (ch == 'X') ch = 'x';
    return parse_expression(s);
  }
  return parse_coefficient_list(s);
}

}  // namespace nfmin
