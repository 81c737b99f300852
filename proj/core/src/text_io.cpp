#include "pathideal/text_io.hpp"

#include "pathideal/errors.hpp"

#include <charconv>

namespace pathideal {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw DomainError("malformed monomial '" + std::string(whole) + "'");
  return v;
}

} // namespace

std::string to_text(const Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.ambient(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(k + 1);
    if (m[k] > 1) {
      out += '^';
      out += std::to_string(m[k]);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, std::size_t ambient) {
  const std::string_view whole = text;
  text = trim(text);
  Monomial m(ambient);
  if (text == "1") return m;
  while (!text.empty()) {
    const auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    if (factor.size() < 2 || factor.front() != 'x')
      throw DomainError("malformed monomial '" + std::string(whole) + "'");
    factor.remove_prefix(1);
    std::uint64_t exponent = 1;
    const auto caret = factor.find('^');
    if (caret != std::string_view::npos) {
      exponent = parse_uint(factor.substr(caret + 1), whole);
      factor = factor.substr(0, caret);
    }
    const auto index = parse_uint(factor, whole);
    if (index == 0 || index > ambient)
      throw DomainError("variable x" + std::to_string(index) + " outside ambient of " +
                        std::to_string(ambient));
    const std::uint64_t e = m[index - 1] + exponent;
    if (e > kDefaultExponentCap) throw OverflowError("exponent exceeds cap");
    m[index - 1] = static_cast<Exponent>(e);
  }
  if (m.degree() > kDefaultExponentCap) throw OverflowError("total degree exceeds cap");
  return m;
}

std::string to_text(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += to_text(ideal.generators()[i]);
  }
  return out + ")";
}

MonomialIdeal parse_ideal(std::string_view text, std::size_t ambient) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')')
    text = trim(text.substr(1, text.size() - 2));
  std::vector<Monomial> gens;
  if (text.empty() || text == "0") return MonomialIdeal(ambient);
  while (true) {
    const auto comma = text.find(',');
    gens.push_back(parse_monomial(text.substr(0, comma), ambient));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return minimalize(ambient, std::move(gens));
}

} // namespace pathideal
