#include "cosetcover/zsystem.hpp"

#include <cctype>
#include <charconv>

#include "cosetcover/errors.hpp"
#include "cosetcover/mycielski.hpp"

namespace cosetcover {

ResidueClass::ResidueClass(std::int64_t a, std::int64_t n) {
  if (n <= 0) throw ParseError("modulus must be positive, got " + std::to_string(n));
  auto r = a % n;
  if (r < 0) r += n;
  a_ = static_cast<std::uint64_t>(r);
  n_ = static_cast<std::uint64_t>(n);
}

bool ResidueClass::contains(std::int64_t x) const noexcept {
  auto n = static_cast<std::int64_t>(n_);
  auto r = x % n;
  if (r < 0) r += n;
  return static_cast<std::uint64_t>(r) == a_;
}

std::string ResidueClass::to_string() const { return std::to_string(a_) + "/" + std::to_string(n_); }

ZSystem::ZSystem(std::vector<ResidueClass> classes, std::uint64_t period_cap) : classes_(std::move(classes)) {
  if (classes_.empty()) throw PreconditionError("a residue-class system needs at least one class");
  for (const auto& c : classes_) {
    period_ = lcm_u64(period_, c.modulus());
    if (period_ > period_cap)
      throw CapExceeded("period exceeds cap " + std::to_string(period_cap));
  }
}

std::string ZSystem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (i) out += ',';
    out += classes_[i].to_string();
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view token) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("malformed residue-class token '" + std::string(token) + "'");
  return v;
}

ResidueClass parse_slash(std::string_view token) {
  auto slash = token.find('/');
  if (slash == std::string_view::npos)
    throw ParseError("malformed residue-class token '" + std::string(token) + "'");
  return ResidueClass(parse_int(token.substr(0, slash), token), parse_int(token.substr(slash + 1), token));
}

}  // namespace

ZSystem parse_zsystem(std::string_view text, std::uint64_t period_cap) {
  std::vector<std::string> words;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));

  std::vector<ResidueClass> classes;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].find('/') != std::string::npos) {
      classes.push_back(parse_slash(words[i]));
    } else if (i + 2 < words.size() && words[i + 1] == "mod") {
      auto token = words[i] + " mod " + words[i + 2];
      classes.emplace_back(parse_int(words[i], token), parse_int(words[i + 2], token));
      i += 2;
    } else {
      throw ParseError("malformed residue-class token '" + words[i] + "'");
    }
  }
  if (classes.empty()) throw ParseError("empty residue-class list");
  return ZSystem(std::move(classes), period_cap);
}

CoverInstance zsystem_to_instance(const ZSystem& system) { return zsystem_to_instance(system, system.period()); }

CoverInstance zsystem_to_instance(const ZSystem& system, std::uint64_t carrier_period) {
  if (carrier_period == 0 || carrier_period % system.period() != 0)
    throw PreconditionError("carrier period must be a positive multiple of the system period");
  std::vector<ElementSet> members;
  members.reserve(system.k());
  for (const auto& c : system.classes()) {
    ElementSet s(carrier_period);
    for (auto x = c.residue(); x < carrier_period; x += c.modulus()) s.insert(static_cast<Element>(x));
    members.push_back(std::move(s));
  }
  Provenance prov{Provenance::Kind::z_periodic, carrier_period, system.to_string()};
  return CoverInstance(carrier_period, std::move(members), std::move(prov));
}

}  // namespace cosetcover
