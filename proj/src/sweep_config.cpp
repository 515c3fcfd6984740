#include "horn/sweep_config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <set>
#include <sstream>

namespace horn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  for (;;) {
    auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

struct Parser {
  std::size_t line = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "config line " + std::to_string(line) + ": " + what);
  }

  double real(std::string_view tok) const {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v))
      fail("bad number '" + std::string(tok) + "'");
    return v;
  }

  std::uint64_t integer(std::string_view tok) const {
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      double base = real(tok.substr(0, caret)), exp = real(tok.substr(caret + 1));
      double v = std::pow(base, exp);
      if (v != std::floor(v) || v < 0 || v > 1e18) fail("bad integer '" + std::string(tok) + "'");
      return static_cast<std::uint64_t>(v);
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (!tok.empty() && ec == std::errc() && ptr == tok.data() + tok.size()) return v;
    double d = real(tok);
    if (d != std::floor(d) || d < 0 || d > 1e18) fail("bad integer '" + std::string(tok) + "'");
    return static_cast<std::uint64_t>(d);
  }

  D1Value d1(std::string_view tok) const {
    constexpr std::string_view kCritical = "critical";
    if (tok.substr(0, kCritical.size()) == kCritical) {
      std::string_view rest = trim(tok.substr(kCritical.size()));
      if (rest.empty()) return {0.0, true};
      if (rest.front() != '+' && rest.front() != '-') fail("bad d1 '" + std::string(tok) + "'");
      double offset = real(trim(rest.substr(1)));
      return {rest.front() == '-' ? -offset : offset, true};
    }
    return {real(tok), false};
  }

  bool boolean(std::string_view tok) const {
    if (tok == "true" || tok == "1" || tok == "yes") return true;
    if (tok == "false" || tok == "0" || tok == "no") return false;
    fail("bad boolean '" + std::string(tok) + "'");
  }
};

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig cfg;
  Parser p;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  while (std::getline(in, raw)) {
    ++p.line;
    std::string_view text = raw;
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    auto eq = text.find('=');
    if (eq == std::string_view::npos) p.fail("expected 'key = value'");
    std::string key(trim(text.substr(0, eq)));
    std::string_view value = trim(text.substr(eq + 1));
    if (value.empty()) p.fail("empty value for '" + key + "'");
    if (!seen.insert(key).second) p.fail("duplicate key '" + key + "'");

    if (key == "n") {
      for (auto tok : split_list(value)) cfg.grid.n.push_back(p.integer(tok));
    } else if (key == "d1") {
      for (auto tok : split_list(value)) cfg.grid.d1.push_back(p.d1(tok));
    } else if (key == "d3") {
      for (auto tok : split_list(value)) cfg.grid.d3.push_back(p.real(tok));
    } else if (key == "algo") {
      auto algo = parse_algo(value);
      if (!algo) p.fail("unknown algo '" + std::string(value) + "'");
      cfg.algo = *algo;
    } else if (key == "trials") {
      cfg.trials = p.integer(value);
    } else if (key == "seed") {
      cfg.seed = p.integer(value);
    } else if (key == "max_iters") {
      cfg.options.max_iters = p.integer(value);
    } else if (key == "optional_step") {
      cfg.options.gp_optional_step = p.boolean(value);
    } else if (key == "timing") {
      cfg.options.timing = p.boolean(value);
    } else {
      p.fail("unknown key '" + key + "'");
    }
  }
  for (const char* required : {"n", "d1", "d3"})
    if (!seen.contains(required))
      throw Error(ErrorKind::SyntaxError, std::string("config is missing '") + required + "'");
  if (cfg.trials == 0) throw Error(ErrorKind::SyntaxError, "trials must be at least 1");
  return cfg;
}

SweepConfig parse_sweep_config(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_sweep_config(in);
}

}  // namespace horn
