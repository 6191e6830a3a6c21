#include "ringoid/error.hpp"

#include <cstdlib>
#include <sstream>

namespace ringoid {

void Budget::check_carrier(std::size_t n, const char* what) const {
  if (n > max_carrier) {
    std::ostringstream os;
    os << what << " carrier of size " << n << " exceeds budget " << max_carrier;
    throw BudgetExceeded(os.str());
  }
}

Budget Budget::parse(const std::string& text) {
  Budget b;
  if (text.empty()) return b;
  auto parse_num = [&](const std::string& s) -> std::size_t {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      throw MalformedInput("bad budget value '" + s + "'");
    }
    if (pos != s.size()) throw MalformedInput("bad budget value '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  if (text.find('=') == std::string::npos) {
    b.max_search = parse_num(text);
    return b;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw MalformedInput("bad budget item '" + item + "'");
    std::string key = item.substr(0, eq);
    std::size_t value = parse_num(item.substr(eq + 1));
    if (key == "carrier") {
      b.max_carrier = value;
    } else if (key == "search") {
      b.max_search = value;
    } else {
      throw MalformedInput("unknown budget key '" + key + "'");
    }
  }
  return b;
}

Budget Budget::from_environment() {
  const char* env = std::getenv("RINGOID_BUDGET");
  if (env == nullptr) return Budget{};
  return parse(env);
}

void SearchCounter::tick(const char* what) {
  if (++nodes_ > limit_) {
    std::ostringstream os;
    os << what << ": search exceeded budget of " << limit_ << " candidates";
    throw BudgetExceeded(os.str());
  }
}

std::string Violation::to_string() const {
  std::ostringstream os;
  os << law << " witness=(";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
  os << ")";
  if (!detail.empty()) os << " " << detail;
  return os.str();
}

bool ValidationReport::has(const std::string& law) const { return find(law) != nullptr; }

const Violation* ValidationReport::find(const std::string& law) const {
  for (const auto& v : violations)
    if (v.law == law) return &v;
  return nullptr;
}

void ValidationReport::add(std::string law, std::vector<Elem> witness, std::string detail) {
  violations.push_back({std::move(law), std::move(witness), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations)
    violations.push_back({prefix + v.law, v.witness, v.detail});
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i)
    os << (i ? "; " : "") << violations[i].to_string();
  return os.str();
}

void require_valid(const ValidationReport& report, const std::string& what) {
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw PreconditionError(what + " invalid: " + report.to_string(), v.witness);
  }
}

}  // namespace ringoid
