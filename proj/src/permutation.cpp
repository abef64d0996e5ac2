#include "gil/permutation.hpp"

#include <cctype>
#include <numeric>

#include "gil/error.hpp"

namespace gil {

Permutation::Permutation(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw Error("permutation degree " + std::to_string(degree) +
                " outside 1.." + std::to_string(kMaxDegree));
  }
  for (int i = 0; i < degree; ++i) images_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  Permutation p(static_cast<int>(images.size()));
  std::array<bool, kMaxDegree> hit{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int x = images[i];
    if (x < 0 || x >= p.degree_ || hit[x]) throw Error("images do not form a bijection");
    hit[x] = true;
    p.images_[i] = static_cast<std::uint8_t>(x);
  }
  return p;
}

namespace {

struct RawCycle {
  std::vector<int> points;  // 1-based
};

std::vector<RawCycle> scan_cycles(std::string_view text) {
  std::vector<RawCycle> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    RawCycle cyc;
    bool need_point = false;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      const char c = text[i];
      if (c == ')') {
        if (need_point) throw ParseError("expected point", i);
        ++i;
        break;
      }
      if (c == ',') {
        if (cyc.points.empty() || need_point) throw ParseError("unexpected ','", i);
        need_point = true;
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      const std::size_t start = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > kMaxDegree) throw ParseError("point exceeds maximum degree", start);
        ++i;
      }
      if (value < 1) throw ParseError("points are 1-based", start);
      for (int seen : cyc.points) {
        if (seen == value) throw ParseError("point repeated within a cycle", start);
      }
      cyc.points.push_back(static_cast<int>(value));
      need_point = false;
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, int degree) {
  const auto cycles = scan_cycles(text);
  int max_point = 1;
  for (const auto& c : cycles) {
    for (int x : c.points) max_point = std::max(max_point, x);
  }
  if (degree == 0) degree = max_point;
  if (max_point > degree) {
    throw Error("cycle point " + std::to_string(max_point) + " exceeds degree " +
                std::to_string(degree));
  }
  Permutation result(degree);
  for (const auto& c : cycles) {
    Permutation step(degree);
    for (std::size_t k = 0; k < c.points.size(); ++k) {
      const int from = c.points[k] - 1;
      const int to = c.points[(k + 1) % c.points.size()] - 1;
      step.images_[from] = static_cast<std::uint8_t>(to);
    }
    result = result * step;
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree_ != rhs.degree_) throw Error("degree mismatch in permutation product");
  Permutation out(degree_);
  for (int i = 0; i < degree_; ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree_);
  for (int i = 0; i < degree_; ++i) out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

int Permutation::order() const {
  // lcm of cycle lengths
  std::array<bool, kMaxDegree> seen{};
  long result = 1;
  for (int i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, static_cast<long>(len));
  }
  return static_cast<int>(result);
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < degree_; ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (int x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out += ',';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::extended(int degree) const {
  if (degree < degree_) throw Error("cannot shrink a permutation");
  Permutation out(degree);
  for (int i = 0; i < degree_; ++i) out.images_[i] = images_[i];
  return out;
}

}  // namespace gil
