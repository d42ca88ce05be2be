// Cycle notation.
//
//   perm  := ws ( "()" | cycle+ ) ws | ws
//   cycle := "(" ws int ( ws+ int )* ws ")" ws
//
// Commas between points are accepted as separators as well.

#include <cctype>
#include <numeric>
#include <sstream>

#include "permgen/errors.hpp"
#include "permgen/permutation.hpp"

namespace permgen {
namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

  Permutation parse() {
    std::vector<Point> images(degree_);
    std::iota(images.begin(), images.end(), Point{0});
    Permutation result = Permutation::from_images_unchecked(std::move(images));
    skip_ws();
    while (pos_ < text_.size()) {
      result *= parse_cycle();
      skip_ws();
    }
    return result;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == ','))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorKind::SyntaxError, pos_, what);
  }

  Permutation parse_cycle() {
    if (text_[pos_] != '(') fail("expected '('");
    ++pos_;
    std::vector<Point> points;
    std::vector<char> used(degree_, 0);
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] != ')') {
      const std::size_t start = pos_;
      if (!std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a point");
      std::uint64_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (value > degree_ + 1) value = degree_ + 1;
        ++pos_;
      }
      if (value == 0 || value > degree_)
        throw ParseError(ErrorKind::PointOutOfRange, start,
                         "point outside 1.." + std::to_string(degree_));
      const Point p = static_cast<Point>(value - 1);
      if (used[p])
        throw ParseError(ErrorKind::RepeatedPointInCycle, start,
                         "point " + std::to_string(value) + " repeated");
      used[p] = 1;
      points.push_back(p);
      skip_ws();
    }
    if (pos_ >= text_.size()) fail("unterminated cycle");
    ++pos_;

    Permutation cycle(degree_);
    if (points.size() >= 2) {
      std::vector<Point> images(cycle.images().begin(), cycle.images().end());
      for (std::size_t i = 0; i < points.size(); ++i)
        images[points[i]] = points[(i + 1) % points.size()];
      cycle = Permutation::from_images_unchecked(std::move(images));
    }
    return cycle;
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  return CycleParser(text, degree).parse();
}

std::string print_cycles(const Permutation& a) {
  const auto cs = cycles(a);
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i] + 1;
    out << ')';
  }
  return out.str();
}

}  // namespace permgen
