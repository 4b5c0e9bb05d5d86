#include "candy/render.hpp"

#include "candy/error.hpp"

namespace candy {

namespace {

std::string fit(std::string line, std::size_t width) {
  if (width == 0 || line.size() <= width) return line;
  if (width <= 3) return std::string(width, '.');
  line.resize(width - 3);
  return line + "...";
}

}  // namespace

std::string render_trajectory(const Trajectory& t, std::size_t width) {
  if (!t.visited) {
    throw MissingPrefix("trajectory was detected without keep_prefix");
  }
  const auto& visited = *t.visited;
  const std::size_t digits = std::to_string(visited.size() - 1).size();

  std::string out;
  for (std::size_t k = 0; k < visited.size(); ++k) {
    if (k == t.transient_length) {
      out += fit("-- cycle (period " + std::to_string(t.period) + ") --", width);
      out += '\n';
    }
    std::string label = std::to_string(k);
    std::string line(digits - label.size(), ' ');
    line += label;
    line += "  ";
    const State& s = visited[k];
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != 0) line += ',';
      if (s[i] >= 2) {
        line += '[' + std::to_string(s[i]) + ']';
      } else {
        line += std::to_string(s[i]);
      }
    }
    out += fit(std::move(line), width);
    out += '\n';
  }
  return out;
}

}  // namespace candy
