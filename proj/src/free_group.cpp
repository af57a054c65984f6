#include "deltaft/free_group.hpp"

#include <cstdlib>
#include <sstream>

namespace deltaft {

namespace {

void push_reduced(FreeWord& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

FreeWord free_reduce(std::span<const int> w) {
  FreeWord out;
  out.reserve(w.size());
  for (int letter : w) push_reduced(out, letter);
  return out;
}

FreeWord free_invert(std::span<const int> w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

FreeWord free_concat(std::span<const int> a, std::span<const int> b) {
  FreeWord out = free_reduce(a);
  for (int letter : b) push_reduced(out, letter);
  return out;
}

bool is_freely_reduced(std::span<const int> w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

FreeWord free_substitute(std::span<const int> w,
                         const std::vector<FreeWord>& images) {
  FreeWord out;
  for (int letter : w) {
    const FreeWord& img = images.at(static_cast<std::size_t>(std::abs(letter)) - 1);
    if (letter > 0) {
      for (int x : img) push_reduced(out, x);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, -*it);
    }
  }
  return out;
}

long exponent_sum(std::span<const int> w, int g) {
  long total = 0;
  for (int letter : w) {
    if (letter == g) ++total;
    if (letter == -g) --total;
  }
  return total;
}

std::string free_to_string(std::span<const int> w, const std::string& prefix) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << prefix << std::abs(w[i]);
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

}  // namespace deltaft
