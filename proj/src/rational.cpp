#include "nglie/rational.hpp"

#include <stdexcept>

namespace nglie {

Rat rat_parse(const std::string& s) {
  // Accepted form: ['-'] digits ['/' digits]
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = 0;
  if (s[i] == '-') i++;
  std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
  if (i == num_start) throw std::invalid_argument("bad rational: " + s);
  std::string num = s.substr(0, i);
  std::string den = "1";
  if (i < s.size()) {
    if (s[i] != '/') throw std::invalid_argument("bad rational: " + s);
    std::size_t den_start = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
    if (i == den_start || i != s.size())
      throw std::invalid_argument("bad rational: " + s);
    den = s.substr(den_start);
  }
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::range(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("bad range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rat Rng::rat_nonzero(long bound) {
  long num = 0;
  while (num == 0) num = range(-bound, bound);
  long den = range(1, bound);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rng Rng::split(std::uint64_t seed, std::uint64_t salt) {
  Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
  mix.next();
  return mix;
}

}  // namespace nglie
