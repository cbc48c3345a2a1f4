#include "bellpoly/sequence.hpp"

#include <algorithm>

#include "bellpoly/errors.hpp"

namespace bellpoly {

namespace {

const Rational kZero(0);

}  // namespace

const Rational& Sequence::at(std::int64_t n) const {
  if (n < start_ || n > last()) return kZero;
  return terms_[static_cast<std::size_t>(n - start_)];
}

bool Sequence::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Rational& r) { return r.is_zero(); });
}

Sequence Sequence::canonicalized() const {
  auto first = std::find_if(terms_.begin(), terms_.end(),
                            [](const Rational& r) { return !r.is_zero(); });
  if (first == terms_.end()) return Sequence(start_, {});
  const auto offset = static_cast<std::int64_t>(first - terms_.begin());
  return Sequence(start_ + offset, std::vector<Rational>(first, terms_.end()));
}

Sequence Sequence::truncated(std::int64_t up_to) const {
  if (up_to < start_) return Sequence(start_, {});
  const auto count = std::min<std::size_t>(terms_.size(), static_cast<std::size_t>(up_to - start_ + 1));
  return Sequence(start_, std::vector<Rational>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(count)));
}

bool operator==(const Sequence& a, const Sequence& b) {
  if (a.empty() && b.empty()) return true;
  const std::int64_t lo = std::min(a.empty() ? b.start() : a.start(), b.empty() ? a.start() : b.start());
  const std::int64_t hi = std::max(a.last(), b.last());
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (a.at(n) != b.at(n)) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Sequence& s) {
  os << "{start=" << s.start() << ", [";
  for (std::size_t i = 0; i < s.terms().size(); ++i) {
    if (i != 0) os << ", ";
    os << s.terms()[i];
  }
  return os << "]}";
}

Sequence convolve(const Sequence& a, const Sequence& b, std::int64_t up_to) {
  const std::int64_t start = a.start() + b.start();
  if (up_to < start) {
    throw Error(ErrorCode::DomainError, "convolution window ends before the result support begins");
  }
  std::vector<Rational> terms(static_cast<std::size_t>(up_to - start + 1));
  for (std::int64_t i = a.start(); i <= a.last(); ++i) {
    const Rational& ai = a.at(i);
    if (ai.is_zero()) continue;
    for (std::int64_t j = b.start(); j <= b.last() && i + j <= up_to; ++j) {
      terms[static_cast<std::size_t>(i + j - start)] += ai * b.at(j);
    }
  }
  return Sequence(start, std::move(terms));
}

Sequence conv_power(const Sequence& x, std::uint64_t k, std::int64_t up_to) {
  if (k == 0) return Sequence::delta();
  const Sequence canon = x.canonicalized();
  const auto power = static_cast<std::int64_t>(k);
  if (canon.empty()) return Sequence(power * x.start(), {});

  // Work on the copy shifted to start at 0 so every intermediate product is
  // supported on n >= 0 and truncation at the window edge is exact.
  const std::int64_t offset = power * canon.start();
  const std::int64_t window = up_to - offset;
  if (window < 0) return Sequence(offset, {});

  Sequence base = shift(canon, -canon.start()).truncated(window);
  Sequence result = Sequence::delta();
  for (std::uint64_t e = k;;) {
    if (e & 1U) result = convolve(result, base, window);
    e >>= 1U;
    if (e == 0) break;
    base = convolve(base, base, window);
  }
  return shift(result, offset);
}

Sequence shift(const Sequence& x, std::int64_t d) { return Sequence(x.start() + d, x.terms()); }

std::optional<std::int64_t> leading_index(const Sequence& x) {
  for (std::int64_t n = x.start(); n <= x.last(); ++n) {
    if (!x.at(n).is_zero()) return n;
  }
  return std::nullopt;
}

}  // namespace bellpoly
