#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ginv/error.hpp"
#include "ginv/form.hpp"

namespace ginv {

/// The set of integers in [0, bound) represented by a form, as a packed bitset.
class RepSupport {
 public:
  RepSupport() = default;
  explicit RepSupport(std::int64_t bound)
      : bound_(bound), words_(static_cast<std::size_t>((bound + 63) / 64), 0) {
    if (bound < 1) throw Error(ErrorKind::NonPositive, "support bound must be positive");
  }

  /// The trivial support {0}, the identity for sumset.
  static RepSupport zero(std::int64_t bound) {
    RepSupport s(bound);
    s.set(0);
    return s;
  }

  std::int64_t bound() const { return bound_; }

  bool test(std::int64_t k) const {
    return k >= 0 && k < bound_ && ((words_[static_cast<std::size_t>(k >> 6)] >> (k & 63)) & 1u);
  }
  void set(std::int64_t k) {
    assert(k >= 0 && k < bound_);
    words_[static_cast<std::size_t>(k >> 6)] |= std::uint64_t{1} << (k & 63);
  }

  std::int64_t count() const {
    std::int64_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  /// Elements in increasing order.
  std::vector<std::int64_t> elements() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1) {
        out.push_back(static_cast<std::int64_t>(i * 64) + std::countr_zero(w));
      }
    }
    return out;
  }

  /// Integers in [from, bound) that are not in the set.
  std::vector<std::int64_t> missing(std::int64_t from = 0) const {
    std::vector<std::int64_t> out;
    for (std::int64_t k = std::max<std::int64_t>(from, 0); k < bound_; ++k) {
      if (!test(k)) out.push_back(k);
    }
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  friend bool operator==(const RepSupport&, const RepSupport&) = default;

 private:
  std::int64_t bound_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Representation numbers: counts[k] = #{v : Q(v) = k} for k < bound.
struct RepCounts {
  std::int64_t bound = 0;
  std::vector<std::int64_t> counts;

  RepSupport support() const {
    RepSupport s(bound);
    for (std::int64_t k = 0; k < bound; ++k) {
      if (counts[static_cast<std::size_t>(k)] != 0) s.set(k);
    }
    return s;
  }
  friend bool operator==(const RepCounts&, const RepCounts&) = default;
};

inline RepSupport binary_support(const BinaryQF& f, std::int64_t bound) {
  require_positive_definite(f);
  RepSupport s(bound);
  for_each_point_below(f, bound - 1, [&](std::int64_t, std::int64_t, std::int64_t v) { s.set(v); });
  return s;
}

inline RepCounts binary_counts(const BinaryQF& f, std::int64_t bound) {
  require_positive_definite(f);
  if (bound < 1) throw Error(ErrorKind::NonPositive, "count bound must be positive");
  RepCounts rc{bound, std::vector<std::int64_t>(static_cast<std::size_t>(bound), 0)};
  for_each_point_below(f, bound - 1, [&](std::int64_t, std::int64_t, std::int64_t v) {
    ++rc.counts[static_cast<std::size_t>(v)];
  });
  return rc;
}

namespace detail {

// dst |= src << shift, truncated to dst's length.
inline void or_shifted(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                       std::int64_t shift) {
  const auto word_shift = static_cast<std::size_t>(shift >> 6);
  const unsigned bit_shift = static_cast<unsigned>(shift & 63);
  const std::size_t n = dst.size();
  if (word_shift >= n) return;
  if (bit_shift == 0) {
    for (std::size_t i = word_shift; i < n; ++i) dst[i] |= src[i - word_shift];
    return;
  }
  dst[word_shift] |= src[0] << bit_shift;
  for (std::size_t i = word_shift + 1; i < n; ++i) {
    dst[i] |= (src[i - word_shift] << bit_shift) | (src[i - word_shift - 1] >> (64 - bit_shift));
  }
}

inline void clear_tail(RepSupport& s) {
  const unsigned used = static_cast<unsigned>(s.bound() & 63);
  auto w = s.words();
  if (used != 0 && !w.empty()) w.back() &= (std::uint64_t{1} << used) - 1;
}

}  // namespace detail

/// Truncated Minkowski sum of two supports.
///
/// Word-parallel shift-and-or over the elements of the sparser operand, in
/// increasing order. Once the number of holes left in the result drops
/// below the word count, the remaining holes are resolved one by one
/// against the unprocessed elements instead.
inline RepSupport sumset(const RepSupport& s1, const RepSupport& s2) {
  if (s1.bound() != s2.bound()) {
    throw Error(ErrorKind::BoundMismatch, "sumset bounds differ: " + std::to_string(s1.bound()) +
                                              " vs " + std::to_string(s2.bound()));
  }
  const bool first_sparser = s1.count() <= s2.count();
  const RepSupport& sparse = first_sparser ? s1 : s2;
  const RepSupport& dense = first_sparser ? s2 : s1;
  const std::vector<std::int64_t> shifts = sparse.elements();

  RepSupport out(s1.bound());
  const auto n_words = static_cast<std::int64_t>(out.words().size());
  std::size_t next = 0;
  while (next < shifts.size()) {
    const std::size_t batch_end = std::min(shifts.size(), next + 64);
    for (; next < batch_end; ++next) detail::or_shifted(out.words(), dense.words(), shifts[next]);
    detail::clear_tail(out);
    if (out.bound() - out.count() <= n_words) break;
  }
  if (next < shifts.size()) {
    for (std::int64_t k : out.missing()) {
      for (std::size_t i = next; i < shifts.size() && shifts[i] <= k; ++i) {
        if (dense.test(k - shifts[i])) {
          out.set(k);
          break;
        }
      }
    }
  }
  return out;
}

/// m-fold sumset of s with itself, by repeated doubling.
inline RepSupport power_support(const RepSupport& s, int m) {
  if (m < 1) throw Error(ErrorKind::NonPositive, "power_support needs m >= 1");
  RepSupport result = RepSupport::zero(s.bound());
  RepSupport base = s;
  bool have_result = false;
  for (int e = m;;) {
    if (e & 1) {
      result = have_result ? sumset(result, base) : base;
      have_result = true;
    }
    e >>= 1;
    if (e == 0) break;
    base = sumset(base, base);
  }
  return result;
}

/// Truncated Cauchy product of two count arrays (theta-series multiplication).
inline RepCounts counts_convolve(const RepCounts& c1, const RepCounts& c2) {
  if (c1.bound != c2.bound) {
    throw Error(ErrorKind::BoundMismatch, "counts_convolve bounds differ");
  }
  const auto n = static_cast<std::size_t>(c1.bound);
  RepCounts out{c1.bound, std::vector<std::int64_t>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    if (c1.counts[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (c2.counts[j] == 0) continue;
      out.counts[i + j] = detail::add(out.counts[i + j], detail::mul(c1.counts[i], c2.counts[j]));
    }
  }
  return out;
}

}  // namespace ginv
