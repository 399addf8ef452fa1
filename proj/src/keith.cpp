#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "benford/data_files.hpp"
#include "benford/sequences.hpp"

namespace benford {

bool is_keith_number(const BigInt& n) {
  if (n < 10) return false;
  const std::string text = n.str();
  std::vector<BigInt> window;
  window.reserve(text.size());
  BigInt sum = 0;
  for (char ch : text) {
    window.emplace_back(ch - '0');
    sum += ch - '0';
  }
  // Run the digit-seeded recurrence until it reaches or passes n.
  std::size_t oldest = 0;
  while (sum < n) {
    const BigInt next = sum;
    sum += next - window[oldest];
    window[oldest] = next;
    oldest = (oldest + 1) % window.size();
  }
  return sum == n;
}

std::vector<std::uint64_t> keith_numbers_with_digits(int digits) {
  if (digits < 2 || digits > 12) {
    throw std::invalid_argument("keith search supports 2..12 digits");
  }
  using i64 = std::int64_t;
  const int d = digits;
  i64 lo = 1;
  for (int i = 1; i < d; ++i) lo *= 10;
  const i64 hi = lo * 10;

  std::vector<i64> place(d);
  for (int i = 0; i < d; ++i) {
    place[i] = 1;
    for (int t = 0; t < d - 1 - i; ++t) place[i] *= 10;
  }

  // Each term of the recurrence is a fixed linear form in the digit vector.
  // A d-digit n is a Keith number iff some term's form, minus the place
  // values, vanishes on n's digits.
  std::vector<std::vector<i64>> forms;
  for (int i = 0; i < d; ++i) {
    std::vector<i64> unit(d, 0);
    unit[i] = 1;
    forms.push_back(std::move(unit));
  }

  const int front = (d + 1) / 2;
  const int back = d - front;
  i64 back_size = 1;
  for (int i = 0; i < back; ++i) back_size *= 10;
  i64 front_size = 1;
  for (int i = 0; i < front; ++i) front_size *= 10;

  std::vector<std::uint64_t> found;
  for (std::size_t k = d;; ++k) {
    std::vector<i64> form(d, 0);
    for (std::size_t j = k - d; j < k; ++j) {
      for (int i = 0; i < d; ++i) form[i] += forms[j][i];
    }
    forms.push_back(form);
    const i64 smallest = form[0];  // leading digit 1, rest zero
    const i64 largest = 9 * std::accumulate(form.begin(), form.end(), i64{0});
    if (smallest >= hi) break;
    if (largest < lo) continue;

    std::vector<i64> coef(d);
    for (int i = 0; i < d; ++i) coef[i] = form[i] - place[i];

    std::vector<std::pair<i64, i64>> tails(back_size);
    for (i64 x = 0; x < back_size; ++x) {
      i64 r = x, s = 0;
      for (int i = d - 1; i >= front; --i, r /= 10) s += coef[i] * (r % 10);
      tails[x] = {s, x};
    }
    std::sort(tails.begin(), tails.end());

    for (i64 x = front_size / 10; x < front_size; ++x) {
      i64 r = x, s = 0;
      for (int i = front - 1; i >= 0; --i, r /= 10) s += coef[i] * (r % 10);
      auto it = std::lower_bound(tails.begin(), tails.end(), std::pair<i64, i64>{-s, 0});
      for (; it != tails.end() && it->first == -s; ++it) {
        const i64 n = x * back_size + it->second;
        if (n >= 10 && is_keith_number(BigInt(n))) found.push_back(static_cast<std::uint64_t>(n));
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<BigInt> keith_numbers(std::uint64_t count, int search_digits) {
  const KeithList bundled = load_keith_list();
  std::vector<BigInt> list = bundled.values;
  if (list.size() < count && search_digits > 0) {
    for (int d = bundled.complete_through_digits + 1; d <= search_digits && list.size() < count; ++d) {
      for (auto v : keith_numbers_with_digits(d)) list.emplace_back(v);
    }
  }
  if (list.size() < count) {
    throw std::invalid_argument("keith: only " + std::to_string(list.size()) +
                                " Keith numbers are available");
  }
  list.resize(count);
  return list;
}

}  // namespace benford
