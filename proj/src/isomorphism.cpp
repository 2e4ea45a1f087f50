#include "csr/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace csr {

std::string canonical_form(const FiniteSemiring& a, std::size_t max_order) {
  const std::size_t n = a.order();
  if (n > max_order) {
    throw OrderTooLarge(n, max_order);
  }
  if (n > 255) {
    throw OrderTooLarge(n, 255);
  }
  std::vector<Elem> perm(n);  // old -> new
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::vector<Elem> inverse(n);

  std::string best;
  std::string candidate(1 + 2 * n * n, '\0');
  candidate[0] = static_cast<char>(n);
  const auto first_free = std::min<std::size_t>(2, n);
  do {
    for (Elem i = 0; i < n; ++i) {
      inverse[perm[i]] = i;
    }
    // Row-major over new labels; stop as soon as the candidate exceeds best.
    bool worse = false;
    bool better = best.empty();
    std::size_t pos = 1;
    for (int table = 0; table < 2 && !worse; ++table) {
      for (Elem i = 0; i < n && !worse; ++i) {
        for (Elem j = 0; j < n; ++j, ++pos) {
          Elem oi = inverse[i];
          Elem oj = inverse[j];
          Elem v = perm[table == 0 ? a.add(oi, oj) : a.mul(oi, oj)];
          candidate[pos] = static_cast<char>(v);
          if (!better) {
            auto c = static_cast<unsigned char>(candidate[pos]);
            auto b = static_cast<unsigned char>(best[pos]);
            if (c < b) {
              better = true;
            } else if (c > b) {
              worse = true;
              break;
            }
          }
        }
      }
    }
    if (better && !worse) {
      best = candidate;
    }
  } while (std::next_permutation(perm.begin() + first_free, perm.end()));
  return best;
}

bool are_isomorphic(const FiniteSemiring& a, const FiniteSemiring& b,
                    std::size_t max_order) {
  auto ca = canonical_form(a, max_order);
  auto cb = canonical_form(b, max_order);
  return ca == cb;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const FiniteSemiring& a, const FiniteSemiring& b)
      : a_(a), b_(b), image_(a.order(), 0), used_(b.order(), false) {}

  std::optional<std::vector<Elem>> run() {
    if (a_.order() != b_.order()) {
      return std::nullopt;
    }
    const auto n = a_.order();
    image_[0] = 0;
    used_[0] = true;
    if (n >= 2) {
      image_[1] = 1;
      used_[1] = true;
      if (!consistent(1)) {
        return std::nullopt;
      }
    }
    if (extend(std::min<std::size_t>(2, n))) {
      return image_;
    }
    return std::nullopt;
  }

 private:
  bool consistent(Elem k) const {
    for (Elem i = 0; i <= k; ++i) {
      for (Elem j = 0; j <= k; ++j) {
        Elem s = a_.add(i, j);
        Elem p = a_.mul(i, j);
        bool touches_k = i == k || j == k;
        if ((touches_k || s == k) && s <= k &&
            image_[s] != b_.add(image_[i], image_[j])) {
          return false;
        }
        if ((touches_k || p == k) && p <= k &&
            image_[p] != b_.mul(image_[i], image_[j])) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == a_.order()) {
      return true;
    }
    for (Elem v = 0; v < b_.order(); ++v) {
      if (used_[v]) {
        continue;
      }
      image_[k] = v;
      used_[v] = true;
      if (consistent(static_cast<Elem>(k)) && extend(k + 1)) {
        return true;
      }
      used_[v] = false;
    }
    return false;
  }

  const FiniteSemiring& a_;
  const FiniteSemiring& b_;
  std::vector<Elem> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Homomorphism> find_isomorphism(const FiniteSemiring& a,
                                             const FiniteSemiring& b) {
  auto map = IsoSearch(a, b).run();
  if (!map) {
    return std::nullopt;
  }
  return validate_hom(std::move(*map), a, b);
}

}  // namespace csr
