#include "simplexvol/subsets.hpp"

#include "simplexvol/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace simplexvol {

FaceError::FaceError(const std::string& what, std::vector<int> face)
    : std::runtime_error(what + " at face " + format_face(face)), face_(std::move(face)) {}

std::string format_face(const std::vector<int>& face) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < face.size(); ++i) {
    out << (i ? "," : "") << face[i];
  }
  out << '}';
  return out.str();
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is an integer; divide out the common factor first
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i) / (static_cast<std::uint64_t>(i) / g);
    if (__builtin_mul_overflow(result / g, factor, &result)) {
      throw CertificationError("binomial coefficient overflows 64 bits");
    }
  }
  return result;
}

std::vector<Subset> k_subsets(int ground, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > ground) {
    return out;
  }
  out.reserve(binomial(ground, k));
  Subset current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    current[i] = i + 1;
  }
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == ground - k + i + 1) {
      --i;
    }
    if (i < 0) {
      break;
    }
    ++current[i];
    for (int j = i + 1; j < k; ++j) {
      current[j] = current[j - 1] + 1;
    }
  }
  return out;
}

std::size_t subset_rank(const Subset& subset, int ground) {
  // count the subsets that precede it lexicographically
  const int k = static_cast<int>(subset.size());
  std::size_t rank = 0;
  int previous = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = previous + 1; v < subset[i]; ++v) {
      rank += binomial(ground - v, k - i - 1);
    }
    previous = subset[i];
  }
  return rank;
}

Subset complement(const Subset& subset, int ground) {
  Subset out;
  out.reserve(static_cast<std::size_t>(ground) - std::min<std::size_t>(subset.size(), ground));
  std::size_t pos = 0;
  for (int v = 1; v <= ground; ++v) {
    if (pos < subset.size() && subset[pos] == v) {
      ++pos;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

std::size_t intersection_size(const Subset& a, const Subset& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

FaceIndex FaceIndex::from_vertices(Subset vertices, int num_vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw IndexError("repeated vertex in face " + format_face(vertices));
  }
  for (int v : vertices) {
    if (v < 1 || v > num_vertices) {
      throw IndexError("vertex " + std::to_string(v) + " outside 1.." +
                       std::to_string(num_vertices));
    }
  }
  return FaceIndex(std::move(vertices), num_vertices);
}

FaceIndex FaceIndex::from_complement(const Subset& key, int num_vertices) {
  FaceIndex checked = from_vertices(key, num_vertices);
  return FaceIndex(simplexvol::complement(checked.vertices_, num_vertices), num_vertices);
}

FaceIndex FaceIndex::full(int num_vertices) {
  Subset all(static_cast<std::size_t>(num_vertices));
  for (int i = 0; i < num_vertices; ++i) {
    all[i] = i + 1;
  }
  return FaceIndex(std::move(all), num_vertices);
}

bool FaceIndex::contains(int vertex) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), vertex);
}

}  // namespace simplexvol
