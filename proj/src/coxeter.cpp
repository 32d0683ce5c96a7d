#include "cellred/coxeter.hpp"

#include <algorithm>
#include <map>

#include "cellred/error.hpp"

namespace cellred {

namespace {

using Mat = std::vector<std::int64_t>;  // row-major rank x rank

Mat mat_mul(const Mat& x, const Mat& y, int r) {
  Mat out(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      const auto xik = x[i * r + k];
      if (xik == 0) continue;
      for (int j = 0; j < r; ++j) out[i * r + j] += xik * y[k * r + j];
    }
  return out;
}

// Matrix of s_i on fundamental-weight coordinates: s_i(n)_k = n_k - n_i * a[k][i].
Mat reflection(const RootSystem& rs, int i) {
  const int r = rs.rank();
  Mat m(static_cast<std::size_t>(r) * r, 0);
  for (int k = 0; k < r; ++k) m[k * r + k] = 1;
  for (int k = 0; k < r; ++k) m[k * r + i] -= rs.cartan[k][i];
  return m;
}

}  // namespace

std::string WeylElt::str() const {
  if (word.empty()) return "e";
  std::string s;
  for (auto g : word) s.push_back(static_cast<char>('1' + g));
  return s;
}

std::string genset_str(GenSet set) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if ((set >> i) & 1U) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

WeylGroup WeylGroup::generate(const CartanType& type) {
  WeylGroup g(build_root_system(type));
  const int r = type.rank();
  std::vector<Mat> gens;
  for (int i = 0; i < r; ++i) gens.push_back(reflection(g.rs_, i));

  Mat id(static_cast<std::size_t>(r) * r, 0);
  for (int k = 0; k < r; ++k) id[k * r + k] = 1;

  // Breadth-first by length; within a level, parents are visited in shortlex
  // order and generators ascending, so the first word reaching an element is
  // its shortlex-minimal reduced word.
  std::map<Mat, ElemId> seen;
  g.words_.push_back(WeylElt{});
  g.matrices_.push_back(id);
  seen.emplace(id, 0);
  std::size_t level_begin = 0;
  while (level_begin < g.words_.size()) {
    const std::size_t level_end = g.words_.size();
    for (std::size_t w = level_begin; w < level_end; ++w) {
      for (int i = 0; i < r; ++i) {
        Mat m = mat_mul(g.matrices_[w], gens[i], r);
        if (seen.count(m)) continue;
        WeylElt e = g.words_[w];
        e.word.push_back(static_cast<std::uint8_t>(i));
        seen.emplace(m, static_cast<ElemId>(g.words_.size()));
        g.words_.push_back(std::move(e));
        g.matrices_.push_back(std::move(m));
      }
    }
    level_begin = level_end;
  }

  const int n = g.size();
  g.right_.assign(static_cast<std::size_t>(n) * r, -1);
  g.left_.assign(static_cast<std::size_t>(n) * r, -1);
  g.inverse_.assign(n, -1);
  g.ldesc_.assign(n, 0);
  for (ElemId w = 0; w < n; ++w) {
    for (int i = 0; i < r; ++i) {
      g.right_[w * r + i] = seen.at(mat_mul(g.matrices_[w], gens[i], r));
      g.left_[w * r + i] = seen.at(mat_mul(gens[i], g.matrices_[w], r));
    }
  }
  for (ElemId w = 0; w < n; ++w) {
    ElemId inv = 0;
    const auto& word = g.words_[w].word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) inv = g.right_[inv * r + *it];
    g.inverse_[w] = inv;
    for (int i = 0; i < r; ++i)
      if (g.length(g.left_[w * r + i]) < g.length(w)) g.ldesc_[w] |= (1U << i);
  }
  for (int i = 0; i < r; ++i) g.gen_.push_back(g.right_[i]);  // s_i = e * s_i
  g.w0_ = n - 1;
  g.nu_ = g.length(g.w0_);
  return g;
}

ElemId WeylGroup::index_of(const WeylElt& w) const {
  ElemId x = 0;
  for (auto i : w.word) {
    if (i >= rank()) throw Error(Errc::BadGeneratorIndex, w.str());
    x = right_mult(x, i);
  }
  return x;
}

ElemId WeylGroup::multiply(ElemId x, ElemId y) const {
  for (auto i : words_[y].word) x = right_mult(x, i);
  return x;
}

ElemId WeylGroup::parse(std::string_view text) const {
  if (text.empty() || text == "e") return 0;
  ElemId x = 0;
  for (char ch : text) {
    const int i = ch - '1';
    if (i < 0 || i >= rank())
      throw Error(Errc::BadGeneratorIndex, "'" + std::string(text) + "' for type " + type().name());
    x = right_mult(x, i);
  }
  return x;
}

Weight WeylGroup::act_on_weight(ElemId w, const Weight& lambda) const {
  const int r = rank();
  const Mat& m = matrices_[w];
  Weight out{std::vector<std::int64_t>(r, 0)};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out.coords[i] += m[i * r + j] * lambda.coords[j];
  return out;
}

int WeylGroup::coxeter_order(int i, int j) const {
  const ElemId sij = multiply(generator(i), generator(j));
  ElemId x = sij;
  int k = 1;
  while (x != 0) {
    x = multiply(x, sij);
    ++k;
  }
  return k;
}

}  // namespace cellred
