#include "homotopelab/constructions.hpp"

#include <algorithm>
#include <map>

namespace homotopelab {

Algebra field_algebra(const FieldSpec& field) {
  Trilinear t(field, {1, 1, 1});
  t.set(0, 0, 0, Scalar::one(field));
  return Algebra(std::move(t), unit_vector(field, 1, 0), {"1"});
}

Algebra zero_algebra(const FieldSpec& field, std::size_t dim) { return Algebra(Trilinear(field, {dim, dim, dim})); }

Algebra two_dim_A(const FieldSpec& field) {
  Trilinear t(field, {2, 2, 2});
  const auto one = Scalar::one(field);
  t.set(0, 0, 0, one);
  t.set(1, 0, 1, one);
  t.set(0, 1, 0, one);
  t.set(1, 1, 0, one);
  return Algebra(std::move(t));
}

Element delta_b(const Scalar& lambda) { return {Scalar::one(lambda.field()), lambda}; }

Algebra B_lambda(const Scalar& lambda) {
  return left_delta_homotope(two_dim_A(lambda.field()), delta_b(lambda));
}

Algebra R_lambda(const Scalar& lambda) {
  if (lambda.is_zero()) throw Error(Errc::zero_lambda, "R_lambda needs lambda != 0");
  const FieldSpec& f = lambda.field();
  const auto one = Scalar::one(f);
  Trilinear t(f, {4, 4, 4});
  for (std::size_t i = 0; i < 4; ++i) {
    t.set(0, i, i, one);
    t.set(i, 0, i, one);
  }
  t.set(1, 2, 3, one);           // x y = xy
  t.set(2, 1, 3, lambda.inv());  // y x = lambda^-1 xy
  return Algebra(std::move(t), unit_vector(f, 4, 0), {"1", "x", "y", "xy"});
}

namespace {

// Generator tokens: x, y, 1 (h1), 2 (h2).
const std::vector<std::string>& b16_words() {
  static const std::vector<std::string> words = {"",   "x",  "y",  "1",  "2",  "xy", "yx", "x1",
                                                 "x2", "y1", "y2", "1x", "1y", "2x", "2y", "x1y"};
  return words;
}

bool is_h(char c) { return c == '1' || c == '2'; }

// Basis index of the reduced word, or nullopt when it vanishes.
std::optional<std::size_t> b16_reduce(const std::string& word) {
  if (word.size() > 3) return std::nullopt;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    const char a = word[i], b = word[i + 1];
    if (a == b || (is_h(a) && is_h(b))) return std::nullopt;
  }
  if (word.size() == 3) {
    if (word == "x1y" || word == "y2x") return b16::w;
    return std::nullopt;
  }
  const auto& words = b16_words();
  for (std::size_t i = 0; i < b16::w; ++i)
    if (words[i] == word) return i;
  return std::nullopt;
}

}  // namespace

Algebra B16(const FieldSpec& field) {
  const auto& words = b16_words();
  Trilinear t(field, {b16::dim, b16::dim, b16::dim});
  const auto one = Scalar::one(field);
  for (std::size_t i = 0; i < b16::dim; ++i) {
    for (std::size_t j = 0; j < b16::dim; ++j) {
      if (auto k = b16_reduce(words[i] + words[j])) t.set(i, j, *k, one);
    }
  }
  return Algebra(std::move(t), unit_vector(field, b16::dim, b16::one),
                 {"1", "x", "y", "h1", "h2", "xy", "yx", "xh1", "xh2", "yh1", "yh2", "h1x", "h1y", "h2x", "h2y", "w"});
}

Element delta16(const Scalar& lambda) {
  Element d = zero_vector(lambda.field(), b16::dim);
  d[b16::h1] = lambda;
  d[b16::h2] = Scalar::one(lambda.field());
  return d;
}

Algebra B16_hat(const Scalar& lambda) {
  return augment_unit(left_delta_homotope(B16(lambda.field()), delta16(lambda)));
}

Quiver kronecker_quiver() { return Quiver{2, {{0, 1, "a"}, {0, 1, "b"}}}; }

Quiver doubled_chain_quiver(std::size_t vertices) {
  Quiver q{vertices, {}};
  for (std::size_t i = 0; i + 1 < vertices; ++i) {
    q.arrows.push_back({i, i + 1, "a" + std::to_string(i + 1)});
    q.arrows.push_back({i, i + 1, "b" + std::to_string(i + 1)});
  }
  return q;
}

namespace {

void require_acyclic(const Quiver& q) {
  std::vector<std::size_t> indegree(q.vertices, 0);
  for (const auto& a : q.arrows) {
    if (a.source >= q.vertices || a.target >= q.vertices) {
      throw Error(Errc::invalid_argument, "arrow " + a.label + " has an invalid endpoint");
    }
    ++indegree[a.target];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < q.vertices; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : q.arrows)
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
  }
  if (seen != q.vertices) throw Error(Errc::cyclic_quiver, "path algebra of a quiver with an oriented cycle");
}

struct Path {
  std::size_t source;
  std::size_t target;
  std::vector<std::size_t> arrows;
};

}  // namespace

Algebra path_algebra(const Quiver& q, const FieldSpec& field, std::optional<std::size_t> max_len) {
  require_acyclic(q);
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertices; ++v) paths.push_back({v, v, {}});
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; !max_len || len <= *max_len; ++len) {
    const std::size_t layer_end = paths.size();
    for (std::size_t p = layer_begin; p < layer_end; ++p) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != paths[p].target) continue;
        Path next = paths[p];
        next.arrows.push_back(a);
        next.target = q.arrows[a].target;
        paths.push_back(std::move(next));
      }
    }
    if (paths.size() == layer_end) break;
    layer_begin = layer_end;
    // Keep lexicographic order by arrow sequence within the new layer.
    std::sort(paths.begin() + static_cast<std::ptrdiff_t>(layer_begin), paths.end(),
              [](const Path& a, const Path& b) { return a.arrows < b.arrows; });
  }

  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    index[{paths[i].source, paths[i].arrows}] = i;
    if (paths[i].arrows.empty()) {
      labels.push_back("e" + std::to_string(paths[i].source + 1));
    } else {
      std::string s;
      for (std::size_t a : paths[i].arrows) s += (s.empty() ? "" : ".") + q.arrows[a].label;
      labels.push_back(s);
    }
  }

  const std::size_t n = paths.size();
  Trilinear t(field, {n, n, n});
  const auto one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (paths[i].target != paths[j].source) continue;
      auto arrows = paths[i].arrows;
      arrows.insert(arrows.end(), paths[j].arrows.begin(), paths[j].arrows.end());
      auto it = index.find({paths[i].source, arrows});
      if (it != index.end()) t.set(i, j, it->second, one);
    }
  }
  Element unit = zero_vector(field, n);
  for (std::size_t v = 0; v < q.vertices; ++v) unit[v] = one;
  return Algebra(std::move(t), std::move(unit), std::move(labels));
}

Algebra mat_over(const Algebra& A, std::size_t n) {
  if (!A.unit()) throw Error(Errc::not_unital, "matrix algebras are built over unital algebras");
  if (!is_associative(A)) throw Error(Errc::invalid_argument, "matrix algebras are built over associative algebras");
  const std::size_t d = A.dim();
  const std::size_t N = n * n * d;
  Trilinear t(A.field(), {N, N, N});
  auto at = [&](std::size_t r, std::size_t s, std::size_t i) { return (r * n + s) * d + i; };
  for (const auto& [idx, c] : A.structure().entries()) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t u = 0; u < n; ++u) t.add(at(r, s, idx[0]), at(s, u, idx[1]), at(r, u, idx[2]), c);
  }
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t i = 0; i < d; ++i)
        labels.push_back("E" + std::to_string(r + 1) + std::to_string(s + 1) + ":" + A.label(i));
  std::vector<Element> entries(n * n, A.zero());
  for (std::size_t r = 0; r < n; ++r) entries[r * n + r] = *A.unit();
  return Algebra(std::move(t), matrix_element(A, n, entries), std::move(labels));
}

Algebra matrix_algebra(const FieldSpec& field, std::size_t n) {
  auto M = mat_over(field_algebra(field), n);
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) labels.push_back("E" + std::to_string(r + 1) + std::to_string(s + 1));
  return Algebra(M.structure(), M.unit(), std::move(labels));
}

Element matrix_element(const Algebra& A, std::size_t n, const std::vector<Element>& entries) {
  if (entries.size() != n * n) throw Error(Errc::dimension_mismatch, "matrix element needs n^2 entries");
  Element out;
  out.reserve(n * n * A.dim());
  for (const auto& e : entries) {
    if (e.size() != A.dim()) throw Error(Errc::dimension_mismatch, "matrix entry length");
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

Element diag2(const Algebra& A, const Element& a, const Element& b) {
  return matrix_element(A, 2, {a, A.zero(), A.zero(), b});
}

Element Lambda(const Algebra& A, const Element& delta) {
  if (!A.unit()) throw Error(Errc::not_unital, "diag(1, delta) needs a unital base algebra");
  return diag2(A, *A.unit(), delta);
}

Trilinear tensor_522(const Vector& bhat_diag, const Vector& b) {
  if (bhat_diag.size() != 4 || b.size() != 4) throw Error(Errc::dimension_mismatch, "tensor_522 takes 4 + 4 scalars");
  const FieldSpec& f = bhat_diag[0].field();
  Trilinear t(f, {5, 4, 2});
  for (std::size_t i = 0; i < 4; ++i) {
    t.set(i, i, 0, Scalar::one(f));
    t.set(i, i, 1, bhat_diag[i]);
    t.set(4, i, 1, b[i]);
  }
  return t;
}

}  // namespace homotopelab
