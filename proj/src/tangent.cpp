#include "taylor/tangent.hpp"

namespace taylor {

SmoothMap tangent_push(const SmoothMap& f) {
  const SmoothMap df = total_derivative(f);
  std::vector<Expr> body = f.body();
  body.insert(body.end(), df.body().begin(), df.body().end());
  return SmoothMap(2 * f.arity(), std::move(body));
}

SmoothMap iterated_push(const SmoothMap& f, std::size_t n) {
  check_tower_level(n);
  SmoothMap out = f;
  for (std::size_t k = 0; k < n; ++k) out = tangent_push(out);
  return out;
}

std::vector<SmoothMap> iterated_derivatives(const SmoothMap& f, std::size_t n) {
  check_tower_level(n);
  std::vector<SmoothMap> out{f};
  for (std::size_t k = 0; k < n; ++k) out.push_back(total_derivative(out.back()));
  return out;
}

SmoothMap iterated_derivative(const SmoothMap& f, std::size_t n) { return iterated_derivatives(f, n).back(); }

}  // namespace taylor
