#pragma once

#include <string>
#include <vector>

#include "projsing/classify.hpp"

namespace th {

using namespace projsing;

inline const Field<Fp>& fp() {
  static const Field<Fp> f(10007);
  return f;
}
inline const Field<Rational>& qq() {
  static const Field<Rational> f;
  return f;
}

template <class S = Fp>
TruncatedSeries<S> ser(const std::string& expr, Ambient amb, const Field<S>& f) {
  return series_from_expression(expr, amb, f);
}

inline TruncatedSeries<Fp> ser(const std::string& expr, Ambient amb) { return ser<Fp>(expr, amb, fp()); }

template <class S>
SeriesSubspace<S> space(const std::vector<std::string>& exprs, Ambient amb, const Field<S>& f) {
  std::vector<TruncatedSeries<S>> v;
  for (const auto& e : exprs) v.push_back(ser<S>(e, amb, f));
  return span_reduce(amb, v);
}

inline SeriesSubspace<Fp> space(const std::vector<std::string>& exprs, Ambient amb) { return space<Fp>(exprs, amb, fp()); }

template <class S>
GapFunction<S> algebra(const std::vector<std::string>& exprs, Ambient amb, const Field<S>& f) {
  return GapFunction<S>(close_algebra(space<S>(exprs, amb, f)), GapKind::AlgebraClosed);
}

inline GapFunction<Fp> algebra(const std::vector<std::string>& exprs, Ambient amb) { return algebra<Fp>(exprs, amb, fp()); }

}  // namespace th
