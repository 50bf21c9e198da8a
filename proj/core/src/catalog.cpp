#include "hav/lie_core.hpp"

namespace hav {

namespace {

struct Builder {
  std::size_t dim;
  std::vector<std::string> labels;
  std::vector<SparseConstant> entries;

  void set(std::size_t i, std::size_t j, std::size_t k, long v) { entries.push_back({i, j, k, Rational(v)}); }
};

long param_or(const CatalogParams& params, const std::string& key, long fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

Builder build(const std::string& name, const CatalogParams& params) {
  if (name == "abelian") {
    long n = param_or(params, "n", 1);
    if (n < 0) throw Error(ErrorKind::UnknownName, "abelian needs n >= 0");
    Builder b{static_cast<std::size_t>(n), {}, {}};
    for (long i = 0; i < n; ++i) b.labels.push_back("a" + std::to_string(i + 1));
    return b;
  }
  if (name == "heisenberg") {
    long m = param_or(params, "m", 1);
    if (params.count("dim")) {
      long dim = params.at("dim");
      if (dim < 3 || dim % 2 == 0) throw Error(ErrorKind::UnknownName, "heisenberg needs odd dim >= 3");
      m = (dim - 1) / 2;
    }
    if (m < 1) throw Error(ErrorKind::UnknownName, "heisenberg needs m >= 1");
    std::size_t mm = static_cast<std::size_t>(m);
    Builder b{2 * mm + 1, {}, {}};
    for (std::size_t i = 0; i < mm; ++i) b.labels.push_back(m == 1 ? "x" : "x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < mm; ++i) b.labels.push_back(m == 1 ? "y" : "y" + std::to_string(i + 1));
    b.labels.push_back("z");
    for (std::size_t i = 0; i < mm; ++i) b.set(i, mm + i, 2 * mm, 1);
    return b;
  }
  if (name == "sl2") {
    Builder b{3, {"h", "e", "f"}, {}};
    b.set(0, 1, 1, 2);   // [h,e] = 2e
    b.set(0, 2, 2, -2);  // [h,f] = -2f
    b.set(1, 2, 0, 1);   // [e,f] = h
    return b;
  }
  if (name == "borel_sl2") {
    Builder b{2, {"t", "u"}, {}};
    b.set(0, 1, 1, 2);
    return b;
  }
  if (name == "borel_sl3") {
    // h1 = E11 - E22, h2 = E22 - E33, then e12, e23, e13.
    Builder b{5, {"h1", "h2", "e12", "e23", "e13"}, {}};
    b.set(0, 2, 2, 2);
    b.set(0, 3, 3, -1);
    b.set(0, 4, 4, 1);
    b.set(1, 2, 2, -1);
    b.set(1, 3, 3, 2);
    b.set(1, 4, 4, 1);
    b.set(2, 3, 4, 1);
    return b;
  }
  throw Error(ErrorKind::UnknownName, "unknown catalog algebra '" + name + "'");
}

}  // namespace

std::vector<std::string> catalog_names() { return {"abelian", "heisenberg", "sl2", "borel_sl2", "borel_sl3"}; }

LieAlgebra catalog(const std::string& name, const CatalogParams& params) {
  for (const auto& [key, value] : params)
    if (key != "n" && key != "m" && key != "dim" && key != "scale_p")
      throw Error(ErrorKind::UnknownName, "unknown catalog parameter '" + key + "'");
  Builder b = build(name, params);
  long p = param_or(params, "scale_p", 0);
  if (p != 0) {
    if (!is_prime(p)) throw Error(ErrorKind::UnknownName, "scale_p must be prime");
    long factor = 1;
    for (int e = 0; e < kappa_for(p); ++e) factor *= p;
    for (auto& e : b.entries) e.value *= factor;
  }
  return algebra_from_sparse(NumberField::rationals(), b.dim, b.entries, b.labels);
}

BorelData catalog_borel(const std::string& name, const CatalogParams& params) {
  if (name == "borel_sl2") return {catalog(name, params), 1};
  if (name == "borel_sl3") return {catalog(name, params), 2};
  throw Error(ErrorKind::UnknownName, "'" + name + "' is not a catalog Borel algebra");
}

}  // namespace hav
