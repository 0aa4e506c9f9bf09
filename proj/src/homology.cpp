#include "lefcon/homology.hpp"

#include <stdexcept>

namespace lefcon {

Matrix ChainComplexData::d(int k) const {
  if (k >= 0 && k < static_cast<int>(boundary.size())) return boundary[static_cast<std::size_t>(k)];
  return Matrix(rank(k - 1), rank(k));
}

int ChainComplexData::generator_of(int k, int simplex_index) const {
  if (k < 0 || k > top() || simplex_index < 0) return -1;
  const auto& pos = position[static_cast<std::size_t>(k)];
  return simplex_index < static_cast<int>(pos.size()) ? pos[static_cast<std::size_t>(simplex_index)] : -1;
}

ChainComplexData chain_complex(const SimplicialPair& p) {
  ChainComplexData c;
  const int top = p.total.dimension();
  c.generators.resize(static_cast<std::size_t>(top + 1));
  c.position.resize(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) {
    const auto& level = p.total.simplices(k);
    auto& pos = c.position[static_cast<std::size_t>(k)];
    pos.assign(level.size(), -1);
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (p.sub.contains(level[i])) continue;
      pos[i] = static_cast<int>(c.generators[static_cast<std::size_t>(k)].size());
      c.generators[static_cast<std::size_t>(k)].push_back(static_cast<int>(i));
    }
  }
  c.boundary.reserve(static_cast<std::size_t>(top + 2));
  for (int k = 0; k <= top + 1; ++k) {
    Matrix dk(c.rank(k - 1), c.rank(k));
    if (k >= 1 && k <= top) {
      const auto& gens = c.generators[static_cast<std::size_t>(k)];
      for (std::size_t col = 0; col < gens.size(); ++col) {
        const Simplex& s = p.total.simplices(k)[static_cast<std::size_t>(gens[col])];
        auto faces = facets_of(s);
        for (std::size_t i = 0; i < faces.size(); ++i) {
          int row = c.generator_of(k - 1, p.total.index_of(faces[i]));
          if (row < 0) continue;
          dk(static_cast<std::size_t>(row), col) += (i % 2 == 0) ? 1 : -1;
        }
      }
    }
    c.boundary.push_back(std::move(dk));
  }
  for (int k = 1; k <= top + 1; ++k)
    if (!(c.d(k - 1) * c.d(k)).is_zero())
      throw std::logic_error("boundary of a boundary is nonzero in degree " + std::to_string(k));
  return c;
}

HomologyBasis homology_basis(const ChainComplexData& c) {
  HomologyBasis h;
  const int top = c.top();
  for (int k = 0; k <= top; ++k) {
    const std::size_t n = c.rank(k);
    Matrix next = c.d(k + 1);
    auto next_red = rref(next);
    Matrix bnd = next.select_columns(next_red.pivots);

    auto kernel = kernel_basis(c.d(k));
    Matrix z = Matrix::from_columns(n, kernel);
    auto combined = rref(bnd.hcat(z));
    std::vector<std::size_t> chosen;
    for (auto piv : combined.pivots)
      if (piv >= bnd.cols()) chosen.push_back(piv - bnd.cols());
    Matrix cycles = z.select_columns(chosen);

    // Dual cocycles: vanish on boundaries, pair to δ with the chosen cycles.
    Matrix w = bnd.hcat(cycles);
    Matrix rhs(w.cols(), cycles.cols());
    for (std::size_t j = 0; j < cycles.cols(); ++j) rhs(bnd.cols() + j, j) = 1;
    auto x = solve(w.transpose(), rhs);
    if (!x) throw std::logic_error("dual cocycle system is inconsistent");

    h.boundaries.push_back(std::move(bnd));
    h.cycles.push_back(std::move(cycles));
    h.cocycles.push_back(x->transpose());
  }
  return h;
}

PairHomology::PairHomology(SimplicialPair pair)
    : pair_(std::move(pair)), chains_(chain_complex(pair_)), basis_(homology_basis(chains_)) {}

std::vector<std::size_t> PairHomology::betti_numbers() const {
  std::vector<std::size_t> b;
  for (int k = 0; k <= top(); ++k) b.push_back(betti(k));
  return b;
}

long PairHomology::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= top(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(betti(k));
  return chi;
}

bool PairHomology::is_cycle(int k, const Vector& chain) const {
  return is_zero(chains_.d(k) * chain);
}

bool PairHomology::is_cocycle(int k, const Vector& cochain) const {
  Matrix row = Matrix::from_rows(chains_.rank(k), {cochain});
  return (row * chains_.d(k + 1)).is_zero();
}

Vector PairHomology::coordinates(int k, const Vector& chain) const {
  if (k < 0 || k > top()) {
    if (!chain.empty()) throw std::logic_error("chain in a degree with no generators");
    return {};
  }
  if (chain.size() != chains_.rank(k)) throw DimensionError("chain length mismatch");
  if (!is_cycle(k, chain)) throw std::logic_error("chain is not a relative cycle");
  return basis_.cocycles[static_cast<std::size_t>(k)] * chain;
}

Vector PairHomology::cohomology_coordinates(int k, const Vector& cochain) const {
  if (k < 0 || k > top()) return {};
  if (cochain.size() != chains_.rank(k)) throw DimensionError("cochain length mismatch");
  if (!is_cocycle(k, cochain)) throw std::logic_error("cochain is not a relative cocycle");
  return basis_.cycles[static_cast<std::size_t>(k)].transpose() * cochain;
}

Vector PairHomology::representative(int k, const Vector& coords) const {
  if (k < 0 || k > top()) return {};
  return basis_.cycles[static_cast<std::size_t>(k)] * coords;
}

Vector PairHomology::cocycle_representative(int k, const Vector& coords) const {
  if (k < 0 || k > top()) return {};
  return basis_.cocycles[static_cast<std::size_t>(k)].transpose() * coords;
}

HomologyClass PairHomology::basis_class(int k, std::size_t j) const {
  HomologyClass c = zero_class(k);
  c.coords.at(j) = 1;
  return c;
}

const Simplex& PairHomology::generator(int k, std::size_t row) const {
  return pair_.total.simplices(k)[static_cast<std::size_t>(
      chains_.generators[static_cast<std::size_t>(k)][row])];
}

int PairHomology::row_of(const Simplex& s) const {
  if (s.empty()) return -1;
  int k = static_cast<int>(s.size()) - 1;
  return chains_.generator_of(k, pair_.total.index_of(s));
}

}  // namespace lefcon
