#include "glhom/jacobi.hpp"

#include <algorithm>
#include <stdexcept>

namespace glhom {

TailSequence::TailSequence(AlgebraElement left_tail, std::int64_t window_start,
                           std::vector<AlgebraElement> window,
                           AlgebraElement right_tail)
    : left_(std::move(left_tail)),
      right_(std::move(right_tail)),
      start_(window_start),
      window_(std::move(window)) {
  if (left_.parent == nullptr || left_.parent != right_.parent)
    throw std::invalid_argument("tail sequence over mismatched rings");
  for (const auto& w : window_)
    if (w.parent != left_.parent)
      throw std::invalid_argument("window entry over mismatched ring");
  canonicalize();
}

TailSequence TailSequence::constant(const AlgebraElement& value) {
  return TailSequence(value, 0, {}, value);
}

void TailSequence::canonicalize() {
  std::size_t drop_front = 0;
  while (drop_front < window_.size() && window_[drop_front] == left_)
    ++drop_front;
  if (drop_front > 0) {
    window_.erase(window_.begin(),
                  window_.begin() + static_cast<std::ptrdiff_t>(drop_front));
    start_ += static_cast<std::int64_t>(drop_front);
  }
  while (!window_.empty() && window_.back() == right_) window_.pop_back();
  // with an empty window start_ is the step point between the tails; it is
  // only arbitrary (and normalized) when the sequence is constant
  if (window_.empty() && left_ == right_) start_ = 0;
}

const AlgebraElement& TailSequence::at(std::int64_t i) const {
  if (i < start_) return left_;
  if (i >= window_end()) return right_;
  return window_[static_cast<std::size_t>(i - start_)];
}

bool TailSequence::is_zero() const {
  return window_.empty() && left_.is_zero() && right_.is_zero();
}

TailSequence TailSequence::shifted(std::int64_t offset) const {
  TailSequence s(*this);
  s.start_ += offset;
  if (s.window_.empty() && s.left_ == s.right_) s.start_ = 0;
  return s;
}

namespace {

template <typename Combine>
TailSequence pointwise(const TailSequence& a, const TailSequence& b,
                       Combine&& combine) {
  std::int64_t lo = std::min(a.window_start(), b.window_start());
  std::int64_t hi = std::max(a.window_end(), b.window_end());
  std::vector<AlgebraElement> window;
  window.reserve(static_cast<std::size_t>(hi - lo));
  for (std::int64_t i = lo; i < hi; ++i)
    window.push_back(combine(a.at(i), b.at(i)));
  return TailSequence(combine(a.left_tail(), b.left_tail()), lo,
                      std::move(window),
                      combine(a.right_tail(), b.right_tail()));
}

}  // namespace

TailSequence TailSequence::pointwise_mul(const TailSequence& rhs) const {
  return pointwise(*this, rhs, alg_mul);
}

TailSequence TailSequence::pointwise_add(const TailSequence& rhs) const {
  return pointwise(*this, rhs, alg_add);
}

TailSequence TailSequence::negated() const {
  auto neg = [](const AlgebraElement& x) { return alg_scale(Rat(-1), x); };
  std::vector<AlgebraElement> w;
  w.reserve(window_.size());
  for (const auto& x : window_) w.push_back(neg(x));
  return TailSequence(neg(left_), start_, std::move(w), neg(right_));
}

std::optional<std::int64_t> TailSequence::first_nonzero_at_or_after(
    std::int64_t from) const {
  if (from < start_) {
    if (!left_.is_zero()) return from;
    from = start_;
  }
  for (std::int64_t i = from; i < window_end(); ++i)
    if (!at(i).is_zero()) return i;
  if (!right_.is_zero()) return std::max(from, window_end());
  return std::nullopt;
}

std::optional<std::int64_t> TailSequence::last_nonzero_before(
    std::int64_t before) const {
  if (before > window_end()) {
    if (!right_.is_zero()) return before - 1;
    before = window_end();
  }
  for (std::int64_t i = std::min(before, window_end()) - 1; i >= start_; --i)
    if (!at(i).is_zero()) return i;
  if (!left_.is_zero()) return std::min(before, start_) - 1;
  return std::nullopt;
}

JacobiOperator JacobiOperator::zero(const FinDimAlgebra& ring) {
  return JacobiOperator(ring);
}

JacobiOperator JacobiOperator::identity(const FinDimAlgebra& ring) {
  return shift_power(ring, 0);
}

JacobiOperator JacobiOperator::shift_power(const FinDimAlgebra& ring,
                                           std::int64_t k) {
  JacobiOperator op(ring);
  op.set_term(k, TailSequence::constant(alg_unit(ring)));
  return op;
}

JacobiOperator JacobiOperator::projection_P(const FinDimAlgebra& ring) {
  JacobiOperator op(ring);
  op.set_term(0, TailSequence(alg_zero(ring), 0, {}, alg_unit(ring)));
  return op;
}

JacobiOperator JacobiOperator::from_finite_matrix(
    const FinDimAlgebra& ring,
    const std::map<std::pair<std::int64_t, std::int64_t>, AlgebraElement>&
        entries) {
  // group entries by offset m = i - j; the diagonal is indexed by i
  std::map<std::int64_t, std::map<std::int64_t, AlgebraElement>> diag;
  for (const auto& [ij, v] : entries) {
    if (v.parent != &ring)
      throw std::invalid_argument("finite matrix entry over wrong ring");
    if (!v.is_zero()) diag[ij.first - ij.second][ij.first] = v;
  }
  JacobiOperator op(ring);
  for (const auto& [m, vals] : diag) {
    std::int64_t lo = vals.begin()->first;
    std::int64_t hi = vals.rbegin()->first + 1;
    std::vector<AlgebraElement> window(static_cast<std::size_t>(hi - lo),
                                       alg_zero(ring));
    for (const auto& [i, v] : vals) window[static_cast<std::size_t>(i - lo)] = v;
    op.set_term(m, TailSequence(alg_zero(ring), lo, std::move(window),
                                alg_zero(ring)));
  }
  return op;
}

void JacobiOperator::set_term(std::int64_t offset, TailSequence seq) {
  if (&seq.ring() != ring_)
    throw std::invalid_argument("term over mismatched ring");
  if (seq.is_zero())
    terms_.erase(offset);
  else
    terms_[offset] = std::move(seq);
}

AlgebraElement JacobiOperator::entry(std::int64_t i, std::int64_t j) const {
  auto it = terms_.find(i - j);
  if (it == terms_.end()) return alg_zero(*ring_);
  return it->second.at(i);
}

std::int64_t JacobiOperator::band_width() const {
  std::int64_t w = 0;
  for (const auto& [m, seq] : terms_) w = std::max(w, std::abs(m));
  return w;
}

JacobiOperator JacobiOperator::operator+(const JacobiOperator& rhs) const {
  if (ring_ != rhs.ring_)
    throw std::invalid_argument("operators over different rings");
  JacobiOperator out(*ring_);
  out.terms_ = terms_;
  for (const auto& [m, seq] : rhs.terms_) {
    auto it = out.terms_.find(m);
    if (it == out.terms_.end())
      out.set_term(m, seq);
    else
      out.set_term(m, it->second.pointwise_add(seq));
  }
  return out;
}

JacobiOperator JacobiOperator::operator-(const JacobiOperator& rhs) const {
  JacobiOperator neg(*rhs.ring_);
  for (const auto& [m, seq] : rhs.terms_) neg.set_term(m, seq.negated());
  return *this + neg;
}

JacobiOperator JacobiOperator::operator*(const JacobiOperator& rhs) const {
  if (ring_ != rhs.ring_)
    throw std::invalid_argument("operators over different rings");
  JacobiOperator out(*ring_);
  for (const auto& [m1, d] : terms_) {
    for (const auto& [m2, e] : rhs.terms_) {
      // (d, m1) . (e, m2) lands at offset m1+m2 with diagonal
      // i -> d(i) * e(i - m1)
      TailSequence part = d.pointwise_mul(e.shifted(m1));
      if (part.is_zero()) continue;
      auto it = out.terms_.find(m1 + m2);
      if (it == out.terms_.end())
        out.set_term(m1 + m2, std::move(part));
      else
        out.set_term(m1 + m2, it->second.pointwise_add(part));
    }
  }
  return out;
}

bool JacobiOperator::operator==(const JacobiOperator& rhs) const {
  return ring_ == rhs.ring_ && terms_ == rhs.terms_;
}

JacobiOperator op_commutator(const JacobiOperator& a,
                             const JacobiOperator& b) {
  return a * b - b * a;
}

LaurentVector apply(const JacobiOperator& a, const LaurentVector& f) {
  LaurentVector out;
  for (const auto& [m, seq] : a.terms()) {
    for (const auto& [k, v] : f) {
      AlgebraElement w = alg_mul(seq.at(k + m), v);
      if (w.is_zero()) continue;
      auto it = out.find(k + m);
      if (it == out.end())
        out.emplace(k + m, std::move(w));
      else
        it->second = alg_add(it->second, w);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool in_Iplus(const JacobiOperator& a) {
  for (const auto& [m, seq] : a.terms())
    if (!seq.left_tail().is_zero()) return false;
  return true;
}

bool in_Iminus(const JacobiOperator& a) {
  for (const auto& [m, seq] : a.terms())
    if (!seq.right_tail().is_zero()) return false;
  return true;
}

bool in_I0(const JacobiOperator& a) { return in_Iplus(a) && in_Iminus(a); }

std::pair<JacobiOperator, JacobiOperator> split(const JacobiOperator& a) {
  JacobiOperator p = JacobiOperator::projection_P(a.ring());
  JacobiOperator plus = p * a;
  return {plus, a - plus};
}

AlgebraElement trace_I0(const JacobiOperator& a) {
  if (!in_I0(a))
    throw std::domain_error(
        "trace is only defined on the trace-class ideal I0");
  AlgebraElement sum = alg_zero(a.ring());
  auto it = a.terms().find(0);
  if (it == a.terms().end()) return sum;
  const TailSequence& d0 = it->second;
  for (const auto& v : d0.window()) sum = alg_add(sum, v);
  return sum;
}

CommutatorReducer::CommutatorReducer(const FinDimAlgebra& ring)
    : ring_(&ring), span_(static_cast<std::size_t>(ring.dim())) {
  for (int i = 0; i < ring.dim(); ++i)
    for (int j = 0; j < i; ++j) {
      auto c = alg_sub(alg_mul(alg_basis(ring, i), alg_basis(ring, j)),
                       alg_mul(alg_basis(ring, j), alg_basis(ring, i)));
      span_.insert(c.coords);
    }
}

AlgebraElement CommutatorReducer::reduce(const AlgebraElement& x) const {
  if (x.parent != ring_)
    throw std::invalid_argument("reduce: element over wrong ring");
  return AlgebraElement(*ring_, span_.reduce(x.coords));
}

AlgebraElement cocycle(const JacobiOperator& a, const JacobiOperator& b) {
  if (&a.ring() != &b.ring())
    throw std::invalid_argument("cocycle: operators over different rings");
  const FinDimAlgebra& ring = a.ring();
  JacobiOperator p = JacobiOperator::projection_P(ring);
  JacobiOperator q = JacobiOperator::identity(ring) - p;
  AlgebraElement first = trace_I0(p * b * q * a * p);
  AlgebraElement second = trace_I0(p * a * q * b * p);
  CommutatorReducer red(ring);
  return red.reduce(alg_sub(first, second));
}

bool cocycle_identity_check(const JacobiOperator& a, const JacobiOperator& b,
                            const JacobiOperator& z) {
  if (&a.ring() != &b.ring() || &a.ring() != &z.ring())
    throw std::invalid_argument("cocycle identity: ring mismatch");
  AlgebraElement sum = alg_add(
      alg_add(cocycle(op_commutator(a, b), z), cocycle(op_commutator(b, z), a)),
      cocycle(op_commutator(z, a), b));
  CommutatorReducer red(a.ring());
  return red.reduce(sum).is_zero();
}

LatticeWitness lattice_witness_forward(const JacobiOperator& a,
                                       std::int64_t n) {
  // column j >= n contributes entries at rows i = j + m; the sharp bound
  // is the least such row over all terms.
  std::optional<std::int64_t> best;
  for (const auto& [m, seq] : a.terms()) {
    auto i = seq.first_nonzero_at_or_after(n + m);
    if (i && (!best || *i < *best)) best = *i;
  }
  if (!best) return {.everything = true};
  return {.everything = false, .index = *best};
}

LatticeWitness lattice_witness_backward(const JacobiOperator& a,
                                        std::int64_t m) {
  // a column j leaks below row m iff some term has d_mt(i) != 0 with
  // i < m and j = i - mt; m' must exceed every leaking column.
  std::optional<std::int64_t> worst;
  for (const auto& [mt, seq] : a.terms()) {
    auto i = seq.last_nonzero_before(m);
    if (!i) continue;
    std::int64_t j = *i - mt;
    if (!worst || j > *worst) worst = j;
  }
  if (!worst) return {.everything = true};
  return {.everything = false, .index = *worst + 1};
}

std::vector<std::vector<AlgebraElement>> truncate(const JacobiOperator& a,
                                                  std::int64_t n) {
  if (n < 1) throw std::invalid_argument("truncate: window must be positive");
  const auto side = static_cast<std::size_t>(2 * n + 1);
  std::vector<std::vector<AlgebraElement>> out(
      side, std::vector<AlgebraElement>(side, alg_zero(a.ring())));
  for (std::int64_t i = -n; i <= n; ++i)
    for (std::int64_t j = -n; j <= n; ++j)
      out[static_cast<std::size_t>(i + n)][static_cast<std::size_t>(j + n)] =
          a.entry(i, j);
  return out;
}

}  // namespace glhom
