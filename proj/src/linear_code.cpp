#include "whm/linear_code.hpp"

#include <algorithm>
#include <string>

#include "whm/ball.hpp"
#include "whm/error.hpp"
#include "whm/kernels.hpp"
#include "whm/rng.hpp"

namespace whm {

std::optional<std::uint64_t> checked_power(std::uint64_t q, std::uint64_t e, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (v > limit / q) return std::nullopt;
    v *= q;
  }
  if (v > limit) return std::nullopt;
  return v;
}

namespace {

void check_shape(const Field& f, const BlockStructure& bs, const Matrix& m, const char* what) {
  if (m.cols() != bs.n()) {
    throw Error(ErrorKind::LengthMismatch, std::string(what) + " has " + std::to_string(m.cols()) +
                                               " columns, block structure has n = " +
                                               std::to_string(bs.n()));
  }
  check_entries(f, m);
}

Matrix leading_rows(const Matrix& m, std::size_t count) {
  Matrix out(count, m.cols());
  for (std::size_t r = 0; r < count; ++r) std::copy(m.row(r).begin(), m.row(r).end(), out.row(r).begin());
  return out;
}

}  // namespace

LinearCode LinearCode::from_generator(const Field& field, const BlockStructure& bs, const Matrix& g) {
  check_shape(field, bs, g, "generator");
  RrefResult red = rref(field, g);
  if (red.rank == 0) throw Error(ErrorKind::ZeroCode, "generator has rank 0");
  Matrix gen = leading_rows(red.matrix, red.rank);
  Matrix h = kernel_basis(field, gen);
  return LinearCode(field, bs, std::move(gen), std::move(h));
}

LinearCode LinearCode::from_parity_check(const Field& field, const BlockStructure& bs,
                                         const Matrix& h) {
  check_shape(field, bs, h, "parity-check matrix");
  RrefResult red = rref(field, h);
  if (red.rank == bs.n()) throw Error(ErrorKind::ZeroCode, "parity-check matrix has full rank n");
  Matrix gen = rref(field, kernel_basis(field, h)).matrix;
  return LinearCode(field, bs, std::move(gen), leading_rows(red.matrix, red.rank));
}

LinearCode LinearCode::with_blocks(const BlockStructure& bs) const {
  if (bs.n() != n()) throw Error(ErrorKind::LengthMismatch, "block structure length differs");
  return LinearCode(field_, bs, generator_, parity_check_);
}

LinearCode LinearCode::dual() const {
  if (parity_check_.rows() == 0) throw Error(ErrorKind::ZeroCode, "dual of the full space is {0}");
  return from_generator(field_, bs_, parity_check_);
}

Vector LinearCode::encode(std::span<const Elem> message) const {
  if (message.size() != k()) {
    throw Error(ErrorKind::LengthMismatch, "message length " + std::to_string(message.size()) +
                                               " != k = " + std::to_string(k()));
  }
  Vector out(n(), 0);
  for (std::size_t i = 0; i < k(); ++i) {
    if (message[i] == 0) continue;
    for (std::size_t c = 0; c < n(); ++c)
      out[c] = field_.add(out[c], field_.mul(message[i], generator_(i, c)));
  }
  return out;
}

Vector LinearCode::syndrome(std::span<const Elem> v) const { return mat_vec(field_, parity_check_, v); }

bool LinearCode::contains(std::span<const Elem> v) const {
  const Vector s = syndrome(v);
  return std::all_of(s.begin(), s.end(), [](Elem e) { return e == 0; });
}

// ---------------------------------------------------------------------------
// Codebook walking

namespace {

std::uint64_t codebook_size(const LinearCode& code, const Budgets& budgets) {
  auto size = checked_power(code.field().q(), code.k(), budgets.codewords);
  if (!size) {
    throw Error(ErrorKind::BudgetExceeded,
                std::to_string(code.field().q()) + "^" + std::to_string(code.k()) +
                    " codewords exceed the budget of " + std::to_string(budgets.codewords));
  }
  return *size;
}

}  // namespace

CodewordWalker::CodewordWalker(const LinearCode& code, const Budgets& budgets)
    : code_(&code),
      message_(code.k(), 0),
      word_(code.n(), 0),
      size_(codebook_size(code, budgets)) {}

bool CodewordWalker::advance() {
  const Elem q = static_cast<Elem>(code_->field().q());
  const Matrix& g = code_->generator();
  std::size_t i = message_.size();
  while (i > 0) {
    --i;
    // Incrementing symbol i adds row i; wrapping q-1 -> 0 also adds row i,
    // completing q copies of it.
    kernels::add_mod(word_, g.row(i), q);
    if (++message_[i] < q) return true;
    message_[i] = 0;
  }
  return false;
}

void for_each_codeword(const LinearCode& code, const std::function<void(std::span<const Elem>)>& visit,
                       const Budgets& budgets) {
  CodewordWalker walker(code, budgets);
  do {
    visit(walker.codeword());
  } while (walker.advance());
}

std::vector<Vector> enumerate_codewords(const LinearCode& code, const Budgets& budgets) {
  std::vector<Vector> out;
  CodewordWalker walker(code, budgets);
  out.reserve(walker.size());
  do {
    out.push_back(walker.codeword());
  } while (walker.advance());
  return out;
}

// ---------------------------------------------------------------------------
// Minimum distance

namespace {

DistanceResult distance_by_codebook(const LinearCode& code, const Budgets& budgets) {
  const BlockCounter counter(code.blocks());
  std::vector<std::uint64_t> mask(counter.words());
  DistanceResult best;
  best.method = DistanceMethod::Codebook;
  best.distance = UINT64_MAX;
  CodewordWalker walker(code, budgets);
  while (walker.advance()) {
    ++best.examined;
    kernels::nonzero_mask(walker.codeword(), mask);
    const std::uint64_t w = counter.weight(mask);
    if (w < best.distance) {
      best.distance = w;
      best.witness = walker.codeword();
    }
  }
  return best;
}

// Support enumeration over the kernel of H.
class SupportSearch {
 public:
  SupportSearch(const LinearCode& code, const Budgets& budgets)
      : code_(code),
        budget_(budgets.support_candidates),
        q_(static_cast<Elem>(code.field().q())),
        r_(code.parity_check().rows()) {
    const Matrix& h = code.parity_check();
    for (std::size_t c = 0; c < code.n(); ++c) {
      Vector col = h.column(c);
      Vector twice(r_);
      for (std::size_t i = 0; i < r_; ++i) twice[i] = code.field().add(col[i], col[i]);
      cols_.push_back(std::move(col));
      cols2_.push_back(std::move(twice));
    }
    syndrome_.resize(r_);
  }

  std::optional<DistanceResult> run(std::uint64_t max_weight) {
    const BlockStructure& bs = code_.blocks();
    const std::uint64_t top = std::min(max_weight, bs.max_weight());
    for (std::uint64_t t = 1; t <= top; ++t) {
      for (const TWeight& tw : lambda_set(t, bs)) {
        support_.clear();
        if (place_block(tw, 0)) {
          DistanceResult res;
          res.distance = t;
          res.method = DistanceMethod::SupportEnum;
          res.examined = examined_;
          res.witness.assign(code_.n(), 0);
          for (std::size_t i = 0; i < support_.size(); ++i) res.witness[support_[i]] = values_[i];
          return res;
        }
      }
    }
    return std::nullopt;
  }

  std::uint64_t examined() const noexcept { return examined_; }

 private:
  // Chooses the positions of block l (ascending) then recurses to l + 1.
  bool place_block(const TWeight& tw, std::size_t l) {
    const BlockStructure& bs = code_.blocks();
    if (l == bs.m()) return assign_values();
    return choose(tw, l, bs.offset(l), tw[l]);
  }

  bool choose(const TWeight& tw, std::size_t l, std::size_t from, std::uint32_t left) {
    if (left == 0) return place_block(tw, l + 1);
    const BlockStructure& bs = code_.blocks();
    const std::size_t end = bs.offset(l) + bs.block(l).length;
    for (std::size_t pos = from; pos + left <= end; ++pos) {
      support_.push_back(pos);
      if (choose(tw, l, pos + 1, left - 1)) return true;
      support_.pop_back();
    }
    return false;
  }

  // Walks the nonzero assignments on support_ with the first value fixed to 1
  // (scalar multiples share a support), tracking H v^T incrementally.
  bool assign_values() {
    const std::size_t s = support_.size();
    values_.assign(s, 1);
    std::fill(syndrome_.begin(), syndrome_.end(), 0);
    for (std::size_t pos : support_) kernels::add_mod(syndrome_, cols_[pos], q_);
    while (true) {
      if (++examined_ > budget_) {
        throw Error(ErrorKind::BudgetExceeded,
                    "support enumeration exceeded " + std::to_string(budget_) + " candidates");
      }
      if (std::all_of(syndrome_.begin(), syndrome_.end(), [](Elem e) { return e == 0; })) {
        return true;
      }
      std::size_t i = s;
      while (true) {
        if (i <= 1) return false;
        --i;
        if (values_[i] + 1u < q_) {
          ++values_[i];
          kernels::add_mod(syndrome_, cols_[support_[i]], q_);
          break;
        }
        // q-1 -> 1 changes the contribution by 2 - q = 2 (mod q).
        values_[i] = 1;
        kernels::add_mod(syndrome_, cols2_[support_[i]], q_);
      }
    }
  }

  const LinearCode& code_;
  std::uint64_t budget_;
  Elem q_;
  std::size_t r_;
  std::vector<Vector> cols_;
  std::vector<Vector> cols2_;
  std::vector<std::size_t> support_;
  Vector values_;
  Vector syndrome_;
  std::uint64_t examined_ = 0;
};

}  // namespace

std::optional<DistanceResult> find_light_codeword(const LinearCode& code, std::uint64_t max_weight,
                                                  const Budgets& budgets) {
  SupportSearch search(code, budgets);
  return search.run(max_weight);
}

DistanceResult min_wh_distance(const LinearCode& code, DistanceMethod method, const Budgets& budgets) {
  if (method == DistanceMethod::Auto) {
    method = checked_power(code.field().q(), code.k(), budgets.codewords) ? DistanceMethod::Codebook
                                                                           : DistanceMethod::SupportEnum;
  }
  if (method == DistanceMethod::Codebook) return distance_by_codebook(code, budgets);
  auto found = find_light_codeword(code, code.blocks().max_weight(), budgets);
  if (!found) throw Error(ErrorKind::ZeroCode, "no nonzero codeword found");
  return *found;
}

// ---------------------------------------------------------------------------
// Enumerator and tau

BigInt TWeightEnumerator::count(const TWeight& t) const {
  auto it = counts_.find(t);
  return it == counts_.end() ? BigInt(0) : it->second;
}

BigInt TWeightEnumerator::total() const {
  BigInt s = 0;
  for (const auto& [t, c] : counts_) s += c;
  return s;
}

void TWeightEnumerator::add(const TWeight& t, const BigInt& c) {
  if (c == 0) return;
  BigInt& slot = counts_[t];
  slot += c;
  if (slot == 0) counts_.erase(t);
}

TWeightEnumerator t_weight_enumerator(const LinearCode& code, const Budgets& budgets) {
  const BlockStructure& bs = code.blocks();
  const BlockCounter counter(bs);
  // Dense mixed-radix table over all T-weights.
  std::vector<std::size_t> stride(bs.m());
  std::size_t cells = 1;
  for (std::size_t l = bs.m(); l-- > 0;) {
    stride[l] = cells;
    cells *= bs.block(l).length + 1;
  }
  std::vector<std::uint64_t> table(cells, 0);
  std::vector<std::uint64_t> mask(counter.words());
  std::vector<std::uint32_t> counts(bs.m());
  CodewordWalker walker(code, budgets);
  do {
    kernels::nonzero_mask(walker.codeword(), mask);
    counter.counts(mask, counts);
    std::size_t idx = 0;
    for (std::size_t l = 0; l < bs.m(); ++l) idx += counts[l] * stride[l];
    ++table[idx];
  } while (walker.advance());

  TWeightEnumerator out;
  for (const TWeight& t : all_t_weights(bs)) {
    std::size_t idx = 0;
    for (std::size_t l = 0; l < bs.m(); ++l) idx += t[l] * stride[l];
    if (table[idx] != 0) out.add(t, BigInt(static_cast<unsigned long>(table[idx])));
  }
  return out;
}

std::uint64_t split_cost(const TWeight& t, const BlockStructure& bs) {
  const std::uint64_t total = t.weighted(bs);
  // reachable[s]: some sub-multiset of the scalings sums to s.
  std::vector<bool> reachable(total + 1, false);
  reachable[0] = true;
  for (std::size_t l = 0; l < bs.m(); ++l) {
    const std::uint64_t lam = bs.block(l).scaling;
    for (std::uint32_t copy = 0; copy < t[l]; ++copy) {
      for (std::uint64_t s = total; s >= lam; --s) {
        if (reachable[s - lam]) reachable[s] = true;
      }
    }
  }
  std::uint64_t best = total;
  for (std::uint64_t s = 0; s <= total; ++s) {
    if (reachable[s]) best = std::min(best, std::max(s, total - s));
  }
  return best;
}

std::uint64_t tau(const LinearCode& code, const Budgets& budgets) {
  const TWeightEnumerator en = t_weight_enumerator(code, budgets);
  std::uint64_t best = UINT64_MAX;
  for (const auto& [t, count] : en.counts()) {
    if (t.is_zero()) continue;
    best = std::min(best, split_cost(t, code.blocks()));
  }
  if (best == UINT64_MAX) throw Error(ErrorKind::ZeroCode, "code has no nonzero codeword");
  return best - 1;
}

std::uint64_t tau_oracle(const LinearCode& code, const Budgets& budgets) {
  const std::uint32_t q = code.field().q();
  const std::size_t n = code.n();
  if (!checked_power(q, n, budgets.ambient)) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(q) + "^" + std::to_string(n) +
                                               " ambient vectors exceed the budget of " +
                                               std::to_string(budgets.ambient));
  }
  std::vector<Vector> words = enumerate_codewords(code, budgets);
  words.erase(words.begin());  // zero codeword comes first

  const BlockCounter counter(code.blocks());
  std::vector<std::uint64_t> mask(counter.words());
  std::uint64_t best = UINT64_MAX;
  Vector r(n, 0);
  while (true) {
    kernels::nonzero_mask(r, mask);
    const std::uint64_t wr = counter.weight(mask);
    if (wr < best) {
      for (const Vector& c : words) {
        kernels::mismatch_mask(c, r, mask);
        best = std::min(best, std::max(wr, counter.weight(mask)));
      }
    }
    std::size_t i = n;
    while (i > 0 && ++r[i - 1] == q) r[--i] = 0;
    if (i == 0) break;
  }
  return best - 1;
}

RandomCode random_code(const Field& field, const BlockStructure& bs, std::size_t k,
                       std::uint64_t seed) {
  if (k < 1 || k > bs.n()) {
    throw Error(ErrorKind::InvalidDimension,
                "k = " + std::to_string(k) + " outside [1, " + std::to_string(bs.n()) + "]");
  }
  Rng rng(seed);
  std::uint32_t retries = 0;
  while (true) {
    Matrix g(k, bs.n());
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < bs.n(); ++c) g(r, c) = static_cast<Elem>(rng.uniform_below(field.q()));
    if (rank(field, g) == k) return {LinearCode::from_generator(field, bs, g), retries};
    ++retries;
  }
}

}  // namespace whm
