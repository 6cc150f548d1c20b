#include "parwreath/rank.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "bounded_closure.hpp"
#include "parallel.hpp"

namespace parwreath {

const char* to_string(RankMethod method) {
  switch (method) {
    case RankMethod::exhaustive:
      return "exhaustive";
    case RankMethod::units_decomposition:
      return "lemma1";
  }
  return "?";
}

const char* to_string(RankQuantity quantity) {
  switch (quantity) {
    case RankQuantity::rank:
      return "rank";
    case RankQuantity::relative_rank:
      return "relative_rank";
    case RankQuantity::group_rank:
      return "group_rank";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

constexpr uint64_t kBinomialCap = uint64_t(1) << 62;

// C(n, k), saturating well above any usable budget.
uint64_t binomial_capped(uint64_t n, uint32_t k) {
  if (k > n) {
    return 0;
  }
  unsigned __int128 result = 1;
  for (uint32_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kBinomialCap) {
      return kBinomialCap;
    }
  }
  return static_cast<uint64_t>(result);
}

// Combination of the given lexicographic rank (ascending index tuples).
void unrank_combination(uint64_t pool_size, uint32_t k, uint64_t rank,
                        std::vector<uint32_t>& out) {
  out.resize(k);
  uint64_t x = 0;
  for (uint32_t i = 0; i < k; ++i) {
    while (true) {
      const uint64_t c = binomial_capped(pool_size - 1 - x, k - 1 - i);
      if (c <= rank) {
        rank -= c;
        ++x;
      } else {
        break;
      }
    }
    out[i] = static_cast<uint32_t>(x);
    ++x;
  }
}

bool next_combination(std::vector<uint32_t>& c, uint64_t pool_size) {
  const uint32_t k = static_cast<uint32_t>(c.size());
  for (uint32_t i = k; i-- > 0;) {
    if (c[i] < pool_size - k + i) {
      ++c[i];
      for (uint32_t j = i + 1; j < k; ++j) {
        c[j] = c[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

// One candidate test, stateful per worker (owns the closure scratch).
using Tester = std::function<bool(const std::vector<uint32_t>&)>;
using TesterFactory = std::function<Tester(uint32_t worker_id)>;

// Scans the first `positions` candidates of size k in lexicographic
// order and returns the least successful one. The result is independent
// of the thread count: chunks are fixed consecutive rank ranges, chunks
// beyond a known success are skipped, chunks before it always finish.
std::optional<std::vector<uint32_t>> search_size(
    uint64_t pool_size, uint32_t k, uint64_t positions, uint32_t threads,
    const TesterFactory& make_tester) {
  if (positions == 0) {
    return std::nullopt;
  }
  constexpr uint64_t kChunk = 1024;
  const uint64_t num_chunks = (positions + kChunk - 1) / kChunk;
  std::atomic<uint64_t> best_chunk{UINT64_MAX};
  std::mutex best_mutex;
  std::vector<uint32_t> best_combo;

  std::vector<Tester> testers(std::max(1u, threads));
  for (uint32_t t = 0; t < testers.size(); ++t) {
    testers[t] = make_tester(t);
  }

  detail::parallel_chunks(
      num_chunks, threads, [&](uint32_t worker, uint64_t chunk) {
        if (chunk > best_chunk.load(std::memory_order_relaxed)) {
          return false;
        }
        const uint64_t start = chunk * kChunk;
        const uint64_t end = std::min(start + kChunk, positions);
        std::vector<uint32_t> combo;
        unrank_combination(pool_size, k, start, combo);
        for (uint64_t r = start; r < end; ++r) {
          if (testers[worker](combo)) {
            std::lock_guard<std::mutex> lock(best_mutex);
            if (chunk < best_chunk.load(std::memory_order_relaxed)) {
              best_chunk.store(chunk, std::memory_order_relaxed);
              best_combo = combo;
            }
            return true;
          }
          if (r + 1 < end) {
            next_combination(combo, pool_size);
          }
        }
        return true;
      });

  if (best_chunk.load() == UINT64_MAX) {
    return std::nullopt;
  }
  return best_combo;
}

struct SearchSubject {
  const ClosureResult& s;
  // Pool positions -> element indices of s, image size descending.
  std::vector<uint32_t> pool;
  std::vector<uint32_t> position_of;  // inverse of pool
  // Fixed generators included in every candidate closure.
  std::vector<const uint8_t*> fixed;
  uint64_t target = 0;
  bool group_mode = false;
  std::vector<uint32_t> unit_indices;  // indices into s
};

SearchSubject make_subject(const ClosureResult& s,
                           const GeneratorSet* fixed_set) {
  SearchSubject subject{s, {}, {}, {}, s.order(), false, {}};
  const uint64_t n = s.order();
  std::vector<uint32_t> sizes(n);
  subject.pool.resize(n);
  for (uint64_t i = 0; i < n; ++i) {
    subject.pool[i] = static_cast<uint32_t>(i);
    const auto view = s.element_view(i);
    std::bitset<max_degree> seen;
    uint32_t count = 0;
    bool perm = true;
    for (uint8_t p : view) {
      if (!seen[p]) {
        seen[p] = true;
        ++count;
      } else {
        perm = false;
      }
    }
    sizes[i] = count;
    if (perm) {
      subject.unit_indices.push_back(static_cast<uint32_t>(i));
    }
  }
  std::sort(subject.pool.begin(), subject.pool.end(),
            [&sizes](uint32_t a, uint32_t b) {
              if (sizes[a] != sizes[b]) {
                return sizes[a] > sizes[b];
              }
              return a < b;
            });
  subject.position_of.resize(n);
  for (uint64_t pos = 0; pos < n; ++pos) {
    subject.position_of[subject.pool[pos]] = static_cast<uint32_t>(pos);
  }
  subject.group_mode = subject.unit_indices.size() == n;
  if (fixed_set != nullptr) {
    for (const Transformation& f : fixed_set->elements) {
      subject.fixed.push_back(f.data());
    }
  }
  return subject;
}

// Tester for one size: optional canonicality filter (group mode),
// optional unit prefilter, then the bounded closure itself.
class CandidateTester {
 public:
  CandidateTester(const SearchSubject& subject, const RankOptions& options,
                  uint32_t k)
      : subject_(subject),
        options_(options),
        k_(k),
        degree_(subject.s.degree()),
        scratch_(subject.s.degree(), subject.target) {
    gens_.assign(subject_.fixed.begin(), subject_.fixed.end());
    gens_.resize(subject_.fixed.size() + k_);
    if (use_conjugation()) {
      for (uint32_t idx : subject_.unit_indices) {
        const uint8_t* g = subject_.s.element_view(idx).data();
        std::vector<uint8_t> inv(degree_);
        for (uint32_t p = 0; p < degree_; ++p) {
          inv[g[p]] = static_cast<uint8_t>(p);
        }
        conjugators_.emplace_back(g, std::move(inv));
      }
      conj_bytes_.resize(degree_);
      conj_positions_.resize(k_);
    }
    if (use_prefilter()) {
      unit_scratch_.emplace(degree_, subject_.unit_indices.size());
      for (const uint8_t* f : subject_.fixed) {
        if (is_perm_bytes(f)) {
          fixed_unit_ptrs_.push_back(f);
        }
      }
    }
  }

  bool operator()(const std::vector<uint32_t>& combo) {
    if (use_conjugation() && !is_canonical(combo)) {
      return false;
    }
    for (uint32_t i = 0; i < k_; ++i) {
      gens_[subject_.fixed.size() + i] =
          subject_.s.element_view(subject_.pool[combo[i]]).data();
    }
    if (use_prefilter() && !units_generate(combo)) {
      return false;
    }
    return scratch_.run(gens_, subject_.target) == subject_.target;
  }

 private:
  bool use_conjugation() const {
    return subject_.group_mode && options_.conjugation_reduction && k_ >= 1;
  }
  bool use_prefilter() const {
    return options_.unit_prefilter && !subject_.group_mode;
  }

  bool is_perm_bytes(const uint8_t* f) const {
    std::bitset<max_degree> seen;
    for (uint32_t p = 0; p < degree_; ++p) {
      if (seen[f[p]]) {
        return false;
      }
      seen[f[p]] = true;
    }
    return true;
  }

  // Lexicographically minimal among its conjugates under the unit group.
  bool is_canonical(const std::vector<uint32_t>& combo) {
    for (const auto& [g, ginv] : conjugators_) {
      for (uint32_t i = 0; i < k_; ++i) {
        const uint8_t* x =
            subject_.s.element_view(subject_.pool[combo[i]]).data();
        for (uint32_t p = 0; p < degree_; ++p) {
          conj_bytes_[p] = g[x[ginv.data()[p]]];
        }
        const auto idx = subject_.s.index_of(conj_bytes_);
        conj_positions_[i] = subject_.position_of[idx.value()];
      }
      std::sort(conj_positions_.begin(), conj_positions_.end());
      if (std::lexicographical_compare(conj_positions_.begin(),
                                       conj_positions_.end(), combo.begin(),
                                       combo.end())) {
        return false;
      }
    }
    return true;
  }

  bool units_generate(const std::vector<uint32_t>& combo) {
    unit_gens_.assign(fixed_unit_ptrs_.begin(), fixed_unit_ptrs_.end());
    for (uint32_t i = 0; i < k_; ++i) {
      const uint8_t* f =
          subject_.s.element_view(subject_.pool[combo[i]]).data();
      if (is_perm_bytes(f)) {
        unit_gens_.push_back(f);
      }
    }
    const uint64_t group_order = subject_.unit_indices.size();
    return unit_scratch_->run(unit_gens_, group_order) == group_order;
  }

  const SearchSubject& subject_;
  const RankOptions& options_;
  uint32_t k_;
  uint32_t degree_;
  detail::BoundedClosure scratch_;
  std::vector<const uint8_t*> gens_;
  std::vector<std::pair<const uint8_t*, std::vector<uint8_t>>> conjugators_;
  std::vector<uint8_t> conj_bytes_;
  std::vector<uint32_t> conj_positions_;
  std::optional<detail::BoundedClosure> unit_scratch_;
  std::vector<const uint8_t*> fixed_unit_ptrs_;
  std::vector<const uint8_t*> unit_gens_;
};

std::string describe_search_space(const SearchSubject& subject,
                                  const RankOptions& options, uint32_t max_k,
                                  bool with_fixed) {
  std::string result = "subsets of size <= " + std::to_string(max_k) +
                       " drawn from the " + std::to_string(subject.s.order()) +
                       " elements, image size descending";
  if (with_fixed) {
    result += ", joined with the " + std::to_string(subject.fixed.size()) +
              " fixed generators";
  }
  if (subject.group_mode && options.conjugation_reduction) {
    result += ", filtered up to unit conjugation";
  }
  if (options.unit_prefilter && !subject.group_mode) {
    result += ", unit prefilter on";
  }
  return result;
}

RankReport subset_search(const SearchSubject& subject,
                         const RankOptions& options, RankQuantity quantity,
                         const char* witness_prefix) {
  const auto start = Clock::now();
  RankReport report;
  report.quantity = quantity;
  report.method = RankMethod::exhaustive;

  uint64_t examined = 0;
  uint64_t rejected_below = 0;
  for (uint32_t k = 0; k <= options.max_k; ++k) {
    const uint64_t total = binomial_capped(subject.s.order(), k);
    const uint64_t budget_left =
        options.budget > examined ? options.budget - examined : 0;
    const uint64_t positions = std::min(total, budget_left);
    const auto found = search_size(
        subject.s.order(), k, positions, options.threads,
        [&](uint32_t) { return Tester(CandidateTester(subject, options, k)); });
    if (found) {
      report.found = true;
      report.value = k;
      report.witness.degree = subject.s.degree();
      for (uint32_t i = 0; i < k; ++i) {
        report.witness.add(subject.s.element(subject.pool[(*found)[i]]),
                           witness_prefix + std::to_string(i));
      }
      report.certificate.rejected_count = rejected_below;
      report.certificate.search_space = describe_search_space(
          subject, options, k > 0 ? k - 1 : 0, !subject.fixed.empty());
      report.elapsed_ms = ms_since(start);
      return report;
    }
    if (positions < total) {
      fail(ErrorCode::budget_exceeded,
           "rank search budget exhausted at size " + std::to_string(k) +
               " after " + std::to_string(examined + positions) +
               " candidates (" + std::to_string(rejected_below) +
               " rejected at smaller sizes)");
    }
    examined += total;
    rejected_below += total;
  }
  report.found = false;
  report.value = 0;
  report.certificate.rejected_count = rejected_below;
  report.certificate.search_space =
      describe_search_space(subject, options, options.max_k,
                            !subject.fixed.empty());
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace

RankReport rank_exhaustive(const ClosureResult& s, const RankOptions& options) {
  const SearchSubject subject = make_subject(s, nullptr);
  return subset_search(
      subject, options,
      subject.group_mode ? RankQuantity::group_rank : RankQuantity::rank, "w");
}

RankReport relative_rank(const ClosureResult& s, const GeneratorSet& fixed,
                         const RankOptions& options) {
  if (fixed.degree != s.degree() && !fixed.elements.empty()) {
    fail(ErrorCode::invalid_argument, "fixed set degree mismatch");
  }
  for (const Transformation& f : fixed.elements) {
    if (!s.index_of(f.images())) {
      fail(ErrorCode::invalid_argument,
           "fixed element does not lie in the structure");
    }
  }
  const SearchSubject subject = make_subject(s, &fixed);
  return subset_search(subject, options, RankQuantity::relative_rank, "v");
}

RankReport rank_via_units(const ClosureResult& s, const RankOptions& options) {
  const auto start = Clock::now();
  GeneratorSet unit_set = units(s);
  ClosureOptions copts;
  copts.limit = std::max<uint64_t>(s.order(), 1);
  copts.threads = options.threads;
  const ClosureResult group = closure(unit_set, copts);

  RankReport group_report = rank_exhaustive(group, options);
  RankReport relative_report = relative_rank(s, unit_set, options);

  RankReport report;
  report.quantity = RankQuantity::rank;
  report.method = RankMethod::units_decomposition;
  report.found = group_report.found && relative_report.found;
  report.value = group_report.value + relative_report.value;
  report.witness.degree = s.degree();
  for (size_t i = 0; i < group_report.witness.size(); ++i) {
    report.witness.add(group_report.witness.elements[i],
                       "g" + std::to_string(i));
  }
  for (size_t i = 0; i < relative_report.witness.size(); ++i) {
    report.witness.add(relative_report.witness.elements[i],
                       "v" + std::to_string(i));
  }
  report.certificate.search_space =
      "group rank: " + group_report.certificate.search_space +
      "; relative rank: " + relative_report.certificate.search_space;
  report.certificate.rejected_count =
      group_report.certificate.rejected_count +
      relative_report.certificate.rejected_count;
  report.elapsed_ms = ms_since(start);
  return report;
}

bool verify_units_generation(const ClosureResult& s, const GeneratorSet& u) {
  if (!is_generating(u, s.order(),
                     ClosureOptions{.limit = s.order(), .threads = 1})) {
    fail(ErrorCode::invalid_argument,
         "the given set does not generate the structure");
  }
  GeneratorSet unit_part;
  unit_part.degree = u.degree;
  for (size_t i = 0; i < u.size(); ++i) {
    if (is_permutation(u.elements[i])) {
      unit_part.add(u.elements[i], u.labels[i]);
    }
  }
  const uint64_t group_order = units(s).size();
  return is_generating(unit_part, group_order,
                       ClosureOptions{.limit = group_order, .threads = 1});
}

bool verify_kernel_obstruction(uint32_t block_size, uint32_t block_count,
                               StructureKind kind,
                               const ClosureOptions& options) {
  const GeneratorSet kind_gens =
      standard_generators(block_size, block_count, kind);
  const mpz_class expected = order_formula(block_size, block_count, kind);
  if (mpz_cmp_ui(expected.get_mpz_t(), options.limit) > 0) {
    fail(ErrorCode::budget_exceeded,
         "structure order " + expected.get_str() +
             " exceeds the closure limit " + std::to_string(options.limit));
  }
  const ClosureResult structure = closure(kind_gens, options);
  const ClosureResult group = closure(
      standard_generators(block_size, block_count, StructureKind::sxp),
      options);

  std::vector<const uint8_t*> fixed;
  fixed.reserve(group.order() + 1);
  for (uint64_t i = 0; i < group.order(); ++i) {
    fixed.push_back(group.element_view(i).data());
  }
  fixed.push_back(nullptr);  // slot for the candidate

  const uint64_t target = structure.order();
  std::atomic<bool> found_single{false};
  constexpr uint64_t kChunk = 64;
  const uint64_t num_chunks = (target + kChunk - 1) / kChunk;
  const uint32_t threads = std::max(1u, options.threads);

  detail::parallel_chunks(num_chunks, threads, [&](uint32_t, uint64_t chunk) {
    if (found_single.load(std::memory_order_relaxed)) {
      return false;
    }
    thread_local std::unique_ptr<detail::BoundedClosure> scratch;
    thread_local uint64_t scratch_key = 0;
    const uint64_t key = (static_cast<uint64_t>(structure.degree()) << 40) ^
                         target;
    if (!scratch || scratch_key != key) {
      scratch = std::make_unique<detail::BoundedClosure>(structure.degree(),
                                                         target);
      scratch_key = key;
    }
    std::vector<const uint8_t*> gens = fixed;
    const uint64_t lo = chunk * kChunk;
    const uint64_t hi = std::min(lo + kChunk, target);
    for (uint64_t i = lo; i < hi; ++i) {
      gens.back() = structure.element_view(i).data();
      if (scratch->run(gens, target) == target) {
        found_single.store(true, std::memory_order_relaxed);
        return false;
      }
    }
    return true;
  });
  return !found_single.load();
}

}  // namespace parwreath
