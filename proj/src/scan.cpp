#include "weylcert/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "weylcert/errors.hpp"
#include "weylcert/excision.hpp"
#include "weylcert/linalg.hpp"
#include "weylcert/weightset.hpp"
#include "weylcert/weyl.hpp"
#include "weylcert/witnesses.hpp"

namespace weylcert {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "OBSTRUCTED";
    case Verdict::Survivor: return "SURVIVOR";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::vector<std::vector<std::int64_t>> dominant_coefficients(int rank, int bound) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(rank, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == rank) {
      if (left < bound) out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
    cur[i] = 0;
  };
  if (rank > 0 && bound > 0) rec(rec, 0, bound);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    std::int64_t sa = 0, sb = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    return sa < sb;
  });
  return out;
}

namespace {

class Search {
 public:
  Search(const RootSystem& rs, const WeightSystem& ws, std::uint64_t budget)
      : rs_(rs), ws_(ws), budget_(budget) {}

  // Walks (r-1)-subsets of Lambda containing lambda, in increasing index
  // order, pruning pairs that already violate a pairwise clause.
  std::optional<Certificate> run(std::uint64_t& nodes, bool& exhausted) {
    const OrbitSet lambda_orbit = orbit(rs_, ws_.lambda);
    const int r = rs_.rank();
    need_ = r - 1;
    cands_.clear();
    for (const auto& x : lambda_orbit.elements)
      if (x != ws_.lambda && pair_ok(x, ws_.lambda) && self_ok(x)) cands_.push_back(x);
    chosen_ = {ws_.lambda};
    linalg::EchelonBasis basis(r);
    basis.insert(ws_.lambda.rationals());
    nodes_ = &nodes;
    exhausted_ = false;
    auto found = dfs(0, basis);
    exhausted = exhausted_;
    return found;
  }

 private:
  bool self_ok(const Weight& x) const { return ws_.delta == 2 || !rs_.is_root(2 * x); }
  bool pair_ok(const Weight& x, const Weight& y) const {
    if (rs_.is_root(x - y)) return false;
    return ws_.delta == 2 || !rs_.is_root(x + y);
  }

  bool spend() {
    if (*nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++*nodes_;
    return true;
  }

  std::optional<Certificate> leaf() {
    const Hyperplane h = span_hyperplane(chosen_);
    auto it = memo_.find(h.normal());
    bool passes;
    if (it != memo_.end()) {
      passes = it->second;
    } else {
      passes = ws_.delta * weights_off(ws_, h).multiset_count > roots_off(rs_, h) + 6;
      memo_.emplace(h.normal(), passes);
    }
    if (!passes) return std::nullopt;
    Certificate c = check_nosm(ws_, chosen_);
    if (c.valid) return c;
    return std::nullopt;
  }

  std::optional<Certificate> dfs(std::size_t start, linalg::EchelonBasis& basis) {
    if (static_cast<int>(chosen_.size()) == need_) return leaf();
    const std::size_t remaining = static_cast<std::size_t>(need_) - chosen_.size();
    for (std::size_t i = start; i + remaining <= cands_.size(); ++i) {
      if (!spend()) return std::nullopt;
      const Weight& x = cands_[i];
      bool ok = true;
      for (std::size_t j = 1; j < chosen_.size() && ok; ++j) ok = pair_ok(x, chosen_[j]);
      if (!ok) continue;
      linalg::EchelonBasis next = basis;
      if (!next.insert(x.rationals())) continue;
      chosen_.push_back(x);
      auto found = dfs(i + 1, next);
      chosen_.pop_back();
      if (found || exhausted_) return found;
    }
    return std::nullopt;
  }

  const RootSystem& rs_;
  const WeightSystem& ws_;
  std::uint64_t budget_;
  int need_ = 0;
  std::vector<Weight> cands_;
  std::vector<Weight> chosen_;
  std::map<std::vector<std::int64_t>, bool> memo_;
  std::uint64_t* nodes_ = nullptr;
  bool exhausted_ = false;
};

}  // namespace

ScanEntry scan_weight(const RootSystem& rs, const Weight& lambda, const ScanOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  ScanEntry entry;
  entry.lambda = dominant_representative(rs, lambda);
  entry.lambda_fw = rs.fundamental_coefficients(entry.lambda);
  if (entry.lambda.is_zero()) throw ArgumentError("scan needs a nonzero highest weight");

  auto finish = [&](Verdict v, std::string method) {
    entry.verdict = v;
    entry.method = std::move(method);
    entry.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return entry;
  };
  auto obstructed = [&](Certificate c, std::string method) {
    if (!revalidate(rs, c)) throw CertificateInvalidError("certificate for " + entry.lambda.to_string() +
                                                          " failed re-validation");
    entry.certificate = std::move(c);
    return finish(Verdict::Obstructed, std::move(method));
  };

  if (opts.budget == 0) return finish(Verdict::Inconclusive, "budget");
  const WeightSystem ws = weight_system(rs, entry.lambda);

  if (opts.use_templates) {
    if (auto w = witness_for(rs, entry.lambda)) {
      ++entry.nodes;
      Certificate c = check_nosm(ws, w->omega);
      if (c.valid) return obstructed(std::move(c), "template:" + w->name);
    }
  }

  if (ws.delta == 1 && !check_two_lambda(rs, entry.lambda)) return finish(Verdict::Survivor, "two-lambda");

  const int omega_max = opts.omega_max < 0 ? rs.rank() + 1 : opts.omega_max;
  if (omega_max < rs.rank() - 1) return finish(Verdict::Inconclusive, "omega-max");

  Search search(rs, ws, opts.budget);
  bool exhausted = false;
  auto found = search.run(entry.nodes, exhausted);
  if (found) return obstructed(std::move(*found), "search");
  if (exhausted) return finish(Verdict::Inconclusive, "budget");
  return finish(Verdict::Survivor, "exhausted");
}

namespace {

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("WEYLCERT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::vector<ScanEntry> scan(const RootSystem& rs, const ScanOptions& opts) {
  const auto coeffs = dominant_coefficients(rs.rank(), opts.coeff_sum_bound);
  std::vector<ScanEntry> out(coeffs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < coeffs.size(); i = next++) {
      try {
        out[i] = scan_weight(rs, rs.from_fundamental(coeffs[i]), opts);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int n = std::min<int>(thread_count(opts.threads), std::max<std::size_t>(1, coeffs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace weylcert
