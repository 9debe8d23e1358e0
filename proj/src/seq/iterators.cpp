#include "psiq/seq/iterators.hpp"

#include <algorithm>

namespace psiq::seq {

namespace {

template <class S>
bool zero(const S& v) {
  return ScalarTraits<S>::is_zero(v);
}

template <class S>
void check_seeds(const S* seeds, std::size_t count, int start, int stride) {
  for (std::size_t i = 0; i < count; ++i)
    if (zero(seeds[i])) throw DomainError("zero seed at index " + std::to_string(start + stride * static_cast<int>(i)));
}

template <class S>
RatioSequence<S> seeded(SequenceKind kind, int start, int stride, const S* seeds, std::size_t count,
                        std::string provenance) {
  RatioSequence<S> seq;
  seq.kind = kind;
  seq.start = start;
  seq.stride = stride;
  seq.provenance = std::move(provenance);
  for (std::size_t i = 0; i < count; ++i) seq.push(seeds[i]);
  return seq;
}

template <class S>
void truncate(RatioSequence<S>& seq, int index, const std::string& why) {
  seq.truncated_at = index;
  seq.truncation_reason = why;
}

}  // namespace

template <class S>
SixthOrderParams<S> SixthOrderParams<S>::from_psi(const S& p2, const S& p3, const S& p4, const S& p5, const S& p6) {
  SixthOrderParams p;
  p.A = p4 * p2 * p2 * p2;
  p.B = p5 * p3 * p2 * p2;
  p.C = p5 * p3 * p3 * p3 - p4 * p4 * p4 * p2;
  p.D = p6 * p3 * p3 * p2;
  p.E = p6 * p4 * p2 * p2;
  return p;
}

template <class S>
RatioSequence<S> iterate_dp1(const Dp1Params<S>& params, int start, const std::array<S, 2>& seeds, int last,
                             int stride) {
  if (stride < 1) throw DomainError("stride must be positive");
  check_seeds(seeds.data(), 2, start, stride);
  auto seq = seeded(SequenceKind::kBeta, start, stride, seeds.data(), 2, "dP-I iteration");
  for (int next = start + 2 * stride; next <= last; next += stride) {
    const S& prev = seq.values[seq.values.size() - 2];
    const S& cur = seq.values.back();
    if (zero(cur) || zero(prev)) {
      truncate(seq, next, "division by zero");
      break;
    }
    seq.push(S((params.z / cur + params.a / (cur * cur)) / prev));
  }
  return seq;
}

template <class S>
RatioSequence<S> iterate_third_order(const ThirdOrderParams<S>& params, int start, const std::array<S, 3>& seeds,
                                     int last) {
  check_seeds(seeds.data(), 3, start, 1);
  auto seq = seeded(SequenceKind::kD, start, 1, seeds.data(), 3, "third-order iteration");
  for (int next = start + 3; next <= last; ++next) {
    const std::size_t k = seq.values.size();
    const S& xm1 = seq.values[k - 3];
    const S& x0 = seq.values[k - 2];
    const S& x1 = seq.values[k - 1];
    if (zero(xm1) || zero(x0) || zero(x1)) {
      truncate(seq, next, "division by zero");
      break;
    }
    const S rhs = params.alpha5 / (x1 * x0) - params.alpha4 * (S(1) / x1 + S(1) / x0);
    seq.push(S(rhs / xm1));
  }
  return seq;
}

template <class S>
RatioSequence<S> iterate_sixth_order(const SixthOrderParams<S>& params, int start, const std::array<S, 6>& seeds,
                                     int last) {
  if (zero(params.A)) throw DomainError("leading coefficient vanishes (psi_4 = 0): fourth-order regime");
  check_seeds(seeds.data(), 6, start, 1);
  auto seq = seeded(SequenceKind::kB, start, 1, seeds.data(), 6, "sixth-order iteration");
  for (int next = start + 6; next <= last; ++next) {
    const std::size_t k = seq.values.size();
    // x_{n-3} .. x_{n+2} with n + 3 = next
    const S& xm3 = seq.values[k - 6];
    const S& xm2 = seq.values[k - 5];
    const S& xm1 = seq.values[k - 4];
    const S& x0 = seq.values[k - 3];
    const S& x1 = seq.values[k - 2];
    const S& x2 = seq.values[k - 1];
    const S pi = xm2 * xm2 * xm1 * xm1 * xm1 * x0 * x0 * x0 * x0 * x1 * x1 * x1 * x2 * x2;
    if (zero(pi) || zero(xm3)) {
      truncate(seq, next, "division by zero");
      break;
    }
    const S num = params.B * xm2 * xm1 * xm1 * x0 * x0 * x0 * x1 * x1 * x2 - params.C * xm1 * x0 * x0 * x1 +
                  params.D * x0 - params.E;
    seq.push(S(num / (pi * params.A * xm3)));
  }
  return seq;
}

template <class S>
ResidualReport compare(const RatioSequence<S>& a, const RatioSequence<S>& b, double tolerance) {
  if (a.stride != b.stride || (a.start - b.start) % a.stride != 0) throw DomainError("sequences are not aligned");
  const int lo = std::max(a.start, b.start);
  const int hi = std::min(a.last_index(), b.last_index());
  if (a.values.empty() || b.values.empty() || lo > hi) throw DomainError("sequences have no common indices");
  ResidualReport r;
  r.identity = "sequence-comparison";
  r.exact = ScalarTraits<S>::exact;
  r.tolerance = tolerance;
  for (int n = lo; n <= hi; n += a.stride) {
    const S diff = a.at(n) - b.at(n);
    if constexpr (ScalarTraits<S>::exact) {
      r.add_exact(std::to_string(n), ScalarTraits<S>::format(diff), ScalarTraits<S>::magnitude(diff), zero(diff));
    } else {
      r.add_numeric(std::to_string(n), std::abs(diff) / std::max(1.0, std::abs(b.at(n))));
    }
  }
  return r;
}

template struct SixthOrderParams<BigRational>;
template struct SixthOrderParams<Complex>;
template RatioSequence<BigRational> iterate_dp1(const Dp1Params<BigRational>&, int, const std::array<BigRational, 2>&, int, int);
template RatioSequence<Complex> iterate_dp1(const Dp1Params<Complex>&, int, const std::array<Complex, 2>&, int, int);
template RatioSequence<BigRational> iterate_third_order(const ThirdOrderParams<BigRational>&, int, const std::array<BigRational, 3>&, int);
template RatioSequence<Complex> iterate_third_order(const ThirdOrderParams<Complex>&, int, const std::array<Complex, 3>&, int);
template RatioSequence<BigRational> iterate_sixth_order(const SixthOrderParams<BigRational>&, int, const std::array<BigRational, 6>&, int);
template RatioSequence<Complex> iterate_sixth_order(const SixthOrderParams<Complex>&, int, const std::array<Complex, 6>&, int);
template ResidualReport compare(const RatioSequence<BigRational>&, const RatioSequence<BigRational>&, double);
template ResidualReport compare(const RatioSequence<Complex>&, const RatioSequence<Complex>&, double);

}  // namespace psiq::seq
