#include "tits/sigma.hpp"

#include "tits/errors.hpp"

namespace tits {

namespace {

void check_input(std::int64_t m, std::int64_t n, std::int64_t l) {
  if (m < 1 || n < 3 || l < 0) {
    throw ArgumentError("sigma needs m >= 1, n >= 3, l >= 0 (got m=" + std::to_string(m) +
                        ", n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")");
  }
}

// base^e for a nonzero base and any integer exponent.
BigRational rpow(std::int64_t base, std::int64_t e) {
  BigInt p = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? BigRational(BigInt(1), p) : BigRational(p);
}

}  // namespace

SigmaKind parse_sigma_kind(const std::string& text) {
  if (text == "1even") return SigmaKind::OneEven;
  if (text == "1odd") return SigmaKind::OneOdd;
  if (text == "2even") return SigmaKind::TwoEven;
  if (text == "2odd") return SigmaKind::TwoOdd;
  throw ArgumentError("unknown sigma kind '" + text + "' (expected 1even, 1odd, 2even, 2odd)");
}

std::string to_string(SigmaKind kind) {
  switch (kind) {
    case SigmaKind::OneEven:
      return "1even";
    case SigmaKind::OneOdd:
      return "1odd";
    case SigmaKind::TwoEven:
      return "2even";
    case SigmaKind::TwoOdd:
      return "2odd";
  }
  return "?";
}

BigRational sigma11(bool even, std::int64_t m, std::int64_t n, std::int64_t l) {
  check_input(m, n, l);
  BigRational s = 0;
  for (std::int64_t r = 0; r <= l / 2; ++r) {
    BigInt b = binomial(l, 2 * r);
    if (b == 0) continue;
    BigRational t = BigRational(b) * rpow(n - 2, m - (2 * r + 1));
    if (even) t *= rpow(2, 2 * r + 1);
    s += t;
  }
  return s;
}

BigRational sigma12(bool even, std::int64_t m, std::int64_t n, std::int64_t l) {
  check_input(m, n, l);
  BigRational s = 0;
  for (std::int64_t r = 0; r <= l / 2; ++r) {
    BigInt b = binomial(l, 2 * r + 1);
    if (b == 0) continue;
    BigRational t = BigRational(b) * rpow(n - 2, l - (2 * r + 1));
    if (even) t *= rpow(2, m - l + 2 * r + 1);
    s += t;
  }
  return s;
}

namespace {

BigRational sigma2(bool even, std::int64_t m, std::int64_t n, std::int64_t l) {
  check_input(m, n, l);
  BigRational s = 0;
  for (std::int64_t r = 0; r <= l / 2; ++r) {
    BigRational pw = rpow(n - 2, m - (2 * r + 2));
    BigRational a = BigRational(binomial(l, 2 * r)) * pw;
    BigRational b = BigRational(binomial(l, 2 * r + 1)) * pw;
    if (even) {
      a *= rpow(2, 2 * r + 2);
      b *= rpow(2, 2 * r + 1);
    }
    s += a + b;
  }
  return s;
}

}  // namespace

BigRational sigma(SigmaKind kind, std::int64_t m, std::int64_t n, std::int64_t l) {
  switch (kind) {
    case SigmaKind::OneEven:
      return sigma11(true, m, n, l) + sigma12(true, m, n, l);
    case SigmaKind::OneOdd:
      return sigma11(false, m, n, l) + sigma12(false, m, n, l);
    case SigmaKind::TwoEven:
      return sigma2(true, m, n, l);
    case SigmaKind::TwoOdd:
      return sigma2(false, m, n, l);
  }
  throw ArgumentError("unknown sigma kind");
}

ExtraConditionReport extra_condition(std::int64_t m, std::int64_t n) {
  if (m < 6) throw DomainError("condition only gates the m >= 6 case");
  if (n < 3) throw ArgumentError("form dimension must be >= 3");
  ExtraConditionReport rep{m, n, n % 2 == 0, true, {}};
  SigmaKind k1 = rep.even ? SigmaKind::OneEven : SigmaKind::OneOdd;
  SigmaKind k2 = rep.even ? SigmaKind::TwoEven : SigmaKind::TwoOdd;
  for (std::int64_t l = 2; l <= m - 3; ++l) {
    ExtraConditionRow row{l, sigma(k1, m, n, l), sigma(k2, m, n, l), false};
    row.holds = row.first > row.second;
    rep.holds = rep.holds && row.holds;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

bool RecurrenceReport::holds() const {
  for (const auto& r : relations) {
    if (!r.holds) return false;
  }
  return true;
}

RecurrenceReport lemma_recurrences(std::int64_t m, std::int64_t n, std::int64_t l) {
  if (m < 2) throw DomainError("recurrences relate m and m-1, so m >= 2");
  check_input(m, n, l);
  const BigRational q = n - 2;
  RecurrenceReport rep;
  auto add = [&](std::string name, bool ok) { rep.relations.push_back({std::move(name), ok}); };

  add("sigma11_even", sigma11(true, m - 1, n, l) == sigma11(true, m, n, l) / q);
  add("sigma11_odd", sigma11(false, m - 1, n, l) == sigma11(false, m, n, l) / q);
  add("sigma12_even", sigma12(true, m - 1, n, l) == sigma12(true, m, n, l) / 2);
  add("sigma12_odd", sigma12(false, m - 1, n, l) == sigma12(false, m, n, l));
  add("sigma2_even", sigma(SigmaKind::TwoEven, m - 1, n, l) == sigma(SigmaKind::TwoEven, m, n, l) / q);
  add("sigma2_odd", sigma(SigmaKind::TwoOdd, m - 1, n, l) == sigma(SigmaKind::TwoOdd, m, n, l) / q);

  rep.literal_holds = sigma12(true, m - 1, n, l) == sigma12(true, m, n, l) / q;

  rep.transfer_holds = true;
  for (bool even : {true, false}) {
    SigmaKind k1 = even ? SigmaKind::OneEven : SigmaKind::OneOdd;
    SigmaKind k2 = even ? SigmaKind::TwoEven : SigmaKind::TwoOdd;
    if (sigma(k1, m, n, l) > sigma(k2, m, n, l) && !(sigma(k1, m - 1, n, l) > sigma(k2, m - 1, n, l))) {
      rep.transfer_holds = false;
    }
  }
  return rep;
}

}  // namespace tits
