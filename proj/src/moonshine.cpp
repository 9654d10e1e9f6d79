#include "vnat/moonshine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vnat::moonshine {

namespace {

using qseries::EtaFactor;

void require_prec(std::int64_t prec, std::int64_t minimum) {
  if (prec < minimum) {
    throw std::invalid_argument("precision " + std::to_string(prec) + " is below the minimum " +
                                std::to_string(minimum));
  }
}

bool nonnegative_integral(const FracQSeries& s) {
  return std::all_of(s.coeffs().begin(), s.coeffs().end(),
                     [](const auto& kv) { return is_integer(kv.second) && kv.second >= 0; });
}

FracQSeries constant(const Rational& c, std::int64_t valid_below) {
  return FracQSeries::polynomial({c}, valid_below);
}

}  // namespace

FracQSeries leech_character(std::int64_t prec) {
  require_prec(prec, 2);
  return qseries::char_lattice_voa(qseries::weight12_match(1, 0, prec), 24);
}

FracQSeries involution_trace(std::int64_t prec) {
  require_prec(prec, 2);
  return qseries::eta_quotient({{Rational(1), 24}, {Rational(2), -24}}, prec);
}

FracQSeries twisted_character(std::int64_t prec) {
  require_prec(prec, 2);
  const FracQSeries raw = qseries::eta_quotient({{Rational(1), 24}, {make_rational(1, 2), -24}}, prec - 1);
  return (Rational(4096) * raw).truncated(make_rational(prec - 1));
}

JAssembly assemble_j_detailed(std::int64_t prec) {
  require_prec(prec, 3);
  const std::int64_t work = std::max<std::int64_t>(prec, 4);
  const FracQSeries untwisted = make_rational(1, 2) * (leech_character(work) + involution_trace(work));
  const FracQSeries twisted = twisted_character(work).integral_part();
  JAssembly out{FracQSeries(1, 0), 0, {}};
  std::vector<std::pair<int, FracQSeries>> candidates;
  for (int sign : {1, -1}) {
    FracQSeries total = untwisted + Rational(sign) * twisted;
    if (total.coefficient(0) == 0) {
      out.zero_constant_signs.push_back(sign);
      candidates.emplace_back(sign, std::move(total));
    }
  }
  if (candidates.empty()) {
    throw std::logic_error("no sign of the twisted sector gives a vanishing constant term");
  }
  if (candidates.size() > 1) {
    candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                    [](const auto& c) { return !nonnegative_integral(c.second); }),
                     candidates.end());
  }
  if (candidates.size() != 1) {
    throw std::logic_error("twisted sector sign is not determined by the constant term and coefficient signs");
  }
  out.twisted_sign = candidates.front().first;
  out.j = candidates.front().second.truncated(make_rational(prec - 1));
  return out;
}

FracQSeries assemble_j(std::int64_t prec) { return assemble_j_detailed(prec).j; }

CharacterBundle triality_components(std::int64_t prec) {
  require_prec(prec, 3);
  const FracQSeries niemeier = qseries::char_lattice_voa(qseries::weight12_match(1, 48, prec), 24);
  const FracQSeries trace = involution_trace(prec);
  const FracQSeries j = assemble_j(prec);
  const FracQSeries v00 = make_rational(1, 4) * (niemeier + Rational(3) * trace);
  const FracQSeries rest = make_rational(1, 3) * (j - v00);
  for (const auto* s : {&v00, &rest}) {
    if (!nonnegative_integral(*s)) {
      throw std::logic_error("triality component has a negative or non-integral coefficient");
    }
  }
  return {leech_character(prec), trace, twisted_character(prec), v00, rest, rest, rest, j};
}

std::vector<Rational> faber_polynomial(const FracQSeries& f, int k) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  if (f.leading_exponent() != make_rational(-1) || f.coefficient(-1) != 1) {
    throw std::invalid_argument("expected a series q^-1 + O(1)");
  }
  if (f.valid_below() - k + 1 <= 0) {
    throw std::invalid_argument("series precision is insufficient for the degree-" + std::to_string(k) +
                                " Faber polynomial");
  }
  std::vector<FracQSeries> powers;
  for (int j = 0; j <= k; ++j) powers.push_back(qseries::pow(f, j));
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
  c[static_cast<std::size_t>(k)] = 1;
  FracQSeries acc = powers[static_cast<std::size_t>(k)];
  // f^j starts at q^-j, so the coefficient of q^-j is cleared by f^j alone.
  for (int j = k - 1; j >= 0; --j) {
    const Rational x = acc.coefficient(-j);
    if (x == 0) continue;
    c[static_cast<std::size_t>(j)] = -x;
    acc = acc - x * powers[static_cast<std::size_t>(j)];
  }
  return c;
}

FracQSeries evaluate_polynomial(const std::vector<Rational>& coeffs, const FracQSeries& f) {
  if (coeffs.empty()) throw std::invalid_argument("empty polynomial");
  FracQSeries total = coeffs[0] * qseries::pow(f, 0);
  FracQSeries power = f;
  for (std::size_t j = 1; j < coeffs.size(); ++j) {
    total = total + coeffs[j] * power;
    if (j + 1 < coeffs.size()) power = power * f;
  }
  return total;
}

ReplicableFamily::ReplicableFamily(int order, std::vector<FracQSeries> series)
    : order_(order), series_(std::move(series)) {
  if (order <= 0) throw std::invalid_argument("order must be positive");
  if (series_.size() != static_cast<std::size_t>(order)) {
    throw std::invalid_argument("a family of order " + std::to_string(order) + " needs " + std::to_string(order) +
                                " series");
  }
}

const FracQSeries& ReplicableFamily::at(int a) const {
  if (a <= 0) throw std::invalid_argument("exponent must be positive");
  const int r = a % order_;
  return series_[static_cast<std::size_t>((r == 0 ? order_ : r) - 1)];
}

FracQSeries hecke_sum(const ReplicableFamily& family, int k) {
  if (k <= 0) throw std::invalid_argument("k must be positive");
  std::optional<Rational> bound;
  std::map<std::int64_t, Rational> terms;
  for (int a = 1; a <= k; ++a) {
    if (k % a != 0) continue;
    const int d = k / a;
    const FracQSeries& t = family.at(a);
    const Rational valid = t.valid_below() * make_rational(a, d);
    if (!bound || valid < *bound) bound = valid;
    for (const auto& [key, c] : t.coeffs()) {
      if (key % t.denom() != 0) {
        throw FamilyInconsistent("series for a = " + std::to_string(a) + " has a non-integral exponent " +
                                 to_string(make_rational(key, t.denom())));
      }
      const std::int64_t n = key / t.denom();
      if (n % d != 0) continue;
      terms[n / d * a] += Rational(d) * c;
    }
  }
  const std::int64_t trunc = to_int64(ceil(*bound));
  return FracQSeries(1, trunc, {terms.begin(), terms.end()});
}

std::vector<ReplicabilityVerdict> check_completely_replicable(const ReplicableFamily& family, int kmax,
                                                              std::int64_t prec) {
  const FracQSeries& tg = family.at(1);
  std::vector<ReplicabilityVerdict> verdicts;
  for (int k = 1; k <= kmax; ++k) {
    const FracQSeries hecke = hecke_sum(family, k);
    const FracQSeries faber = evaluate_polynomial(faber_polynomial(tg, k), tg);
    Rational bound = std::min({hecke.valid_below(), faber.valid_below(), make_rational(prec)});
    if (bound <= 1) {
      throw std::invalid_argument("precision too low to compare the q^1 coefficient at k = " + std::to_string(k));
    }
    ReplicabilityVerdict v;
    v.k = k;
    v.pass = true;
    v.compared_below = bound;
    for (std::int64_t e = -k; e < bound; ++e) {
      const Rational expected = faber.coefficient(e);
      const Rational actual = hecke.coefficient(e);
      if (expected != actual) {
        v.pass = false;
        v.first_discrepancy = Discrepancy{make_rational(e), expected, actual};
        break;
      }
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

ReplicableFamily j_family(std::int64_t prec) { return ReplicableFamily(1, {assemble_j(prec)}); }

ReplicableFamily order2_family(std::int64_t prec, const Rational& shift) {
  const FracQSeries j = assemble_j(prec);
  const FracQSeries tg = (involution_trace(prec) + constant(shift, prec)).truncated(j.valid_below());
  return ReplicableFamily(2, {tg, j});
}

std::string to_text(const ReplicableFamily& family, int kmax) {
  std::int64_t denom = 1;
  for (const auto& s : family.series()) denom = std::lcm(denom, s.denom());
  std::ostringstream out;
  out << family.order() << ' ' << kmax << ' ' << denom << '\n';
  for (const auto& s : family.series()) out << '\n' << qseries::to_text(s.with_denominator(denom));
  return out.str();
}

FamilyFile parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> blocks;
  std::string header;
  std::string current;
  while (std::getline(in, line)) {
    const bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (header.empty()) {
      if (!blank) header = line;
      continue;
    }
    if (blank) {
      if (!current.empty()) blocks.push_back(std::move(current));
      current.clear();
    } else {
      current += line + '\n';
    }
  }
  if (!current.empty()) blocks.push_back(std::move(current));
  std::istringstream hs(header);
  int order = 0;
  int kmax = 0;
  std::int64_t denom = 0;
  std::string extra;
  if (!(hs >> order >> kmax >> denom) || (hs >> extra) || order <= 0 || kmax <= 0 || denom <= 0) {
    throw std::invalid_argument("malformed family header (expected: order kmax denom)");
  }
  if (blocks.size() != static_cast<std::size_t>(order)) {
    throw std::invalid_argument("family declares order " + std::to_string(order) + " but has " +
                                std::to_string(blocks.size()) + " series blocks");
  }
  std::vector<FracQSeries> series;
  for (const auto& b : blocks) {
    FracQSeries s = qseries::parse_series(b);
    if (s.denom() != denom) throw std::invalid_argument("series block denominator differs from the header");
    series.push_back(std::move(s));
  }
  return {ReplicableFamily(order, std::move(series)), kmax};
}

}  // namespace vnat::moonshine
