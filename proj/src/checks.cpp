#include "vnat/checks.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "vnat/arithmetic.hpp"
#include "vnat/cocycle.hpp"
#include "vnat/codes.hpp"
#include "vnat/enumerate.hpp"
#include "vnat/fields.hpp"
#include "vnat/fock.hpp"
#include "vnat/moonshine.hpp"
#include "vnat/octahedral.hpp"

namespace vnat::checks {

using vnat::to_string;

namespace {

using qseries::FracQSeries;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_int(std::string_view key, std::string_view value) {
  const std::string v = trim(value);
  std::size_t used = 0;
  long long out = 0;
  try {
    out = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) {
    throw ConfigError("config key '" + std::string(key) + "' expects an integer, got '" + v + "'");
  }
  return out;
}

void require_range(std::string_view key, std::int64_t v, std::int64_t lo, std::int64_t hi) {
  if (v < lo || v > hi) {
    throw ConfigError("config key '" + std::string(key) + "' must lie in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "], got " + std::to_string(v));
  }
}

std::string flag(bool b) { return b ? "true" : "false"; }

// Collects named expected/actual pairs; the row passes iff the joined strings agree.
class Comparison {
 public:
  void add(const std::string& key, const std::string& expected, const std::string& actual) {
    expected_.push_back(key + "=" + expected);
    actual_.push_back(key + "=" + actual);
  }
  void add_flag(const std::string& key, bool expected, bool actual) { add(key, flag(expected), flag(actual)); }
  template <typename T>
  void add_value(const std::string& key, const T& expected, const T& actual) {
    std::ostringstream e;
    std::ostringstream a;
    e << expected;
    a << actual;
    add(key, e.str(), a.str());
  }

  void fill(CheckReport& r) const {
    r.expected = join(expected_);
    r.actual = join(actual_);
    r.status = r.expected == r.actual ? Status::Pass : Status::Fail;
  }

 private:
  static std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
  }
  std::vector<std::string> expected_;
  std::vector<std::string> actual_;
};

std::string join_values(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::string coefficients_string(const FracQSeries& s, std::int64_t from, std::int64_t to) {
  std::vector<std::string> parts;
  for (std::int64_t n = from; n <= to; ++n) parts.push_back(to_string(s.coefficient(n)));
  return join_values(parts);
}

lattice::EnumerationOptions enum_options(const CheckConfig& cfg) {
  lattice::EnumerationOptions o;
  o.budget_override = cfg.budget_override;
  o.threads = cfg.threads;
  return o;
}

fock::FieldLimits field_limits(const CheckConfig& cfg) { return {-cfg.window, cfg.window, cfg.window}; }

// Theta coefficients of an even unimodular rank-24 lattice with the given number of
// roots: the stated values for n <= 2, the weight-12 form beyond.
std::string stated_theta(const std::vector<std::string>& stated, std::int64_t roots, std::int64_t nmax) {
  const FracQSeries form = qseries::weight12_match(1, roots, nmax + 1);
  std::vector<std::string> parts;
  for (std::int64_t n = 0; n <= nmax; ++n) {
    parts.push_back(n < static_cast<std::int64_t>(stated.size()) ? stated[static_cast<std::size_t>(n)]
                                                                  : to_string(form.coefficient(n)));
  }
  return join_values(parts);
}

CheckReport make_report(const CheckInfo& info) {
  CheckReport r;
  r.name = info.name;
  r.basis = info.basis;
  r.claim = info.claim;
  return r;
}

// --- Individual checks -------------------------------------------------------------

void check_golay(const CheckConfig&, CheckReport& r) {
  const auto g = codes::golay_construction();
  Comparison c;
  c.add_value("dimension", 12, g.code.dimension());
  c.add_value("min_weight", 8, codes::min_weight(g.code));
  c.add_flag("doubly_even", true, codes::is_doubly_even(g.code));
  c.add_flag("self_dual", true, codes::is_self_dual(g.code));
  std::vector<std::string> we;
  for (const auto& [w, n] : codes::weight_enumerator(g.code)) we.push_back(std::to_string(w) + ":" + std::to_string(n));
  c.add("weight_enumerator", "0:1,8:759,12:2576,16:759,24:1", join_values(we));
  c.fill(r);
  r.note = "completion=" + g.completion + "; orbit_size=" + std::to_string(g.orbit_size);
}

void check_lattice_theta(const lattice::ScaledLattice& l, const std::vector<std::string>& stated, std::int64_t roots,
                         const CheckConfig& cfg, CheckReport& r) {
  Comparison c;
  c.add_flag("even", true, lattice::is_even(l));
  c.add_flag("unimodular", true, lattice::is_unimodular(l));
  const FracQSeries theta = lattice::theta_series(l, cfg.nmax, enum_options(cfg));
  c.add("theta", stated_theta(stated, roots, cfg.nmax), coefficients_string(theta, 0, cfg.nmax));
  c.fill(r);
}

void check_niemeier_theta(const CheckConfig& cfg, CheckReport& r) {
  check_lattice_theta(lattice::niemeier_a1_24(codes::golay_code()), {"1", "48", "195408"}, 48, cfg, r);
}

void check_leech_theta(const CheckConfig& cfg, CheckReport& r) {
  check_lattice_theta(lattice::leech_lattice(codes::golay_code()), {"1", "0", "196560"}, 0, cfg, r);
}

void check_neighbors(const CheckConfig& cfg, CheckReport& r) {
  const auto code = codes::golay_code();
  const auto n = lattice::niemeier_a1_24(code);
  const auto leech = lattice::leech_lattice(code);
  const auto extensions = lattice::even_unimodular_extensions(lattice::lambda0(code));
  int as_niemeier = 0;
  int as_leech = 0;
  std::vector<std::string> roots;
  for (const auto& e : extensions) {
    as_niemeier += lattice::same_point_set(e, n) ? 1 : 0;
    as_leech += lattice::same_point_set(e, leech) ? 1 : 0;
    roots.push_back(std::to_string(lattice::count_vectors_of_norm(e, 2, enum_options(cfg))));
  }
  Comparison c;
  c.add_value("even_unimodular_extensions", 2, static_cast<int>(extensions.size()));
  c.add_value("equal_to_niemeier", 1, as_niemeier);
  c.add_value("equal_to_leech", 1, as_leech);
  c.fill(r);
  r.note = "root counts " + join_values(roots);
}

void check_theta_modular(const CheckConfig& cfg, CheckReport& r) {
  const auto code = codes::golay_code();
  Comparison c;
  const std::pair<const char*, std::pair<lattice::ScaledLattice, int>> cases[] = {
      {"niemeier", {lattice::niemeier_a1_24(code), 48}},
      {"leech", {lattice::leech_lattice(code), 0}},
  };
  for (const auto& [label, entry] : cases) {
    const FracQSeries theta = lattice::theta_series(entry.first, cfg.nmax, enum_options(cfg));
    const FracQSeries form = qseries::weight12_match(1, entry.second, cfg.nmax + 1);
    c.add(label, coefficients_string(form, 0, cfg.nmax), coefficients_string(theta, 0, cfg.nmax));
  }
  c.fill(r);
}

void check_character_suite(const CheckConfig& cfg, CheckReport& r) {
  const FracQSeries trace = moonshine::involution_trace(cfg.prec);
  const FracQSeries twisted = moonshine::twisted_character(cfg.prec);
  const FracQSeries leech = moonshine::leech_character(cfg.prec);
  Comparison c;
  c.add("involution_trace", "1,-24,276,-2048", coefficients_string(trace, -1, 2));
  c.add("twisted_q^(1/2)", "4096", to_string(twisted.coefficient(make_rational(1, 2))));
  c.add("twisted_q^1", "98304", to_string(twisted.coefficient(1)));
  c.add("twisted_below_q^(1/2)", "0", to_string(twisted.coefficient(0)));
  c.add("leech_character_q^-1", "1", to_string(leech.coefficient(-1)));
  c.add("leech_character_q^0", "24", to_string(leech.coefficient(0)));
  c.fill(r);
  r.note = "involution trace " + qseries::to_display(trace) + "; twisted " + qseries::to_display(twisted);
}

void check_j_function(const CheckConfig& cfg, CheckReport& r) {
  const auto a = moonshine::assemble_j_detailed(cfg.prec);
  Comparison c;
  c.add("coefficients_q^-1..q^1", "1,0,196884", coefficients_string(a.j, -1, 1));
  c.fill(r);
  std::vector<std::string> signs;
  for (int s : a.zero_constant_signs) signs.push_back(std::to_string(s));
  r.note = "J = " + qseries::to_display(a.j) + "; twisted sign " + std::to_string(a.twisted_sign) +
           "; signs with zero constant term " + join_values(signs);
}

void check_triality(const CheckConfig& cfg, CheckReport& r) {
  Comparison c;
  try {
    const auto b = moonshine::triality_components(cfg.prec);
    c.add_flag("nonnegative_integral", true, true);
    c.add("v00_q^-1", "1", to_string(b.v00.coefficient(-1)));
    c.add_flag("sum_is_j", true, b.v00 + b.v01 + b.v10 + b.v11 == b.j);
    c.add_flag("v01=v10=v11", true, b.v01 == b.v10 && b.v10 == b.v11);
    r.note = "V00 = " + qseries::to_display(b.v00) + "; V01 = " + qseries::to_display(b.v01);
  } catch (const std::logic_error& e) {
    c.add_flag("nonnegative_integral", true, false);
    r.note = e.what();
  }
  c.fill(r);
}

void check_heisenberg_bracket(const CheckConfig& cfg, CheckReport& r) {
  const int bound = cfg.degree + 1;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  for (const auto& m : fock::monomials_up_to(cfg.rank, cfg.degree)) {
    const fock::FockState s = fock::FockState::basis(cfg.rank, m);
    for (int i = 1; i <= cfg.rank; ++i) {
      for (int j = 1; j <= cfg.rank; ++j) {
        for (int p = -bound; p <= bound; ++p) {
          for (int q = -bound; q <= bound; ++q) {
            const fock::FockState lhs = fock::apply_mode(i, p, fock::apply_mode(j, q, s)) -
                                        fock::apply_mode(j, q, fock::apply_mode(i, p, s));
            const fock::FockState rhs = (i == j && p + q == 0) ? Rational(p) * s : fock::FockState(cfg.rank);
            ++cases;
            if (lhs != rhs) ++mismatches;
          }
        }
      }
    }
  }
  Comparison c;
  c.add_value("mismatches", std::size_t{0}, mismatches);
  c.fill(r);
  r.note = std::to_string(cases) + " cases, modes in [" + std::to_string(-bound) + ", " + std::to_string(bound) + "]";
}

void check_locality(const CheckConfig& cfg, CheckReport& r) {
  const auto lim = field_limits(cfg);
  const auto g1 = fock::generator_field(cfg.rank, 1, lim);
  const int max_degree = std::min(cfg.degree, 4);
  const auto self = fock::locality_order(g1, g1, 4, max_degree);
  Comparison c;
  c.add("generator_self_pair", "2", self ? std::to_string(*self) : "none");
  c.fill(r);
  if (cfg.rank >= 2) {
    const auto g2 = fock::generator_field(cfg.rank, 2, lim);
    const auto cross = fock::locality_order(g1, g2, 4, max_degree);
    r.note = "distinct colors: " + (cross ? std::to_string(*cross) : std::string("none"));
  }
}

void check_unit_laws(const CheckConfig& cfg, CheckReport& r) {
  const auto lim = field_limits(cfg);
  const int rank = cfg.rank;
  const int window = std::min(cfg.window / 2, 8);
  const int max_degree = std::min(cfg.degree, 6);
  const auto id = fock::identity_field(rank);
  const auto zero = fock::linear_combination({}, rank);
  const auto g1 = fock::generator_field(rank, 1, lim);
  std::vector<std::pair<std::string, fock::Field>> fields{{"e1", g1}};
  if (rank >= 2) {
    fields.emplace_back("e1(-1)e2", fock::residue_product(g1, fock::generator_field(rank, 2, lim), -1));
  }
  Comparison c;
  auto same = [&](const fock::Field& a, const fock::Field& b) {
    return fock::compare_fields(a, b, max_degree, -window, window).has_value();
  };
  for (const auto& [label, a] : fields) {
    c.add_flag(label + "_(-1)I=" + label, true, same(fock::residue_product(a, id, -1), a));
    c.add_flag("I_(-1)" + label + "=" + label, true, same(fock::residue_product(id, a, -1), a));
    bool vanish = true;
    for (int n = 0; n <= 2; ++n) {
      vanish = vanish && same(fock::residue_product(a, id, n), zero) && same(fock::residue_product(id, a, n), zero);
    }
    c.add_flag(label + "_(n)I=I_(n)" + label + "=0_for_n=0..2", true, vanish);
  }
  c.add_flag("e1_(1)e1=I", true, same(fock::residue_product(g1, g1, 1), id));
  c.fill(r);
}

void check_borcherds_identity(const CheckConfig& cfg, CheckReport& r) {
  const auto lim = field_limits(cfg);
  const int rank = cfg.rank;
  const auto g1 = fock::generator_field(rank, 1, lim);
  const auto g2 = rank >= 2 ? fock::generator_field(rank, 2, lim) : g1;
  const std::vector<fock::Field> pool{fock::identity_field(rank), g1, g2, fock::residue_product(g1, g2, -1),
                                      fock::residue_product(g1, g1, -2)};
  const auto states = fock::monomials_up_to(rank, cfg.degree);
  constexpr int kInstances = 120;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick_field(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_state(0, states.size() - 1);
  std::uniform_int_distribution<int> pick_index(-2, 2);
  int failures = 0;
  int modes = 0;
  for (int i = 0; i < kInstances; ++i) {
    fock::BorcherdsInstance inst{pool[pick_field(rng)],
                                 pool[pick_field(rng)],
                                 pool[pick_field(rng)],
                                 pick_index(rng),
                                 pick_index(rng),
                                 pick_index(rng),
                                 fock::FockState::basis(rank, states[pick_state(rng)])};
    const auto out = fock::check_borcherds(inst);
    modes += out.modes_compared;
    if (!out.holds) {
      ++failures;
      r.details.push_back({"instance " + std::to_string(i), false,
                           inst.a->description() + ", " + inst.b->description() + ", " + inst.c->description() +
                               ", p=" + std::to_string(inst.p) + " q=" + std::to_string(inst.q) +
                               " r=" + std::to_string(inst.r) + ", state " + fock::to_string(inst.state)});
    }
  }
  Comparison c;
  c.add_value("failures", 0, failures);
  c.fill(r);
  r.note = std::to_string(kInstances) + " instances, " + std::to_string(modes) + " output modes compared";
}

void check_virasoro(const CheckConfig& cfg, CheckReport& r) {
  const auto lim = field_limits(cfg);
  const int rank = cfg.rank;
  const int max_degree = std::max(cfg.degree - 1, 0);
  std::size_t cases = 0;
  std::size_t failures = 0;
  for (const auto& m : fock::monomials_up_to(rank, max_degree)) {
    const auto s = fock::FockState::basis(rank, m);
    for (int a = -3; a <= 3; ++a) {
      for (int b = -3; b <= 3; ++b) {
        ++cases;
        if (!fock::check_virasoro(a, b, s, lim)) ++failures;
      }
    }
  }
  const auto l = fock::virasoro_field(rank, lim);
  const auto v0 = fock::FockState::vacuum(rank);
  // L_m is the mode m + 1 of Y(omega, z).
  const auto central = l->apply(3, l->apply(-1, v0)) - l->apply(-1, l->apply(3, v0));
  Comparison c;
  c.add_value("failures", std::size_t{0}, failures);
  c.add("[L2,L-2]v0", fock::to_string(make_rational(rank, 2) * v0), fock::to_string(central));
  c.fill(r);
  r.note = std::to_string(cases) + " cases on states of degree <= " + std::to_string(max_degree);
}

void check_graded_dimensions(const CheckConfig&, CheckReport& r) {
  constexpr int kTop = 8;
  // prod (1 - q^k)^-24 by repeated multiplication with 1 / (1 - q^k).
  std::vector<Integer> product(kTop + 1, Integer(0));
  product[0] = 1;
  for (int rep = 0; rep < 24; ++rep) {
    for (int k = 1; k <= kTop; ++k) {
      for (int n = k; n <= kTop; ++n) product[static_cast<std::size_t>(n)] += product[static_cast<std::size_t>(n - k)];
    }
  }
  std::vector<std::string> expected;
  std::vector<std::string> actual;
  for (int n = 0; n <= kTop; ++n) {
    expected.push_back(product[static_cast<std::size_t>(n)].get_str());
    actual.push_back(fock::graded_dimension(24, n).get_str());
  }
  Comparison c;
  c.add("dimensions_0..8", join_values(expected), join_values(actual));
  c.fill(r);
}

void check_cocycle(const CheckConfig& cfg, CheckReport& r) {
  const auto code = codes::golay_code();
  const std::pair<const char*, lattice::ScaledLattice> cases[] = {
      {"niemeier", lattice::niemeier_a1_24(code)},
      {"leech", lattice::leech_lattice(code)},
  };
  Comparison c;
  std::vector<std::string> notes;
  for (const auto& [label, l] : cases) {
    const cocycle::LatticeCocycle eps(l);
    const auto rep = cocycle::verify_commutator(eps, static_cast<std::size_t>(cfg.trials), cfg.seed);
    c.add_flag(label, true, rep.holds);
    notes.push_back(std::string(label) + ": " + std::to_string(rep.basis_pairs) + " basis pairs, " +
                    std::to_string(rep.random_pairs) + " random pairs, " + std::to_string(rep.odd_pairs) +
                    " with odd pairing");
    if (rep.failure) r.details.push_back({label, false, *rep.failure});
  }
  c.fill(r);
  r.note = notes[0] + "; " + notes[1];
}

void check_octahedral(const CheckConfig&, CheckReport& r) {
  const auto group = octahedral::binary_octahedral_group();
  auto profile_string = [](const std::map<int, int>& p) {
    std::vector<std::string> parts;
    for (const auto& [k, v] : p) parts.push_back(std::to_string(k) + ":" + std::to_string(v));
    return join_values(parts);
  };
  Comparison c;
  c.add_value("order", std::size_t{48}, group.size());
  c.add("quotient_order_profile", profile_string(octahedral::symmetric_group4_profile()),
        profile_string(octahedral::quotient_order_profile()));
  c.add_flag("j_exchanges_e_and_f", true, octahedral::adjoint_exchange_holds());
  c.add_flag("i_j_k_conjugate_up_to_sign", true, octahedral::quaternion_images_conjugate());
  c.fill(r);
}

void check_scalar_action(const CheckConfig& cfg, CheckReport& r) {
  const auto code = codes::golay_code();
  const auto n = lattice::niemeier_a1_24(code);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
  bool minus_one_trivial = true;
  for (int t = 0; t < cfg.trials && minus_one_trivial; ++t) {
    lattice::IntVector cs(static_cast<std::size_t>(n.rank()));
    for (auto& x : cs) x = coeff(rng);
    const auto act = octahedral::scalar_action(octahedral::Generator::MinusOne, n, n.combine(cs));
    minus_one_trivial = act.is_scalar && act.exponent == 0;
  }
  const auto kernel = octahedral::kernel_of_i_action(n);
  const auto l0 = lattice::lambda0(code);
  Comparison c;
  c.add_flag("minus_one_trivial_on_samples", true, minus_one_trivial);
  c.add_flag("kernel_of_i_equals_lambda0", true, lattice::same_point_set(kernel, l0));
  c.add("index_in_niemeier", "2", to_string(lattice::sublattice_index(n, kernel)));
  c.fill(r);
  r.note = std::to_string(cfg.trials) + " random vectors of N(A1^24)";
}

void check_torus_golay(const CheckConfig&, CheckReport& r) {
  const auto code = codes::golay_code();
  const auto sub = octahedral::torus_trivial_subgroup(code);
  Comparison c;
  c.add_value("dimension", 12, sub.dimension());
  c.add_flag("equals_golay", true, sub == code);
  c.fill(r);
}

Detail verdict_detail(const moonshine::ReplicabilityVerdict& v) {
  std::string text = "compared below q^" + to_string(v.compared_below);
  if (v.first_discrepancy) {
    const auto& d = *v.first_discrepancy;
    text += "; first discrepancy at q^" + to_string(d.exponent) + ": Faber side " + to_string(d.expected) +
            ", Hecke side " + to_string(d.actual);
  }
  return {"k=" + std::to_string(v.k), v.pass, text};
}

std::string first_failure(const std::vector<moonshine::ReplicabilityVerdict>& verdicts) {
  for (const auto& v : verdicts) {
    if (!v.pass) {
      return "k=" + std::to_string(v.k) + "@q^" +
             (v.first_discrepancy ? to_string(v.first_discrepancy->exponent) : std::string("?"));
    }
  }
  return "none";
}

void check_replicability(const CheckConfig& cfg, CheckReport& r) {
  const auto verdicts = moonshine::check_completely_replicable(moonshine::j_family(cfg.prec), cfg.kmax, cfg.prec);
  Comparison c;
  c.add("first_failure", "none", first_failure(verdicts));
  c.fill(r);
  for (const auto& v : verdicts) {
    r.details.push_back(verdict_detail(v));
    r.verdicts.push_back(v);
  }
}

void check_replicability_fault(const CheckConfig& cfg, CheckReport& r) {
  const FracQSeries j = moonshine::assemble_j(cfg.prec);
  const FracQSeries corrupted = j + FracQSeries::monomial(1, 1, j.valid_below());
  const moonshine::ReplicableFamily family(2, {j, corrupted});
  const auto verdicts = moonshine::check_completely_replicable(family, std::max(cfg.kmax, 2), cfg.prec);
  Comparison c;
  c.add("first_failure", "k=2@q^2", first_failure(verdicts));
  c.fill(r);
  for (const auto& v : verdicts) {
    r.details.push_back(verdict_detail(v));
    r.verdicts.push_back(v);
  }
}

void check_order2_family(const CheckConfig& cfg, CheckReport& r) {
  Comparison c;
  const std::pair<int, const char*> cases[] = {{24, "none"}, {0, "k=1@q^0"}};
  for (const auto& [shift, expected] : cases) {
    const auto verdicts =
        moonshine::check_completely_replicable(moonshine::order2_family(cfg.prec, shift), cfg.kmax, cfg.prec);
    c.add("shift_" + std::to_string(shift) + "_first_failure", expected, first_failure(verdicts));
    for (const auto& v : verdicts) {
      Detail d = verdict_detail(v);
      d.label = "shift " + std::to_string(shift) + ", " + d.label;
      r.details.push_back(std::move(d));
    }
  }
  c.fill(r);
}

void check_arithmetic_facts(const CheckConfig&, CheckReport& r) {
  Comparison c;
  for (const auto& f : arithmetic::arithmetic_facts()) {
    c.add(f.name, f.expected, f.actual);
    r.details.push_back({f.name, f.holds, f.statement});
  }
  c.fill(r);
}

void check_order_bound(const CheckConfig&, CheckReport& r) {
  const auto rep = arithmetic::check_order_bound();
  std::vector<std::string> missing;
  for (auto p : rep.supersingular_not_dividing) missing.push_back(std::to_string(p));
  Comparison c;
  c.add_flag("primes_supersingular", true, rep.primes_are_supersingular);
  c.add_flag("valuations_2^46_3^20_5^9_7^6_13^3", true, rep.small_prime_valuations_match);
  c.add("supersingular_not_dividing", "17,19", join_values(missing));
  c.fill(r);
  r.note = arithmetic::to_string(rep.factorization);
}

CheckInfo entry(std::string name, Basis basis, std::string claim, void (*fn)(const CheckConfig&, CheckReport&)) {
  CheckInfo info{std::move(name), std::move(claim), basis, {}};
  info.run = [info_name = info.name, info_claim = info.claim, basis, fn](const CheckConfig& cfg) {
    CheckReport r;
    r.name = info_name;
    r.claim = info_claim;
    r.basis = basis;
    fn(cfg, r);
    return r;
  };
  return info;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skip";
  }
  return "unknown";
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::Published:
      return "published";
    case Basis::Computed:
      return "computed";
    case Basis::Elementary:
      return "elementary";
  }
  return "unknown";
}

void set_config_value(CheckConfig& cfg, std::string_view key_in, std::string_view value) {
  const std::string key = trim(key_in);
  if (key == "prec") {
    cfg.prec = parse_int(key, value);
  } else if (key == "nmax") {
    cfg.nmax = parse_int(key, value);
  } else if (key == "kmax") {
    cfg.kmax = static_cast<int>(parse_int(key, value));
  } else if (key == "rank") {
    cfg.rank = static_cast<int>(parse_int(key, value));
  } else if (key == "degree") {
    cfg.degree = static_cast<int>(parse_int(key, value));
  } else if (key == "window") {
    cfg.window = static_cast<int>(parse_int(key, value));
  } else if (key == "trials") {
    cfg.trials = static_cast<int>(parse_int(key, value));
  } else if (key == "seed") {
    const std::int64_t s = parse_int(key, value);
    if (s < 0) throw ConfigError("config key 'seed' must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(s);
  } else if (key == "budget_override") {
    const std::string v = trim(value);
    if (v == "true" || v == "1") {
      cfg.budget_override = true;
    } else if (v == "false" || v == "0") {
      cfg.budget_override = false;
    } else {
      throw ConfigError("config key 'budget_override' expects true or false, got '" + v + "'");
    }
  } else if (key == "threads") {
    cfg.threads = static_cast<unsigned>(parse_int(key, value));
  } else if (key == "jobs") {
    cfg.jobs = static_cast<unsigned>(parse_int(key, value));
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void validate(const CheckConfig& cfg) {
  require_range("kmax", cfg.kmax, 1, 24);
  require_range("prec", cfg.prec, std::max<std::int64_t>(4, cfg.kmax + 2), 400);
  require_range("nmax", cfg.nmax, 1, 8);
  require_range("rank", cfg.rank, 1, 24);
  require_range("degree", cfg.degree, 1, 10);
  require_range("window", cfg.window, cfg.degree + 4, 64);
  require_range("trials", cfg.trials, 0, 10000000);
  require_range("threads", cfg.threads, 0, 1024);
  require_range("jobs", cfg.jobs, 1, 256);
}

CheckConfig parse_config(std::string_view text, CheckConfig cfg) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + " is not of the form key = value");
    }
    set_config_value(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
  validate(cfg);
  return cfg;
}

const std::vector<CheckInfo>& catalogue() {
  static const std::vector<CheckInfo> checks{
      entry("golay", Basis::Published,
            "The extended Golay code is a doubly even self-dual [24, 12, 8] code with weight enumerator "
            "1 + 759 y^8 + 2576 y^12 + 759 y^16 + y^24.",
            check_golay),
      entry("niemeier-theta", Basis::Published,
            "N(A1^24) is even unimodular with 48 vectors of norm 2 and 195408 of norm 4.", check_niemeier_theta),
      entry("leech-theta", Basis::Published,
            "The Leech lattice is even unimodular with no vectors of norm 2 and 196560 of norm 4.",
            check_leech_theta),
      entry("neighbor-extensions", Basis::Published,
            "Exactly two of the lattices between Lambda0 and its dual are even unimodular: N(A1^24) and Leech.",
            check_neighbors),
      entry("theta-modular", Basis::Computed,
            "Enumerated theta series agree with E4^3 + (c1 - 720) Delta for c1 = 48 and c1 = 0.",
            check_theta_modular),
      entry("character-suite", Basis::Published,
            "eta(t)^24/eta(2t)^24 = q^-1 - 24 + 276q - 2048q^2 + ..., 2^12 eta(t)^24/eta(t/2)^24 = 4096q^(1/2) + "
            "98304q + ..., and theta_Leech/eta^24 has constant term 24.",
            check_character_suite),
      entry("j-function", Basis::Published,
            "The orbifold character assembles to J = q^-1 + 196884q + ...", check_j_function),
      entry("triality", Basis::Computed,
            "The four fixed-point components have nonnegative integral characters summing to J.", check_triality),
      entry("heisenberg-bracket", Basis::Elementary,
            "[e_i(m), e_j(n)] = m delta_ij delta_(m+n,0) on the Fock space.", check_heisenberg_bracket),
      entry("locality", Basis::Published,
            "A generator field is local with itself of order 2.", check_locality),
      entry("residue-unit-laws", Basis::Published,
            "The identity field is a unit for the residue products.", check_unit_laws),
      entry("borcherds-identity", Basis::Published,
            "The Borcherds identity holds for residue products of Heisenberg fields.", check_borcherds_identity),
      entry("virasoro", Basis::Published,
            "The Virasoro modes satisfy the bracket with central charge equal to the rank.", check_virasoro),
      entry("graded-dimensions", Basis::Published,
            "The graded dimensions of the rank-24 Fock space are the coefficients of prod (1 - q^k)^-24.",
            check_graded_dimensions),
      entry("cocycle", Basis::Published,
            "The upper-triangular cocycle satisfies eps(a,b) eps(b,a) = (-1)^(a,b).", check_cocycle),
      entry("octahedral", Basis::Published,
            "The binary octahedral group has order 48 and maps onto S4.", check_octahedral),
      entry("scalar-action", Basis::Published,
            "-1 acts trivially on N(A1^24) and the kernel of the i-action is Lambda0, of index 2.",
            check_scalar_action),
      entry("torus-golay", Basis::Published,
            "The subgroup of the torus acting trivially is a copy of the Golay code.", check_torus_golay),
      entry("replicability", Basis::Published,
            "J is completely replicable: its Hecke sums equal its Faber polynomials.", check_replicability),
      entry("replicability-fault", Basis::Elementary,
            "Corrupting T_(g^2) by +q breaks replicability first at k = 2, exponent 2.",
            check_replicability_fault),
      entry("order2-family", Basis::Computed,
            "The order-2 eta-quotient family is replicable only with the constant shift +24.", check_order2_family),
      entry("arithmetic-facts", Basis::Published,
            "196883 = 47 * 59 * 71 = 299 + 98280 + 24 * 2^12.", check_arithmetic_facts),
      entry("order-bound", Basis::Published,
            "The order bound involves only supersingular primes, with 2^46 3^20 5^9 7^6 13^3.", check_order_bound),
  };
  return checks;
}

std::vector<CheckReport> run(const std::vector<std::string>& selection, const CheckConfig& cfg) {
  validate(cfg);
  const auto& cat = catalogue();
  std::vector<bool> chosen(cat.size(), false);
  for (const auto& name : selection) {
    if (name == "all") {
      std::fill(chosen.begin(), chosen.end(), true);
      continue;
    }
    auto it = std::find_if(cat.begin(), cat.end(), [&](const CheckInfo& c) { return c.name == name; });
    if (it == cat.end()) throw UnknownCheck("unknown check '" + name + "'");
    chosen[static_cast<std::size_t>(it - cat.begin())] = true;
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (chosen[i]) order.push_back(i);
  }
  std::vector<CheckReport> out(order.size());
  auto run_one = [&](std::size_t slot) {
    const CheckInfo& info = cat[order[slot]];
    const auto start = std::chrono::steady_clock::now();
    CheckReport r;
    try {
      r = info.run(cfg);
    } catch (const lattice::BudgetExceeded& e) {
      r = make_report(info);
      r.status = Status::Skip;
      r.note = e.what();
    } catch (const std::exception& e) {
      r = make_report(info);
      r.status = Status::Fail;
      r.actual = std::string("error: ") + e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out[slot] = std::move(r);
  };
  const unsigned jobs = std::min<unsigned>(cfg.jobs, static_cast<unsigned>(order.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < order.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < order.size(); i = next++) run_one(i);
      });
    }
    for (auto& w : workers) w.join();
  }
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Status::Fail; });
}

std::string to_json(const std::vector<CheckReport>& reports, const CheckConfig& cfg, bool include_runtime) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["config"] = {{"prec", cfg.prec},     {"nmax", cfg.nmax},     {"kmax", cfg.kmax},
                   {"rank", cfg.rank},     {"degree", cfg.degree}, {"window", cfg.window},
                   {"trials", cfg.trials}, {"seed", cfg.seed},     {"budget_override", cfg.budget_override}};
  ordered_json rows = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json row;
    row["check"] = r.name;
    row["status"] = to_string(r.status);
    row["expected"] = r.expected;
    row["actual"] = r.actual;
    row["basis"] = to_string(r.basis);
    row["claim"] = r.claim;
    if (!r.note.empty()) row["note"] = r.note;
    if (!r.details.empty()) {
      ordered_json details = ordered_json::array();
      for (const auto& d : r.details) {
        details.push_back({{"label", d.label}, {"status", d.pass ? "pass" : "fail"}, {"text", d.text}});
      }
      row["details"] = std::move(details);
    }
    if (!r.verdicts.empty()) {
      ordered_json verdicts = ordered_json::array();
      for (const auto& v : r.verdicts) {
        ordered_json item{{"check", r.name}, {"k", v.k}, {"status", v.pass ? "pass" : "fail"}};
        if (v.first_discrepancy) {
          item["first_discrepancy"] = {{"exponent", to_string(v.first_discrepancy->exponent)},
                                       {"expected", to_string(v.first_discrepancy->expected)},
                                       {"actual", to_string(v.first_discrepancy->actual)}};
        } else {
          item["first_discrepancy"] = nullptr;
        }
        verdicts.push_back(std::move(item));
      }
      row["verdicts"] = std::move(verdicts);
    }
    if (include_runtime) row["runtime_ms"] = std::llround(r.runtime_ms * 1000) / 1000.0;
    rows.push_back(std::move(row));
  }
  doc["reports"] = std::move(rows);
  doc["passed"] = all_passed(reports);
  return doc.dump(2) + "\n";
}

std::vector<std::string> series_names() {
  return {"j", "leech-character", "involution-trace", "twisted-character", "delta", "e4"};
}

qseries::FracQSeries named_series(std::string_view expr_in, std::int64_t prec) {
  const std::string expr = trim(expr_in);
  if (expr == "j") return moonshine::assemble_j(prec);
  if (expr == "leech-character") return moonshine::leech_character(prec);
  if (expr == "involution-trace") return moonshine::involution_trace(prec);
  if (expr == "twisted-character") return moonshine::twisted_character(prec);
  if (expr == "delta") return qseries::discriminant_delta(prec);
  if (expr == "e4") return qseries::eisenstein_e4(prec);
  if (expr.rfind("eta:", 0) == 0) {
    std::vector<qseries::EtaFactor> spec;
    std::stringstream list(expr.substr(4));
    std::string item;
    while (std::getline(list, item, ',')) {
      const auto caret = item.find('^');
      if (caret == std::string::npos) throw std::invalid_argument("eta factor '" + item + "' is not of the form m^r");
      spec.push_back({parse_rational(trim(item.substr(0, caret))),
                      parse_int("eta exponent", item.substr(caret + 1))});
    }
    if (spec.empty()) throw std::invalid_argument("empty eta quotient");
    return qseries::eta_quotient(spec, prec);
  }
  throw std::invalid_argument("unknown series '" + expr + "'");
}

std::vector<std::string> lattice_names() { return {"niemeier", "leech", "lambda0", "e8", "a1", "z<n>"}; }

lattice::ScaledLattice named_lattice(std::string_view name_in) {
  const std::string name = trim(name_in);
  if (name == "niemeier") return lattice::niemeier_a1_24(codes::golay_code());
  if (name == "leech") return lattice::leech_lattice(codes::golay_code());
  if (name == "lambda0") return lattice::lambda0(codes::golay_code());
  if (name == "e8") return lattice::e8_lattice();
  if (name == "a1") return lattice::a1_lattice();
  if (name.size() > 1 && name[0] == 'z' &&
      std::all_of(name.begin() + 1, name.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    const std::int64_t n = parse_int("lattice rank", name.substr(1));
    if (n < 1 || n > 64) throw std::invalid_argument("integer lattice rank must lie in [1, 64]");
    return lattice::integer_lattice(static_cast<int>(n));
  }
  std::ifstream in(name);
  if (!in) throw std::invalid_argument("unknown lattice '" + name + "' (not a name or readable file)");
  std::stringstream buf;
  buf << in.rdbuf();
  return lattice::parse_lattice(buf.str());
}

}  // namespace vnat::checks
