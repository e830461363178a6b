#include <algorithm>
#include <array>
#include <string>

#include "umbral/error.hpp"
#include "umbral/identities.hpp"

namespace umbral {

namespace {

Rational nat(unsigned long v) { return Rational(v); }

unsigned param_nat(const Params& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw Error("missing parameter '" + key + "'");
  const Rational& q = it->second;
  if (q.get_den() != 1 || q < 0 || !q.get_num().fits_uint_p()) {
    throw Error("parameter '" + key + "' must be a natural number");
  }
  return static_cast<unsigned>(q.get_num().get_ui());
}

Rational param(const Params& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw Error("missing parameter '" + key + "'");
  return it->second;
}

std::vector<Rational> ys_of(const GridSpec& spec) {
  if (!spec.ys.empty()) return spec.ys;
  return {Rational(1), Rational(2), Rational(1, 2), make_rational(-1, 3)};
}

std::vector<Rational> alphas_of(const GridSpec& spec) {
  if (!spec.alphas.empty()) return spec.alphas;
  return {Rational(2), Rational(-1), Rational(1, 3), Rational(5, 2)};
}

std::vector<Params> grid_n(const GridSpec& spec) {
  std::vector<Params> out;
  for (unsigned n = 0; n <= spec.n_max; ++n) out.push_back({{"n", nat(n)}});
  return out;
}

std::vector<Params> grid_nr(const GridSpec& spec) {
  std::vector<Params> out;
  for (unsigned n = 0; n <= spec.n_max; ++n) {
    for (unsigned r = 1; r <= spec.r_max; ++r) out.push_back({{"n", nat(n)}, {"r", nat(r)}});
  }
  return out;
}

std::vector<Params> grid_nrs(const GridSpec& spec) {
  std::vector<Params> out;
  for (unsigned n = 0; n <= spec.n_max; ++n) {
    for (unsigned r = 1; r <= spec.r_max; ++r) {
      for (unsigned s = 0; s <= spec.s_max; ++s) out.push_back({{"n", nat(n)}, {"r", nat(r)}, {"s", nat(s)}});
    }
  }
  return out;
}

std::vector<Params> grid_ny(const GridSpec& spec) {
  std::vector<Params> out;
  for (unsigned n = 0; n <= spec.n_max; ++n) {
    for (const auto& y : ys_of(spec)) out.push_back({{"n", nat(n)}, {"y", y}});
  }
  return out;
}

std::vector<Params> grid_nry(const GridSpec& spec) {
  std::vector<Params> out;
  for (unsigned n = 0; n <= spec.n_max; ++n) {
    for (unsigned r = 1; r <= spec.r_max; ++r) {
      for (const auto& y : ys_of(spec)) out.push_back({{"n", nat(n)}, {"r", nat(r)}, {"y", y}});
    }
  }
  return out;
}

std::vector<Params> grid_alpha(const GridSpec& spec) {
  std::vector<Params> out;
  for (unsigned n = 0; n <= spec.n_max; ++n) {
    for (const auto& a : alphas_of(spec)) out.push_back({{"alpha", a}, {"n", nat(n)}});
  }
  return out;
}

std::vector<Params> grid_kmax(const GridSpec& spec) { return {{{"k_max", nat(std::max(spec.n_max, 1U))}}}; }

std::vector<Params> grid_biorth(const GridSpec& spec) {
  std::vector<Params> out;
  for (unsigned r = 1; r <= spec.r_max; ++r) out.push_back({{"n_max", nat(spec.n_max)}, {"r", nat(r)}});
  return out;
}

constexpr std::array kRegistry = {
    IdentityEntry{"appell-identity", grid_nry,
                  [](const Params& p, const CheckOptions& o) {
                    return appell_identity_check(param_nat(p, "n"), param_nat(p, "r"), param(p, "y"), o);
                  }},
    IdentityEntry{"biorth", grid_biorth,
                  [](const Params& p, const CheckOptions& o) {
                    return biorthogonality_check(param_nat(p, "n_max"), param_nat(p, "r"), o);
                  }},
    IdentityEntry{"cor5", grid_n,
                  [](const Params& p, const CheckOptions& o) { return corollary5_check(param_nat(p, "n"), o); }},
    IdentityEntry{"cor7", grid_nr,
                  [](const Params& p, const CheckOptions& o) {
                    return corollary7_check(param_nat(p, "n"), param_nat(p, "r"), o);
                  }},
    IdentityEntry{"eq2", grid_n,
                  [](const Params& p, const CheckOptions& o) { return eq2_check(param_nat(p, "n"), o); }},
    IdentityEntry{"eq27", grid_n,
                  [](const Params& p, const CheckOptions& o) { return remark27_check(param_nat(p, "n"), o); }},
    IdentityEntry{"eq29", grid_kmax,
                  [](const Params& p, const CheckOptions& o) {
                    return eq29_recurrence_check(param_nat(p, "k_max"), o);
                  }},
    IdentityEntry{"eq3", grid_n,
                  [](const Params& p, const CheckOptions& o) { return eq3_check(param_nat(p, "n"), o); }},
    IdentityEntry{"eq40", grid_n,
                  [](const Params& p, const CheckOptions& o) { return eq40_check(param_nat(p, "n"), o); }},
    IdentityEntry{"eq54", grid_nr,
                  [](const Params& p, const CheckOptions& o) {
                    return eq54_check(param_nat(p, "n"), param_nat(p, "r"), o);
                  }},
    IdentityEntry{"eq61", grid_nr,
                  [](const Params& p, const CheckOptions& o) {
                    return eq61_check(param_nat(p, "n"), param_nat(p, "r"), o);
                  }},
    IdentityEntry{"eq63", grid_nrs,
                  [](const Params& p, const CheckOptions& o) {
                    return eq63_check(param_nat(p, "n"), param_nat(p, "s"), param_nat(p, "r"), o);
                  }},
    IdentityEntry{"lemma2", grid_ny,
                  [](const Params& p, const CheckOptions& o) {
                    return lemma2_check(param_nat(p, "n"), param(p, "y"), o);
                  }},
    IdentityEntry{"lowering", grid_nr,
                  [](const Params& p, const CheckOptions& o) {
                    return lowering_euler_check(param_nat(p, "n"), param_nat(p, "r"), o);
                  }},
    IdentityEntry{"prop3", grid_ny,
                  [](const Params& p, const CheckOptions& o) {
                    return prop3_check(param_nat(p, "n"), param(p, "y"), o);
                  }},
    IdentityEntry{"scaling", grid_alpha,
                  [](const Params& p, const CheckOptions& o) {
                    return scaling_check(param_nat(p, "n"), param(p, "alpha"), o);
                  }},
    IdentityEntry{"thm4", grid_n,
                  [](const Params& p, const CheckOptions& o) {
                    return theorem4_check(probe_polynomial(param_nat(p, "n")), o);
                  }},
    IdentityEntry{"thm6", grid_nr,
                  [](const Params& p, const CheckOptions& o) {
                    return theorem6_check(param_nat(p, "n"), param_nat(p, "r"), o);
                  }},
    IdentityEntry{"thm8", grid_nr,
                  [](const Params& p, const CheckOptions& o) {
                    return theorem8_check(probe_polynomial(param_nat(p, "n")), param_nat(p, "r"), o);
                  }},
};

}  // namespace

std::span<const IdentityEntry> identity_registry() { return kRegistry; }

const IdentityEntry& find_identity(std::string_view id) {
  const auto it = std::find_if(kRegistry.begin(), kRegistry.end(), [&](const auto& e) { return e.id == id; });
  if (it == kRegistry.end()) throw Error("unknown identity '" + std::string(id) + "'");
  return *it;
}

}  // namespace umbral
