// Copyright 2026 The pandc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "pandc/bots.h"
#include "pandc/error.h"
#include "pandc/instance_gen.h"
#include "pandc/json_io.h"
#include "pandc/mechanism.h"
#include "pandc/model.h"
#include "pandc/oracle.h"
#include "pandc/rational.h"
#include "pandc/solver.h"
#include "pandc/transform.h"

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction. Integers and "n/d" or
// decimal strings are accepted on input; floats are refused.
namespace pybind11::detail {

template <>
struct type_caster<pandc::Rational> {
  PYBIND11_TYPE_CASTER(pandc::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr())) return false;
    std::string text;
    if (PyLong_Check(src.ptr()) && !PyBool_Check(src.ptr())) {
      text = py::str(src);
    } else if (py::isinstance<py::str>(src)) {
      text = src.cast<std::string>();
    } else if (py::isinstance(src, py::module_::import("fractions").attr("Fraction"))) {
      text = std::string(py::str(src.attr("numerator"))) + "/" +
             std::string(py::str(src.attr("denominator")));
    } else {
      return false;
    }
    value = pandc::Rational::parse(text);
    return true;
  }

  static handle cast(const pandc::Rational& r, return_value_policy, handle) {
    py::int_ num(py::str(r.numerator().get_str()));
    py::int_ den(py::str(r.denominator().get_str()));
    return py::module_::import("fractions").attr("Fraction")(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using pandc::Json;
using pandc::Rational;

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json from_python(const py::handle& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

pandc::MechanismConfig make_config(const std::string& variant, int players,
                                   const Rational& alpha, std::optional<Rational> epsilon,
                                   std::optional<pandc::MonotoneTransform> zeta,
                                   std::optional<pandc::MonotoneTransform> eta,
                                   std::uint64_t seed) {
  pandc::MechanismConfig c;
  c.variant = pandc::parse_variant(variant);
  c.num_players = players;
  c.alpha = alpha;
  c.epsilon = std::move(epsilon);
  if (zeta) c.zeta = *zeta;
  if (eta) c.eta = *eta;
  c.rng_seed = seed;
  c.validate();
  return c;
}

pandc::oracle::GridSpec make_grid(const Rational& step, const Rational& radius,
                                  std::uint64_t budget) {
  pandc::oracle::GridSpec g;
  g.step = step;
  g.radius = radius;
  g.budget = budget;
  g.validate();
  return g;
}

pandc::PriceVector pc2_prices_or(const pandc::UtilityProfile& u,
                                 const std::optional<std::vector<Rational>>& prices) {
  if (prices) return pandc::PriceVector(*prices);
  return pandc::solve_pc2(u).star_prices.front();
}

pandc::SessionState with_move(const pandc::SessionState& s, int player, pandc::MovePayload p) {
  return pandc::apply_move(s, pandc::Move{player, std::move(p)});
}

}  // namespace

PYBIND11_MODULE(_pandc, m) {
  m.doc() = "Exact Price & Choose mechanisms, solvers and oracles.";

  static py::exception<pandc::Error> pandc_error(m, "PandcError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const pandc::Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(pandc_error.ptr())(e.what());
      err.attr("code") = std::string(pandc::error_code_name(e.code()));
      PyErr_SetObject(pandc_error.ptr(), err.ptr());
    } catch (const Json::exception& e) {
      py::object err = py::reinterpret_borrow<py::object>(pandc_error.ptr())(e.what());
      err.attr("code") = "parse_error";
      PyErr_SetObject(pandc_error.ptr(), err.ptr());
    }
  });

  py::class_<pandc::UtilityProfile>(m, "UtilityProfile")
      .def(py::init([](std::vector<std::vector<Rational>> values,
                       std::optional<std::vector<std::string>> options,
                       std::optional<std::vector<std::string>> players) {
             if (!options && !players) return pandc::UtilityProfile::from_values(std::move(values));
             auto base = pandc::UtilityProfile::from_values(values);
             return pandc::UtilityProfile(options.value_or(base.options()),
                                          players.value_or(base.players()), std::move(values));
           }),
           py::arg("values"), py::arg("options") = py::none(), py::arg("players") = py::none())
      .def_property_readonly("num_players", &pandc::UtilityProfile::num_players)
      .def_property_readonly("num_options", &pandc::UtilityProfile::num_options)
      .def_property_readonly("values", &pandc::UtilityProfile::values)
      .def_property_readonly("options", &pandc::UtilityProfile::options)
      .def_property_readonly("players", &pandc::UtilityProfile::players)
      .def("value", &pandc::UtilityProfile::value, py::arg("player"), py::arg("option"))
      .def("with_row", &pandc::UtilityProfile::with_row, py::arg("player"), py::arg("row"))
      .def("to_dict", [](const pandc::UtilityProfile& u) { return to_python(pandc::to_json(u)); })
      .def_static("from_dict", [](const py::dict& d) { return pandc::profile_from_json(from_python(d)); })
      .def_static("load", &pandc::load_profile, py::arg("path"))
      .def("save", [](const pandc::UtilityProfile& u, const std::string& path) {
        pandc::save_profile(u, path);
      }, py::arg("path"))
      .def("__eq__", [](const pandc::UtilityProfile& a, const pandc::UtilityProfile& b) { return a == b; })
      .def("__repr__", [](const pandc::UtilityProfile& u) {
        return "UtilityProfile(" + pandc::to_json(u).dump() + ")";
      });

  m.def("welfare_stats", [](const pandc::UtilityProfile& u) {
    const auto s = pandc::compute_welfare_stats(u);
    py::dict d;
    d["avg"] = s.avg;
    d["welfare"] = s.welfare;
    d["max_welfare"] = s.max_welfare;
    d["efficient_set"] = s.efficient_set;
    d["pareto_set"] = s.pareto_set;
    return d;
  }, py::arg("profile"));

  py::class_<pandc::PriceVector>(m, "PriceVector")
      .def(py::init<std::vector<Rational>, Rational>(), py::arg("prices"),
           py::arg("target_sum") = Rational(0))
      .def_property_readonly("prices", &pandc::PriceVector::prices)
      .def_property_readonly("target_sum", &pandc::PriceVector::target_sum)
      .def("__len__", &pandc::PriceVector::size)
      .def("__eq__", [](const pandc::PriceVector& a, const pandc::PriceVector& b) { return a == b; })
      .def("__repr__", [](const pandc::PriceVector& p) {
        return "PriceVector(" + pandc::to_json(p).dump() + ")";
      });

  py::class_<pandc::Allocation>(m, "Allocation")
      .def_readonly("option", &pandc::Allocation::option)
      .def_readonly("transfers", &pandc::Allocation::transfers)
      .def("__repr__", [](const pandc::Allocation& x) {
        return "Allocation(" + pandc::to_json(x).dump() + ")";
      });

  py::class_<pandc::MonotoneTransform>(m, "MonotoneTransform")
      .def(py::init<std::vector<Rational>, std::vector<Rational>>(), py::arg("breakpoints"),
           py::arg("values"))
      .def_static("identity", &pandc::MonotoneTransform::identity)
      .def_static("affine", &pandc::MonotoneTransform::affine, py::arg("slope"),
                  py::arg("intercept"))
      .def("__call__", &pandc::MonotoneTransform::apply, py::arg("x"))
      .def("inverse", &pandc::MonotoneTransform::inverse)
      .def_property_readonly("breakpoints", &pandc::MonotoneTransform::breakpoints)
      .def_property_readonly("values", &pandc::MonotoneTransform::values);

  py::class_<pandc::EquilibriumReport>(m, "EquilibriumReport")
      .def_property_readonly("variant", [](const pandc::EquilibriumReport& r) {
        return std::string(pandc::variant_name(r.variant));
      })
      .def_readonly("star_prices", &pandc::EquilibriumReport::star_prices)
      .def_readonly("predicted_outcomes", &pandc::EquilibriumReport::predicted_outcomes)
      .def_readonly("predicted_payoffs", &pandc::EquilibriumReport::predicted_payoffs)
      .def_readonly("alpha_star", &pandc::EquilibriumReport::alpha_star)
      .def_readonly("b_star", &pandc::EquilibriumReport::b_star)
      .def_readonly("surplus", &pandc::EquilibriumReport::surplus)
      .def_readonly("epsilon", &pandc::EquilibriumReport::epsilon)
      .def_readonly("epsilon_bound", &pandc::EquilibriumReport::epsilon_bound)
      .def_readonly("chooser_floor_tight", &pandc::EquilibriumReport::chooser_floor_tight)
      .def_readonly("chooser_floor_loose", &pandc::EquilibriumReport::chooser_floor_loose)
      .def_readonly("robust_singleton", &pandc::EquilibriumReport::robust_singleton)
      .def_readonly("normalized_prices", &pandc::EquilibriumReport::normalized_prices)
      .def_readonly("chooser_level", &pandc::EquilibriumReport::chooser_level)
      .def_readonly("outcomes_in_pareto_set", &pandc::EquilibriumReport::outcomes_in_pareto_set)
      .def_readonly("role_indifferent", &pandc::EquilibriumReport::role_indifferent)
      .def_readonly("notes", &pandc::EquilibriumReport::notes)
      .def("to_dict", [](const pandc::EquilibriumReport& r) { return to_python(pandc::to_json(r)); });

  m.def("solve",
        [](const pandc::UtilityProfile& u, const std::string& variant, const Rational& alpha,
           std::optional<Rational> epsilon, std::optional<pandc::MonotoneTransform> zeta,
           std::optional<pandc::MonotoneTransform> eta) {
          return pandc::solve(
              make_config(variant, u.num_players(), alpha, std::move(epsilon), std::move(zeta),
                          std::move(eta), 0),
              u);
        },
        py::arg("profile"), py::arg("variant") = "pc2", py::arg("alpha") = Rational(0),
        py::arg("epsilon") = py::none(), py::arg("zeta") = py::none(),
        py::arg("eta") = py::none());
  m.def("robust_epsilon_bound", &pandc::robust_epsilon_bound, py::arg("profile"));
  m.def("epsilon_maximizers",
        [](const pandc::UtilityProfile& u, const std::vector<Rational>& prices,
           const Rational& epsilon) {
          return pandc::epsilon_maximizers(u, pandc::PriceVector(prices), epsilon);
        },
        py::arg("profile"), py::arg("prices"), py::arg("epsilon"));

  py::class_<pandc::oracle::VerificationReport>(m, "VerificationReport")
      .def_property_readonly("claim", [](const pandc::oracle::VerificationReport& r) {
        return std::string(pandc::oracle::claim_name(r.claim));
      })
      .def_readonly("passed", &pandc::oracle::VerificationReport::pass)
      .def_readonly("slack", &pandc::oracle::VerificationReport::slack)
      .def_readonly("points_checked", &pandc::oracle::VerificationReport::points_checked)
      .def_readonly("outcome", &pandc::oracle::VerificationReport::outcome)
      .def_readonly("path_prices", &pandc::oracle::VerificationReport::path_prices)
      .def_readonly("payoffs", &pandc::oracle::VerificationReport::payoffs)
      .def_readonly("min_chooser_payoff", &pandc::oracle::VerificationReport::min_chooser_payoff)
      .def_readonly("notes", &pandc::oracle::VerificationReport::notes)
      .def_property_readonly("witness", [](const pandc::oracle::VerificationReport& r) -> py::object {
        if (!r.witness) return py::none();
        py::dict w;
        w["prices"] = r.witness->prices;
        w["option"] = r.witness->option;
        w["allocations"] = r.witness->allocations;
        w["description"] = r.witness->description;
        return std::move(w);
      })
      .def("to_dict", [](const pandc::oracle::VerificationReport& r) {
        return to_python(pandc::to_json(r));
      });

  m.def("verify_chooser_indifference",
        [](const pandc::UtilityProfile& u, std::optional<std::vector<Rational>> prices) {
          return pandc::oracle::verify_chooser_indifference(u, pc2_prices_or(u, prices));
        },
        py::arg("profile"), py::arg("prices") = py::none());
  m.def("verify_proposer_optimality",
        [](const pandc::UtilityProfile& u, std::optional<std::vector<Rational>> prices,
           std::optional<Rational> epsilon, const Rational& step, const Rational& radius,
           std::uint64_t budget) {
          const auto policy = epsilon ? pandc::oracle::ChooserPolicy::adversarial(*epsilon)
                                      : pandc::oracle::ChooserPolicy::cooperative();
          return pandc::oracle::verify_proposer_optimality(u, pc2_prices_or(u, prices),
                                                           make_grid(step, radius, budget), policy);
        },
        py::arg("profile"), py::arg("prices") = py::none(), py::arg("epsilon") = py::none(),
        py::arg("step") = Rational(1, 8), py::arg("radius") = Rational(2),
        py::arg("budget") = 20'000'000);
  m.def("verify_robust_equilibrium",
        [](const pandc::UtilityProfile& u, const Rational& epsilon,
           std::optional<std::vector<Rational>> prices, const Rational& step,
           const Rational& radius, std::uint64_t budget) {
          const auto q = prices ? pandc::PriceVector(*prices) : pandc::robust_prices(u, epsilon);
          return pandc::oracle::verify_robust_equilibrium(u, q, epsilon,
                                                          make_grid(step, radius, budget));
        },
        py::arg("profile"), py::arg("epsilon"), py::arg("prices") = py::none(),
        py::arg("step") = Rational(1, 8), py::arg("radius") = Rational(2),
        py::arg("budget") = 20'000'000);
  m.def("backward_induction",
        [](const pandc::UtilityProfile& u, const Rational& step, const Rational& radius,
           std::uint64_t budget) {
          return pandc::oracle::backward_induction_pc_n(u, make_grid(step, radius, budget));
        },
        py::arg("profile"), py::arg("step") = Rational(1, 4), py::arg("radius") = Rational(1),
        py::arg("budget") = 20'000'000);
  m.def("check_maskin_monotonicity",
        [](const pandc::UtilityProfile& u, const pandc::UtilityProfile& u_prime,
           const Rational& step, const Rational& radius) {
          pandc::oracle::MonotonicityOptions opts;
          opts.step = step;
          opts.radius = radius;
          return pandc::oracle::check_maskin_monotonicity(pandc::oracle::pc2_allocation_rule, u,
                                                          u_prime, opts);
        },
        py::arg("profile"), py::arg("profile_prime"), py::arg("step") = Rational(1, 4),
        py::arg("radius") = Rational(4));

  m.def("generate_profile",
        [](int players, int options, std::uint64_t seed, const Rational& lo, const Rational& hi,
           int max_den, bool unique_efficient) {
          pandc::GenOptions o;
          o.players = players;
          o.options = options;
          o.seed = seed;
          o.lo = lo;
          o.hi = hi;
          o.max_den = max_den;
          o.unique_efficient = unique_efficient;
          return pandc::generate_profile(o);
        },
        py::arg("players") = 2, py::arg("options") = 3, py::arg("seed") = 0,
        py::arg("lo") = Rational(-5), py::arg("hi") = Rational(5), py::arg("max_den") = 8,
        py::arg("unique_efficient") = false);

  py::class_<pandc::SessionState>(m, "Session")
      .def(py::init([](const pandc::UtilityProfile& u, const std::string& variant,
                       const Rational& alpha, std::optional<Rational> epsilon,
                       std::optional<pandc::MonotoneTransform> zeta,
                       std::optional<pandc::MonotoneTransform> eta, std::uint64_t seed) {
             return pandc::new_session(make_config(variant, u.num_players(), alpha,
                                                   std::move(epsilon), std::move(zeta),
                                                   std::move(eta), seed),
                                       u);
           }),
           py::arg("profile"), py::arg("variant") = "pc2", py::arg("alpha") = Rational(0),
           py::arg("epsilon") = py::none(), py::arg("zeta") = py::none(),
           py::arg("eta") = py::none(), py::arg("seed") = 0)
      .def_property_readonly("profile", &pandc::SessionState::profile)
      .def_property_readonly("variant", [](const pandc::SessionState& s) {
        return std::string(pandc::variant_name(s.config().variant));
      })
      .def_property_readonly("stage", [](const pandc::SessionState& s) {
        return py::make_tuple(std::string(pandc::stage_kind_name(s.stage().kind)),
                              s.stage().player >= 0 ? py::object(py::int_(s.stage().player))
                                                    : py::object(py::none()));
      })
      .def_property_readonly("settled", &pandc::SessionState::settled)
      .def_property_readonly("order", &pandc::SessionState::order)
      .def_property_readonly("price_target", &pandc::SessionState::price_target)
      .def_property_readonly("posted_prices", &pandc::SessionState::posted_prices)
      .def_property_readonly("result", &pandc::SessionState::result)
      .def_property_readonly("move_log", [](const pandc::SessionState& s) {
        py::list out;
        for (const auto& mv : s.move_log()) out.append(to_python(pandc::to_json(mv)));
        return out;
      })
      .def("payoffs", &pandc::payoffs)
      .def("apply", [](const pandc::SessionState& s, const py::dict& move) {
        return pandc::apply_move(s, pandc::move_from_json(from_python(move)));
      }, py::arg("move"))
      .def("bid", [](const pandc::SessionState& s, int player, const Rational& amount) {
        return with_move(s, player, pandc::BidMove{amount});
      }, py::arg("player"), py::arg("amount"))
      .def("propose_alpha", [](const pandc::SessionState& s, int player, const Rational& alpha) {
        return with_move(s, player, pandc::AlphaMove{alpha});
      }, py::arg("player"), py::arg("alpha"))
      .def("pick_role", [](const pandc::SessionState& s, int player, const std::string& role) {
        if (role != "proposer" && role != "chooser") {
          pandc::fail(pandc::ErrorCode::kParseError, "role must be \"proposer\" or \"chooser\"");
        }
        return with_move(s, player,
                         pandc::RoleMove{role == "proposer" ? pandc::Role::kProposer
                                                            : pandc::Role::kChooser});
      }, py::arg("player"), py::arg("role"))
      .def("post", [](const pandc::SessionState& s, int player, std::vector<Rational> prices) {
        return with_move(s, player, pandc::PriceMove{std::move(prices)});
      }, py::arg("player"), py::arg("prices"))
      .def("choose", [](const pandc::SessionState& s, int player, int option) {
        return with_move(s, player, pandc::ChoiceMove{option});
      }, py::arg("player"), py::arg("option"))
      .def("bot_move", [](const pandc::SessionState& s, const std::string& policy, int seat) {
        return to_python(pandc::to_json(pandc::bot_move(pandc::parse_bot_policy(policy), s, seat)));
      }, py::arg("policy"), py::arg("seat"))
      .def("play_out", [](const pandc::SessionState& s, const std::vector<std::string>& seats) {
        std::vector<pandc::BotPolicy> policies;
        for (const auto& p : seats) policies.push_back(pandc::parse_bot_policy(p));
        return pandc::play_out(s, policies);
      }, py::arg("seats"))
      .def("replay", [](const pandc::SessionState& s) {
        return pandc::replay(s.config(), s.profile(), s.move_log());
      })
      .def("to_dict", [](const pandc::SessionState& s) { return to_python(pandc::to_json(s)); })
      .def("__eq__", [](const pandc::SessionState& a, const pandc::SessionState& b) { return a == b; });
}
