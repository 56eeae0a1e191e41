#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lotterycpt/analysis.hpp"
#include "lotterycpt/commands.hpp"
#include "lotterycpt/cpt.hpp"
#include "lotterycpt/errors.hpp"
#include "lotterycpt/mechanisms.hpp"

namespace py = pybind11;
using namespace lotterycpt;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lottery prize mechanisms under prospect theory";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<GameTerminated>(m, "GameTerminated", PyExc_RuntimeError);
    py::register_exception<UnsupportedMechanism>(m, "UnsupportedMechanism", PyExc_ValueError);

    py::class_<ValueFunction>(m, "ValueFunction")
        .def(py::init([](double alpha, double lambda_) { return ValueFunction{alpha, lambda_}; }),
             py::arg("alpha") = 0.88, py::arg("lambda_") = 2.25)
        .def_readwrite("alpha", &ValueFunction::alpha)
        .def_readwrite("lambda_", &ValueFunction::lambda)
        .def("__repr__", [](const ValueFunction& v) {
            return "ValueFunction(alpha=" + std::to_string(v.alpha) +
                   ", lambda_=" + std::to_string(v.lambda) + ")";
        });

    py::enum_<WeightingKind>(m, "WeightingKind")
        .value("TverskyKahneman", WeightingKind::TverskyKahneman)
        .value("Prelec", WeightingKind::Prelec)
        .value("Identity", WeightingKind::Identity);

    py::class_<WeightingFunction>(m, "WeightingFunction")
        .def_static("tversky_kahneman", &WeightingFunction::tversky_kahneman, py::arg("delta") = 0.65)
        .def_static("prelec", &WeightingFunction::prelec, py::arg("alpha") = 0.65,
                    py::arg("beta") = 1.0)
        .def_static("identity", &WeightingFunction::identity)
        .def_readonly("kind", &WeightingFunction::kind)
        .def_readonly("delta", &WeightingFunction::delta)
        .def_readonly("prelec_alpha", &WeightingFunction::prelec_alpha)
        .def_readonly("prelec_beta", &WeightingFunction::prelec_beta);

    py::enum_<MechanismKind>(m, "MechanismKind")
        .value("WinnerTakeAll", MechanismKind::WinnerTakeAll)
        .value("TopKLinear", MechanismKind::TopKLinear)
        .value("TopKExponential", MechanismKind::TopKExponential)
        .value("ThreeBands", MechanismKind::ThreeBands);

    py::class_<Mechanism>(m, "Mechanism")
        .def_static("winner_take_all", &Mechanism::winner_take_all)
        .def_static("top_k_linear", &Mechanism::top_k_linear, py::arg("k"))
        .def_static("top_k_exponential", &Mechanism::top_k_exponential, py::arg("k"))
        .def_static("three_bands", &Mechanism::three_bands)
        .def_readonly("kind", &Mechanism::kind)
        .def_readonly("k", &Mechanism::k)
        .def_property_readonly("name", [](const Mechanism& mech) { return std::string(to_string(mech.kind)); });

    py::class_<GameConfig>(m, "GameConfig")
        .def(py::init([](int n, double fee, double rake) { return GameConfig{n, fee, rake}; }),
             py::arg("n_participants"), py::arg("entry_fee") = 1.0, py::arg("rake") = 0.1)
        .def_readwrite("n_participants", &GameConfig::n_participants)
        .def_readwrite("entry_fee", &GameConfig::entry_fee)
        .def_readwrite("rake", &GameConfig::rake);

    m.def("value", &value, py::arg("spec"), py::arg("x"));
    m.def("weight", &weight, py::arg("spec"), py::arg("p"));

    // Prospect sets cross the boundary as lists of (profit, probability) tuples.
    auto to_set = [](const std::vector<std::pair<double, double>>& outcomes) {
        std::vector<Prospect> prospects;
        for (auto [x, p] : outcomes) prospects.push_back({x, p});
        return ProspectSet(std::move(prospects));
    };
    m.def("cpt_utility",
          [to_set](const std::vector<std::pair<double, double>>& outcomes, const ValueFunction& v,
                   const WeightingFunction& w) { return cpt_utility(to_set(outcomes), v, w); },
          py::arg("prospects"), py::arg("value_fn"), py::arg("weight_fn"));
    m.def("eut_utility",
          [to_set](const std::vector<std::pair<double, double>>& outcomes) {
              return eut_utility(to_set(outcomes));
          },
          py::arg("prospects"));

    m.def("prize_pool", &prize_pool, py::arg("config"));
    m.def("winners_count", &winners_count, py::arg("config"), py::arg("k"));
    m.def("build_schedule",
          [](const Mechanism& mech, const GameConfig& c) { return build_schedule(mech, c).prizes; },
          py::arg("mechanism"), py::arg("config"));
    m.def("to_prospects",
          [](const std::vector<double>& prizes, const GameConfig& c) {
              std::vector<std::pair<double, double>> out;
              for (const auto& o : to_prospects(PrizeSchedule{prizes}, c).outcomes()) {
                  out.emplace_back(o.profit, o.probability);
              }
              return out;
          },
          py::arg("prizes"), py::arg("config"));

    m.def("utility_at", &utility_at, py::arg("mechanism"), py::arg("config"), py::arg("value_fn"),
          py::arg("weight_fn"));
    m.def("utility_curve",
          [](const Mechanism& mech, const ValueFunction& v, const WeightingFunction& w, double fee,
             double rake, int n_min, int n_max) {
              std::vector<std::pair<int, std::optional<double>>> out;
              for (const auto& p : utility_curve(mech, v, w, fee, rake, {n_min, n_max}).points) {
                  out.emplace_back(p.n, p.utility);
              }
              return out;
          },
          py::arg("mechanism"), py::arg("value_fn"), py::arg("weight_fn"), py::arg("fee") = 1.0,
          py::arg("rake") = 0.1, py::arg("n_min") = 1, py::arg("n_max") = 200);
    m.def("optimal_k",
          [](MechanismKind kind, const ValueFunction& v, const WeightingFunction& w, double fee,
             double rake, int n_min, int n_max, std::vector<double> k_values) {
              if (k_values.empty()) k_values = percent_grid(1, 100, 1);
              const auto r = optimal_k(kind, v, w, fee, rake, {n_min, n_max}, k_values);
              py::list curve;
              for (const auto& p : r.curve) curve.append(py::make_tuple(p.k, p.average_utility));
              return py::make_tuple(r.k_star, r.average_utility, curve);
          },
          py::arg("kind"), py::arg("value_fn"), py::arg("weight_fn"), py::arg("fee") = 1.0,
          py::arg("rake") = 0.1, py::arg("n_min") = 1, py::arg("n_max") = 200,
          py::arg("k_values") = std::vector<double>{},
          "Returns (k_star, average_utility, [(k, average_utility), ...]).");
    m.def("break_even_n",
          [](const Mechanism& mech, const ValueFunction& v, const WeightingFunction& w, double fee,
             double rake, int n_min, int n_max) {
              return break_even_n(mech, v, w, fee, rake, {n_min, n_max});
          },
          py::arg("mechanism"), py::arg("value_fn"), py::arg("weight_fn"), py::arg("fee") = 1.0,
          py::arg("rake") = 0.1, py::arg("n_min") = 1, py::arg("n_max") = 200);
    m.def("operator_profit", &operator_profit, py::arg("config"));
    m.def("profit_frontier",
          [](const Mechanism& mech, const ValueFunction& v, const WeightingFunction& w, int n_min,
             int n_max, std::vector<double> fees, std::vector<double> rakes) {
              SweepGrid grid{{n_min, n_max}, {1.0}, std::move(fees), std::move(rakes)};
              std::vector<std::tuple<int, double, double, double, bool>> out;
              for (const auto& r : profit_frontier(mech, v, w, grid)) {
                  out.emplace_back(r.n, r.fee, r.rake, r.profit, r.viable);
              }
              return out;
          },
          py::arg("mechanism"), py::arg("value_fn"), py::arg("weight_fn"), py::arg("n_min"),
          py::arg("n_max"), py::arg("fees"), py::arg("rakes"),
          "Rows of (n, fee, rake, profit, viable).");
}
