// Python bindings. Arrays follow the scikit-learn convention: one sample per
// row. The C++ core stores samples as columns, so data is transposed at the
// boundary.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sproga/errors.hpp"
#include "sproga/graph.hpp"
#include "sproga/metrics.hpp"
#include "sproga/model_selection.hpp"
#include "sproga/objective.hpp"
#include "sproga/projections.hpp"
#include "sproga/solver.hpp"
#include "sproga/synthetic.hpp"

namespace py = pybind11;
using namespace sproga;

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EdgeArray = Eigen::Matrix<Index, Eigen::Dynamic, 2, Eigen::RowMajor>;

DataMatrix to_data(const Eigen::Ref<const RowMatrix>& rows) {
  return DataMatrix(rows.transpose());
}

EdgeGraph to_graph(Index nodes, const Eigen::Ref<const EdgeArray>& pairs,
                   std::vector<double> weights) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(pairs.rows()));
  for (Index r = 0; r < pairs.rows(); ++r) edges.push_back({pairs(r, 0), pairs(r, 1)});
  return EdgeGraph::from_pairs(nodes, std::move(edges), std::move(weights));
}

EdgeArray edge_array(const EdgeGraph& G) {
  EdgeArray out(static_cast<Index>(G.size()), 2);
  for (std::size_t l = 0; l < G.size(); ++l) {
    out(static_cast<Index>(l), 0) = G.edge(l).i;
    out(static_cast<Index>(l), 1) = G.edge(l).j;
  }
  return out;
}

SolverConfig make_config(const DataMatrix& X, double lambda, double gamma,
                         const std::string& q, std::optional<double> epsilon,
                         double epsilon_rel, double eta, int maxit,
                         std::optional<Vector> nu, const std::string& lipschitz) {
  SolverConfig cfg;
  cfg.lambda = lambda;
  cfg.gamma = gamma;
  cfg.q = parse_norm(q);
  cfg.epsilon = epsilon ? *epsilon : relative_epsilon(X, epsilon_rel);
  cfg.eta = eta;
  cfg.maxit = maxit;
  cfg.nu = std::move(nu);
  cfg.lipschitz = parse_lipschitz_rule(lipschitz);
  return cfg;
}

py::dict result_dict(const ClusterResult& r) {
  py::dict d;
  d["centers"] = RowMatrix(r.centers.values().transpose());
  d["labels"] = r.labels;
  d["num_clusters"] = r.num_clusters;
  d["selected_features"] = r.selected_features;
  d["iterations"] = r.iterations;
  d["objective_trace"] = r.objective_trace;
  d["converged"] = r.converged;
  d["mu"] = r.mu;
  d["lipschitz"] = r.lipschitz;
  return d;
}

py::tuple synthetic_tuple(const SyntheticData& d) {
  return py::make_tuple(RowMatrix(d.X.values().transpose()), d.labels, d.informative);
}

}  // namespace

PYBIND11_MODULE(_sproga, m) {
  m.doc() = "Sparse convex clustering with smoothed proximal gradient";
  m.attr("__version__") = SPROGA_VERSION;

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<NumericalDivergence>(m, "NumericalDivergence", PyExc_ArithmeticError);

  py::class_<EdgeGraph>(m, "Graph")
      .def(py::init(&to_graph), py::arg("nodes"), py::arg("edges"),
           py::arg("weights") = std::vector<double>{})
      .def_property_readonly("nodes", &EdgeGraph::nodes)
      .def_property_readonly("edges", &edge_array)
      .def_property_readonly("weights", [](const EdgeGraph& G) {
        return std::vector<double>(G.weights().begin(), G.weights().end());
      })
      .def_property_readonly("total_weight", &EdgeGraph::total_weight)
      .def("__len__", &EdgeGraph::size)
      .def("__repr__", [](const EdgeGraph& G) {
        return "<Graph nodes=" + std::to_string(G.nodes()) +
               " edges=" + std::to_string(G.size()) + ">";
      });

  m.def(
      "build_graph",
      [](const Eigen::Ref<const RowMatrix>& X, int k, const std::string& scheme,
         double phi, double filter_pct) {
        WeightConfig cfg{k, parse_weight_scheme(scheme), phi, filter_pct};
        return build_graph(to_data(X), cfg);
      },
      py::arg("X"), py::arg("k") = 10, py::arg("scheme") = "filtered",
      py::arg("phi") = 0.5, py::arg("filter_pct") = 0.10,
      "k-nearest-neighbour graph with Gaussian or filtered weights.");

  m.def(
      "fit",
      [](const Eigen::Ref<const RowMatrix>& X, const EdgeGraph& G, double lam,
         double gamma, const std::string& q, std::optional<double> epsilon,
         double epsilon_rel, double eta, int maxit, std::optional<Vector> nu,
         const std::string& lipschitz, std::optional<RowMatrix> initial_centers,
         bool record_trace) {
        const DataMatrix data = to_data(X);
        const SolverConfig cfg = make_config(data, lam, gamma, q, epsilon, epsilon_rel,
                                             eta, maxit, std::move(nu), lipschitz);
        FitOptions options;
        options.record_trace = record_trace;
        if (initial_centers) options.initial_centers = Matrix(initial_centers->transpose());
        ClusterResult r;
        {
          py::gil_scoped_release release;
          r = sproga_fit(data, G, cfg, options);
        }
        return result_dict(r);
      },
      py::arg("X"), py::arg("graph"), py::arg("lam"), py::arg("gamma") = 0.0,
      py::arg("q") = "l2", py::arg("epsilon") = py::none(), py::arg("epsilon_rel") = 1e-2,
      py::arg("eta") = 1e-6, py::arg("maxit") = 20000, py::arg("nu") = py::none(),
      py::arg("lipschitz") = "degree", py::arg("initial_centers") = py::none(),
      py::arg("record_trace") = false,
      "Fit one (lambda, gamma) pair. Without an explicit epsilon the budget is\n"
      "epsilon_rel * 0.5 * ||X||_F^2.");

  m.def(
      "adaptive_weights",
      [](const Eigen::Ref<const RowMatrix>& X, const Eigen::Ref<const RowMatrix>& centers) {
        return feature_weights_from(to_data(X), CenterMatrix(Matrix(centers.transpose())));
      },
      py::arg("X"), py::arg("centers"),
      "Feature weights 1 / ||a_k|| from the centers of a gamma = 0 fit.");

  m.def(
      "objective",
      [](const Eigen::Ref<const RowMatrix>& X, const Eigen::Ref<const RowMatrix>& U,
         const EdgeGraph& G, double lam, double gamma, const std::string& q,
         std::optional<Vector> nu) {
        SolverConfig cfg;
        cfg.lambda = lam;
        cfg.gamma = gamma;
        cfg.q = parse_norm(q);
        cfg.nu = std::move(nu);
        return objective_raw(to_data(X), Matrix(U.transpose()), G, cfg);
      },
      py::arg("X"), py::arg("U"), py::arg("graph"), py::arg("lam"),
      py::arg("gamma") = 0.0, py::arg("q") = "l2", py::arg("nu") = py::none());

  m.def(
      "param_range",
      [](const Eigen::Ref<const RowMatrix>& X, const EdgeGraph& G,
         std::optional<Vector> nu) {
        const DataMatrix data = to_data(X);
        const Vector weights = nu ? *nu : Vector::Ones(data.features());
        const ParamRange r = param_range(data, G, weights);
        py::dict d;
        d["lambda_min"] = r.lambda_min;
        d["lambda_max"] = r.lambda_max;
        d["gamma_max"] = r.gamma_max;
        d["degenerate"] = r.degenerate;
        return d;
      },
      py::arg("X"), py::arg("graph"), py::arg("nu") = py::none());

  m.def("geometric_grid", &geometric_grid, py::arg("upper"), py::arg("lower_bound"),
        py::arg("rho"));

  m.def(
      "extract_clusters",
      [](const Eigen::Ref<const RowMatrix>& U, const EdgeGraph& G, double tol,
         double scale) {
        const ClusterLabels c = extract_clusters(Matrix(U.transpose()), G, tol, scale);
        return py::make_tuple(c.labels, c.num_clusters);
      },
      py::arg("U"), py::arg("graph"), py::arg("tol") = 1e-3, py::arg("scale") = 1.0);

  m.def("adjusted_rand_index", [](const std::vector<int>& a, const std::vector<int>& b) {
    return adjusted_rand_index(a, b);
  });
  m.def("normalized_mutual_info", [](const std::vector<int>& a, const std::vector<int>& b) {
    return normalized_mutual_info(a, b).value;
  });
  m.def("feature_pd_fdr", [](const std::vector<bool>& selected, const std::vector<bool>& truth) {
    const FeatureAccuracy f = feature_pd_fdr(selected, truth);
    return py::make_tuple(f.pd, f.fdr);
  });

  m.def("project_l1_ball", py::overload_cast<const Vector&>(&project_l1_ball));
  m.def("project_l2_ball", py::overload_cast<const Vector&>(&project_l2_ball));
  m.def("project_linf_ball", py::overload_cast<const Vector&>(&project_linf_ball));

  m.def(
      "make_setting",
      [](int setting, std::uint64_t seed, double scale) {
        switch (setting) {
          case 1: return synthetic_tuple(gen_gaussian_circle(setting1_spec(seed, scale)));
          case 2: return synthetic_tuple(gen_gaussian_circle(setting2_spec(seed, scale)));
          case 3: return synthetic_tuple(gen_half_moons(setting3_spec(seed, scale)));
          case 4: return synthetic_tuple(gen_setting4(seed, scale));
        }
        throw ParameterError("setting must be 1, 2, 3 or 4");
      },
      py::arg("setting"), py::arg("seed") = 0, py::arg("scale") = 1.0,
      "Synthetic benchmark data as (X, labels, informative).");
}
